#pragma once

// Level-one cusp forms S_k for small weights: echelon bases, Hecke matrices,
// and the equivalence on S_24 between distinct T_m eigenvalues and the
// nonvanishing of the q^m coefficient of Delta^2.
//
// Series here are plain q-expansions: index n of a CoeffSeries is the
// coefficient of q^n.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "etascan/bigint.hpp"
#include "etascan/series.hpp"

namespace etascan {

class MaedaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// E_4 = 1 + 240 sum sigma_3(n) q^n and E_6 = 1 - 504 sum sigma_5(n) q^n.
CoeffSeries eisenstein(unsigned weight, std::size_t precision);

// Delta^a = q^a prod (1 - q^n)^(24 a) as a q-expansion.
CoeffSeries delta_power(unsigned a, std::size_t precision);

std::size_t cusp_dimension(unsigned k);

struct CuspBasis {
  unsigned k = 0;
  std::vector<CoeffSeries> basis;  // basis[i] = q^(i+1) + O(q^(dim+1))

  std::size_t dim() const { return basis.size(); }
  std::size_t precision() const { return basis.empty() ? 0 : basis.front().precision(); }
};

/// Row-reduces the monomials Delta^a E_4^b E_6^c (a >= 1) of weight k over
/// the rationals. Throws MaedaError for odd k, k < 12, k = 14, precision <=
/// dim, a rank different from the classical dimension, or a non-integral
/// echelon basis.
CuspBasis cusp_basis(unsigned k, std::size_t precision);

using IntMatrix = std::vector<std::vector<Int>>;

struct HeckeMatrix {
  std::uint64_t n = 0;
  unsigned k = 0;
  IntMatrix entries;  // row i: coordinates of T_n(basis[i])

  std::size_t dim() const { return entries.size(); }
  Int trace() const;
  Int det() const;
  bool operator==(const HeckeMatrix&) const = default;
};

HeckeMatrix operator*(const HeckeMatrix& a, const HeckeMatrix& b);

// Coefficient j of T_n f: sum over e | gcd(n, j) of e^(k-1) f(n j / e^2).
// Needs basis precision > n * dim.
HeckeMatrix hecke_matrix(std::uint64_t n, const CuspBasis& basis);

// Squarefree part of a nonzero integer (sign kept). Factors directly when
// |v| < 2^64; otherwise tries each hint h, accepting it when h is squarefree
// and v / h is a perfect square. Nullopt when neither settles it.
std::optional<Int> squarefree_part(const Int& v, std::span<const Int> hints = {});

struct EigenvalueReport {
  std::uint64_t m = 0;
  Int trace;
  Int det;
  Int disc;  // trace^2 - 4 det
  bool distinct = false;
  bool perfect_square = false;
  std::optional<Int> squarefree_part;
};

// For a 2x2 Hecke matrix.
EigenvalueReport distinct_eigenvalues(const HeckeMatrix& t, std::span<const Int> squarefree_hints = {});
EigenvalueReport distinct_eigenvalues(std::uint64_t m, const CuspBasis& basis24, std::span<const Int> squarefree_hints = {});

// a + b sqrt(s)
struct QuadInt {
  Int a;
  Int b;
  bool operator==(const QuadInt&) const = default;
};

struct EquivalenceRow {
  std::uint64_t m = 0;
  bool a48_nonzero = false;  // coefficient of q^m in Delta^2
  Int disc;
  std::optional<Int> squarefree_part;
  bool b_zero = false;  // irrational part of the T_m eigenvalue on f
};

struct EquivalenceReport {
  std::uint64_t n_max = 0;
  Int field;           // s with eigenvalues in Q(sqrt s)
  QuadInt eigen_t2;    // eigenvalue of T_2 on f; g carries the conjugate
  QuadInt kappa;       // Delta^2 = (f - g) / kappa
  std::vector<EquivalenceRow> rows;  // m = 2 .. n_max
};

/// For 2 <= m <= n_max checks a48(m-2) != 0 <=> T_m has distinct eigenvalues,
/// together with trace(T_m) = 2 A(m), disc(T_m) = 4 s B(m)^2 and
/// f - g = kappa * Delta^2 coefficientwise, where f, g are the normalized
/// eigenforms with coefficients A(m) +- B(m) sqrt(s). Throws MaedaError on
/// the first violation.
EquivalenceReport delta_sq_equivalence(std::uint64_t n_max);

struct Dim1Report {
  unsigned k = 0;
  std::size_t n_max = 0;
  std::vector<std::uint64_t> zeros;  // n in 1..n_max with a_k(n) = 0
};

// Expands the normalized generator of a one-dimensional S_k.
Dim1Report dim1_scan(unsigned k, std::size_t n_max);

struct EtaQuotientMembership {
  unsigned r = 0;
  std::uint64_t delta = 1;
  bool is_cusp_candidate = false;
  unsigned k = 0;
  int sign = 1;  // (-1)^k
  Int s;         // delta^r
  std::string character;

  // chi(d) = ((-1)^k s / d), evaluated factorwise.
  int chi(std::int64_t d) const;
};

// eta(delta tau)^r on Gamma0(N): needs delta r = 0 and (N / delta) r = 0 mod 24.
EtaQuotientMembership eta_quotient_membership(unsigned r, std::uint64_t delta, std::uint64_t N);

}  // namespace etascan
