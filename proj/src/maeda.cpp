#include "etascan/maeda.hpp"

#include <algorithm>
#include <numeric>

#include "etascan/factor.hpp"
#include "etascan/halfint_hecke.hpp"

namespace etascan {

namespace {

std::vector<Int> divisor_power_sums(std::size_t limit, unsigned power) {
  std::vector<Int> sums(limit + 1, Int(0));
  for (std::size_t d = 1; d <= limit; ++d) {
    Int dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), d, power);
    for (std::size_t m = d; m <= limit; m += d) sums[m] += dp;
  }
  return sums;
}

CoeffSeries power_of(const CoeffSeries& base, unsigned e, std::size_t precision) {
  CoeffSeries out = CoeffSeries::one(Ring::exact(), precision);
  for (unsigned i = 0; i < e; ++i) out = multiply(out, base);
  return out;
}

Int ipow(std::uint64_t base, unsigned e) {
  Int v;
  mpz_ui_pow_ui(v.get_mpz_t(), base, e);
  return v;
}

}  // namespace

CoeffSeries eisenstein(unsigned weight, std::size_t precision) {
  if (precision == 0) throw MaedaError("eisenstein: precision must be positive");
  long scale;
  unsigned power;
  if (weight == 4) {
    scale = 240;
    power = 3;
  } else if (weight == 6) {
    scale = -504;
    power = 5;
  } else {
    throw MaedaError("eisenstein: unsupported weight " + std::to_string(weight));
  }
  auto sums = divisor_power_sums(precision - 1, power);
  std::vector<Int> c(precision);
  c[0] = 1;
  for (std::size_t n = 1; n < precision; ++n) c[n] = scale * sums[n];
  return CoeffSeries(std::move(c));
}

CoeffSeries delta_power(unsigned a, std::size_t precision) {
  std::vector<Int> c(precision, Int(0));
  if (a < precision) {
    const auto eta = eta_power(24 * a, precision - a, Ring::exact());
    const auto src = eta.exact();
    std::copy(src.begin(), src.end(), c.begin() + a);
  }
  return CoeffSeries(std::move(c));
}

std::size_t cusp_dimension(unsigned k) {
  if (k % 2 == 1 || k < 12) return 0;
  const std::size_t modular = k % 12 == 2 ? k / 12 : k / 12 + 1;
  return modular - 1;
}

CuspBasis cusp_basis(unsigned k, std::size_t precision) {
  const std::size_t dim = cusp_dimension(k);
  if (dim == 0) throw MaedaError("cusp_basis: S_" + std::to_string(k) + " is trivial or k is unsupported");
  if (precision <= dim) throw MaedaError("cusp_basis: precision must exceed the dimension");

  const auto e4 = eisenstein(4, precision);
  const auto e6 = eisenstein(6, precision);
  std::vector<std::vector<Rational>> rows;
  for (unsigned a = 1; 12 * a <= k; ++a) {
    const unsigned rest = k - 12 * a;
    CoeffSeries delta = delta_power(a, precision);
    for (unsigned c = 0; 6 * c <= rest; ++c) {
      if ((rest - 6 * c) % 4 != 0) continue;
      const unsigned b = (rest - 6 * c) / 4;
      const auto mono = multiply(multiply(delta, power_of(e4, b, precision)), power_of(e6, c, precision));
      rows.emplace_back(mono.exact().begin(), mono.exact().end());
    }
  }

  // Reduced row echelon form.
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < precision && rank < rows.size(); ++col) {
    auto it = std::find_if(rows.begin() + rank, rows.end(), [col](const auto& row) { return row[col] != 0; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, it);
    auto& pivot = rows[rank];
    const Rational inv = 1 / pivot[col];
    for (auto& v : pivot) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = col; j < precision; ++j) rows[i][j] -= f * pivot[j];
    }
    pivots.push_back(col);
    ++rank;
  }
  if (rank != dim) {
    throw MaedaError("cusp_basis: rank " + std::to_string(rank) + " differs from dim S_" + std::to_string(k) + " = " +
                     std::to_string(dim));
  }
  CuspBasis out;
  out.k = k;
  for (std::size_t i = 0; i < dim; ++i) {
    if (pivots[i] != i + 1) throw MaedaError("cusp_basis: unexpected pivot position");
    std::vector<Int> c(precision);
    for (std::size_t j = 0; j < precision; ++j) {
      if (rows[i][j].get_den() != 1) throw MaedaError("cusp_basis: echelon basis is not integral");
      c[j] = rows[i][j].get_num();
    }
    out.basis.emplace_back(std::move(c));
  }
  return out;
}

Int HeckeMatrix::trace() const {
  Int t = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) t += entries[i][i];
  return t;
}

Int HeckeMatrix::det() const {
  // Bareiss fraction-free elimination.
  IntMatrix m = entries;
  const std::size_t d = m.size();
  if (d == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t c = 0; c + 1 < d; ++c) {
    if (m[c][c] == 0) {
      std::size_t p = c + 1;
      while (p < d && m[p][c] == 0) ++p;
      if (p == d) return 0;
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < d; ++i) {
      for (std::size_t j = c + 1; j < d; ++j) {
        m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
      }
    }
    prev = m[c][c];
  }
  return sign * m[d - 1][d - 1];
}

HeckeMatrix operator*(const HeckeMatrix& a, const HeckeMatrix& b) {
  if (a.dim() != b.dim() || a.k != b.k) throw MaedaError("Hecke matrix product: shape mismatch");
  const std::size_t d = a.dim();
  HeckeMatrix out;
  out.n = a.n * b.n;
  out.k = a.k;
  out.entries.assign(d, std::vector<Int>(d, Int(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t j = 0; j < d; ++j) out.entries[i][j] += a.entries[i][l] * b.entries[l][j];
  return out;
}

HeckeMatrix hecke_matrix(std::uint64_t n, const CuspBasis& basis) {
  const std::size_t d = basis.dim();
  if (n == 0) throw MaedaError("hecke_matrix: n must be positive");
  if (basis.precision() <= n * d) {
    throw MaedaError("hecke_matrix: basis precision " + std::to_string(basis.precision()) + " too small for T_" +
                     std::to_string(n));
  }
  HeckeMatrix t;
  t.n = n;
  t.k = basis.k;
  t.entries.assign(d, std::vector<Int>(d, Int(0)));
  for (std::size_t i = 0; i < d; ++i) {
    const auto f = basis.basis[i].exact();
    for (std::size_t j = 1; j <= d; ++j) {
      const std::uint64_t g = std::gcd(n, static_cast<std::uint64_t>(j));
      Int c = 0;
      for (std::uint64_t e = 1; e <= g; ++e) {
        if (g % e == 0) c += ipow(e, basis.k - 1) * f[n * j / (e * e)];
      }
      t.entries[i][j - 1] = std::move(c);
    }
  }
  return t;
}

std::optional<Int> squarefree_part(const Int& v, std::span<const Int> hints) {
  if (v == 0) throw MaedaError("squarefree_part of zero");
  const Int mag = abs(v);
  const int sign = v < 0 ? -1 : 1;
  if (mpz_fits_ulong_p(mag.get_mpz_t())) {
    Int s = 1;
    for (const auto& f : factorize(mag.get_ui())) {
      if (f.exponent % 2 == 1) s *= static_cast<unsigned long>(f.prime);
    }
    return sign * s;
  }
  for (const auto& h : hints) {
    if (h == 0 || (h < 0) != (v < 0)) continue;
    const auto hs = squarefree_part(h);
    if (!hs || *hs != h || v % h != 0) continue;
    if (is_perfect_square(v / h)) return h;
  }
  return std::nullopt;
}

EigenvalueReport distinct_eigenvalues(const HeckeMatrix& t, std::span<const Int> squarefree_hints) {
  if (t.dim() != 2) throw MaedaError("distinct_eigenvalues needs a 2x2 Hecke matrix");
  EigenvalueReport rep;
  rep.m = t.n;
  rep.trace = t.trace();
  rep.det = t.det();
  rep.disc = rep.trace * rep.trace - 4 * rep.det;
  rep.distinct = rep.disc != 0;
  rep.perfect_square = rep.disc >= 0 && is_perfect_square(rep.disc);
  if (rep.distinct) rep.squarefree_part = squarefree_part(rep.disc, squarefree_hints);
  return rep;
}

EigenvalueReport distinct_eigenvalues(std::uint64_t m, const CuspBasis& basis24, std::span<const Int> squarefree_hints) {
  return distinct_eigenvalues(hecke_matrix(m, basis24), squarefree_hints);
}

EquivalenceReport delta_sq_equivalence(std::uint64_t n_max) {
  if (n_max < 2) throw MaedaError("delta_sq_equivalence needs n_max >= 2");
  const CuspBasis basis = cusp_basis(24, 2 * n_max + 1);
  const auto b0 = basis.basis[0].exact();
  const auto b1 = basis.basis[1].exact();
  const auto delta_sq = eta_power(48, n_max - 1, Ring::exact());  // a48(0 .. n_max-2)

  EquivalenceReport rep;
  rep.n_max = n_max;

  // T_2 fixes the quadratic field and the eigenforms f, g = b0 + (A +- B sqrt s) b1.
  const auto t2 = distinct_eigenvalues(2, basis);
  if (!t2.distinct || t2.perfect_square || !t2.squarefree_part) {
    throw MaedaError("T_2 on S_24 does not split over a real quadratic field");
  }
  rep.field = *t2.squarefree_part;
  if (t2.trace % 2 != 0 || t2.disc % (4 * rep.field) != 0 || !is_perfect_square(t2.disc / (4 * rep.field))) {
    throw MaedaError("T_2 eigenvalues are not in Z[sqrt s]");
  }
  rep.eigen_t2 = {t2.trace / 2, isqrt(t2.disc / (4 * rep.field))};
  const Int& A2 = rep.eigen_t2.a;
  const Int& B2 = rep.eigen_t2.b;
  // f - g = 2 B2 sqrt(s) b1 and b1 = q^2 + ..., so kappa is the q^2 coefficient.
  rep.kappa = {Int(0), 2 * B2 * b1[2]};

  const Int hints[] = {rep.field};
  for (std::uint64_t m = 2; m <= n_max; ++m) {
    const Int& a48 = delta_sq.exact()[m - 2];
    if (rep.kappa.b * a48 != 2 * B2 * b1[m]) {
      throw MaedaError("f - g differs from kappa Delta^2 at q^" + std::to_string(m));
    }
    const Int A = b0[m] + A2 * b1[m];
    const Int B = B2 * b1[m];
    const auto ev = distinct_eigenvalues(m, basis, hints);
    if (ev.trace != 2 * A) throw MaedaError("trace(T_" + std::to_string(m) + ") != 2 A(m)");
    if (ev.disc != 4 * rep.field * B * B) throw MaedaError("disc(T_" + std::to_string(m) + ") != 4 s B(m)^2");

    EquivalenceRow row;
    row.m = m;
    row.a48_nonzero = a48 != 0;
    row.disc = ev.disc;
    row.squarefree_part = ev.squarefree_part;
    row.b_zero = B == 0;
    if (row.a48_nonzero != ev.distinct) {
      throw MaedaError("equivalence fails at m = " + std::to_string(m));
    }
    if (ev.distinct && (ev.perfect_square || row.squarefree_part != rep.field)) {
      throw MaedaError("T_" + std::to_string(m) + " eigenvalues leave Q(sqrt s)");
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Dim1Report dim1_scan(unsigned k, std::size_t n_max) {
  if (cusp_dimension(k) != 1) throw MaedaError("dim1_scan: S_" + std::to_string(k) + " is not one-dimensional");
  const auto basis = cusp_basis(k, n_max + 1);
  const auto g = basis.basis[0].exact();
  Dim1Report rep;
  rep.k = k;
  rep.n_max = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (g[n] == 0) rep.zeros.push_back(n);
  }
  return rep;
}

int EtaQuotientMembership::chi(std::int64_t d) const {
  int v = kronecker(sign, d);
  const int kd = kronecker(static_cast<std::int64_t>(delta), d);
  if (r % 2 == 1) v *= kd;
  else if (kd == 0) v = 0;
  return v;
}

EtaQuotientMembership eta_quotient_membership(unsigned r, std::uint64_t delta, std::uint64_t N) {
  if (delta == 0 || N == 0 || N % delta != 0) throw MaedaError("eta quotient: delta must divide N");
  if (r % 2 == 1) throw MaedaError("eta quotient: r must be even for integral weight");
  EtaQuotientMembership m;
  m.r = r;
  m.delta = delta;
  m.k = r / 2;
  m.sign = m.k % 2 ? -1 : 1;
  m.s = ipow(delta, r);
  m.is_cusp_candidate = (delta * r) % 24 == 0 && ((N / delta) * r) % 24 == 0;
  m.character = "((" + std::string(m.sign < 0 ? "-" : "") + std::to_string(delta) + "^" + std::to_string(r) + ")/d)";
  return m;
}

}  // namespace etascan
