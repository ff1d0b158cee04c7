#include "etascan/series.hpp"

#include <algorithm>
#include <cmath>

#include "etascan/factor.hpp"

namespace etascan {

// ---- Ring ----------------------------------------------------------------

Ring Ring::mod_prime(u64 p) {
  if (p <= 3 || p >= kMaxModulus || !is_prime_u64(p)) {
    throw SeriesError("ModPrime modulus must be a prime with 3 < p < 2^62, got " + std::to_string(p));
  }
  return Ring(p);
}

u64 Ring::prime() const {
  if (is_exact()) throw SeriesError("ExactInt ring has no modulus");
  return p_;
}

std::string Ring::describe() const { return is_exact() ? "ExactInt" : "ModPrime(" + std::to_string(p_) + ")"; }

std::string to_string(EtaAlgorithm algo) {
  switch (algo) {
    case EtaAlgorithm::SparsePower: return "sparse-power";
    case EtaAlgorithm::SigmaRecurrence: return "sigma-recurrence";
    case EtaAlgorithm::BinaryPow: return "binary-pow";
  }
  return "?";
}

EtaAlgorithm parse_eta_algorithm(const std::string& name) {
  if (name == "sparse-power") return EtaAlgorithm::SparsePower;
  if (name == "sigma-recurrence") return EtaAlgorithm::SigmaRecurrence;
  if (name == "binary-pow") return EtaAlgorithm::BinaryPow;
  throw SeriesError("unknown eta algorithm '" + name + "'");
}

// ---- CoeffSeries ---------------------------------------------------------

CoeffSeries::CoeffSeries(std::vector<Int> coeffs, long valuation_num)
    : ring_(Ring::exact()), valuation_(valuation_num), data_(std::move(coeffs)) {}

CoeffSeries::CoeffSeries(Ring ring, std::vector<u64> residues, long valuation_num)
    : ring_(ring), valuation_(valuation_num), data_(std::move(residues)) {
  const u64 p = ring_.prime();
  for (u64& v : std::get<std::vector<u64>>(data_)) {
    if (v >= p) throw SeriesError("residue out of range for " + ring_.describe());
  }
}

CoeffSeries CoeffSeries::zero(Ring ring, std::size_t precision, long valuation_num) {
  if (ring.is_exact()) return CoeffSeries(std::vector<Int>(precision, 0), valuation_num);
  return CoeffSeries(ring, std::vector<u64>(precision, 0), valuation_num);
}

CoeffSeries CoeffSeries::one(Ring ring, std::size_t precision) {
  if (precision == 0) throw SeriesError("precision must be >= 1");
  if (ring.is_exact()) {
    std::vector<Int> c(precision, 0);
    c[0] = 1;
    return CoeffSeries(std::move(c));
  }
  std::vector<u64> c(precision, 0);
  c[0] = 1;
  return CoeffSeries(ring, std::move(c));
}

std::size_t CoeffSeries::precision() const {
  return std::visit([](const auto& v) { return v.size(); }, data_);
}

std::span<const Int> CoeffSeries::exact() const {
  if (!ring_.is_exact()) throw SeriesError("exact() on " + ring_.describe() + " series");
  return std::get<std::vector<Int>>(data_);
}

std::span<const u64> CoeffSeries::residues() const {
  if (ring_.is_exact()) throw SeriesError("residues() on ExactInt series");
  return std::get<std::vector<u64>>(data_);
}

Int CoeffSeries::coefficient(std::size_t n) const {
  if (n >= precision()) throw SeriesError("coefficient index beyond precision");
  if (ring_.is_exact()) return exact()[n];
  return from_u64(residues()[n]);
}

bool CoeffSeries::is_zero_at(std::size_t n) const {
  if (n >= precision()) throw SeriesError("coefficient index beyond precision");
  if (ring_.is_exact()) return exact()[n] == 0;
  return residues()[n] == 0;
}

std::size_t CoeffSeries::nonzero_count() const {
  std::size_t c = 0;
  for (std::size_t n = 0; n < precision(); ++n) c += is_zero_at(n) ? 0 : 1;
  return c;
}

std::vector<std::size_t> CoeffSeries::zero_indices() const {
  std::vector<std::size_t> z;
  for (std::size_t n = 0; n < precision(); ++n) {
    if (is_zero_at(n)) z.push_back(n);
  }
  return z;
}

CoeffSeries CoeffSeries::reduce(u64 p) const {
  Ring target = Ring::mod_prime(p);
  auto src = exact();
  std::vector<u64> out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) out[i] = mod_u64(src[i], p);
  return CoeffSeries(target, std::move(out), valuation_);
}

CoeffSeries CoeffSeries::truncate(std::size_t precision) const {
  if (precision > this->precision()) throw SeriesError("truncate cannot extend precision");
  if (ring_.is_exact()) {
    auto s = exact();
    return CoeffSeries(std::vector<Int>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(precision)), valuation_);
  }
  auto s = residues();
  return CoeffSeries(ring_, std::vector<u64>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(precision)),
                     valuation_);
}

bool CoeffSeries::operator==(const CoeffSeries& other) const {
  return ring_ == other.ring_ && valuation_ == other.valuation_ && data_ == other.data_;
}

// ---- generators ----------------------------------------------------------

std::vector<kernels::SparseTerm> euler_terms(std::size_t precision) {
  std::vector<kernels::SparseTerm> terms;
  for (i64 m = 0;; ++m) {
    bool any = false;
    for (i64 s : {m, -m}) {
      if (m == 0 && s != 0) continue;
      const auto e = static_cast<std::size_t>((3 * s * s + s) / 2);
      if (e < precision) {
        terms.push_back({e, (m % 2) ? -1 : 1});
        any = true;
      }
      if (m == 0) break;
    }
    if (!any) break;
  }
  std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return a.offset < b.offset; });
  return terms;
}

std::vector<kernels::SparseTerm> jacobi_terms(std::size_t precision) {
  std::vector<kernels::SparseTerm> terms;
  for (i64 m = 0;; ++m) {
    const auto e = static_cast<std::size_t>(m * (m + 1) / 2);
    if (e >= precision) break;
    terms.push_back({e, (m % 2 ? -1 : 1) * (2 * m + 1)});
  }
  return terms;
}

namespace {

CoeffSeries materialize(const std::vector<kernels::SparseTerm>& terms, std::size_t precision, Ring ring,
                        long valuation) {
  if (precision == 0) throw SeriesError("precision must be >= 1");
  if (ring.is_exact()) {
    std::vector<Int> c(precision, 0);
    for (const auto& t : terms) c[t.offset] = t.coeff;
    return CoeffSeries(std::move(c), valuation);
  }
  const u64 p = ring.prime();
  std::vector<u64> c(precision, 0);
  for (const auto& t : terms) c[t.offset] = reduce_signed(t.coeff, p);
  return CoeffSeries(ring, std::move(c), valuation);
}

}  // namespace

CoeffSeries euler_series(std::size_t precision, Ring ring) {
  return materialize(euler_terms(precision), precision, ring, 1);
}

CoeffSeries jacobi_series(std::size_t precision, Ring ring) {
  return materialize(jacobi_terms(precision), precision, ring, 3);
}

// ---- multiply ------------------------------------------------------------

namespace {

constexpr std::size_t kSchoolbookMax = 48;

std::size_t sparse_limit(std::size_t n) {
  return 4 * static_cast<std::size_t>(std::sqrt(static_cast<double>(n))) + 32;
}

template <class T>
std::size_t count_nonzero(const std::vector<T>& v, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += (v[i] != 0);
  return c;
}

std::vector<kernels::SparseTerm> sparse_terms_mod(std::span<const u64> v, std::size_t n, u64 p) {
  std::vector<kernels::SparseTerm> t;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0) t.push_back({i, centered(v[i], p)});
  }
  return t;
}

std::vector<kernels::SparseTermInt> sparse_terms_exact(std::span<const Int> v, std::size_t n) {
  std::vector<kernels::SparseTermInt> t;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0) t.push_back({i, v[i]});
  }
  return t;
}

std::vector<u64> multiply_mod(std::span<const u64> a, std::span<const u64> b, u64 p, std::size_t n,
                              MultiplyStrategy strategy) {
  std::vector<u64> out(n, 0);
  const std::vector<u64> av(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n));
  const std::vector<u64> bv(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(n));
  const std::size_t nnz_a = count_nonzero(av, n), nnz_b = count_nonzero(bv, n);
  if (strategy == MultiplyStrategy::Auto) {
    if (std::min(nnz_a, nnz_b) <= sparse_limit(n)) {
      strategy = MultiplyStrategy::Sparse;
    } else if (n <= kSchoolbookMax) {
      strategy = MultiplyStrategy::Schoolbook;
    } else {
      strategy = MultiplyStrategy::Kronecker;
    }
  }
  switch (strategy) {
    case MultiplyStrategy::Sparse: {
      const bool a_sparse = nnz_a <= nnz_b;
      const auto& dense = a_sparse ? bv : av;
      const auto& sp = a_sparse ? av : bv;
      const std::size_t nnz_dense = a_sparse ? nnz_b : nnz_a;
      auto terms = sparse_terms_mod(sp, n, p);
      if (nnz_dense <= sparse_limit(n)) {
        // both sparse: scatter the pairwise products
        auto other = sparse_terms_mod(dense, n, p);
        for (const auto& s : terms) {
          const u64 cs = reduce_signed(s.coeff, p);
          for (const auto& d : other) {
            if (s.offset + d.offset >= n) break;
            auto& slot = out[s.offset + d.offset];
            slot = add_mod(slot, mul_mod(cs, reduce_signed(d.coeff, p), p), p);
          }
        }
      } else {
        kernels::convolve_sparse_mod_omp(dense, terms, p, out);
      }
      break;
    }
    case MultiplyStrategy::Schoolbook:
      kernels::convolve_dense_mod_omp(av, bv, p, out);
      break;
    case MultiplyStrategy::Kronecker:
      out = kernels::multiply_kronecker_mod(av, bv, p, n);
      break;
    case MultiplyStrategy::Auto:
      break;
  }
  return out;
}

std::vector<Int> multiply_exact(std::span<const Int> a, std::span<const Int> b, std::size_t n,
                                MultiplyStrategy strategy) {
  std::vector<Int> out(n, 0);
  const std::size_t nnz_a = static_cast<std::size_t>(std::count_if(a.begin(), a.begin() + n, [](auto& v) { return v != 0; }));
  const std::size_t nnz_b = static_cast<std::size_t>(std::count_if(b.begin(), b.begin() + n, [](auto& v) { return v != 0; }));
  if (strategy == MultiplyStrategy::Auto) {
    if (std::min(nnz_a, nnz_b) <= sparse_limit(n)) {
      strategy = MultiplyStrategy::Sparse;
    } else if (n <= kSchoolbookMax) {
      strategy = MultiplyStrategy::Schoolbook;
    } else {
      strategy = MultiplyStrategy::Kronecker;
    }
  }
  switch (strategy) {
    case MultiplyStrategy::Sparse: {
      const bool a_sparse = nnz_a <= nnz_b;
      auto dense = a_sparse ? b.first(n) : a.first(n);
      auto terms = sparse_terms_exact(a_sparse ? a : b, n);
      const std::size_t nnz_dense = a_sparse ? nnz_b : nnz_a;
      if (nnz_dense <= sparse_limit(n)) {
        auto other = sparse_terms_exact(dense, n);
        for (const auto& s : terms) {
          for (const auto& d : other) {
            if (s.offset + d.offset >= n) break;
            mpz_addmul(out[s.offset + d.offset].get_mpz_t(), s.coeff.get_mpz_t(), d.coeff.get_mpz_t());
          }
        }
      } else {
        kernels::convolve_sparse_exact_omp(dense, terms, out);
      }
      break;
    }
    case MultiplyStrategy::Schoolbook:
      kernels::convolve_dense_exact_serial(a.first(n), b.first(n), out);
      break;
    case MultiplyStrategy::Kronecker:
      out = kernels::multiply_kronecker_exact(a.first(n), b.first(n), n);
      break;
    case MultiplyStrategy::Auto:
      break;
  }
  return out;
}

}  // namespace

CoeffSeries multiply(const CoeffSeries& a, const CoeffSeries& b, MultiplyStrategy strategy) {
  if (!(a.ring() == b.ring())) {
    throw SeriesError("ring mismatch: " + a.ring().describe() + " vs " + b.ring().describe());
  }
  const std::size_t n = std::min(a.precision(), b.precision());
  const long val = a.valuation_num() + b.valuation_num();
  if (a.ring().is_exact()) return CoeffSeries(multiply_exact(a.exact(), b.exact(), n, strategy), val);
  const u64 p = a.ring().prime();
  return CoeffSeries(a.ring(), multiply_mod(a.residues(), b.residues(), p, n, strategy), val);
}

// ---- eta powers ----------------------------------------------------------

std::vector<u64> sigma1_table(std::size_t limit) {
  std::vector<u64> s(limit + 1, 0);
  for (std::size_t d = 1; d <= limit; ++d) {
    for (std::size_t m = d; m <= limit; m += d) s[m] += d;
  }
  return s;
}

namespace {

CoeffSeries sparse_power(unsigned r, std::size_t precision, Ring ring) {
  const unsigned s = r / 3, t = r % 3;
  std::vector<CoeffSeries> factors;
  const CoeffSeries jac = jacobi_series(precision, ring);
  const CoeffSeries eul = euler_series(precision, ring);
  for (unsigned i = 0; i < s; ++i) factors.push_back(jac);
  for (unsigned i = 0; i < t; ++i) factors.push_back(eul);
  CoeffSeries acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = multiply(acc, factors[i]);
  return acc;
}

CoeffSeries binary_pow(unsigned r, std::size_t precision, Ring ring) {
  CoeffSeries result = CoeffSeries::one(ring, precision);
  CoeffSeries base = euler_series(precision, ring);
  for (unsigned e = r; e > 0;) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

CoeffSeries sigma_recurrence(unsigned r, std::size_t precision, Ring ring) {
  const auto sigma = sigma1_table(precision);
  if (ring.is_exact()) {
    std::vector<Int> a(precision, 0);
    a[0] = 1;
    Int acc, q;
    for (std::size_t n = 1; n < precision; ++n) {
      acc = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        if (a[n - k] != 0) mpz_addmul_ui(acc.get_mpz_t(), a[n - k].get_mpz_t(), sigma[k]);
      }
      acc *= -static_cast<long>(r);
      if (!mpz_divisible_ui_p(acc.get_mpz_t(), n)) {
        throw SeriesError("sigma recurrence: inexact division at n = " + std::to_string(n));
      }
      mpz_divexact_ui(q.get_mpz_t(), acc.get_mpz_t(), n);
      a[n] = q;
    }
    return CoeffSeries(std::move(a), static_cast<long>(r));
  }
  const u64 p = ring.prime();
  if (p <= precision) {
    throw SeriesError("sigma recurrence over ModPrime(" + std::to_string(p) + ") needs p > precision " +
                      std::to_string(precision));
  }
  std::vector<u64> inv(precision, 0);
  if (precision > 1) inv[1] = 1;
  for (std::size_t i = 2; i < precision; ++i) inv[i] = mul_mod(p - p / i, inv[p % i], p);
  std::vector<u64> sig(precision, 0);
  for (std::size_t k = 1; k < precision; ++k) sig[k] = sigma[k] % p;
  std::vector<u64> a(precision, 0);
  a[0] = 1;
  const u64 neg_r = sub_mod(0, r % p, p);
  for (std::size_t n = 1; n < precision; ++n) {
    u128 acc = 0;
    unsigned pending = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      acc += static_cast<u128>(sig[k]) * a[n - k];
      if (++pending == 8) {
        acc %= p;
        pending = 0;
      }
    }
    a[n] = mul_mod(mul_mod(static_cast<u64>(acc % p), neg_r, p), inv[n], p);
  }
  return CoeffSeries(ring, std::move(a), static_cast<long>(r));
}

}  // namespace

CoeffSeries eta_power(unsigned r, std::size_t precision, Ring ring, EtaAlgorithm algo) {
  if (r == 0) throw SeriesError("eta_power: r = 0 is the trivial case");
  if (precision == 0) throw SeriesError("precision must be >= 1");
  CoeffSeries s = [&] {
    switch (algo) {
      case EtaAlgorithm::SparsePower: return sparse_power(r, precision, ring);
      case EtaAlgorithm::BinaryPow: return binary_pow(r, precision, ring);
      case EtaAlgorithm::SigmaRecurrence: return sigma_recurrence(r, precision, ring);
    }
    throw SeriesError("unknown algorithm");
  }();
  if (s.valuation_num() != static_cast<long>(r)) throw SeriesError("eta_power: valuation bookkeeping mismatch");
  return s;
}

// ---- point evaluation ----------------------------------------------------

namespace {

// coefficient of q^m in the Jacobi series
i64 jacobi_at(std::uint64_t m) {
  const std::uint64_t s = isqrt_u64(8 * m + 1);
  if (s * s != 8 * m + 1) return 0;
  const i64 k = static_cast<i64>((s - 1) / 2);
  return (k % 2 ? -1 : 1) * (2 * k + 1);
}

// coefficient of q^m in the Euler series: 24m + 1 = (6j + 1)^2
i64 euler_at(std::uint64_t m) {
  const std::uint64_t s = isqrt_u64(24 * m + 1);
  if (s * s != 24 * m + 1) return 0;
  i64 j;
  if (s % 6 == 1) {
    j = static_cast<i64>((s - 1) / 6);
  } else if (s % 6 == 5) {
    j = -static_cast<i64>((s + 1) / 6);
  } else {
    return 0;
  }
  return (j % 2) ? -1 : 1;
}

}  // namespace

bool point_coefficient_supported(unsigned r) { return r >= 1 && r / 3 + r % 3 <= 3; }

Int point_coefficient(unsigned r, std::uint64_t n) {
  if (!point_coefficient_supported(r)) {
    throw SeriesError("point_coefficient supports at most 3 generator factors; r = " + std::to_string(r));
  }
  if (n > 1'000'000'000'000ULL) throw SeriesError("point_coefficient: n too large");
  std::vector<char> kinds;  // 'J' or 'E'
  for (unsigned i = 0; i < r / 3; ++i) kinds.push_back('J');
  for (unsigned i = 0; i < r % 3; ++i) kinds.push_back('E');
  const auto at = [](char k, std::uint64_t m) { return k == 'J' ? jacobi_at(m) : euler_at(m); };

  std::vector<std::vector<kernels::SparseTerm>> lists;
  for (std::size_t i = 0; i + 1 < kinds.size(); ++i) {
    lists.push_back(kinds[i] == 'J' ? jacobi_terms(n + 1) : euler_terms(n + 1));
  }
  const char last = kinds.back();
  i128 sum = 0;
  if (lists.empty()) {
    sum = at(last, n);
  } else if (lists.size() == 1) {
    for (const auto& t : lists[0]) sum += static_cast<i128>(t.coeff) * at(last, n - t.offset);
  } else {
    for (const auto& t0 : lists[0]) {
      const std::uint64_t rest = n - t0.offset;
      for (const auto& t1 : lists[1]) {
        if (t1.offset > rest) break;
        const i64 c = at(last, rest - t1.offset);
        if (c != 0) sum += static_cast<i128>(t0.coeff) * t1.coeff * c;
      }
    }
  }
  return from_i128(sum);
}

}  // namespace etascan

namespace etascan {
namespace {

CoeffSeries product_of(std::span<const char> kinds, std::size_t precision, Ring ring) {
  CoeffSeries acc = kinds[0] == 'J' ? jacobi_series(precision, ring) : euler_series(precision, ring);
  for (std::size_t i = 1; i < kinds.size(); ++i) {
    acc = multiply(acc, kinds[i] == 'J' ? jacobi_series(precision, ring) : euler_series(precision, ring));
  }
  return acc;
}

// dense-by-sparse multiplies needed to build a product of g generators
double dense_steps(std::size_t g) { return g > 2 ? static_cast<double>(g - 2) : 0.0; }

}  // namespace

std::vector<u64> eta_power_at(unsigned r, std::span<const std::size_t> indices, Ring ring) {
  if (r == 0) throw SeriesError("eta_power_at: r = 0 is the trivial case");
  const u64 p = ring.prime();
  std::vector<u64> out(indices.size(), 0);
  if (indices.empty()) return out;
  const std::size_t precision = *std::max_element(indices.begin(), indices.end()) + 1;

  std::vector<char> kinds;
  for (unsigned i = 0; i < r / 3; ++i) kinds.push_back('J');
  for (unsigned i = 0; i < r % 3; ++i) kinds.push_back('E');
  const std::size_t f = kinds.size();

  if (f == 1) {
    const auto s = product_of(kinds, precision, ring);
    for (std::size_t k = 0; k < indices.size(); ++k) out[k] = s.residues()[indices[k]];
    return out;
  }

  const double n = static_cast<double>(precision);
  const double ds = n * 1.6 * std::sqrt(n);
  const double k = static_cast<double>(indices.size());
  const double cost_full = dense_steps(f) * ds;
  const double cost_last_sparse = dense_steps(f - 1) * ds + k * 1.6 * std::sqrt(n);
  const std::size_t half = (f + 1) / 2;
  const double cost_halves = (dense_steps(half) + dense_steps(f - half)) * ds + k * n;

  if (cost_last_sparse <= cost_full && cost_last_sparse <= cost_halves) {
    const auto head = product_of(std::span(kinds).first(f - 1), precision, ring);
    const auto tail = kinds.back() == 'J' ? jacobi_terms(precision) : euler_terms(precision);
    const auto a = head.residues();
    for (std::size_t q = 0; q < indices.size(); ++q) {
      i128 acc = 0;
      for (const auto& t : tail) {
        if (t.offset > indices[q]) break;
        acc += static_cast<i128>(t.coeff) * static_cast<i128>(a[indices[q] - t.offset]);
      }
      out[q] = reduce_signed(acc, p);
    }
  } else if (cost_halves < cost_full) {
    const auto left = product_of(std::span(kinds).first(half), precision, ring);
    const auto right = product_of(std::span(kinds).subspan(half), precision, ring);
    const auto a = left.residues();
    const auto b = right.residues();
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t qs = 0; qs < static_cast<std::ptrdiff_t>(indices.size()); ++qs) {
      const std::size_t q = static_cast<std::size_t>(qs);
      const std::size_t m = indices[q];
      u128 acc = 0;
      unsigned pending = 0;
      for (std::size_t i = 0; i <= m; ++i) {
        acc += static_cast<u128>(a[i]) * b[m - i];
        if (++pending == 8) {
          acc %= p;
          pending = 0;
        }
      }
      out[q] = static_cast<u64>(acc % p);
    }
  } else {
    const auto s = product_of(kinds, precision, ring);
    for (std::size_t q = 0; q < indices.size(); ++q) out[q] = s.residues()[indices[q]];
  }
  return out;
}

}  // namespace etascan
