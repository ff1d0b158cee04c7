#include "etascan/halfint_hecke.hpp"

#include <numeric>

#include "etascan/series.hpp"

namespace etascan {

int kronecker(const Int& a, const Int& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

int kronecker(std::int64_t a, std::int64_t n) { return kronecker(Int(static_cast<long>(a)), Int(static_cast<long>(n))); }

int chi12(std::int64_t n) {
  switch (((n % 12) + 12) % 12) {
    case 1:
    case 11: return 1;
    case 5:
    case 7: return -1;
    default: return 0;
  }
}

HeckeHalfParams HeckeHalfParams::for_eta24(unsigned r) {
  if (r % 2 == 0) throw HeckeError("eta(24 tau)^r has half-integral weight only for odd r");
  HeckeHalfParams params;
  params.lambda = (r - 1) / 2;
  return params;
}

int chi_star(std::int64_t D, const HeckeHalfParams& params) {
  if (std::gcd(static_cast<std::uint64_t>(D < 0 ? -D : D), params.level4N) != 1) return 0;
  return kronecker(params.lambda % 2 ? -1 : 1, D) * params.chi(D);
}

Rational DSeries::coefficient(std::uint64_t D) const {
  if (D >= num.size()) throw HeckeError("D-series coefficient beyond dmax");
  Rational q(num[D], den);
  q.canonicalize();
  return q;
}

bool DSeries::is_zero() const {
  for (const auto& c : num) {
    if (c != 0) return false;
  }
  return true;
}

bool DSeries::operator==(const DSeries& other) const {
  if (num.size() != other.num.size()) return false;
  for (std::size_t D = 0; D < num.size(); ++D) {
    if (num[D] * other.den != other.num[D] * den) return false;
  }
  return true;
}

DSeries eta24_dseries(unsigned r, std::uint64_t dmax) {
  DSeries f;
  f.origin = r;
  f.num.assign(dmax + 1, Int(0));
  if (dmax < r) return f;
  const auto a = eta_power(r, (dmax - r) / 24 + 1, Ring::exact());
  const auto coeffs = a.exact();
  for (std::size_t n = 0; n < coeffs.size(); ++n) f.num[24 * n + r] = coeffs[n];
  return f;
}

DSeries hecke_tp2(const DSeries& f, std::uint64_t p, const HeckeHalfParams& params) {
  if (p < 3 || params.level4N % p == 0) throw HeckeError("T(p^2) needs an odd prime p not dividing the level");
  const std::uint64_t p2 = p * p;
  const std::uint64_t out_max = f.dmax() / p2;
  if (out_max == 0) throw HeckeError("T(p^2): input dmax " + std::to_string(f.dmax()) + " too small for p = " + std::to_string(p));

  // Scale by p when lambda = 0 so that p^(lambda-1) and p^(2 lambda - 1) stay integral.
  const unsigned lambda = params.lambda;
  const bool scale = lambda == 0;
  Int mid_pow, low_pow;
  mpz_ui_pow_ui(mid_pow.get_mpz_t(), p, scale ? 0 : lambda - 1);
  mpz_ui_pow_ui(low_pow.get_mpz_t(), p, scale ? 0 : 2 * lambda - 1);
  const Int lead = scale ? Int(static_cast<unsigned long>(p)) : Int(1);
  const int cs_p = chi_star(static_cast<std::int64_t>(p), params);
  const int cs_p2 = chi_star(static_cast<std::int64_t>(p2), params);

  DSeries out;
  out.origin = f.origin;
  out.den = scale ? f.den * static_cast<unsigned long>(p) : f.den;
  out.num.assign(out_max + 1, Int(0));
  for (std::uint64_t D = 1; D <= out_max; ++D) {
    Int v = lead * f.num[D * p2];
    const int leg = kronecker(static_cast<std::int64_t>(D), static_cast<std::int64_t>(p));
    if (leg != 0 && cs_p != 0 && f.num[D] != 0) v += (cs_p * leg) * mid_pow * f.num[D];
    if (D % p2 == 0 && cs_p2 != 0) v += cs_p2 * low_pow * f.num[D / p2];
    out.num[D] = std::move(v);
  }
  return out;
}

EigenReport eigen_check(unsigned r, std::uint64_t p, std::uint64_t dmax) {
  return eigen_check(eta24_dseries(r, dmax * p * p), r, p, dmax);
}

EigenReport eigen_check(const DSeries& f, unsigned r, std::uint64_t p, std::uint64_t dmax) {
  if (dmax < r) throw HeckeError("eigen_check needs dmax >= r");
  if (f.dmax() < dmax * p * p) throw HeckeError("eigen_check: D-series too short for dmax p^2");
  const auto params = HeckeHalfParams::for_eta24(r);
  const DSeries g = hecke_tp2(f, p, params);

  EigenReport rep;
  rep.r = r;
  rep.p = p;
  rep.dmax = dmax;
  if (f.num[r] == 0) throw HeckeError("eigen_check: b(r) vanishes");
  rep.eigenvalue = g.coefficient(r) / f.coefficient(r);
  rep.max_residual = 0;
  for (std::uint64_t D = 1; D <= dmax; ++D) {
    Rational res = abs(g.coefficient(D) - rep.eigenvalue * f.coefficient(D));
    if (res > rep.max_residual) rep.max_residual = res;
  }
  if (rep.max_residual != 0) {
    throw HeckeError("eigen relation fails for r = " + std::to_string(r) + ", p = " + std::to_string(p) +
                     ": residual " + to_fraction_string(rep.max_residual));
  }
  if (params.lambda >= 1 && !rep.integral()) {
    throw HeckeError("non-integral eigenvalue " + to_fraction_string(rep.eigenvalue) + " for r = " + std::to_string(r));
  }
  return rep;
}

bool SquareClassReport::all_zero() const {
  for (const auto& e : entries) {
    if (!e.zero) return false;
  }
  return true;
}

ZeroOracle point_zero_oracle(unsigned r) {
  if (!point_coefficient_supported(r)) {
    throw HeckeError("no exact point evaluation for r = " + std::to_string(r));
  }
  return [r](std::uint64_t index) { return point_coefficient(r, index) == 0; };
}

SquareClassReport square_class_check(unsigned r, std::uint64_t D0, std::uint64_t n_bound, const ZeroOracle& is_zero) {
  if (D0 % 24 != r % 24 || D0 < r) throw HeckeError("D0 must be congruent to r modulo 24");
  SquareClassReport rep;
  rep.r = r;
  rep.D0 = D0;
  for (std::uint64_t n = 1; n <= n_bound; ++n) {
    if (std::gcd(n, std::uint64_t{6}) != 1) continue;
    const unsigned __int128 D = static_cast<unsigned __int128>(D0) * n * n;
    const std::uint64_t index = static_cast<std::uint64_t>((D - r) / 24);
    rep.entries.push_back({n, index, is_zero(index)});
  }
  if (!rep.all_zero()) {
    std::string bad;
    for (const auto& e : rep.entries) {
      if (!e.zero) bad += " n=" + std::to_string(e.n) + " (index " + std::to_string(e.index) + ")";
    }
    throw HeckeError("square class of D0 = " + std::to_string(D0) + " has nonzero coefficients:" + bad);
  }
  return rep;
}

}  // namespace etascan
