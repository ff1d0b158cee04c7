#include "etascan/bigint.hpp"

#include <stdexcept>

namespace etascan {

Int from_dec(const std::string& s) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: '" + s + "'");
  return v;
}

std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational from_fraction_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(from_dec(s));
  Rational q(from_dec(s.substr(0, slash)), from_dec(s.substr(slash + 1)));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

Int isqrt(const Int& v) {
  if (v < 0) throw std::domain_error("isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& v) { return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0; }

std::size_t bit_length(const Int& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

Int from_u64(std::uint64_t v) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

Int from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::uint64_t limbs[2] = {static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(m >> 64)};
  Int r;
  mpz_import(r.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  if (neg) r = -r;
  return r;
}

std::uint64_t to_u64(const Int& v) {
  if (v < 0 || bit_length(v) > 64) throw std::out_of_range("value does not fit 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

std::uint64_t mod_u64(const Int& v, std::uint64_t p) {
  Int r;
  Int pm = from_u64(p);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
  return to_u64(r);
}

}  // namespace etascan
