#include <algorithm>
#include <bit>
#include <stdexcept>

#include "etascan/kernels.hpp"

namespace etascan::kernels {
namespace {

using Limb = std::uint64_t;
static_assert(sizeof(mp_limb_t) == sizeof(Limb));

std::size_t ceil_log2(std::size_t n) { return n <= 1 ? 0 : std::bit_width(n - 1); }

Int import_limbs(const std::vector<Limb>& limbs) {
  Int v;
  mpz_import(v.get_mpz_t(), limbs.size(), -1, sizeof(Limb), 0, 0, limbs.data());
  return v;
}

std::vector<Limb> export_limbs(const Int& v) {
  std::vector<Limb> out((mpz_sizeinbase(v.get_mpz_t(), 2) + 63) / 64 + 1, 0);
  std::size_t count = 0;
  mpz_export(out.data(), &count, -1, sizeof(Limb), 0, 0, v.get_mpz_t());
  out.resize(count);
  return out;
}

// Signed coefficients packed at slot stride `w` limbs: value = P - N.
Int pack_signed(std::span<const Int> a, std::size_t w) {
  std::vector<Limb> pos(a.size() * w, 0), neg(a.size() * w, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    auto& dst = a[i] > 0 ? pos : neg;
    std::size_t count = 0;
    mpz_export(dst.data() + i * w, &count, -1, sizeof(Limb), 0, 0, a[i].get_mpz_t());
  }
  return import_limbs(pos) - import_limbs(neg);
}

}  // namespace

std::vector<Int> multiply_kronecker_exact(std::span<const Int> a, std::span<const Int> b, std::size_t out_len) {
  std::vector<Int> out(out_len, 0);
  a = a.first(std::min(a.size(), out_len));
  b = b.first(std::min(b.size(), out_len));
  if (a.empty() || b.empty()) return out;
  std::size_t bits_a = 0, bits_b = 0;
  for (const auto& v : a) bits_a = std::max(bits_a, bit_length(v));
  for (const auto& v : b) bits_b = std::max(bits_b, bit_length(v));
  if (bits_a == 0 || bits_b == 0) return out;

  // |c_k| < 2^(bits_a + bits_b + log2 len); one more bit for the balanced digit sign
  const std::size_t need = bits_a + bits_b + ceil_log2(std::min(a.size(), b.size())) + 2;
  const std::size_t w = (need + 63) / 64;

  Int c = pack_signed(a, w) * pack_signed(b, w);
  const int sign = sgn(c);
  if (sign == 0) return out;
  if (sign < 0) c = -c;
  const std::vector<Limb> limbs = export_limbs(c);

  const Int half = Int(1) << (64 * w - 1);
  const Int full = Int(1) << (64 * w);
  std::vector<Limb> slot(w);
  int carry = 0;
  for (std::size_t k = 0; k < out_len; ++k) {
    const std::size_t base = k * w;
    if (base >= limbs.size() && carry == 0) break;
    for (std::size_t t = 0; t < w; ++t) slot[t] = base + t < limbs.size() ? limbs[base + t] : 0;
    Int d = import_limbs(slot) + carry;
    if (d >= half) {
      d -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    out[k] = sign < 0 ? Int(-d) : d;
  }
  return out;
}

std::vector<u64> multiply_kronecker_mod(std::span<const u64> a, std::span<const u64> b, u64 p,
                                        std::size_t out_len) {
  std::vector<u64> out(out_len, 0);
  a = a.first(std::min(a.size(), out_len));
  b = b.first(std::min(b.size(), out_len));
  if (a.empty() || b.empty()) return out;
  const std::size_t pbits = std::bit_width(p);
  const std::size_t need = 2 * pbits + ceil_log2(std::min(a.size(), b.size())) + 1;
  const std::size_t w = (need + 63) / 64;

  auto pack = [w](std::span<const u64> v) {
    std::vector<Limb> limbs(v.size() * w, 0);
    for (std::size_t i = 0; i < v.size(); ++i) limbs[i * w] = v[i];
    return import_limbs(limbs);
  };
  const std::vector<Limb> limbs = export_limbs(pack(a) * pack(b));
  for (std::size_t k = 0; k < out_len; ++k) {
    const std::size_t base = k * w;
    if (base >= limbs.size()) break;
    u64 r = 0;
    for (std::size_t t = w; t-- > 0;) {
      const u64 limb = base + t < limbs.size() ? limbs[base + t] : 0;
      r = static_cast<u64>(((static_cast<u128>(r) << 64) | limb) % p);
    }
    out[k] = r;
  }
  return out;
}

}  // namespace etascan::kernels
