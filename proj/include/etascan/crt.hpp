#pragma once

#include <cstdint>
#include <span>

#include "etascan/bigint.hpp"

namespace etascan {

// Garner reconstruction; returns the representative in (-M/2, M/2] where
// M is the product of the (pairwise distinct, prime) moduli.
Int crt_reconstruct(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> primes);

Int modulus_product(std::span<const std::uint64_t> primes);

}  // namespace etascan
