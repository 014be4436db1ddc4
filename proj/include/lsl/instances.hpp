// instances.hpp
//
// Seeded random instance generators for the verification sweeps. The same
// seed always yields the same instance.

#pragma once

#include <cstdint>
#include <vector>

#include "lsl/expsum.hpp"
#include "lsl/farey.hpp"
#include "lsl/sieve_bounds.hpp"

namespace lsl {

struct SpacedInstance {
  SpacedSet x;
  std::vector<Complex> a;
  std::vector<BigInt> y;
};

/// |X| <= 50 rational points with a certified gap, N <= 30, |y_i| <= 10^4.
/// Some draws repeat frequencies, zero all of them, or zero the amplitudes.
SpacedInstance random_spaced_instance(std::uint64_t seed);

/// Q in [2, 20], N in [1, 12], |M| <= 10^6, q in [1, 5], |p| <= 5 with
/// (p, q) = 1, random rational c0 (either sign), c2, and complex amplitudes.
SieveInstance random_sieve_instance(std::uint64_t seed);

}  // namespace lsl
