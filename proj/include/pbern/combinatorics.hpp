#ifndef PBERN_COMBINATORICS_HPP
#define PBERN_COMBINATORICS_HPP

#include <cstdint>

#include "pbern/rational.hpp"

namespace pbern {

// Harmonic number H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0 (empty sum).
// Values are cached process-wide; the cache is guarded by a mutex and only grows.
Rational harmonic(std::int64_t n);

// C(n, k), zero outside 0 <= k <= n. Rows of Pascal's triangle are cached.
BigInt binomial(std::int64_t n, std::int64_t k);

// n!, cached.
BigInt factorial(std::int64_t n);

}  // namespace pbern

#endif
