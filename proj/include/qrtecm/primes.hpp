#pragma once

#include <cstdint>
#include <vector>

namespace qrtecm {

/// All primes strictly below bound (simple sieve).
std::vector<std::uint32_t> primes_below(std::uint32_t bound);

}  // namespace qrtecm
