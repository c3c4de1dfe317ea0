#include "qrtecm/primes.hpp"

#include <stdexcept>

namespace qrtecm {

std::vector<std::uint32_t> primes_below(std::uint32_t bound) {
    if (bound > 100'000'000u) throw std::invalid_argument("prime sieve bound too large");
    std::vector<bool> composite(bound, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p = 2; p < bound; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q < bound; q += p)
            composite[static_cast<std::uint32_t>(q)] = true;
    }
    return primes;
}

}  // namespace qrtecm
