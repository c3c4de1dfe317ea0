#pragma once

#include <cstdint>
#include <vector>

#include "qrtecm/arith.hpp"

namespace qrtecm {

/// Cost model for twisted-Edwards arithmetic in P^2, used as the benchmark
/// baseline only (counter arithmetic, no curve operations):
///   addition 10M + 1S + 1A + 1D, doubling 3M + 4S + 1A,
/// where A and D are multiplications by the curve parameters a and d.
struct EdwardsCostModel {
    std::uint64_t m = 0, s = 0, by_a = 0, by_d = 0;

    static EdwardsCostModel tally(std::uint64_t adds, std::uint64_t doubles) {
        return {10 * adds + 3 * doubles, adds + 4 * doubles, adds + doubles, adds};
    }
};

/// Measured costs of one scalar's chain, executed with the projective Lyness
/// pipeline; add and double tallies are kept separately so per-op costs can
/// be asserted.
struct ScalarBenchRow {
    std::size_t scalar_index = 0;
    unsigned bits = 0;
    std::uint64_t adds = 0;
    std::uint64_t doubles = 0;
    OpCounter add_ops;
    OpCounter double_ops;
};

/// Runs `scalars` random scalars of exactly `bits` bits (top bit set) through
/// projective Lyness chains on seeded random curves, counting every ring
/// operation. Deterministic in the seed.
std::vector<ScalarBenchRow> bench_scalars(unsigned bits, std::size_t scalars, std::uint64_t seed);

}  // namespace qrtecm
