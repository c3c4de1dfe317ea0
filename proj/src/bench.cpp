#include "qrtecm/bench.hpp"

#include <stdexcept>

#include "qrtecm/curves.hpp"
#include "qrtecm/projective.hpp"
#include "qrtecm/scalar.hpp"

namespace qrtecm {

namespace {

// Counts do not depend on the modulus, so a fixed 64-bit prime keeps the
// ring operations cheap: 2^64 - 59.
const mpz_class kBenchModulus("18446744073709551557");

}  // namespace

std::vector<ScalarBenchRow> bench_scalars(unsigned bits, std::size_t scalars, std::uint64_t seed) {
    if (bits < 4) throw std::invalid_argument("bench scalars need at least 4 bits");
    Modulus n(kBenchModulus);
    Rng root(seed);
    std::vector<ScalarBenchRow> rows;
    rows.reserve(scalars);
    for (std::size_t i = 0; i < scalars; ++i) {
        Rng rng = root.fork(i);
        mpz_class s = rng.below(mpz_class(1) << (bits - 1));
        mpz_setbit(s.get_mpz_t(), bits - 1);  // exactly `bits` bits
        Residue one(1, n);
        Residue b = rng.residue(n);
        LynessCurve curve(one, b, rng.residue(n));
        ProjPoint p = lift(rng.residue(n), rng.residue(n));

        ScalarBenchRow row;
        row.scalar_index = i;
        row.bits = bits;
        Chain chain = build_chain(s, 4);
        for (ChainOp op : chain.ops) {
            if (op == ChainOp::add) {
                p = proj_add(curve, p, row.add_ops);
                ++row.adds;
            } else {
                p = proj_double(curve, p, row.double_ops);
                ++row.doubles;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace qrtecm
