#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrtecm/arith.hpp"
#include "qrtecm/curves.hpp"

namespace qrtecm {

enum class ChainOp : std::uint8_t { add, dbl };

/// Addition chain over the restricted op set {index+1, index*2}, replaying
/// from the family base index to the target.
struct Chain {
    mpz_class target;
    unsigned base = 2;
    std::vector<ChainOp> ops;

    std::size_t doubles() const;
    std::size_t adds() const;
};

/// Deterministic backward-greedy construction: from s, halve when even and
/// s >= 2*base, else decrement, until base; then reverse. Minimizes doublings,
/// which at 15M each dominate the 2M additions. Requires s >= base >= 2.
Chain build_chain(const mpz_class& s, unsigned base);

enum class ExponentMode { single, product };

/// Stage-1 exponent for bound b1 >= 2. product: lcm(1..b1), the product of
/// p^floor(log_p b1) over primes p <= b1. single: the one largest prime
/// power <= b1.
mpz_class stage1_exponent(std::uint64_t b1, ExponentMode mode = ExponentMode::product);

enum class Pipeline { affine, projective };

Pipeline pipeline_from_name(std::string_view name);
const char* pipeline_name(Pipeline p);

struct TraceEntry {
    std::string op;  // "init", "add", "double", "normalize"
    mpz_class index;
};

/// Result of executing a chain from the family's initial point.
///   point:    reached (u_s, u_{s+1}) with no event
///   factor:   a division failed with 1 < g < N at step `step`
///   collapse: gcd hit N itself (or the projective point degenerated or
///             normalized to infinity); uninformative, caller restarts
/// step is -1 for the init stage, 0-based into the chain ops otherwise, and
/// ops.size() for the projective pipeline's final normalize.
struct ScalarOutcome {
    enum class Kind { point, factor, collapse };
    Kind kind;
    std::optional<IndexedPoint> point;
    mpz_class gcd;
    std::ptrdiff_t step = -1;
    OpCounter ops;
};

/// Computes sP = (u_s, u_{s+1}) via build_chain. The affine pipeline surfaces
/// a factor at the failing division; the projective pipeline (Lyness only;
/// the curve is rescaled to a = 1 and the result scaled back) defers factor
/// extraction to the single final normalize.
ScalarOutcome scalar_multiple(const CurveParams& curve, const mpz_class& s, Pipeline pipeline,
                              std::vector<TraceEntry>* trace = nullptr);

}  // namespace qrtecm
