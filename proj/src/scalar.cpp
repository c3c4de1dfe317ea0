#include "qrtecm/scalar.hpp"

#include <algorithm>
#include <stdexcept>

#include "qrtecm/primes.hpp"
#include "qrtecm/projective.hpp"

namespace qrtecm {

std::size_t Chain::doubles() const {
    return static_cast<std::size_t>(std::count(ops.begin(), ops.end(), ChainOp::dbl));
}

std::size_t Chain::adds() const { return ops.size() - doubles(); }

Chain build_chain(const mpz_class& s, unsigned base) {
    if (base < 2 || s < base) throw std::invalid_argument("build_chain requires s >= base >= 2");
    Chain chain{s, base, {}};
    mpz_class cur = s;
    while (cur != base) {
        if (mpz_even_p(cur.get_mpz_t()) && cur >= 2 * base) {
            cur >>= 1;
            chain.ops.push_back(ChainOp::dbl);
        } else {
            cur -= 1;
            chain.ops.push_back(ChainOp::add);
        }
    }
    std::reverse(chain.ops.begin(), chain.ops.end());
    return chain;
}

mpz_class stage1_exponent(std::uint64_t b1, ExponentMode mode) {
    if (b1 < 2) throw std::invalid_argument("stage-1 bound must be >= 2");
    if (b1 >= 100'000'000) throw std::invalid_argument("stage-1 bound too large to sieve");
    auto primes = primes_below(static_cast<std::uint32_t>(b1 + 1));
    if (mode == ExponentMode::product) {
        mpz_class s = 1;
        for (auto p : primes) {
            std::uint64_t pk = p;
            while (pk <= b1 / p) pk *= p;
            s *= mpz_class(static_cast<unsigned long>(pk));
        }
        return s;
    }
    std::uint64_t best = 2;
    for (auto p : primes) {
        std::uint64_t pk = p;
        while (pk <= b1 / p) pk *= p;
        best = std::max(best, pk);
    }
    return mpz_class(static_cast<unsigned long>(best));
}

Pipeline pipeline_from_name(std::string_view name) {
    if (name == "affine") return Pipeline::affine;
    if (name == "projective") return Pipeline::projective;
    throw std::invalid_argument("unknown pipeline: " + std::string(name));
}

const char* pipeline_name(Pipeline p) {
    return p == Pipeline::affine ? "affine" : "projective";
}

namespace {

void record(std::vector<TraceEntry>* trace, const char* op, const mpz_class& index) {
    if (trace) trace->push_back({op, index});
}

ScalarOutcome run_affine(const CurveParams& curve, const Chain& chain,
                         std::vector<TraceEntry>* trace) {
    ScalarOutcome out{ScalarOutcome::Kind::point, std::nullopt, 0, -1, {}};
    std::ptrdiff_t step = -1;
    try {
        IndexedPoint p = curve_init(curve, &out.ops);
        record(trace, "init", p.n);
        for (std::size_t i = 0; i < chain.ops.size(); ++i) {
            step = static_cast<std::ptrdiff_t>(i);
            p = chain.ops[i] == ChainOp::add ? curve_step(curve, p, &out.ops)
                                             : curve_double(curve, p, &out.ops);
            record(trace, chain.ops[i] == ChainOp::add ? "add" : "double", p.n);
        }
        out.point = std::move(p);
        return out;
    } catch (const NonInvertible& e) {
        out.kind = e.total() ? ScalarOutcome::Kind::collapse : ScalarOutcome::Kind::factor;
        out.gcd = e.gcd();
        out.step = step;
        return out;
    }
}

ScalarOutcome run_projective(const LynessCurve& curve, const Chain& chain,
                             std::vector<TraceEntry>* trace) {
    ScalarOutcome out{ScalarOutcome::Kind::point, std::nullopt, 0, -1, {}};
    const Modulus& n = curve.a.modulus();
    try {
        // Trial start: rescale to a = 1 (the inversion of a is itself a
        // factor opportunity), run the whole chain division-free, undo the
        // rescale after the final normalize.
        LynessCurve unit = lyness_normalized(curve, &out.ops);
        IndexedPoint seed = lyness_init(unit, &out.ops);
        record(trace, "init", seed.n);
        ProjPoint p = lift(seed);
        mpz_class index = seed.n;
        for (std::size_t i = 0; i < chain.ops.size(); ++i) {
            if (chain.ops[i] == ChainOp::add) {
                p = proj_add(unit, p, out.ops);
                index += 1;
            } else {
                p = proj_double(unit, p, out.ops);
                index *= 2;
                if (collapsed(p)) {
                    out.kind = ScalarOutcome::Kind::collapse;
                    out.gcd = n.value();
                    out.step = static_cast<std::ptrdiff_t>(i);
                    return out;
                }
            }
            record(trace, chain.ops[i] == ChainOp::add ? "add" : "double", index);
        }
        out.step = static_cast<std::ptrdiff_t>(chain.ops.size());
        NormalizeResult norm = normalize(p);
        record(trace, "normalize", index);
        if (auto* affine = std::get_if<std::pair<Residue, Residue>>(&norm)) {
            if (curve.a == Residue(1, n)) {
                out.point = IndexedPoint{index, affine->first, affine->second};
            } else {
                Residue x = mul(affine->first, curve.a, &out.ops);
                Residue y = mul(affine->second, curve.a, &out.ops);
                out.point = IndexedPoint{index, std::move(x), std::move(y)};
            }
            out.step = -1;
            return out;
        }
        if (auto* bad = std::get_if<NonInvertible>(&norm)) {
            out.kind = ScalarOutcome::Kind::factor;
            out.gcd = bad->gcd();
            return out;
        }
        // sP at infinity mod every prime factor at once: no split.
        out.kind = ScalarOutcome::Kind::collapse;
        out.gcd = n.value();
        return out;
    } catch (const NonInvertible& e) {
        out.kind = e.total() ? ScalarOutcome::Kind::collapse : ScalarOutcome::Kind::factor;
        out.gcd = e.gcd();
        out.step = -1;  // only the init divisions can throw here
        return out;
    }
}

}  // namespace

ScalarOutcome scalar_multiple(const CurveParams& curve, const mpz_class& s, Pipeline pipeline,
                              std::vector<TraceEntry>* trace) {
    Family fam = family_of(curve);
    Chain chain = build_chain(s, family_base(fam));
    if (pipeline == Pipeline::projective) {
        if (fam != Family::lyness)
            throw std::invalid_argument("projective pipeline is Lyness-only");
        return run_projective(std::get<LynessCurve>(curve), chain, trace);
    }
    return run_affine(curve, chain, trace);
}

}  // namespace qrtecm
