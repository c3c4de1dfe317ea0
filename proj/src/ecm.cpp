#include "qrtecm/ecm.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>

#include "qrtecm/primes.hpp"

namespace qrtecm {

namespace {

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = primes_below(1000);
    return primes;
}

}  // namespace

bool probable_prime(const mpz_class& n, unsigned rounds) {
    if (n < 2) return false;
    for (auto p : small_primes()) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < 1000 * 1000) return true;  // trial division was exhaustive
    mpz_class d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    d >>= r;
    Rng rng(0x5EEDBA5Eu);  // fixed stream: same bases for every call
    mpz_class span = n - 4;
    for (unsigned i = 0; i < rounds; ++i) {
        mpz_class base = 2 + rng.below(span);
        mpz_class x;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned long j = 1; j < r && witness; ++j) {
            x = (x * x) % n;
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

PrefilterOutcome prefilter(const mpz_class& n) {
    if (n < 2) return {PrefilterOutcome::Kind::unit, 0};
    for (auto p : small_primes()) {
        if (n == p) return {PrefilterOutcome::Kind::probable_prime, 0};
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return {PrefilterOutcome::Kind::small_factor, mpz_class(p)};
    }
    if (n < 1000 * 1000 || probable_prime(n))
        return {PrefilterOutcome::Kind::probable_prime, 0};
    return {PrefilterOutcome::Kind::composite, 0};
}

namespace {

Residue draw_nonzero(const Modulus& n, Rng& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        Residue r = rng.residue(n);
        if (!r.is_zero()) return r;
    }
    throw std::runtime_error("could not sample a nonzero residue");
}

}  // namespace

CurveParams sample_params(Family f, const Modulus& n, Rng& rng) {
    switch (f) {
        case Family::somos4:
            return Somos4Curve{draw_nonzero(n, rng), draw_nonzero(n, rng), draw_nonzero(n, rng)};
        case Family::somos5:
            return Somos5Curve{draw_nonzero(n, rng), draw_nonzero(n, rng), draw_nonzero(n, rng)};
        case Family::lyness: {
            Residue a = draw_nonzero(n, rng);
            Residue b = draw_nonzero(n, rng);
            for (int attempt = 0; attempt < 256 && b == sqr(a); ++attempt)
                b = draw_nonzero(n, rng);
            if (b == sqr(a)) throw std::runtime_error("could not sample b != a^2");
            return LynessCurve(std::move(a), std::move(b), draw_nonzero(n, rng));
        }
    }
    throw std::logic_error("unreachable family");
}

CurveParams make_params(Family f, const Modulus& n, const std::array<mpz_class, 3>& raw) {
    Residue p0(raw[0], n), p1(raw[1], n), p2(raw[2], n);
    switch (f) {
        case Family::somos4: return Somos4Curve{p0, p1, p2};
        case Family::somos5: return Somos5Curve{p0, p1, p2};
        case Family::lyness: return LynessCurve(p0, p1, p2);
    }
    throw std::logic_error("unreachable family");
}

const char* ecm_status_name(EcmOutcome::Status s) {
    switch (s) {
        case EcmOutcome::Status::found: return "found";
        case EcmOutcome::Status::no_factor: return "no_factor";
        case EcmOutcome::Status::total_collapse: return "total_collapse";
    }
    return "?";
}

EcmOutcome run_trial(const CurveParams& params, const mpz_class& s, Pipeline pipeline) {
    const mpz_class& n = curve_modulus(params).value();
    ScalarOutcome sc = scalar_multiple(params, s, pipeline);
    EcmOutcome out;
    out.ops = sc.ops;
    out.step = sc.step;
    switch (sc.kind) {
        case ScalarOutcome::Kind::point:
            out.status = EcmOutcome::Status::no_factor;
            break;
        case ScalarOutcome::Kind::collapse:
            out.status = EcmOutcome::Status::total_collapse;
            break;
        case ScalarOutcome::Kind::factor:
            out.status = EcmOutcome::Status::found;
            out.factor = sc.gcd;
            out.cofactor = n / sc.gcd;
            if (out.factor <= 1 || out.factor >= n || !mpz_divisible_p(n.get_mpz_t(), out.factor.get_mpz_t()))
                throw std::logic_error("factor event produced a non-divisor");
            break;
    }
    return out;
}

namespace {

struct RoundResult {
    std::optional<EcmOutcome> found;
    OpCounter ops;
    unsigned long trials_run = 0;
};

/// One round of `trials` independent trials against composite n. Serial when
/// threads <= 1. The parallel path yields the identical result: every trial
/// below the winning index also ran, so the lowest-indexed success and the
/// merged counters match the serial loop's.
RoundResult ecm_round(const mpz_class& n, const EcmConfig& cfg, const mpz_class& s,
                      std::uint64_t round, const TrialSink& sink) {
    Modulus mod(n);
    Rng root(cfg.seed);
    long trials = cfg.fixed_params ? 1 : static_cast<long>(cfg.trials);

    auto trial_params = [&](long i) -> CurveParams {
        Rng trial_rng = root.fork(round * cfg.trials + static_cast<std::uint64_t>(i));
        return cfg.fixed_params ? make_params(cfg.family, mod, *cfg.fixed_params)
                                : sample_params(cfg.family, mod, trial_rng);
    };

    RoundResult result;
    if (cfg.threads <= 1 || trials == 1) {
        for (long i = 0; i < trials; ++i) {
            CurveParams params = trial_params(i);
            EcmOutcome out = run_trial(params, s, cfg.pipeline);
            out.trial = i;
            result.ops += out.ops;
            ++result.trials_run;
            if (sink) sink(n, i, params, out);
            if (out.status == EcmOutcome::Status::found) {
                result.found = std::move(out);
                break;
            }
        }
        return result;
    }

    std::vector<std::optional<std::pair<CurveParams, EcmOutcome>>> outcomes(
        static_cast<std::size_t>(trials));
    std::atomic<long> winner{trials};
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.threads)
    for (long i = 0; i < trials; ++i) {
        if (i > winner.load(std::memory_order_relaxed)) continue;
        try {
            CurveParams params = trial_params(i);
            EcmOutcome out = run_trial(params, s, cfg.pipeline);
            out.trial = i;
            if (out.status == EcmOutcome::Status::found) {
                long cur = winner.load(std::memory_order_relaxed);
                while (i < cur && !winner.compare_exchange_weak(cur, i)) {
                }
            }
            outcomes[static_cast<std::size_t>(i)] = {std::move(params), std::move(out)};
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    long stop = trials;
    for (long i = 0; i < trials; ++i) {
        if (outcomes[static_cast<std::size_t>(i)] &&
            outcomes[static_cast<std::size_t>(i)]->second.status ==
                EcmOutcome::Status::found) {
            stop = i;
            break;
        }
    }
    for (long i = 0; i <= std::min(stop, trials - 1); ++i) {
        const auto& out = outcomes[static_cast<std::size_t>(i)];
        if (!out) throw std::logic_error("trial below winner was skipped");
        result.ops += out->second.ops;
        ++result.trials_run;
        if (sink) sink(n, i, out->first, out->second);
    }
    if (stop < trials) result.found = outcomes[static_cast<std::size_t>(stop)]->second;
    return result;
}

void resolve(const mpz_class& n, const EcmConfig& cfg, FactorReport& report,
             std::map<mpz_class, unsigned>& found, const TrialSink& sink) {
    if (n == 1) return;
    mpz_class rest = n;
    PrefilterOutcome pf = prefilter(rest);
    while (pf.kind == PrefilterOutcome::Kind::small_factor) {
        if (!report.found_split && pf.factor < rest) {
            report.found_split = true;
            report.first_split.status = EcmOutcome::Status::found;
            report.first_split.factor = pf.factor;
            report.first_split.cofactor = rest / pf.factor;
        }
        unsigned mult = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), pf.factor.get_mpz_t())) {
            rest /= pf.factor;
            ++mult;
        }
        found[pf.factor] += mult;
        if (rest == 1) return;
        pf = prefilter(rest);
    }
    if (pf.kind == PrefilterOutcome::Kind::probable_prime) {
        found[rest] += 1;
        return;
    }

    std::uint64_t b1 = cfg.b1;
    for (unsigned round = 0; round < cfg.max_rounds; ++round, b1 *= 4) {
        if (!cfg.fixed_s && b1 >= 100'000'000) break;  // sieve limit; stop escalating
        mpz_class s = cfg.fixed_s ? *cfg.fixed_s
                                  : stage1_exponent(b1, cfg.exponent_mode);
        unsigned base = family_base(cfg.family);
        if (s < base) s = base;
        RoundResult rr = ecm_round(rest, cfg, s, round, sink);
        report.ops += rr.ops;
        report.trials_run += rr.trials_run;
        if (rr.found) {
            if (!report.found_split) {
                report.found_split = true;
                report.first_split = *rr.found;
            }
            mpz_class f = rr.found->factor;
            mpz_class c = rr.found->cofactor;
            resolve(f, cfg, report, found, sink);
            resolve(c, cfg, report, found, sink);
            return;
        }
        if (cfg.fixed_s && cfg.fixed_params) break;  // escalation would replay the same trial
    }
    report.unfactored *= rest;
}

}  // namespace

FactorReport factorize(const mpz_class& n, const EcmConfig& cfg, const TrialSink& sink) {
    if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
    if (cfg.trials < 1) throw std::invalid_argument("trial budget must be >= 1");
    FactorReport report;
    std::map<mpz_class, unsigned> found;
    resolve(n, cfg, report, found, sink);
    for (auto& [factor, mult] : found)
        report.factors.push_back({factor, mult, probable_prime(factor)});
    report.complete = report.unfactored == 1;
    return report;
}

}  // namespace qrtecm
