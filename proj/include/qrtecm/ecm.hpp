#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qrtecm/arith.hpp"
#include "qrtecm/curves.hpp"
#include "qrtecm/scalar.hpp"

namespace qrtecm {

struct PrefilterOutcome {
    enum class Kind { unit, small_factor, probable_prime, composite };
    Kind kind;
    mpz_class factor;  // set for small_factor
};

/// Trial-divides by every prime below 1000, then runs a 64-round
/// deterministic Miller-Rabin. Survivors below 10^6 are certified prime by
/// the trial division alone.
PrefilterOutcome prefilter(const mpz_class& n);

bool probable_prime(const mpz_class& n, unsigned rounds = 64);

/// Draws curve parameters with every field nonzero (resampled on zero) and,
/// for Lyness, b != a^2 so the 5-torsion pencil is avoided.
CurveParams sample_params(Family f, const Modulus& n, Rng& rng);

CurveParams make_params(Family f, const Modulus& n, const std::array<mpz_class, 3>& raw);

struct EcmOutcome {
    enum class Status { found, no_factor, total_collapse };
    Status status = Status::no_factor;
    mpz_class factor;    // 1 < factor < n when found
    mpz_class cofactor;  // factor * cofactor == n
    long trial = -1;
    std::ptrdiff_t step = -1;
    OpCounter ops;
};

const char* ecm_status_name(EcmOutcome::Status s);

/// One trial: init -> chain on the given parameters. NonInvertible with
/// 1 < g < N becomes found; g = N becomes total_collapse.
EcmOutcome run_trial(const CurveParams& params, const mpz_class& s, Pipeline pipeline);

struct EcmConfig {
    Family family = Family::lyness;
    std::uint64_t b1 = 1000;
    unsigned trials = 20;
    std::uint64_t seed = 1;
    Pipeline pipeline = Pipeline::affine;
    ExponentMode exponent_mode = ExponentMode::product;
    int threads = 1;
    unsigned max_rounds = 3;  // B1 escalates x4 between rounds
    std::optional<std::array<mpz_class, 3>> fixed_params;
    std::optional<mpz_class> fixed_s;
};

struct FactorReport {
    struct Entry {
        mpz_class factor;
        unsigned multiplicity = 1;
        bool prime = false;
    };
    std::vector<Entry> factors;    // ascending, aggregated multiplicities
    mpz_class unfactored = 1;      // composite part that survived all rounds
    bool complete = false;
    bool found_split = false;      // at least one nontrivial split of the input
    EcmOutcome first_split;        // the trial that produced the first split
    OpCounter ops;
    unsigned long trials_run = 0;
};

/// Per-trial progress hook for the CLI (composite being attacked, trial
/// index, curve parameters, outcome). Called from the orchestrating thread
/// only.
using TrialSink =
    std::function<void(const mpz_class&, long, const CurveParams&, const EcmOutcome&)>;

/// Recursive driver: prefilter, then rounds of fresh-parameter trials with
/// B1 escalation, recursing on factor and cofactor. Trials are independent;
/// with cfg.threads > 1 they run under OpenMP, and the outcome (winner =
/// lowest-indexed successful trial, op counters merged over trials up to the
/// winner) is identical to the serial path.
FactorReport factorize(const mpz_class& n, const EcmConfig& cfg, const TrialSink& sink = {});

}  // namespace qrtecm
