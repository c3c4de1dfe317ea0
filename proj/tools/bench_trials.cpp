// Throughput comparison of the serial trial loop against the OpenMP one, and
// of the affine pipeline against the projective one, on a batch of seeded
// semiprimes. The outcomes must agree exactly; only the wall time differs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qrtecm/ecm.hpp"

using namespace qrtecm;

namespace {

mpz_class random_prime(Rng& rng, unsigned bits) {
    mpz_class lo = mpz_class(1) << (bits - 1);
    mpz_class p = lo + rng.below(lo);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    return p;
}

std::vector<mpz_class> make_semiprimes(std::size_t count, std::uint64_t seed) {
    std::vector<mpz_class> out;
    Rng root(seed);
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng = root.fork(i);
        unsigned pbits = 16 + static_cast<unsigned>(rng.next_u64() % 5);
        unsigned qbits = 16 + static_cast<unsigned>(rng.next_u64() % 5);
        out.push_back(random_prime(rng, pbits) * random_prime(rng, qbits));
    }
    return out;
}

struct Timed {
    double ms = 0;
    std::size_t complete = 0;
    unsigned long trials = 0;
};

Timed run(const std::vector<mpz_class>& batch, const EcmConfig& cfg,
          std::vector<mpz_class>* firsts = nullptr) {
    Timed t;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& n : batch) {
        FactorReport report = factorize(n, cfg);
        if (report.complete) ++t.complete;
        t.trials += report.trials_run;
        if (firsts)
            firsts->push_back(report.found_split ? report.first_split.factor : mpz_class(0));
    }
    t.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t count = argc > 1 ? static_cast<std::size_t>(std::atol(argv[1])) : 24;
    auto batch = make_semiprimes(count, 0xB45EBA11);

    EcmConfig cfg;
    cfg.family = Family::lyness;
    cfg.b1 = 500;
    cfg.trials = 24;
    cfg.seed = 42;

    int max_threads = 1;
#ifdef _OPENMP
    max_threads = omp_get_max_threads();
#endif

    std::printf("%zu semiprimes, b1=%llu, trials=%u, max threads %d\n", batch.size(),
                static_cast<unsigned long long>(cfg.b1), cfg.trials, max_threads);

    cfg.pipeline = Pipeline::projective;
    cfg.threads = 1;
    std::vector<mpz_class> serial_firsts;
    Timed serial = run(batch, cfg, &serial_firsts);
    std::printf("projective serial   : %8.1f ms  (%zu/%zu complete, %lu trials)\n", serial.ms,
                serial.complete, batch.size(), serial.trials);

    cfg.threads = max_threads;
    std::vector<mpz_class> parallel_firsts;
    Timed parallel = run(batch, cfg, &parallel_firsts);
    std::printf("projective threaded : %8.1f ms  (%zu/%zu complete, %lu trials)  speedup %.2fx\n",
                parallel.ms, parallel.complete, batch.size(), parallel.trials,
                serial.ms / parallel.ms);

    if (serial_firsts != parallel_firsts) {
        std::printf("ERROR: serial and threaded runs disagree\n");
        return 1;
    }

    cfg.pipeline = Pipeline::affine;
    cfg.threads = 1;
    Timed affine = run(batch, cfg);
    std::printf("affine serial       : %8.1f ms  (%zu/%zu complete, %lu trials)\n", affine.ms,
                affine.complete, batch.size(), affine.trials);
    std::printf("projective/affine time ratio %.2f\n", serial.ms / affine.ms);
    return 0;
}
