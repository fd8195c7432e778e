#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "scissors/bloch.hpp"
#include "scissors/characters.hpp"
#include "scissors/quad_field.hpp"
#include "scissors/rewrite.hpp"
#include "scissors/zmodkit.hpp"

namespace scissors {

/// mt19937_64 with its own bounded draws, so samples do not depend on the
/// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return (next() >> 63) != 0; }
    /// Independent stream for sub-task i.
    Rng fork(std::uint64_t i);

private:
    std::mt19937_64 gen_;
};

/// Worker count from SCISSORS_WORKERS, else the hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to workers threads; body must only
/// touch slot i of its output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned workers = worker_count());

// sample generators
QuadInt random_quadint(Rng& rng, RingDesc ring, std::int64_t coord_bound);
/// Nonzero element with N(x) <= norm_bound.
QuadInt random_nonzero(Rng& rng, RingDesc ring, const Int& norm_bound);
/// Canonical primes with norm <= bound.
std::vector<QuadInt> canonical_primes(RingDesc ring, long norm_bound);
/// A random prime of norm <= bound times a random unit.
QuadInt random_prime(Rng& rng, RingDesc ring, long norm_bound);
/// Support of two non-associated canonical primes with norm <= bound.
Character random_pair_character(Rng& rng, RingDesc ring, long norm_bound);
/// Random equivariant map f: M -> N between flattened presentations over
/// Z[(Z/2)^k]; M is built so that f is well defined.
struct RandomMap {
    FPModule source;
    FPModule target;
    IntMatrix f;
};
RandomMap random_equivariant_map(Rng& rng, std::size_t k);

/// Outcome of one batch property check.
struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string first_failure;
    double seconds = 0;

    bool ok() const { return failed == 0; }
};

/// Property suites over Z[w_m]: arithmetic, lattices, coverings, characters,
/// certificates and specialization.
std::vector<SuiteResult> verify_lemmas(int m, std::size_t samples, std::uint64_t seed);

/// Direct and character-wise local-global verdicts agree on random maps, plus
/// identity, 2x and 3x maps.
SuiteResult local_global_trials(std::size_t k, std::size_t trials, std::uint64_t seed);

/// P(k(v)){v}: P(k(v)) with <pi> acting by -1 and <-1> by +1.
FPModule twisted_residue_prebloch(const Valuation& v);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

inline constexpr int kCriteria = 11;

CriterionResult run_criterion(int id, std::uint64_t seed = 20240601);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 20240601);

}  // namespace scissors
