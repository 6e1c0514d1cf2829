#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "topcoh/cd_engine.hpp"
#include "topcoh/hochster.hpp"

namespace topcoh {

// Sizes and seed for the randomized property suites. Every random draw in a
// run derives from `seed`, so reports are reproducible byte for byte.
struct SuiteConfig {
    std::uint64_t seed = 1;
    int filtration_instances = 200;  // irrelevant-ideal corpus
    int general_a_instances = 100;   // corpus with random monomial a
    int hochster_instances = 100;    // squarefree corpus for the simplicial oracle
    int outside_battery = 5;         // monomials outside the annihilator per instance
    int max_vars = 4;
    int max_degree = 4;
    int max_generators = 6;
    int hochster_max_vars = 6;
    int gb_permutation_cases = 150;
    int normal_form_cases = 150;
    int colon_identity_cases = 100;
    int intersect_oracle_cases = 100;
};

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> counterexamples;  // capped at a handful
};

struct VerifyReport {
    SuiteConfig config;
    std::vector<SuiteResult> suites;
    bool all_pass = false;
};

// A module instance: the defining ideal and the supporting ideal a.
struct Instance {
    Ideal ideal;
    Ideal a;
};

RingPtr corpus_ring(int nvars, long characteristic = 0);
Ideal random_monomial_ideal(std::mt19937_64& rng, const RingPtr& ring, int max_degree,
                            int max_generators, bool squarefree);

// Deterministic corpora. The irrelevant corpus pairs every ideal with the
// irrelevant maximal ideal; the general corpus draws a random proper
// monomial a per instance.
std::vector<Instance> irrelevant_corpus(const SuiteConfig& config);
std::vector<Instance> general_corpus(const SuiteConfig& config);

// Filtration levels computed by saturation and by component intersection
// agree; the chain increases to (1); the t-submodule matches level c-1.
SuiteResult suite_filtration_duals(const std::vector<Instance>& corpus);

// Whenever the top module is nonzero, the annihilator equals both the
// saturation at the non-top prime product and the intersection of the top
// components, recomputed here from scratch.
SuiteResult suite_annihilator_chain(const std::vector<Instance>& corpus);

// Associated primes of every R/K_i recomputed by fresh decomposition match
// the cd-table prediction.
SuiteResult suite_ass_recomputation(const std::vector<Instance>& corpus);

// Simplicial-cohomology oracle: top nonvanishing flags agree with the
// ideal-arithmetic engine, graded top ranks of R/I and R/K agree in every
// squarefree degree, and dim matches the complex dimension plus one.
SuiteResult suite_hochster_agreement(const SuiteConfig& config);

// Scaling and collapse equivalences of the annihilator (ann_equivalences).
SuiteResult suite_scaling_equivalences(const SuiteConfig& config,
                                       const std::vector<Instance>& corpus);

// For monomial primes p inside q: dim R/q <= dim R/p, and if a + p is
// irrelevant-radical then so is a + q.
SuiteResult suite_cd_monotonicity(const SuiteConfig& config);

// monomial_radical(annihilator) equals the intersection of attached primes.
SuiteResult suite_radical_identity(const std::vector<Instance>& corpus);

// Engine health.
SuiteResult suite_gb_permutation(const SuiteConfig& config);
SuiteResult suite_nf_idempotence(const SuiteConfig& config);
SuiteResult suite_colon_identities(const SuiteConfig& config);
SuiteResult suite_intersect_lcm_oracle(const SuiteConfig& config);

// The six property suites behind `topcoh verify`.
VerifyReport run_verify(const SuiteConfig& config);

} // namespace topcoh
