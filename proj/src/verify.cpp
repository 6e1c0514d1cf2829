#include "topcoh/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "topcoh/errors.hpp"

namespace topcoh {
namespace {

constexpr int kMaxStoredCounterexamples = 5;

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t tag) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(tag)};
    return std::mt19937_64(seq);
}

const std::vector<std::string> kVariablePool = {"x", "y", "z", "w", "u", "v"};

std::string ideal_text(const Ideal& I) {
    std::string out = "(";
    bool first = true;
    for (const auto& g : generator_strings(I)) {
        if (!first) out += ", ";
        out += g;
        first = false;
    }
    if (I.is_zero()) out += "0";
    out += ")";
    return out;
}

std::string ring_text(const RingPtr& ring) {
    std::string out = ring->characteristic == 0 ? "QQ" : "F" + std::to_string(ring->characteristic);
    out += "[";
    for (int i = 0; i < ring->nvars(); ++i) {
        if (i > 0) out += ",";
        out += ring->variables[static_cast<std::size_t>(i)];
    }
    out += "]";
    return out;
}

std::string instance_text(const Instance& inst) {
    return ring_text(inst.ideal.ring()) + "  I = " + ideal_text(inst.ideal) +
           "  a = " + ideal_text(inst.a);
}

void record(SuiteResult& result, bool ok, const std::string& text) {
    if (ok) return;
    ++result.failures;
    if (result.counterexamples.size() < kMaxStoredCounterexamples)
        result.counterexamples.push_back(text);
}

// Random monomial of degree 0..max_degree.
Monomial random_monomial(std::mt19937_64& rng, int nvars, int max_degree) {
    std::vector<int> exponents(static_cast<std::size_t>(nvars), 0);
    const int degree = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    for (int k = 0; k < degree; ++k)
        ++exponents[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(nvars))];
    return Monomial(std::move(exponents));
}

// Random dense-ish polynomial with small integer coefficients, never zero.
Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, int max_terms, int max_degree) {
    for (;;) {
        std::vector<Term> terms;
        const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms));
        for (int t = 0; t < count; ++t) {
            long c = static_cast<long>(rng() % 11) - 5;
            if (c == 0) c = 1;
            terms.push_back({random_monomial(rng, ring->nvars(), max_degree), Rational(c)});
        }
        Polynomial f = Polynomial::from_terms(ring, std::move(terms));
        if (!f.is_zero()) return f;
    }
}

Ideal fold_intersect(const RingPtr& ring, const std::vector<Ideal>& parts) {
    Ideal out = Ideal::unit(ring);
    for (const auto& part : parts) out = intersect(out, part);
    return out;
}

// Intersection of monomial ideals by pairwise generator lcms, an oracle
// independent of the elimination-based intersect.
Ideal lcm_intersect(const Ideal& I, const Ideal& J) {
    if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
    std::vector<Polynomial> gens;
    for (const auto& g : I.reduced_basis())
        for (const auto& h : J.reduced_basis()) {
            const Monomial m = g.terms().front().monomial.lcm(h.terms().front().monomial);
            gens.push_back(Polynomial::term(I.ring(), m, Rational(1)));
        }
    return Ideal(I.ring(), std::move(gens));
}

std::vector<Ideal> manual_attached(const CyclicModule& M, const Ideal& a,
                                   const PrimaryDecomposition& dec) {
    std::vector<Ideal> out;
    for (const auto& comp : dec.components)
        if (top_prime_test(a, comp.prime, M.dimension)) out.push_back(comp.prime);
    std::sort(out.begin(), out.end(), ideal_less);
    return out;
}

} // namespace

RingPtr corpus_ring(int nvars, long characteristic) {
    if (nvars < 1 || nvars > static_cast<int>(kVariablePool.size()))
        throw InvalidArgumentError("corpus ring supports 1 through 6 variables");
    std::vector<std::string> names(kVariablePool.begin(), kVariablePool.begin() + nvars);
    return make_ring(std::move(names), characteristic);
}

Ideal random_monomial_ideal(std::mt19937_64& rng, const RingPtr& ring, int max_degree,
                            int max_generators, bool squarefree) {
    const int nvars = ring->nvars();
    const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_generators));
    std::vector<Polynomial> gens;
    for (int g = 0; g < count; ++g) {
        std::vector<int> exponents(static_cast<std::size_t>(nvars), 0);
        if (squarefree) {
            const std::uint64_t mask =
                1 + rng() % ((std::uint64_t{1} << nvars) - 1);  // nonempty vertex set
            for (int i = 0; i < nvars; ++i)
                if ((mask >> i) & 1) exponents[static_cast<std::size_t>(i)] = 1;
        } else {
            const int degree = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
            for (int k = 0; k < degree; ++k)
                ++exponents[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(nvars))];
        }
        gens.push_back(Polynomial::term(ring, Monomial(std::move(exponents)), Rational(1)));
    }
    return Ideal(ring, std::move(gens));
}

std::vector<Instance> irrelevant_corpus(const SuiteConfig& config) {
    auto rng = rng_for(config.seed, 101);
    std::vector<Instance> out;
    out.reserve(static_cast<std::size_t>(config.filtration_instances));
    for (int i = 0; i < config.filtration_instances; ++i) {
        const int nvars = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(config.max_vars));
        RingPtr ring = corpus_ring(nvars);
        Ideal I = random_monomial_ideal(rng, ring, config.max_degree, config.max_generators, false);
        Ideal a = irrelevant_ideal(ring);
        out.push_back({std::move(I), std::move(a)});
    }
    return out;
}

std::vector<Instance> general_corpus(const SuiteConfig& config) {
    auto rng = rng_for(config.seed, 202);
    std::vector<Instance> out;
    out.reserve(static_cast<std::size_t>(config.general_a_instances));
    for (int i = 0; i < config.general_a_instances; ++i) {
        const int nvars = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(config.max_vars));
        RingPtr ring = corpus_ring(nvars);
        Ideal I = random_monomial_ideal(rng, ring, config.max_degree, config.max_generators, false);
        Ideal a = random_monomial_ideal(rng, ring, 2, nvars, false);
        out.push_back({std::move(I), std::move(a)});
    }
    return out;
}

SuiteResult suite_filtration_duals(const std::vector<Instance>& corpus) {
    SuiteResult result{"filtration-dual-witnesses", 0, 0, {}};
    for (const auto& inst : corpus) {
        ++result.cases;
        const std::string where = instance_text(inst);
        try {
            const CyclicModule M = make_module(inst.ideal);
            const PrimaryDecomposition dec = primary_decomposition(inst.ideal);
            const CdTable table = cd_table_dim_oracle(M, inst.a, dec);
            const CdFiltration F = filtration(M, inst.a, table);

            bool ok = !F.levels.empty() && F.levels.back().saturation_witness.is_unit();
            for (const auto& level : F.levels)
                ok = ok && level.saturation_witness == level.intersection_witness;
            for (std::size_t i = 0; i + 1 < F.levels.size(); ++i)
                ok = ok &&
                     F.levels[i + 1].saturation_witness.contains_ideal(F.levels[i].saturation_witness);
            // K_0 always equals I saturated at the irrelevant ideal when a is
            // irrelevant: primes of cohomological dimension zero are exactly
            // the irrelevant components.
            ok = ok && F.level(0) == saturate(inst.ideal, irrelevant_ideal(inst.ideal.ring()));

            const Ideal t = t_submodule(M, inst.a, table);
            std::vector<Ideal> top_components;
            for (std::size_t j = 0; j < dec.components.size(); ++j)
                if (table.top_flags[j]) top_components.push_back(dec.components[j].component);
            ok = ok && t == fold_intersect(inst.ideal.ring(), top_components);
            if (F.top_level() >= 1) ok = ok && t == F.level(F.top_level() - 1);

            record(result, ok, where + "  :: filtration witnesses disagree");
        } catch (const std::exception& e) {
            record(result, false, where + "  :: " + e.what());
        }
    }
    return result;
}

SuiteResult suite_annihilator_chain(const std::vector<Instance>& corpus) {
    SuiteResult result{"annihilator-chain", 0, 0, {}};
    for (const auto& inst : corpus) {
        ++result.cases;
        const std::string where = instance_text(inst);
        try {
            const CyclicModule M = make_module(inst.ideal);
            const PrimaryDecomposition dec = primary_decomposition(inst.ideal);
            const TopCohomologyReport rep = ann_top(M, inst.a, dec);

            const std::vector<Ideal> attached = manual_attached(M, inst.a, dec);
            bool ok = rep.nonvanishing == !attached.empty() && rep.attached == attached;
            if (rep.nonvanishing) {
                Ideal b = Ideal::unit(inst.ideal.ring());
                std::vector<Ideal> tops;
                for (std::size_t j = 0; j < dec.components.size(); ++j) {
                    if (top_prime_test(inst.a, dec.components[j].prime, M.dimension))
                        tops.push_back(dec.components[j].component);
                    else
                        b = ideal_product(b, dec.components[j].prime);
                }
                const Ideal by_saturation = saturate(inst.ideal, b);
                const Ideal by_intersection = fold_intersect(inst.ideal.ring(), tops);
                ok = ok && rep.annihilator && rep.t_ideal && rep.radical_ann;
                ok = ok && *rep.annihilator == by_saturation &&
                     *rep.annihilator == by_intersection && *rep.t_ideal == *rep.annihilator;
                ok = ok && *rep.radical_ann == fold_intersect(inst.ideal.ring(), attached);
                ok = ok && rep.supp_bound.size() == attached.size();
                for (std::size_t k = 0; ok && k < attached.size(); ++k)
                    ok = rep.supp_bound[k] == ideal_sum(attached[k], inst.a);
            }
            record(result, ok, where + "  :: annihilator chain broken");
        } catch (const std::exception& e) {
            record(result, false, where + "  :: " + e.what());
        }
    }
    return result;
}

SuiteResult suite_ass_recomputation(const std::vector<Instance>& corpus) {
    SuiteResult result{"ass-level-recomputation", 0, 0, {}};
    for (const auto& inst : corpus) {
        ++result.cases;
        const std::string where = instance_text(inst);
        try {
            const CyclicModule M = make_module(inst.ideal);
            const PrimaryDecomposition dec = primary_decomposition(inst.ideal);
            const CdTable table = cd_table_dim_oracle(M, inst.a, dec);
            const CdFiltration F = filtration(M, inst.a, table);
            // Recomputes Ass(M/M_i) from a fresh decomposition of each K_i
            // and throws on any mismatch with the cd-table prediction.
            const std::vector<AssLevelReport> reports = ass_filtration_report(F);

            bool ok = static_cast<int>(reports.size()) == F.top_level() + 1;
            std::vector<Ideal> all_primes;
            for (const auto& comp : dec.components) all_primes.push_back(comp.prime);
            std::sort(all_primes.begin(), all_primes.end(), ideal_less);
            for (const auto& level : reports) {
                std::vector<Ideal> split = level.ass_sub;
                split.insert(split.end(), level.ass_quotient.begin(), level.ass_quotient.end());
                std::sort(split.begin(), split.end(), ideal_less);
                ok = ok && split == all_primes;
            }
            std::vector<Ideal> graded_union;
            for (const auto& level : reports)
                graded_union.insert(graded_union.end(), level.ass_graded.begin(),
                                    level.ass_graded.end());
            std::sort(graded_union.begin(), graded_union.end(), ideal_less);
            ok = ok && graded_union == all_primes;

            record(result, ok, where + "  :: associated-prime split is not a partition");
        } catch (const std::exception& e) {
            record(result, false, where + "  :: " + e.what());
        }
    }
    return result;
}

SuiteResult suite_hochster_agreement(const SuiteConfig& config) {
    SuiteResult result{"hochster-agreement", 0, 0, {}};
    auto rng = rng_for(config.seed, 303);
    for (int i = 0; i < config.hochster_instances; ++i) {
        ++result.cases;
        const int nvars =
            1 + static_cast<int>(rng() % static_cast<std::uint64_t>(config.hochster_max_vars));
        RingPtr ring = corpus_ring(nvars);
        const Ideal I = random_monomial_ideal(rng, ring, 1, config.max_generators, true);
        const Instance inst{I, irrelevant_ideal(ring)};
        const std::string where = instance_text(inst);
        try {
            const TopRankReport by_complex = top_local_cohomology_ranks(I);
            const CyclicModule M = make_module(I);
            const PrimaryDecomposition dec = primary_decomposition(I);
            const bool flag = h_top_nonzero(M, inst.a, dec);

            bool ok = by_complex.d == M.dimension && by_complex.nonvanishing == flag;
            ok = ok && stanley_reisner(I).dimension() + 1 == M.dimension;

            // Dividing out the largest submodule of lower cohomological
            // dimension must not change the top module: graded ranks of R/I
            // and R/K agree in every squarefree degree.
            const CdTable table = cd_table_dim_oracle(M, inst.a, dec);
            const Ideal K = t_submodule(M, inst.a, table);
            const TopRankReport by_section = top_local_cohomology_ranks(K);
            ok = ok && by_section.d == by_complex.d &&
                 by_section.nonvanishing == by_complex.nonvanishing &&
                 by_section.ranks.size() == by_complex.ranks.size();
            for (std::size_t k = 0; ok && k < by_complex.ranks.size(); ++k)
                ok = by_complex.ranks[k].degree == by_section.ranks[k].degree &&
                     by_complex.ranks[k].rank == by_section.ranks[k].rank;

            record(result, ok, where + "  :: simplicial and ideal-arithmetic answers differ");
        } catch (const std::exception& e) {
            record(result, false, where + "  :: " + e.what());
        }
    }
    return result;
}

SuiteResult suite_scaling_equivalences(const SuiteConfig& config,
                                       const std::vector<Instance>& corpus) {
    SuiteResult result{"scaling-equivalences", 0, 0, {}};
    auto rng = rng_for(config.seed, 404);
    for (const auto& inst : corpus) {
        ++result.cases;
        const std::string where = instance_text(inst);
        try {
            const CyclicModule M = make_module(inst.ideal);
            const PrimaryDecomposition dec = primary_decomposition(inst.ideal);
            if (!h_top_nonzero(M, inst.a, dec)) continue;  // nothing to scale
            const EquivalenceReport rep =
                ann_equivalences(M, inst.a, dec, rng, config.outside_battery);
            if (!rep.all_pass()) {
                for (const auto& check : rep.checks)
                    if (!check.pass) record(result, false, where + "  :: " + check.name);
            }
        } catch (const std::exception& e) {
            record(result, false, where + "  :: " + e.what());
        }
    }
    return result;
}

SuiteResult suite_cd_monotonicity(const SuiteConfig& config) {
    SuiteResult result{"cd-monotonicity", 0, 0, {}};
    auto rng = rng_for(config.seed, 505);
    for (int nvars = 1; nvars <= config.max_vars; ++nvars) {
        RingPtr ring = corpus_ring(nvars);
        std::vector<Ideal> primes;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nvars); ++mask) {
            std::vector<Polynomial> gens;
            for (int i = 0; i < nvars; ++i)
                if ((mask >> i) & 1) gens.push_back(Polynomial::variable(ring, i));
            primes.push_back(Ideal(ring, std::move(gens)));
        }
        std::vector<Ideal> supports;
        for (int k = 0; k < 5; ++k)
            supports.push_back(random_monomial_ideal(rng, ring, 2, nvars, false));

        for (std::uint64_t pm = 0; pm < (std::uint64_t{1} << nvars); ++pm) {
            for (std::uint64_t qm = 0; qm < (std::uint64_t{1} << nvars); ++qm) {
                if (pm == qm || (pm & qm) != pm) continue;  // need p strictly inside q
                const Ideal& p = primes[static_cast<std::size_t>(pm)];
                const Ideal& q = primes[static_cast<std::size_t>(qm)];
                for (const auto& a : supports) {
                    ++result.cases;
                    const int dim_ap = krull_dim(ideal_sum(a, p));
                    const int dim_aq = krull_dim(ideal_sum(a, q));
                    bool ok = krull_dim(q) <= krull_dim(p);
                    ok = ok && dim_aq <= dim_ap;
                    ok = ok && (dim_ap != 0 || dim_aq == 0);
                    record(result, ok,
                           ring_text(ring) + "  p = " + ideal_text(p) + "  q = " + ideal_text(q) +
                               "  a = " + ideal_text(a) + "  :: support vanishing not monotone");
                }
            }
        }
    }
    return result;
}

SuiteResult suite_radical_identity(const std::vector<Instance>& corpus) {
    SuiteResult result{"radical-of-annihilator", 0, 0, {}};
    for (const auto& inst : corpus) {
        ++result.cases;
        const std::string where = instance_text(inst);
        try {
            const CyclicModule M = make_module(inst.ideal);
            const PrimaryDecomposition dec = primary_decomposition(inst.ideal);
            const TopCohomologyReport rep = ann_top(M, inst.a, dec);
            if (!rep.nonvanishing) continue;
            const bool ok = monomial_radical(*rep.annihilator) == *rep.radical_ann;
            record(result, ok, where + "  :: Rad(ann) differs from the attached intersection");
        } catch (const std::exception& e) {
            record(result, false, where + "  :: " + e.what());
        }
    }
    return result;
}

SuiteResult suite_gb_permutation(const SuiteConfig& config) {
    SuiteResult result{"groebner-permutation-invariance", 0, 0, {}};
    auto rng = rng_for(config.seed, 606);
    for (int i = 0; i < config.gb_permutation_cases; ++i) {
        ++result.cases;
        const int nvars = 2 + static_cast<int>(rng() % 2);
        const long characteristic = (i % 3 == 0) ? 32003 : 0;
        RingPtr ring = corpus_ring(nvars, characteristic);
        const int count = 2 + static_cast<int>(rng() % 3);
        std::vector<Polynomial> gens;
        for (int g = 0; g < count; ++g) gens.push_back(random_poly(rng, ring, 3, 3));

        try {
            const auto base = buchberger_reduced(gens, MonomialOrder::grevlex());

            std::vector<Polynomial> shuffled = gens;
            for (std::size_t k = shuffled.size(); k > 1; --k)
                std::swap(shuffled[k - 1], shuffled[rng() % k]);
            const auto permuted = buchberger_reduced(shuffled, MonomialOrder::grevlex());

            std::vector<Polynomial> scaled;
            for (const auto& g : gens) scaled.push_back(g.scaled(Rational(2)));
            const auto rescaled = buchberger_reduced(scaled, MonomialOrder::grevlex());

            const bool ok = base == permuted && base == rescaled;
            std::string gens_text;
            for (const auto& g : gens) gens_text += (gens_text.empty() ? "" : "; ") + g.to_string();
            record(result, ok,
                   ring_text(ring) + "  gens = " + gens_text + "  :: reduced basis not canonical");
        } catch (const std::exception& e) {
            record(result, false, ring_text(ring) + "  :: " + e.what());
        }
    }
    return result;
}

SuiteResult suite_nf_idempotence(const SuiteConfig& config) {
    SuiteResult result{"normal-form-idempotence", 0, 0, {}};
    auto rng = rng_for(config.seed, 707);
    const MonomialOrder order = MonomialOrder::grevlex();
    for (int i = 0; i < config.normal_form_cases; ++i) {
        ++result.cases;
        const int nvars = 2 + static_cast<int>(rng() % 2);
        RingPtr ring = corpus_ring(nvars);
        const int count = 1 + static_cast<int>(rng() % 3);
        std::vector<Polynomial> reducers;
        for (int g = 0; g < count; ++g) reducers.push_back(random_poly(rng, ring, 3, 3));
        const Polynomial f = random_poly(rng, ring, 4, 4);

        try {
            const Polynomial nf = normal_form(f, reducers, order);
            bool ok = normal_form(nf, reducers, order) == nf;
            for (const auto& term : nf.terms())
                for (const auto& g : reducers)
                    ok = ok && !g.leading_term(order).monomial.divides(term.monomial);
            ok = ok && Ideal(ring, reducers).contains(f - nf);
            record(result, ok, ring_text(ring) + "  f = " + f.to_string() + "  :: bad normal form");
        } catch (const std::exception& e) {
            record(result, false, ring_text(ring) + "  :: " + e.what());
        }
    }
    return result;
}

SuiteResult suite_colon_identities(const SuiteConfig& config) {
    SuiteResult result{"colon-and-saturation-identities", 0, 0, {}};
    auto rng = rng_for(config.seed, 808);
    for (int i = 0; i < config.colon_identity_cases; ++i) {
        ++result.cases;
        const int nvars = 2 + static_cast<int>(rng() % 3);
        RingPtr ring = corpus_ring(nvars);
        const Ideal I = random_monomial_ideal(rng, ring, 3, 4, false);
        const Ideal J = random_monomial_ideal(rng, ring, 3, 2, false);
        const std::string where =
            ring_text(ring) + "  I = " + ideal_text(I) + "  J = " + ideal_text(J);

        try {
            const Ideal Q = quotient(I, J);
            bool ok = Q.contains_ideal(I);
            ok = ok && I.contains_ideal(ideal_product(Q, J));
            // Membership semantics of the colon, checked pointwise.
            for (int t = 0; t < 3; ++t) {
                const Polynomial f =
                    Polynomial::term(ring, random_monomial(rng, nvars, 3), Rational(1));
                bool in_by_def = true;
                for (const auto& h : J.reduced_basis()) in_by_def = in_by_def && I.contains(f * h);
                ok = ok && Q.contains(f) == in_by_def;
            }
            const Ideal S = saturate(I, J);
            ok = ok && S.contains_ideal(Q) && quotient(S, J) == S;
            ok = ok && detail::saturate_aux(I, J) == S;
            record(result, ok, where + "  :: colon identities broken");
        } catch (const std::exception& e) {
            record(result, false, where + "  :: " + e.what());
        }
    }
    return result;
}

SuiteResult suite_intersect_lcm_oracle(const SuiteConfig& config) {
    SuiteResult result{"intersection-lcm-oracle", 0, 0, {}};
    auto rng = rng_for(config.seed, 909);
    for (int i = 0; i < config.intersect_oracle_cases; ++i) {
        ++result.cases;
        const int nvars = 2 + static_cast<int>(rng() % 3);
        RingPtr ring = corpus_ring(nvars);
        const Ideal I = random_monomial_ideal(rng, ring, 3, 4, false);
        const Ideal J = random_monomial_ideal(rng, ring, 3, 3, false);
        const std::string where =
            ring_text(ring) + "  I = " + ideal_text(I) + "  J = " + ideal_text(J);

        try {
            bool ok = intersect(I, J) == lcm_intersect(I, J);

            // Colon of a monomial ideal by one monomial: divide out gcds.
            // Folding with the lcm oracle keeps this independent of the
            // elimination-based routines.
            Ideal colon_by_parts = Ideal::unit(ring);
            for (const auto& h : J.reduced_basis()) {
                const Monomial m = h.terms().front().monomial;
                std::vector<Polynomial> gens;
                for (const auto& g : I.reduced_basis()) {
                    const Monomial gm = g.terms().front().monomial;
                    gens.push_back(Polynomial::term(ring, gm / gm.gcd(m), Rational(1)));
                }
                colon_by_parts = lcm_intersect(colon_by_parts, Ideal(ring, std::move(gens)));
            }
            ok = ok && quotient(I, J) == colon_by_parts;
            record(result, ok, where + "  :: elimination and lcm oracle disagree");
        } catch (const std::exception& e) {
            record(result, false, where + "  :: " + e.what());
        }
    }
    return result;
}

VerifyReport run_verify(const SuiteConfig& config) {
    VerifyReport report;
    report.config = config;

    const std::vector<Instance> corpus_m = irrelevant_corpus(config);
    const std::vector<Instance> corpus_g = general_corpus(config);
    std::vector<Instance> combined = corpus_m;
    combined.insert(combined.end(), corpus_g.begin(), corpus_g.end());

    report.suites.push_back(suite_filtration_duals(corpus_m));
    report.suites.push_back(suite_annihilator_chain(combined));
    report.suites.push_back(suite_ass_recomputation(corpus_m));
    report.suites.push_back(suite_hochster_agreement(config));
    report.suites.push_back(suite_scaling_equivalences(config, combined));
    report.suites.push_back(suite_cd_monotonicity(config));

    report.all_pass = true;
    for (const auto& suite : report.suites) report.all_pass = report.all_pass && suite.failures == 0;
    return report;
}

} // namespace topcoh
