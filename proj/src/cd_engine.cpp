#include "topcoh/cd_engine.hpp"

#include <algorithm>

namespace topcoh {

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
    if (!same_ring(a, b)) throw RingMismatchError(std::string(what) + " across rings");
}

void require_decomposition_of(const CyclicModule& M, const PrimaryDecomposition& dec) {
    if (dec.source != M.defining_ideal)
        throw InvalidArgumentError("decomposition does not belong to the module's ideal");
}

void require_proper(const Ideal& a) {
    if (a.is_unit())
        throw InvalidArgumentError("the supporting ideal must be proper");
}

std::vector<Ideal> sorted_ideals(std::vector<Ideal> ideals) {
    std::sort(ideals.begin(), ideals.end(), ideal_less);
    return ideals;
}

// Product of the listed primes; the empty product is (1). A zero factor
// (the prime (0), which occurs only for I = (0)) collapses the product to
// (0), and H^0 of M at the zero ideal is all of M, carried by K = (1).
Ideal prime_product(const RingPtr& ring, const std::vector<Ideal>& primes) {
    Ideal acc = Ideal::unit(ring);
    for (const Ideal& p : primes) acc = ideal_product(acc, p);
    return acc;
}

// K with H^0_b(M) = K/I; handles the degenerate b above.
Ideal section_ideal(const Ideal& I, const Ideal& b) {
    if (b.is_zero()) return Ideal::unit(I.ring());
    return saturate(I, b);
}

Ideal intersect_components(const RingPtr& ring, const PrimaryDecomposition& dec,
                           const std::vector<char>& take) {
    Ideal acc = Ideal::unit(ring);
    for (std::size_t j = 0; j < dec.components.size(); ++j)
        if (take[j]) acc = intersect(acc, dec.components[j].component);
    return acc;
}

std::string ideal_text(const Ideal& I) {
    std::string s;
    for (const auto& g : generator_strings(I)) s += (s.empty() ? "" : ", ") + g;
    return "(" + s + ")";
}

} // namespace

CyclicModule make_module(Ideal defining_ideal) {
    if (defining_ideal.is_unit())
        throw InvalidArgumentError("R/I is the zero module for the unit ideal");
    RingPtr ring = defining_ideal.ring();
    const int d = krull_dim(defining_ideal);
    return CyclicModule{std::move(ring), std::move(defining_ideal), d};
}

bool top_prime_test(const Ideal& a, const Ideal& p, int d) {
    require_same_ring(a.ring(), p.ring(), "top test");
    require_proper(a);
    if (!is_homogeneous(a))
        throw UnsupportedError("top test needs a homogeneous supporting ideal");
    if (!is_homogeneous(p))
        throw UnsupportedError("top test needs a homogeneous prime");
    return krull_dim(p) == d && krull_dim(ideal_sum(a, p)) == 0;
}

std::vector<Ideal> attached_top(const CyclicModule& M, const Ideal& a,
                                const PrimaryDecomposition& dec) {
    require_same_ring(M.ring, a.ring(), "attached primes");
    require_decomposition_of(M, dec);
    std::vector<Ideal> attached;
    for (const PrimaryComponent& c : dec.components)
        if (top_prime_test(a, c.prime, M.dimension)) attached.push_back(c.prime);
    return sorted_ideals(std::move(attached));
}

bool h_top_nonzero(const CyclicModule& M, const Ideal& a, const PrimaryDecomposition& dec) {
    return !attached_top(M, a, dec).empty();
}

CdTable cd_table_dim_oracle(const CyclicModule& M, const Ideal& a, PrimaryDecomposition dec) {
    require_same_ring(M.ring, a.ring(), "cd table");
    require_decomposition_of(M, dec);
    if (!is_irrelevant(a))
        throw InvalidArgumentError(
            "the dimension oracle applies only when a is the irrelevant maximal ideal");
    CdTable table{std::move(dec), CdMode::Exact, {}, {}, 0};
    int c = -1;
    for (const PrimaryComponent& comp : table.decomposition.components) {
        table.values.push_back(krull_dim(comp.prime));
        c = std::max(c, table.values.back());
    }
    if (c != M.dimension)
        throw TheoremViolationError("component dimensions do not attain dim M");
    table.top_level = c;
    for (int v : table.values) table.top_flags.push_back(v == c);
    return table;
}

CdTable cd_table_user(const CyclicModule& M, const Ideal& a, PrimaryDecomposition dec,
                      const std::vector<int>& values) {
    require_same_ring(M.ring, a.ring(), "cd table");
    require_decomposition_of(M, dec);
    require_proper(a);
    if (values.size() != dec.components.size())
        throw InvalidArgumentError("cd table size does not match the decomposition");
    for (std::size_t j = 0; j < values.size(); ++j) {
        const Ideal& p = dec.components[j].prime;
        const int bound = krull_dim(p);
        if (values[j] < 0 || values[j] > bound)
            throw InvalidArgumentError("cd value out of range for component " + ideal_text(p));
        // A component reaches degree d = dim M exactly when the top test
        // passes, so a user table must agree with the test there.
        const bool top = top_prime_test(a, p, M.dimension);
        if ((values[j] == M.dimension) != top)
            throw InvalidArgumentError("cd table inconsistent with the top test at component " +
                                       ideal_text(p));
    }
    CdTable table{std::move(dec), CdMode::Exact, values, {}, 0};
    table.top_level = *std::max_element(values.begin(), values.end());
    for (int v : values) table.top_flags.push_back(v == table.top_level);
    return table;
}

CdTable cd_table_top_split(const CyclicModule& M, const Ideal& a, PrimaryDecomposition dec) {
    require_same_ring(M.ring, a.ring(), "cd table");
    require_decomposition_of(M, dec);
    CdTable table{std::move(dec), CdMode::TopSplit, {}, {}, -1};
    for (const PrimaryComponent& comp : table.decomposition.components)
        table.top_flags.push_back(top_prime_test(a, comp.prime, M.dimension));
    return table;
}

CdFiltration filtration(const CyclicModule& M, const Ideal& a, const CdTable& table) {
    require_same_ring(M.ring, a.ring(), "filtration");
    if (table.mode != CdMode::Exact)
        throw InvalidArgumentError("the filtration needs exact cd values");
    const Ideal& I = M.defining_ideal;
    const PrimaryDecomposition& dec = table.decomposition;

    CdFiltration F{M, a, table, {}};
    for (int i = 0; i <= table.top_level; ++i) {
        std::vector<Ideal> low_primes;
        std::vector<char> high(dec.components.size(), 0);
        for (std::size_t j = 0; j < dec.components.size(); ++j) {
            if (table.values[j] <= i)
                low_primes.push_back(dec.components[j].prime);
            else
                high[j] = 1;
        }
        Ideal a_i = prime_product(M.ring, low_primes);
        Ideal by_saturation = section_ideal(I, a_i);
        Ideal by_intersection = intersect_components(M.ring, dec, high);
        if (by_saturation != by_intersection)
            throw TheoremViolationError(
                "filtration witnesses disagree at level " + std::to_string(i) + ": saturation " +
                ideal_text(by_saturation) + " vs intersection " + ideal_text(by_intersection));
        if (i > 0 && !by_saturation.contains_ideal(F.levels.back().saturation_witness))
            throw TheoremViolationError("filtration is not increasing at level " +
                                        std::to_string(i));
        F.levels.push_back({std::move(a_i), std::move(by_saturation), std::move(by_intersection)});
    }
    if (!F.levels.back().saturation_witness.is_unit())
        throw TheoremViolationError("the filtration does not terminate at M");
    return F;
}

Ideal t_submodule(const CyclicModule& M, const Ideal& a, const CdTable& table) {
    require_same_ring(M.ring, a.ring(), "t-submodule");
    const PrimaryDecomposition& dec = table.decomposition;
    if (table.mode == CdMode::TopSplit &&
        std::none_of(table.top_flags.begin(), table.top_flags.end(), [](bool b) { return b; }))
        throw HypothesisNotMetError("no component reaches the top degree");

    std::vector<Ideal> lower_primes;
    std::vector<char> top(dec.components.size(), 0);
    for (std::size_t j = 0; j < dec.components.size(); ++j) {
        if (table.top_flags[j])
            top[j] = 1;
        else
            lower_primes.push_back(dec.components[j].prime);
    }
    Ideal by_saturation =
        section_ideal(M.defining_ideal, prime_product(M.ring, lower_primes));
    Ideal by_intersection = intersect_components(M.ring, dec, top);
    if (by_saturation != by_intersection)
        throw TheoremViolationError("t-submodule witnesses disagree: saturation " +
                                    ideal_text(by_saturation) + " vs intersection " +
                                    ideal_text(by_intersection));
    return by_saturation;
}

TopCohomologyReport ann_top(const CyclicModule& M, const Ideal& a,
                            const PrimaryDecomposition& dec) {
    TopCohomologyReport report;
    report.d = M.dimension;
    report.attached = attached_top(M, a, dec);
    report.nonvanishing = !report.attached.empty();
    if (!report.nonvanishing) return report;

    const CdTable table = cd_table_top_split(M, a, dec);
    Ideal K = t_submodule(M, a, table);
    report.t_ideal = K;
    report.annihilator = K;  // Ann(M/T) for cyclic M is the ideal carrying T

    Ideal rad = Ideal::unit(M.ring);
    for (const Ideal& p : report.attached) {
        report.supp_bound.push_back(ideal_sum(p, a));
        rad = intersect(rad, p);
    }
    report.radical_ann = std::move(rad);
    return report;
}

std::vector<AssLevelReport> ass_filtration_report(const CdFiltration& F) {
    const CdTable& table = F.table;
    const PrimaryDecomposition& dec = table.decomposition;
    const bool monomial = F.module.defining_ideal.is_monomial();

    std::vector<AssLevelReport> out;
    for (int i = 0; i <= table.top_level; ++i) {
        AssLevelReport level;
        for (std::size_t j = 0; j < dec.components.size(); ++j) {
            const Ideal& p = dec.components[j].prime;
            if (table.values[j] <= i) level.ass_sub.push_back(p);
            if (table.values[j] > i) level.ass_quotient.push_back(p);
            if (table.values[j] == i) level.ass_graded.push_back(p);
        }
        level.ass_sub = sorted_ideals(std::move(level.ass_sub));
        level.ass_quotient = sorted_ideals(std::move(level.ass_quotient));
        level.ass_graded = sorted_ideals(std::move(level.ass_graded));

        if (monomial) {
            // M/M_i = R/K_i: recompute its associated primes from scratch.
            const Ideal& K = F.level(i);
            std::vector<Ideal> recomputed;
            if (!K.is_unit()) recomputed = associated_primes(K);
            if (recomputed != level.ass_quotient)
                throw TheoremViolationError(
                    "recomputed associated primes disagree with the cd prediction at level " +
                    std::to_string(i));
        }
        out.push_back(std::move(level));
    }
    return out;
}

bool EquivalenceReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

// H^d_a(R/J) != 0 for proper J containing I, at the fixed degree d = dim R/I.
bool h_top_at_degree(const Ideal& J, const Ideal& a, int d) {
    if (J.is_unit()) return false;  // the zero module
    if (krull_dim(J) != d) return false;  // cd <= dim R/J < d
    const CyclicModule N = make_module(J);
    return h_top_nonzero(N, a, primary_decomposition(J));
}

Polynomial random_monomial_poly(const RingPtr& ring, std::mt19937_64& rng, int max_degree) {
    const int n = ring->nvars();
    const int degree = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(rng() % n)];
    return Polynomial::term(ring, Monomial(std::move(e)), 1);
}

} // namespace

EquivalenceReport ann_equivalences(const CyclicModule& M, const Ideal& a,
                                   const PrimaryDecomposition& dec, std::mt19937_64& rng,
                                   int outside_count) {
    const TopCohomologyReport report = ann_top(M, a, dec);
    if (!report.nonvanishing)
        throw HypothesisNotMetError("the top local cohomology module vanishes");
    const Ideal& K = *report.annihilator;
    const Ideal& I = M.defining_ideal;

    EquivalenceReport out;

    // Scaling: for x in the annihilator (its generators) and for random
    // monomials outside it, H^d_a(xM) != 0 iff x is outside the annihilator.
    if (I.is_monomial()) {
        std::vector<Polynomial> battery = K.reduced_basis();
        for (int picked = 0, attempts = 0; picked < outside_count && attempts < 400; ++attempts) {
            Polynomial x = random_monomial_poly(M.ring, rng, 4);
            if (K.contains(x)) continue;
            battery.push_back(std::move(x));
            ++picked;
        }
        for (const Polynomial& x : battery) {
            const bool outside = !K.contains(x);
            const bool nonzero = h_top_at_degree(quotient(I, Ideal(M.ring, {x})), a, M.dimension);
            out.checks.push_back({"scaling x = " + x.to_string(), nonzero == outside,
                                  nonzero ? "H^d_a(xM) != 0" : "H^d_a(xM) = 0"});
        }
    }

    // The annihilator collapses to I exactly when every associated prime is
    // attached.
    std::vector<Ideal> ass;
    for (const PrimaryComponent& c : dec.components) ass.push_back(c.prime);
    ass = sorted_ideals(std::move(ass));
    const bool attached_is_ass = ass == report.attached;
    const bool ann_is_I = K == I;
    out.checks.push_back({"attached = Ass forces ann = I", attached_is_ass == ann_is_I,
                          attached_is_ass ? "attached = Ass" : "attached != Ass"});
    return out;
}

} // namespace topcoh
