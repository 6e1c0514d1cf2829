#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "topcoh/primdec.hpp"

namespace topcoh {

// The cyclic module M = R/I for a proper ideal I, with d = dim M.
struct CyclicModule {
    RingPtr ring;
    Ideal defining_ideal;
    int dimension;
};

CyclicModule make_module(Ideal defining_ideal);

// Graded criterion for cd(a, R/p) = d: dim R/p = d and dim R/(a+p) = 0
// (equivalently Rad(a+p) is the irrelevant maximal ideal). Requires
// homogeneous a and p; rejects other input as unsupported.
bool top_prime_test(const Ideal& a, const Ideal& p, int d);

// Attached primes of H^d_a(M): the associated primes with dim R/p = d whose
// sum with a is irrelevant-radical. Always a subset of Assh(M).
std::vector<Ideal> attached_top(const CyclicModule& M, const Ideal& a,
                                const PrimaryDecomposition& dec);

// H^d_a(M) != 0, i.e. the attached set is nonempty.
bool h_top_nonzero(const CyclicModule& M, const Ideal& a, const PrimaryDecomposition& dec);

// Per-component cohomological dimensions cd(a, R/p_j).
//
// Exact mode carries the actual values (and their maximum c); it is entered
// either through the dimension oracle, valid only for a = irrelevant ideal,
// where cd(m, R/p) = dim R/p, or through a caller-supplied table, validated
// against [0, dim R/p_j] and against the top test (a value of d is claimed
// exactly when the test passes). TopSplit mode only records which components
// sit at the top, which suffices for the top-degree quantities.
enum class CdMode { Exact, TopSplit };

struct CdTable {
    PrimaryDecomposition decomposition;
    CdMode mode;
    std::vector<int> values;     // Exact mode, aligned with components
    std::vector<bool> top_flags; // both modes
    int top_level;               // Exact mode: c = max value
};

CdTable cd_table_dim_oracle(const CyclicModule& M, const Ideal& a, PrimaryDecomposition dec);
CdTable cd_table_user(const CyclicModule& M, const Ideal& a, PrimaryDecomposition dec,
                      const std::vector<int>& values);
CdTable cd_table_top_split(const CyclicModule& M, const Ideal& a, PrimaryDecomposition dec);

// One filtration level M_i, carried by the ideal K_i with M_i = K_i/I.
// Each level is computed twice, by saturating I at the product of the
// primes with cd <= i and by intersecting the components with cd > i; the
// two witnesses are kept and must agree, or construction throws
// TheoremViolationError.
struct FiltrationLevel {
    Ideal a_product;
    Ideal saturation_witness;
    Ideal intersection_witness;
};

struct CdFiltration {
    CyclicModule module;
    Ideal a;
    CdTable table;
    std::vector<FiltrationLevel> levels;  // K_0 through K_c, increasing, K_c = (1)

    int top_level() const { return static_cast<int>(levels.size()) - 1; }
    const Ideal& level(int i) const {
        return levels[static_cast<std::size_t>(i)].saturation_witness;
    }
};

// The full filtration 0 = M_{-1} <= M_0 <= ... <= M_c = M. Needs exact cd
// values (Exact mode).
CdFiltration filtration(const CyclicModule& M, const Ideal& a, const CdTable& table);

// Ideal K with T = K/I, where T is the largest submodule of M whose
// cohomological dimension is below the top. K is computed both as
// saturate(I, product of non-top primes) and as the intersection of the top
// components; disagreement throws TheoremViolationError. In TopSplit mode
// an empty top layer makes T undefined and raises HypothesisNotMetError.
Ideal t_submodule(const CyclicModule& M, const Ideal& a, const CdTable& table);

// Everything this engine asserts about H^d_a(M). When the module vanishes
// (no attached primes) only d, nonvanishing and the empty attached list are
// populated. Otherwise annihilator == t_ideal (the module is M/T for the
// cyclic M) and radical_ann is the intersection of the attached primes;
// supp_bound lists p_j + a over the attached primes, a closed-support bound.
struct TopCohomologyReport {
    int d = 0;
    bool nonvanishing = false;
    std::vector<Ideal> attached;
    std::optional<Ideal> t_ideal;
    std::optional<Ideal> annihilator;
    std::optional<Ideal> radical_ann;
    std::vector<Ideal> supp_bound;
};

TopCohomologyReport ann_top(const CyclicModule& M, const Ideal& a,
                            const PrimaryDecomposition& dec);

// Associated primes along the filtration: Ass(M_i) = {p_j : cd <= i},
// Ass(M/M_i) = {p_j : cd > i}, Ass(M_i/M_{i-1}) = {p_j : cd = i}. For
// monomial input Ass(M/M_i) is recomputed independently from a fresh
// decomposition of K_i; a mismatch throws TheoremViolationError.
struct AssLevelReport {
    std::vector<Ideal> ass_sub;        // Ass M_i
    std::vector<Ideal> ass_quotient;   // Ass M/M_i
    std::vector<Ideal> ass_graded;     // Ass M_i/M_{i-1}
};

std::vector<AssLevelReport> ass_filtration_report(const CdFiltration& F);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct EquivalenceReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// Consistency checks tying the annihilator to module arithmetic. For each
// annihilator generator x and `outside_count` random monomials outside the
// annihilator: H^d_a(xM) != 0 exactly when x lies outside the annihilator,
// with xM = R/(I:x) tested at degree d. Also: the annihilator equals I
// exactly when the attached set is all of Ass(M). Requires H^d_a(M) != 0
// and, for the scaling checks, monomial I.
EquivalenceReport ann_equivalences(const CyclicModule& M, const Ideal& a,
                                   const PrimaryDecomposition& dec, std::mt19937_64& rng,
                                   int outside_count = 5);

} // namespace topcoh
