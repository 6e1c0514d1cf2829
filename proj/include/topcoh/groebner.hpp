#pragma once

#include <vector>

#include "topcoh/polynomial.hpp"

namespace topcoh {

// Unique reduced Groebner basis of the ideal generated by `generators`:
// every element monic, no term of any element divisible by the leading
// monomial of another, sorted descending by leading monomial. Buchberger's
// algorithm with normal (smallest-lcm) pair selection and the coprime and
// chain criteria; monomial inputs short-circuit to divisibility filtering.
std::vector<Polynomial> buchberger_reduced(const std::vector<Polynomial>& generators,
                                           const MonomialOrder& order);

// Immutable ideal. The reduced grevlex basis is computed at construction,
// so values can be shared freely across threads; equality compares reduced
// bases structurally, which is sound because the reduced basis is unique.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    static Ideal zero(RingPtr ring);
    static Ideal unit(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    const std::vector<Polynomial>& reduced_basis() const { return basis_; }

    bool is_zero() const { return basis_.empty(); }
    bool is_unit() const;
    bool is_proper() const { return !is_unit(); }
    // True when the reduced basis consists of monomials (so in particular
    // for the zero ideal).
    bool is_monomial() const;
    bool contains(const Polynomial& f) const;
    bool contains_ideal(const Ideal& other) const;

    bool operator==(const Ideal& other) const;
    bool operator!=(const Ideal& other) const { return !(*this == other); }

private:
    struct ReducedTag {};
    Ideal(ReducedTag, RingPtr ring, std::vector<Polynomial> basis);

    friend Ideal from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis);

    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::vector<Polynomial> basis_;
};

// f in I, decided by reduction to normal form against the reduced basis.
bool membership(const Polynomial& f, const Ideal& I);

// I intersected with the subring omitting the listed variables, via a block
// order that eliminates exactly those variables. The result lives in the
// same ring; its generators avoid the eliminated variables.
Ideal eliminate(const Ideal& I, const std::vector<int>& variables);

// I cap J through the auxiliary-variable construction t*I + (1-t)*J.
Ideal intersect(const Ideal& I, const Ideal& J);

// Colon ideal I : J = intersection over basis elements g of J of (1/g)(I cap (g)).
// Rejects J = (0).
Ideal quotient(const Ideal& I, const Ideal& J);

// Saturation I : J^infinity, by iterating quotient(., J) until the reduced
// basis stabilizes. Rejects J = (0).
Ideal saturate(const Ideal& I, const Ideal& J);

// f in Rad(I), via 1 in I + (1 - t*f) in the extended ring.
bool radical_member(const Polynomial& f, const Ideal& I);

// Krull dimension of R/I: the largest size of a variable subset S such that
// no leading monomial of the reduced basis is supported inside S. Returns
// -1 for the unit ideal and nvars for the zero ideal.
int krull_dim(const Ideal& I);

// All reduced-basis elements homogeneous for the standard grading.
bool is_homogeneous(const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

// The irrelevant maximal ideal (x_1,...,x_n).
Ideal irrelevant_ideal(const RingPtr& ring);
bool is_irrelevant(const Ideal& I);

// Deterministic total order for canonical sorting of ideal lists.
bool ideal_less(const Ideal& a, const Ideal& b);

// Canonical text form of the reduced basis ("0" list stays empty).
std::vector<std::string> generator_strings(const Ideal& I);

namespace detail {

// Saturation through a single auxiliary variable per basis element:
// I : g^infinity = (I + (1 - t*g)) cap R, intersected over basis elements
// g of J. Kept as an independent route for cross-checking `saturate`.
Ideal saturate_aux(const Ideal& I, const Ideal& J);

} // namespace detail

} // namespace topcoh
