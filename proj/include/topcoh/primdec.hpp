#pragma once

#include <vector>

#include "topcoh/groebner.hpp"

namespace topcoh {

// One primary component together with its radical. Rad(component) = prime
// is rechecked by two-way radical membership whenever a pair is built or
// accepted from the caller.
struct PrimaryComponent {
    Ideal component;
    Ideal prime;
};

// Irredundant reduced primary decomposition: the components intersect to
// `source`, no component can be dropped, and the primes are pairwise
// distinct. Components are sorted canonically.
struct PrimaryDecomposition {
    Ideal source;
    std::vector<PrimaryComponent> components;
};

// Splits a proper monomial ideal into irreducible monomial ideals (each
// generated by pure variable powers) whose intersection is I. Rejects the
// zero ideal, the unit ideal and non-monomial input.
std::vector<Ideal> irreducible_decomposition(const Ideal& I);

// Reduced primary decomposition of a proper monomial ideal or of (0):
// irreducible components merged by equal radical, redundant components
// removed by explicit drop-one retests.
PrimaryDecomposition primary_decomposition(const Ideal& I);

// Associated primes Ass(R/I) = primes of the reduced decomposition.
std::vector<Ideal> associated_primes(const Ideal& I);

// Inclusion-minimal associated primes.
std::vector<Ideal> minimal_primes(const Ideal& I);

// Radical of a monomial ideal: squarefree parts of the generators.
Ideal monomial_radical(const Ideal& I);

// Checks a caller-supplied decomposition of I: components intersect to I,
// each Rad(Q) = p by two-way radical membership, primes pairwise distinct,
// and no component redundant. Primariness of each component is trusted.
// Throws InvalidArgumentError when a check fails; returns the decomposition
// in canonical order.
PrimaryDecomposition validate_decomposition(const Ideal& I,
                                            std::vector<PrimaryComponent> components);

} // namespace topcoh
