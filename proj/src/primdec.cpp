#include "topcoh/primdec.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace topcoh {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

void require_monomial_input(const Ideal& I) {
    if (I.is_unit())
        throw InvalidArgumentError("the unit ideal has no primary decomposition");
    if (!I.is_monomial())
        throw InvalidArgumentError("primary decomposition implemented for monomial ideals only");
}

std::vector<Monomial> basis_monomials(const Ideal& I) {
    std::vector<Monomial> out;
    out.reserve(I.reduced_basis().size());
    for (const Polynomial& g : I.reduced_basis())
        out.push_back(g.leading_term(kGrevlex).monomial);
    return out;
}

Ideal monomial_ideal(const RingPtr& ring, const std::vector<Monomial>& monomials) {
    std::vector<Polynomial> gens;
    gens.reserve(monomials.size());
    for (const Monomial& m : monomials) gens.push_back(Polynomial::term(ring, m, 1));
    return Ideal(ring, std::move(gens));
}

// The monomial prime generated by the variables in `mask`.
Ideal prime_of_support(const RingPtr& ring, std::uint64_t mask) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < ring->nvars(); ++i)
        if (mask >> i & 1) gens.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(gens));
}

void split_recursive(const Ideal& I, std::vector<Ideal>& out) {
    const std::vector<Monomial> gens = basis_monomials(I);
    const Monomial* to_split = nullptr;
    for (const Monomial& m : gens) {
        if (std::popcount(m.support()) > 1) {
            to_split = &m;
            break;
        }
    }
    if (to_split == nullptr) {
        out.push_back(I);  // generated by pure variable powers: irreducible
        return;
    }
    // m = u * v with u a pure power and v coprime to it; I = (I+(u)) cap (I+(v)).
    const int var = std::countr_zero(to_split->support());
    std::vector<int> ue(static_cast<std::size_t>(to_split->nvars()), 0);
    ue[static_cast<std::size_t>(var)] = to_split->exponent(var);
    const Monomial u(std::move(ue));
    const Monomial v = *to_split / u;
    std::vector<Monomial> left = gens, right = gens;
    left.push_back(u);
    right.push_back(v);
    split_recursive(monomial_ideal(I.ring(), left), out);
    split_recursive(monomial_ideal(I.ring(), right), out);
}

void sort_ideals(std::vector<Ideal>& ideals) {
    std::sort(ideals.begin(), ideals.end(), ideal_less);
}

void dedupe_ideals(std::vector<Ideal>& ideals) {
    sort_ideals(ideals);
    ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());
}

// Two-way radical membership witnessing Rad(component) = prime.
bool radical_matches(const Ideal& component, const Ideal& prime) {
    for (const Polynomial& g : prime.reduced_basis())
        if (!radical_member(g, component)) return false;
    for (const Polynomial& g : component.reduced_basis())
        if (!radical_member(g, prime)) return false;
    return true;
}

Ideal intersect_all(const RingPtr& ring, const std::vector<PrimaryComponent>& components,
                    std::size_t skip) {
    Ideal acc = Ideal::unit(ring);
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i == skip) continue;
        acc = intersect(acc, components[i].component);
    }
    return acc;
}

void sort_components(std::vector<PrimaryComponent>& components) {
    std::sort(components.begin(), components.end(),
              [](const PrimaryComponent& a, const PrimaryComponent& b) {
                  if (a.prime != b.prime) return ideal_less(a.prime, b.prime);
                  return ideal_less(a.component, b.component);
              });
}

} // namespace

std::vector<Ideal> irreducible_decomposition(const Ideal& I) {
    require_monomial_input(I);
    if (I.is_zero())
        throw InvalidArgumentError("the zero ideal is not generated by monomials");
    std::vector<Ideal> out;
    split_recursive(I, out);
    dedupe_ideals(out);
    return out;
}

PrimaryDecomposition primary_decomposition(const Ideal& I) {
    require_monomial_input(I);
    if (I.is_zero()) {
        // (0) is prime in a polynomial ring over a field.
        PrimaryComponent c{Ideal::zero(I.ring()), Ideal::zero(I.ring())};
        return PrimaryDecomposition{I, {std::move(c)}};
    }

    // Merge irreducible components sharing a radical into one primary ideal.
    std::map<std::uint64_t, Ideal> by_radical;
    for (const Ideal& component : irreducible_decomposition(I)) {
        std::uint64_t mask = 0;
        for (const Monomial& m : basis_monomials(component)) mask |= m.support();
        auto it = by_radical.find(mask);
        if (it == by_radical.end())
            by_radical.emplace(mask, component);
        else
            it->second = intersect(it->second, component);
    }

    std::vector<PrimaryComponent> components;
    for (auto& [mask, component] : by_radical) {
        Ideal prime = prime_of_support(I.ring(), mask);
        if (!radical_matches(component, prime))
            throw TheoremViolationError("merged component has the wrong radical");
        components.push_back({std::move(component), std::move(prime)});
    }

    if (intersect_all(I.ring(), components, components.size()) != I)
        throw TheoremViolationError("primary components do not intersect to the ideal");

    // Drop-one retest until irredundant.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (intersect_all(I.ring(), components, i) == I) {
                components.erase(components.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }

    sort_components(components);
    return PrimaryDecomposition{I, std::move(components)};
}

std::vector<Ideal> associated_primes(const Ideal& I) {
    std::vector<Ideal> primes;
    for (const PrimaryComponent& c : primary_decomposition(I).components)
        primes.push_back(c.prime);
    sort_ideals(primes);
    return primes;
}

std::vector<Ideal> minimal_primes(const Ideal& I) {
    const std::vector<Ideal> primes = associated_primes(I);
    std::vector<Ideal> minimal;
    for (const Ideal& p : primes) {
        const bool has_smaller = std::any_of(
            primes.begin(), primes.end(),
            [&p](const Ideal& q) { return q != p && p.contains_ideal(q); });
        if (!has_smaller) minimal.push_back(p);
    }
    return minimal;
}

Ideal monomial_radical(const Ideal& I) {
    if (!I.is_monomial())
        throw InvalidArgumentError("radical by squarefree parts needs a monomial ideal");
    std::vector<Monomial> squarefree;
    for (const Monomial& m : basis_monomials(I)) {
        std::vector<int> e(m.exponents());
        for (int& x : e) x = x > 0 ? 1 : 0;
        squarefree.push_back(Monomial(std::move(e)));
    }
    return monomial_ideal(I.ring(), squarefree);
}

PrimaryDecomposition validate_decomposition(const Ideal& I,
                                            std::vector<PrimaryComponent> components) {
    if (components.empty())
        throw InvalidArgumentError("decomposition without components");
    for (const PrimaryComponent& c : components) {
        if (!same_ring(c.component.ring(), I.ring()) || !same_ring(c.prime.ring(), I.ring()))
            throw RingMismatchError("decomposition component from a different ring");
        if (!radical_matches(c.component, c.prime)) {
            std::string gens;
            for (const auto& g : generator_strings(c.component))
                gens += (gens.empty() ? "" : ", ") + g;
            throw InvalidArgumentError(
                "component radical does not match its prime: (" + gens + ")");
        }
    }
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = i + 1; j < components.size(); ++j)
            if (components[i].prime == components[j].prime)
                throw InvalidArgumentError("decomposition repeats a prime");
    if (intersect_all(I.ring(), components, components.size()) != I)
        throw InvalidArgumentError("decomposition does not intersect to the ideal");
    for (std::size_t i = 0; i < components.size(); ++i)
        if (intersect_all(I.ring(), components, i) == I)
            throw InvalidArgumentError("decomposition has a redundant component");
    sort_components(components);
    return PrimaryDecomposition{I, std::move(components)};
}

} // namespace topcoh
