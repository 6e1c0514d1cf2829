#include "topcoh/groebner.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

namespace topcoh {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

RingPtr deduce_ring(const std::vector<Polynomial>& polys) {
    if (polys.empty()) return nullptr;
    const RingPtr& ring = polys.front().ring();
    for (const Polynomial& p : polys)
        if (!same_ring(ring, p.ring()))
            throw RingMismatchError("generators from different rings");
    return ring;
}

bool all_single_term(const std::vector<Polynomial>& polys) {
    return std::all_of(polys.begin(), polys.end(),
                       [](const Polynomial& p) { return p.is_single_term(); });
}

// Minimal generating set of a monomial ideal: drop duplicates and any
// monomial divisible by another generator. This is already the reduced
// Groebner basis for every monomial order.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> monomials) {
    const std::size_t count = monomials.size();
    std::vector<char> redundant(count, 0);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            if (i == j) continue;
            // Divisibility by any other entry kills i; among equal entries
            // only the first survives.
            if (monomials[j].divides(monomials[i]) &&
                (!(monomials[i] == monomials[j]) || j < i)) {
                redundant[i] = 1;
                break;
            }
        }
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < count; ++i)
        if (!redundant[i]) kept.push_back(std::move(monomials[i]));
    return kept;
}

void sort_by_leading(std::vector<Polynomial>& basis, const MonomialOrder& order) {
    std::sort(basis.begin(), basis.end(), [&order](const Polynomial& a, const Polynomial& b) {
        return order.greater(a.leading_term(order).monomial, b.leading_term(order).monomial);
    });
}

} // namespace

std::vector<Polynomial> buchberger_reduced(const std::vector<Polynomial>& generators,
                                           const MonomialOrder& order) {
    const RingPtr ring = deduce_ring(generators);
    std::vector<Polynomial> basis;
    for (const Polynomial& g : generators)
        if (!g.is_zero()) basis.push_back(g.monic(order));
    if (basis.empty()) return {};

    if (all_single_term(basis)) {
        std::vector<Monomial> monomials;
        monomials.reserve(basis.size());
        for (const Polynomial& g : basis) monomials.push_back(g.terms()[0].monomial);
        std::vector<Polynomial> reduced;
        for (Monomial& m : minimal_monomials(std::move(monomials)))
            reduced.push_back(Polynomial::term(ring, std::move(m), 1));
        sort_by_leading(reduced, order);
        return reduced;
    }

    const auto lead = [&order](const Polynomial& p) -> const Monomial& {
        return p.leading_term(order).monomial;
    };

    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});

    while (!pending.empty()) {
        // Normal selection: the pair with the smallest lcm of leading monomials.
        auto chosen = pending.begin();
        Monomial best = lead(basis[chosen->first]).lcm(lead(basis[chosen->second]));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = lead(basis[it->first]).lcm(lead(basis[it->second]));
            if (order.less(l, best)) {
                chosen = it;
                best = std::move(l);
            }
        }
        const auto [i, j] = *chosen;
        pending.erase(chosen);

        if (lead(basis[i]).gcd(lead(basis[j])).is_one()) continue;  // coprime criterion
        bool chained = false;  // chain criterion
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!lead(basis[k]).divides(best)) continue;
            if (!pending.count({std::min(i, k), std::max(i, k)}) &&
                !pending.count({std::min(j, k), std::max(j, k)}))
                chained = true;
        }
        if (chained) continue;

        const Polynomial remainder =
            normal_form(s_polynomial(basis[i], basis[j], order), basis, order);
        if (remainder.is_zero()) continue;
        basis.push_back(remainder.monic(order));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k)
            pending.insert({k, basis.size() - 1});
    }

    // Minimalize: keep only elements whose leading monomial no other kept
    // element's leading monomial divides.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& li = lead(basis[i]);
            const Monomial& lj = lead(basis[j]);
            if (lj.divides(li) && (!(li == lj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Tail-reduce each survivor against the others; leading monomials are
    // pairwise indivisible, so only lower terms change.
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(normal_form(minimal[i], others, order).monic(order));
    }
    sort_by_leading(reduced, order);
    return reduced;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
    if (!ring_) throw InvalidArgumentError("ideal without a ring");
    for (const Polynomial& g : generators_)
        if (!same_ring(ring_, g.ring()))
            throw RingMismatchError("generator from a different ring");
    basis_ = buchberger_reduced(generators_, kGrevlex);
    // One direction of basis/generator agreement; the other holds by
    // construction, every basis element being a combination of generators.
    for (const Polynomial& g : generators_)
        if (!normal_form(g, basis_, kGrevlex).is_zero())
            throw TheoremViolationError("generator does not reduce to zero against its basis");
}

Ideal::Ideal(ReducedTag, RingPtr ring, std::vector<Polynomial> basis)
    : ring_(std::move(ring)), generators_(basis), basis_(std::move(basis)) {}

Ideal from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis) {
    return Ideal(Ideal::ReducedTag{}, std::move(ring), std::move(basis));
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(RingPtr ring) {
    Polynomial one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {std::move(one)});
}

bool Ideal::is_unit() const {
    return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

bool Ideal::is_monomial() const {
    return std::all_of(basis_.begin(), basis_.end(),
                       [](const Polynomial& p) { return p.is_single_term(); });
}

bool Ideal::contains(const Polynomial& f) const {
    if (!same_ring(ring_, f.ring()))
        throw RingMismatchError("membership test across rings");
    return normal_form(f, basis_, kGrevlex).is_zero();
}

bool Ideal::contains_ideal(const Ideal& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const Polynomial& g) { return contains(g); });
}

bool Ideal::operator==(const Ideal& other) const {
    return same_ring(ring_, other.ring_) && basis_ == other.basis_;
}

bool membership(const Polynomial& f, const Ideal& I) { return I.contains(f); }

namespace {

std::uint64_t variable_mask(const RingPtr& ring, const std::vector<int>& variables) {
    std::uint64_t mask = 0;
    for (int v : variables) {
        if (v < 0 || v >= ring->nvars())
            throw InvalidArgumentError("variable index out of range");
        mask |= std::uint64_t(1) << v;
    }
    return mask;
}

// Elements of a reduced basis under an elimination order that avoid the
// eliminated variables form the reduced grevlex basis of what they generate.
std::vector<Polynomial> eliminate_basis(const RingPtr& ring,
                                        const std::vector<Polynomial>& generators,
                                        std::uint64_t mask) {
    std::vector<Polynomial> basis = buchberger_reduced(generators, MonomialOrder::block(mask));
    std::erase_if(basis, [mask](const Polynomial& p) { return (p.support() & mask) != 0; });
    return basis;
}

} // namespace

Ideal eliminate(const Ideal& I, const std::vector<int>& variables) {
    const std::uint64_t mask = variable_mask(I.ring(), variables);
    if (mask == 0) return I;
    return from_reduced_basis(I.ring(), eliminate_basis(I.ring(), I.reduced_basis(), mask));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw RingMismatchError("intersection across rings");
    if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
    if (I.is_unit()) return J;
    if (J.is_unit()) return I;

    const RingPtr ext = extend_ring(I.ring());
    const int aux = ext->nvars() - 1;
    const Polynomial t = Polynomial::variable(ext, aux);
    const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    gens.reserve(I.reduced_basis().size() + J.reduced_basis().size());
    for (const Polynomial& f : I.reduced_basis()) gens.push_back(t * lift_to(f, ext));
    for (const Polynomial& g : J.reduced_basis()) gens.push_back(one_minus_t * lift_to(g, ext));

    std::vector<Polynomial> basis =
        eliminate_basis(ext, gens, std::uint64_t(1) << aux);
    std::vector<Polynomial> contracted;
    contracted.reserve(basis.size());
    for (const Polynomial& p : basis) contracted.push_back(contract_to(p, I.ring()));
    return from_reduced_basis(I.ring(), std::move(contracted));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw RingMismatchError("colon ideal across rings");
    if (J.is_zero())
        throw InvalidArgumentError("colon ideal by the zero ideal");
    Ideal result = Ideal::unit(I.ring());
    for (const Polynomial& g : J.reduced_basis()) {
        const Ideal common = intersect(I, Ideal(I.ring(), {g}));
        std::vector<Polynomial> gens;
        gens.reserve(common.reduced_basis().size());
        for (const Polynomial& h : common.reduced_basis()) {
            DivisionResult d = divide(h, {g}, kGrevlex);
            if (!d.remainder.is_zero())
                throw TheoremViolationError(
                    "element of I cap (g) not divisible by g");
            gens.push_back(std::move(d.quotients[0]));
        }
        result = intersect(result, Ideal(I.ring(), std::move(gens)));
    }
    return result;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw RingMismatchError("saturation across rings");
    if (J.is_zero())
        throw InvalidArgumentError("saturation by the zero ideal");
    Ideal current = I;
    for (int round = 0; round < 10000; ++round) {
        Ideal next = quotient(current, J);
        if (next == current) return current;
        current = std::move(next);
    }
    throw TheoremViolationError("saturation failed to stabilize");
}

bool radical_member(const Polynomial& f, const Ideal& I) {
    if (!same_ring(f.ring(), I.ring()))
        throw RingMismatchError("radical membership across rings");
    const RingPtr ext = extend_ring(I.ring());
    const Polynomial t = Polynomial::variable(ext, ext->nvars() - 1);
    std::vector<Polynomial> gens;
    gens.reserve(I.reduced_basis().size() + 1);
    for (const Polynomial& g : I.reduced_basis()) gens.push_back(lift_to(g, ext));
    gens.push_back(Polynomial::constant(ext, 1) - t * lift_to(f, ext));
    const std::vector<Polynomial> basis = buchberger_reduced(gens, kGrevlex);
    return basis.size() == 1 && basis[0].is_constant();
}

int krull_dim(const Ideal& I) {
    if (I.is_unit()) return -1;
    const int n = I.ring()->nvars();
    std::vector<std::uint64_t> supports;
    supports.reserve(I.reduced_basis().size());
    for (const Polynomial& g : I.reduced_basis())
        supports.push_back(g.leading_term(kGrevlex).monomial.support());
    int best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        const bool independent = std::none_of(
            supports.begin(), supports.end(),
            [mask](std::uint64_t s) { return (s & ~mask) == 0; });
        if (independent) best = std::max(best, std::popcount(mask));
    }
    return best;
}

bool is_homogeneous(const Ideal& I) {
    return std::all_of(I.reduced_basis().begin(), I.reduced_basis().end(),
                       [](const Polynomial& p) { return p.is_homogeneous(); });
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw RingMismatchError("sum across rings");
    std::vector<Polynomial> gens = I.reduced_basis();
    gens.insert(gens.end(), J.reduced_basis().begin(), J.reduced_basis().end());
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw RingMismatchError("product across rings");
    if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
    std::vector<Polynomial> gens;
    gens.reserve(I.reduced_basis().size() * J.reduced_basis().size());
    for (const Polynomial& f : I.reduced_basis())
        for (const Polynomial& g : J.reduced_basis()) gens.push_back(f * g);
    if (all_single_term(gens)) {
        // Prune divisible products up front; the basis would drop them anyway.
        std::vector<Monomial> monomials;
        monomials.reserve(gens.size());
        for (const Polynomial& g : gens) monomials.push_back(g.terms()[0].monomial);
        gens.clear();
        for (Monomial& m : minimal_monomials(std::move(monomials)))
            gens.push_back(Polynomial::term(I.ring(), std::move(m), 1));
    }
    return Ideal(I.ring(), std::move(gens));
}

Ideal irrelevant_ideal(const RingPtr& ring) {
    std::vector<Polynomial> gens;
    gens.reserve(static_cast<std::size_t>(ring->nvars()));
    for (int i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(gens));
}

bool is_irrelevant(const Ideal& I) { return I == irrelevant_ideal(I.ring()); }

bool ideal_less(const Ideal& a, const Ideal& b) {
    const auto& ba = a.reduced_basis();
    const auto& bb = b.reduced_basis();
    const std::size_t n = std::min(ba.size(), bb.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = compare_polynomials(ba[i], bb[i]);
        if (c != 0) return c > 0;  // larger leading data sorts first
    }
    return ba.size() < bb.size();
}

std::vector<std::string> generator_strings(const Ideal& I) {
    std::vector<std::string> out;
    out.reserve(I.reduced_basis().size());
    for (const Polynomial& g : I.reduced_basis()) out.push_back(g.to_string());
    return out;
}

namespace detail {

Ideal saturate_aux(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw RingMismatchError("saturation across rings");
    if (J.is_zero())
        throw InvalidArgumentError("saturation by the zero ideal");
    const RingPtr ext = extend_ring(I.ring());
    const int aux = ext->nvars() - 1;
    const Polynomial t = Polynomial::variable(ext, aux);
    Ideal result = Ideal::unit(I.ring());
    for (const Polynomial& g : J.reduced_basis()) {
        std::vector<Polynomial> gens;
        gens.reserve(I.reduced_basis().size() + 1);
        for (const Polynomial& f : I.reduced_basis()) gens.push_back(lift_to(f, ext));
        gens.push_back(Polynomial::constant(ext, 1) - t * lift_to(g, ext));
        std::vector<Polynomial> basis =
            eliminate_basis(ext, gens, std::uint64_t(1) << aux);
        std::vector<Polynomial> contracted;
        contracted.reserve(basis.size());
        for (const Polynomial& p : basis) contracted.push_back(contract_to(p, I.ring()));
        result = intersect(result, from_reduced_basis(I.ring(), std::move(contracted)));
    }
    return result;
}

} // namespace detail

} // namespace topcoh
