#include "topcoh/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace topcoh {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw RingMismatchError("polynomials from different rings");
}

// Sort descending under `order`; inputs must have pairwise distinct monomials.
void sort_terms(std::vector<Term>& terms, const MonomialOrder& order) {
    std::sort(terms.begin(), terms.end(), [&order](const Term& a, const Term& b) {
        return order.greater(a.monomial, b.monomial);
    });
}

// h -= c * m * g, all term lists sorted descending under `order`.
std::vector<Term> subtract_scaled(const RingDescriptor& ring, const std::vector<Term>& h,
                                  const std::vector<Term>& g, const Rational& c,
                                  const Monomial& m, const MonomialOrder& order) {
    std::vector<Term> out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < h.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back(h[i++]);
            continue;
        }
        const Monomial gm = g[j].monomial * m;
        if (i == h.size()) {
            Rational v = coeff_neg(ring, coeff_mul(ring, c, g[j].coeff));
            if (v != 0) out.push_back({gm, std::move(v)});
            ++j;
            continue;
        }
        const int cmp = order.compare(h[i].monomial, gm);
        if (cmp > 0) {
            out.push_back(h[i++]);
        } else if (cmp < 0) {
            Rational v = coeff_neg(ring, coeff_mul(ring, c, g[j].coeff));
            if (v != 0) out.push_back({gm, std::move(v)});
            ++j;
        } else {
            Rational v = coeff_sub(ring, h[i].coeff, coeff_mul(ring, c, g[j].coeff));
            if (v != 0) out.push_back({h[i].monomial, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

std::string rational_string(const Rational& value) {
    return value.get_str();
}

} // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw InvalidArgumentError("polynomial without a ring");
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring)); }

Polynomial Polynomial::constant(RingPtr ring, const Rational& value) {
    const int n = ring->nvars();
    return term(std::move(ring), Monomial::one(n), value);
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
    if (index < 0 || index >= ring->nvars())
        throw InvalidArgumentError("variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(ring->nvars()), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return term(std::move(ring), Monomial(std::move(e)), 1);
}

Polynomial Polynomial::term(RingPtr ring, Monomial monomial, const Rational& coeff) {
    return from_terms(std::move(ring), {{std::move(monomial), coeff}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const int n = p.ring_->nvars();
    for (auto& t : terms) {
        if (t.monomial.nvars() != n)
            throw RingMismatchError("monomial arity does not match the ring");
        t.coeff = coeff_normalize(*p.ring_, t.coeff);
    }
    sort_terms(terms, kGrevlex);
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().monomial == t.monomial)
            merged.back().coeff = coeff_add(*p.ring_, merged.back().coeff, t.coeff);
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    p.terms_ = std::move(merged);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

bool Polynomial::is_homogeneous() const {
    for (const Term& t : terms_)
        if (t.monomial.degree() != terms_[0].monomial.degree()) return false;
    return true;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

std::uint64_t Polynomial::support() const {
    std::uint64_t mask = 0;
    for (const Term& t : terms_) mask |= t.monomial.support();
    return mask;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw InvalidArgumentError("zero polynomial has no leading term");
    if (order.kind() == MonomialOrder::Kind::GrevLex) return terms_.front();
    const Term* best = &terms_.front();
    for (const Term& t : terms_)
        if (order.greater(t.monomial, best->monomial)) best = &t;
    return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    const Rational lc = leading_term(order).coeff;
    if (lc == 1) return *this;
    Polynomial out(ring_);
    out.terms_ = terms_;
    for (Term& t : out.terms_) t.coeff = coeff_div(*ring_, t.coeff, lc);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    out.terms_ = terms_;
    for (Term& t : out.terms_) t.coeff = coeff_neg(*ring_, t.coeff);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_ring(*this, other);
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
        if (i == terms_.size()) {
            out.push_back(other.terms_[j++]);
        } else if (j == other.terms_.size()) {
            out.push_back(terms_[i++]);
        } else {
            const int cmp = kGrevlex.compare(terms_[i].monomial, other.terms_[j].monomial);
            if (cmp > 0) {
                out.push_back(terms_[i++]);
            } else if (cmp < 0) {
                out.push_back(other.terms_[j++]);
            } else {
                Rational v = coeff_add(*ring_, terms_[i].coeff, other.terms_[j].coeff);
                if (v != 0) out.push_back({terms_[i].monomial, std::move(v)});
                ++i;
                ++j;
            }
        }
    }
    Polynomial p(ring_);
    p.terms_ = std::move(out);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_ring(*this, other);
    std::vector<Term> out;
    out.reserve(terms_.size() * other.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : other.terms_)
            out.push_back({a.monomial * b.monomial, coeff_mul(*ring_, a.coeff, b.coeff)});
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    const Rational cn = coeff_normalize(*ring_, c);
    if (cn == 0) return zero(ring_);
    Polynomial out(ring_);
    out.terms_ = terms_;
    for (Term& t : out.terms_) t.coeff = coeff_mul(*ring_, t.coeff, cn);
    return out;
}

Polynomial Polynomial::times_term(const Term& t) const {
    const Rational cn = coeff_normalize(*ring_, t.coeff);
    if (cn == 0) return zero(ring_);
    Polynomial out(ring_);
    out.terms_ = terms_;
    for (Term& s : out.terms_) {
        s.monomial = s.monomial * t.monomial;
        s.coeff = coeff_mul(*ring_, s.coeff, cn);
    }
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial acc = constant(ring_, 1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1) acc = acc * base;
        base = base * base;
        exponent >>= 1;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_)) return false;
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].monomial != other.terms_[i].monomial ||
            terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

std::string Polynomial::to_string() const { return to_string(kGrevlex); }

std::string Polynomial::to_string(const MonomialOrder& order) const {
    if (terms_.empty()) return "0";
    std::vector<Term> sorted = terms_;
    sort_terms(sorted, order);
    std::ostringstream out;
    bool first = true;
    for (const Term& t : sorted) {
        Rational mag = t.coeff;
        bool negative = false;
        if (ring_->characteristic == 0 && sgn(mag) < 0) {
            negative = true;
            mag = -mag;
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string mono;
        for (int i = 0; i < t.monomial.nvars(); ++i) {
            const int e = t.monomial.exponent(i);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->variables[static_cast<std::size_t>(i)];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out << rational_string(mag);
        } else {
            if (mag != 1) out << rational_string(mag) << "*";
            out << mono;
        }
    }
    return out.str();
}

Polynomial lift_to(const Polynomial& f, const RingPtr& target) {
    const RingPtr& src = f.ring();
    const int n = src->nvars(), m = target->nvars();
    if (m < n || target->characteristic != src->characteristic ||
        !std::equal(src->variables.begin(), src->variables.end(), target->variables.begin()))
        throw RingMismatchError("target ring does not extend the source ring");
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        std::vector<int> e = t.monomial.exponents();
        e.resize(static_cast<std::size_t>(m), 0);
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

Polynomial contract_to(const Polynomial& f, const RingPtr& target) {
    const RingPtr& src = f.ring();
    const int n = src->nvars(), m = target->nvars();
    if (n < m || target->characteristic != src->characteristic ||
        !std::equal(target->variables.begin(), target->variables.end(), src->variables.begin()))
        throw RingMismatchError("target ring is not a coefficient subring");
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        std::vector<int> e = t.monomial.exponents();
        for (int i = m; i < n; ++i)
            if (e[static_cast<std::size_t>(i)] != 0)
                throw InvalidArgumentError("polynomial involves a variable outside the subring");
        e.resize(static_cast<std::size_t>(m));
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& reducers,
                      const MonomialOrder& order) {
    const RingPtr& ring = f.ring();
    for (const Polynomial& g : reducers)
        if (!same_ring(ring, g.ring()))
            throw RingMismatchError("reducer from a different ring");

    // Active reducers with their term lists and leading terms under `order`.
    struct Active {
        std::size_t index;
        std::vector<Term> terms;
        Term lead;
    };
    std::vector<Active> active;
    for (std::size_t i = 0; i < reducers.size(); ++i) {
        if (reducers[i].is_zero()) continue;
        std::vector<Term> terms = reducers[i].terms();
        std::sort(terms.begin(), terms.end(), [&order](const Term& a, const Term& b) {
            return order.greater(a.monomial, b.monomial);
        });
        active.push_back({i, std::move(terms), reducers[i].leading_term(order)});
    }

    std::vector<Term> h = f.terms();
    std::sort(h.begin(), h.end(), [&order](const Term& a, const Term& b) {
        return order.greater(a.monomial, b.monomial);
    });
    std::vector<std::vector<Term>> quotients(reducers.size());
    std::vector<Term> remainder;
    while (!h.empty()) {
        const Term lead = h.front();
        bool reduced = false;
        for (const Active& a : active) {
            if (!a.lead.monomial.divides(lead.monomial)) continue;
            const Monomial m = lead.monomial / a.lead.monomial;
            const Rational c = coeff_div(*ring, lead.coeff, a.lead.coeff);
            quotients[a.index].push_back({m, c});
            h = subtract_scaled(*ring, h, a.terms, c, m, order);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lead);
            h.erase(h.begin());
        }
    }

    DivisionResult result{{}, Polynomial::from_terms(ring, std::move(remainder))};
    result.quotients.reserve(reducers.size());
    for (auto& q : quotients)
        result.quotients.push_back(Polynomial::from_terms(ring, std::move(q)));
    return result;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& reducers,
                       const MonomialOrder& order) {
    return divide(f, reducers, order).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero())
        throw InvalidArgumentError("s-polynomial of a zero polynomial");
    require_same_ring(f, g);
    const Term& lf = f.leading_term(order);
    const Term& lg = g.leading_term(order);
    const Monomial l = lf.monomial.lcm(lg.monomial);
    const RingDescriptor& ring = *f.ring();
    const Term tf{l / lf.monomial, coeff_div(ring, Rational(1), lf.coeff)};
    const Term tg{l / lg.monomial, coeff_div(ring, Rational(1), lg.coeff)};
    return f.times_term(tf) - g.times_term(tg);
}

int compare_polynomials(const Polynomial& a, const Polynomial& b) {
    const MonomialOrder& order = kGrevlex;
    const std::size_t n = std::min(a.terms().size(), b.terms().size());
    for (std::size_t i = 0; i < n; ++i) {
        const int cm = order.compare(a.terms()[i].monomial, b.terms()[i].monomial);
        if (cm != 0) return cm;
        const int cc = cmp(a.terms()[i].coeff, b.terms()[i].coeff);
        if (cc != 0) return cc;
    }
    if (a.terms().size() != b.terms().size())
        return a.terms().size() < b.terms().size() ? -1 : 1;
    return 0;
}

} // namespace topcoh
