#pragma once

#include <string>
#include <vector>

#include "topcoh/ring.hpp"

namespace topcoh {

struct Term {
    Monomial monomial;
    Rational coeff;
};

// Immutable multivariate polynomial. Terms are stored with nonzero canonical
// coefficients, sorted descending under graded-reverse-lex; equality is
// structural. Orders other than grevlex only matter to the division and
// basis algorithms, which re-sort internally.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring);  // the zero polynomial

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, const Rational& value);
    static Polynomial variable(RingPtr ring, int index);
    static Polynomial term(RingPtr ring, Monomial monomial, const Rational& coeff);
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_single_term() const { return terms_.size() == 1; }
    bool is_homogeneous() const;  // all terms share one total degree; 0 counts
    // -1 for the zero polynomial.
    int total_degree() const;
    // Union of the supports of all terms.
    std::uint64_t support() const;

    const Term& leading_term(const MonomialOrder& order) const;
    Polynomial monic(const MonomialOrder& order) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Term& t) const;
    Polynomial pow(unsigned exponent) const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // Canonical text form; parse_polynomial inverts it exactly.
    std::string to_string() const;
    std::string to_string(const MonomialOrder& order) const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// Lift into a ring that extends f's ring by appended variables; the inverse
// direction checks that the dropped variables do not occur.
Polynomial lift_to(const Polynomial& f, const RingPtr& target);
Polynomial contract_to(const Polynomial& f, const RingPtr& target);

struct DivisionResult {
    std::vector<Polynomial> quotients;  // aligned with the reducer list
    Polynomial remainder;
};

// Multivariate division: f = sum quotients[i]*reducers[i] + remainder, and no
// term of the remainder is divisible by any reducer's leading monomial.
// Deterministic: reducers are tried in list order and the leading term of the
// running dividend is always reduced first. Zero reducers are ignored.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& reducers,
                      const MonomialOrder& order);

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& reducers,
                       const MonomialOrder& order);

// S-polynomial with both leading coefficients normalized away; rejects zero
// input. s_polynomial(f, f, order) == 0.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Deterministic total order used for canonical sorting of polynomial lists.
int compare_polynomials(const Polynomial& a, const Polynomial& b);

} // namespace topcoh
