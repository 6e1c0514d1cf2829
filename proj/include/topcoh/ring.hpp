#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "topcoh/errors.hpp"

namespace topcoh {

// Exact coefficient value. Over F_p the canonical representative is an
// integer in [0, p) with denominator 1.
using Rational = mpq_class;

// k[x_1,...,x_n] with the standard grading (every variable in degree 1).
// k = Q when characteristic == 0, otherwise F_p with p prime, p < 2^31.
struct RingDescriptor {
    std::vector<std::string> variables;
    long characteristic = 0;

    int nvars() const { return static_cast<int>(variables.size()); }
    // -1 when the name is not a variable of this ring.
    int var_index(std::string_view name) const;
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

RingPtr make_ring(std::vector<std::string> variables, long characteristic = 0);

// Structural identity: same variable names in the same order, same field.
bool same_ring(const RingDescriptor& a, const RingDescriptor& b);
bool same_ring(const RingPtr& a, const RingPtr& b);

// Same field with one auxiliary variable appended after the user variables.
// Auxiliary names contain '#', which the polynomial syntax rejects, so they
// can never collide with user input.
RingPtr extend_ring(const RingPtr& ring, const std::string& aux_name = "#t");

// Base field arithmetic. Inputs need not be canonical; results always are.
Rational coeff_normalize(const RingDescriptor& ring, const Rational& value);
Rational coeff_add(const RingDescriptor& ring, const Rational& a, const Rational& b);
Rational coeff_sub(const RingDescriptor& ring, const Rational& a, const Rational& b);
Rational coeff_mul(const RingDescriptor& ring, const Rational& a, const Rational& b);
Rational coeff_div(const RingDescriptor& ring, const Rational& a, const Rational& b);
Rational coeff_neg(const RingDescriptor& ring, const Rational& a);

// Exponent vector with cached total degree. Exponents are never negative.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int nvars);

    int nvars() const { return static_cast<int>(exponents_.size()); }
    int degree() const { return degree_; }
    int exponent(int i) const { return exponents_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return exponents_; }

    bool is_one() const { return degree_ == 0; }
    bool is_squarefree() const;
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    // Exact division; requires other.divides(*this).
    Monomial operator/(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial gcd(const Monomial& other) const;

    // Bitmask of variables with positive exponent.
    std::uint64_t support() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> exponents_;
    int degree_ = 0;
};

// Total orders on monomials compatible with multiplication.
class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex, Block };

    static MonomialOrder lex();
    static MonomialOrder grevlex();
    // Elimination order for exactly the variables in `elim` (bitmask):
    // graded-reverse-lex on the eliminated block, ties broken by
    // graded-reverse-lex on the remaining variables. Any monomial touching
    // the eliminated block compares above every monomial that avoids it.
    static MonomialOrder block(std::uint64_t elim);

    Kind kind() const { return kind_; }
    std::uint64_t elim_mask() const { return elim_; }

    // <0 if a < b, 0 if a == b, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    MonomialOrder(Kind kind, std::uint64_t elim) : kind_(kind), elim_(elim) {}

    Kind kind_;
    std::uint64_t elim_;
};

} // namespace topcoh
