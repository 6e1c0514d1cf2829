#include "topcoh/ring.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace topcoh {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// Reduce an arbitrary rational to its canonical F_p representative.
Rational mod_reduce(long p, const Rational& value) {
    const mpz_class pz(p);
    mpz_class num = value.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = value.get_den() % pz;
    if (den == 0)
        throw InvalidArgumentError("coefficient denominator divisible by the characteristic");
    if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
            throw InvalidArgumentError("coefficient denominator not invertible mod p");
        num = (num * inv) % pz;
    }
    return Rational(num);
}

} // namespace

int RingDescriptor::var_index(std::string_view name) const {
    for (int i = 0; i < nvars(); ++i)
        if (variables[static_cast<std::size_t>(i)] == name) return i;
    return -1;
}

RingPtr make_ring(std::vector<std::string> variables, long characteristic) {
    if (variables.empty())
        throw InvalidArgumentError("a polynomial ring needs at least one variable");
    if (variables.size() > 64)
        throw InvalidArgumentError("at most 64 variables are supported");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty())
            throw InvalidArgumentError("empty variable name");
        if (!seen.insert(v).second)
            throw InvalidArgumentError("duplicate variable name '" + v + "'");
    }
    if (characteristic != 0 &&
        (characteristic >= (1L << 31) || !is_prime(characteristic)))
        throw InvalidArgumentError("characteristic must be 0 or a prime below 2^31");
    auto ring = std::make_shared<RingDescriptor>();
    ring->variables = std::move(variables);
    ring->characteristic = characteristic;
    return ring;
}

bool same_ring(const RingDescriptor& a, const RingDescriptor& b) {
    return a.characteristic == b.characteristic && a.variables == b.variables;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return same_ring(*a, *b);
}

RingPtr extend_ring(const RingPtr& ring, const std::string& aux_name) {
    std::string name = aux_name;
    while (ring->var_index(name) >= 0) name += "'";
    auto ext = std::make_shared<RingDescriptor>();
    ext->variables = ring->variables;
    ext->variables.push_back(name);
    ext->characteristic = ring->characteristic;
    return ext;
}

Rational coeff_normalize(const RingDescriptor& ring, const Rational& value) {
    if (ring.characteristic == 0) {
        Rational v = value;
        v.canonicalize();
        return v;
    }
    return mod_reduce(ring.characteristic, value);
}

Rational coeff_add(const RingDescriptor& ring, const Rational& a, const Rational& b) {
    return coeff_normalize(ring, a + b);
}

Rational coeff_sub(const RingDescriptor& ring, const Rational& a, const Rational& b) {
    return coeff_normalize(ring, a - b);
}

Rational coeff_mul(const RingDescriptor& ring, const Rational& a, const Rational& b) {
    return coeff_normalize(ring, a * b);
}

Rational coeff_div(const RingDescriptor& ring, const Rational& a, const Rational& b) {
    if (coeff_normalize(ring, b) == 0)
        throw InvalidArgumentError("division by zero coefficient");
    if (ring.characteristic == 0) {
        Rational v = a / b;
        v.canonicalize();
        return v;
    }
    const mpz_class pz(ring.characteristic);
    Rational bn = mod_reduce(ring.characteristic, b);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), bn.get_num().get_mpz_t(), pz.get_mpz_t());
    return mod_reduce(ring.characteristic, a * Rational(inv));
}

Rational coeff_neg(const RingDescriptor& ring, const Rational& a) {
    return coeff_normalize(ring, -a);
}

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    for (int e : exponents_) {
        if (e < 0) throw InvalidArgumentError("negative exponent in monomial");
        degree_ += e;
    }
}

Monomial Monomial::one(int nvars) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

bool Monomial::is_squarefree() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars()) return false;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > other.exponents_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<int> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
    std::vector<int> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] -= other.exponents_[i];
        if (e[i] < 0) throw InvalidArgumentError("inexact monomial division");
    }
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<int> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], other.exponents_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
    std::vector<int> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], other.exponents_[i]);
    return Monomial(std::move(e));
}

std::uint64_t Monomial::support() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > 0) mask |= std::uint64_t(1) << i;
    return mask;
}

MonomialOrder MonomialOrder::lex() { return MonomialOrder(Kind::Lex, 0); }
MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
MonomialOrder MonomialOrder::block(std::uint64_t elim) { return MonomialOrder(Kind::Block, elim); }

namespace {

// Graded-reverse-lex restricted to the variables in `mask`.
int grevlex_masked(const Monomial& a, const Monomial& b, std::uint64_t mask) {
    long da = 0, db = 0;
    const int n = a.nvars();
    for (int i = 0; i < n; ++i) {
        if (!(mask >> i & 1)) continue;
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = n - 1; i >= 0; --i) {
        if (!(mask >> i & 1)) continue;
        const int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
        throw RingMismatchError("monomials from different rings");
    const std::uint64_t all =
        a.nvars() >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << a.nvars()) - 1;
    switch (kind_) {
    case Kind::Lex:
        for (int i = 0; i < a.nvars(); ++i) {
            const int d = a.exponent(i) - b.exponent(i);
            if (d != 0) return d < 0 ? -1 : 1;
        }
        return 0;
    case Kind::GrevLex:
        return grevlex_masked(a, b, all);
    case Kind::Block: {
        const int r = grevlex_masked(a, b, elim_ & all);
        if (r != 0) return r;
        return grevlex_masked(a, b, ~elim_ & all);
    }
    }
    return 0;
}

} // namespace topcoh
