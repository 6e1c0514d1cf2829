#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "topcoh/errors.hpp"
#include "topcoh/ring.hpp"

using namespace topcoh;

TEST_CASE("ring construction validates its input") {
    auto R = make_ring({"x", "y", "z"});
    CHECK(R->nvars() == 3);
    CHECK(R->characteristic == 0);
    CHECK(R->var_index("y") == 1);
    CHECK(R->var_index("t") == -1);

    CHECK_THROWS_AS(make_ring({"x", "x"}), InvalidArgumentError);
    CHECK_THROWS_AS(make_ring({}), InvalidArgumentError);
    CHECK_THROWS_AS(make_ring({"x"}, 4), InvalidArgumentError);
    CHECK_THROWS_AS(make_ring({"x"}, 1), InvalidArgumentError);
    CHECK_THROWS_AS(make_ring({"x"}, -7), InvalidArgumentError);
    CHECK_NOTHROW(make_ring({"x"}, 7));
    CHECK_NOTHROW(make_ring({"x"}, 2147483647));  // 2^31 - 1 is prime
    CHECK_THROWS_AS(make_ring({"x"}, 2147483659L), InvalidArgumentError);
}

TEST_CASE("ring identity and extension") {
    auto R = make_ring({"x", "y"});
    auto S = make_ring({"x", "y"});
    auto T = make_ring({"y", "x"});
    CHECK(same_ring(R, S));
    CHECK_FALSE(same_ring(R, T));
    CHECK_FALSE(same_ring(R, make_ring({"x", "y"}, 5)));

    auto E = extend_ring(R);
    CHECK(E->nvars() == 3);
    CHECK(E->variables[0] == "x");
    CHECK(E->variables[2].find('#') != std::string::npos);
    auto E2 = extend_ring(E);
    CHECK(E2->variables[3] != E2->variables[2]);  // auxiliary names stay distinct
}

TEST_CASE("rational coefficient arithmetic") {
    auto R = *make_ring({"x"});
    CHECK(coeff_add(R, Rational(1, 2), Rational(1, 3)) == Rational(5, 6));
    CHECK(coeff_mul(R, Rational(2, 3), Rational(3, 4)) == Rational(1, 2));
    CHECK(coeff_div(R, Rational(1), Rational(-4)) == Rational(-1, 4));
    CHECK(coeff_neg(R, Rational(7)) == Rational(-7));
    CHECK_THROWS_AS(coeff_div(R, Rational(1), Rational(0)), InvalidArgumentError);
}

TEST_CASE("prime field arithmetic stays canonical in [0, p)") {
    auto F = *make_ring({"x"}, 7);
    CHECK(coeff_normalize(F, Rational(-1)) == Rational(6));
    CHECK(coeff_normalize(F, Rational(14)) == Rational(0));
    CHECK(coeff_normalize(F, Rational(1, 2)) == Rational(4));  // 2 * 4 = 8 = 1
    CHECK(coeff_add(F, Rational(3), Rational(5)) == Rational(1));
    CHECK(coeff_mul(F, Rational(3), Rational(5)) == Rational(1));
    CHECK(coeff_div(F, Rational(1), Rational(3)) == Rational(5));
    CHECK(coeff_neg(F, Rational(3)) == Rational(4));
    CHECK_THROWS_AS(coeff_div(F, Rational(1), Rational(7)), InvalidArgumentError);
}

TEST_CASE("monomial arithmetic") {
    Monomial one = Monomial::one(3);
    Monomial xy(std::vector<int>{1, 1, 0});
    Monomial x2z(std::vector<int>{2, 0, 1});
    CHECK(one.is_one());
    CHECK(xy.degree() == 2);
    CHECK((xy * x2z).exponents() == std::vector<int>{3, 1, 1});
    CHECK(xy.lcm(x2z).exponents() == std::vector<int>{2, 1, 1});
    CHECK(xy.gcd(x2z).exponents() == std::vector<int>{1, 0, 0});
    CHECK((xy.lcm(x2z) / xy).exponents() == std::vector<int>{1, 0, 1});
    CHECK(xy.divides(xy.lcm(x2z)));
    CHECK_FALSE(x2z.divides(xy));
    CHECK(xy.support() == 0b011);
    CHECK(x2z.support() == 0b101);
    CHECK(xy.is_squarefree());
    CHECK_FALSE(x2z.is_squarefree());
}

TEST_CASE("graded reverse lexicographic order") {
    auto grevlex = MonomialOrder::grevlex();
    Monomial x2({2, 0, 0}), xy({1, 1, 0}), y2({0, 2, 0}), xz({1, 0, 1}), y3({0, 3, 0});
    CHECK(grevlex.greater(y3, x2));        // degree dominates
    CHECK(grevlex.greater(x2, xy));
    CHECK(grevlex.greater(xy, y2));
    CHECK(grevlex.greater(y2, xz));        // the grevlex signature pair
    CHECK(grevlex.compare(xy, xy) == 0);
}

TEST_CASE("lexicographic order") {
    auto lex = MonomialOrder::lex();
    Monomial x({1, 0, 0}), y3({0, 3, 0}), xz({1, 0, 1}), y2({0, 2, 0});
    CHECK(lex.greater(x, y3));             // degree does not dominate
    CHECK(lex.greater(xz, y2));
}

TEST_CASE("block order separates the eliminated variables") {
    // Eliminate variable 0: anything touching it beats anything that avoids it.
    auto blk = MonomialOrder::block(0b001);
    Monomial x({1, 0, 0}), y5z5({0, 5, 5}), xy({1, 1, 0});
    CHECK(blk.greater(x, y5z5));
    CHECK(blk.greater(xy, x));
    CHECK(blk.greater(y5z5, Monomial({0, 1, 0})));
}
