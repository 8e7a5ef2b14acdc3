#include "qsphere/ratfunc.hpp"

#include <doctest.h>

#include <random>

using qsphere::IntPoly;
using qsphere::ParseError;
using qsphere::RatFunc;

namespace {

IntPoly poly(std::initializer_list<long> c) {
    std::vector<mpz_class> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(std::move(v));
}

RatFunc random_ratfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4), shift(-5, 5);
    auto rand_poly = [&] {
        std::vector<mpz_class> v;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) v.emplace_back(coef(rng));
        return IntPoly(std::move(v));
    };
    IntPoly den = rand_poly();
    while (den.is_zero()) den = rand_poly();
    return RatFunc::from_parts(shift(rng), rand_poly(), den);
}

}  // namespace

TEST_CASE("polynomial gcd and exact division") {
    IntPoly a = poly({-1, 0, 1});  // t^2 - 1
    IntPoly b = poly({1, 2, 1});   // (t + 1)^2
    CHECK(gcd(a, b) == poly({1, 1}));
    CHECK(a.divexact(poly({1, 1})) == poly({-1, 1}));
    CHECK_THROWS_AS((void)a.divexact(poly({2, 1})), std::domain_error);
    CHECK(gcd(poly({6, 12}), poly({4})) == poly({2}));
    CHECK(gcd(poly({2, 4, 2}), poly({3, 3})) == poly({1, 1}));
}

TEST_CASE("canonical form") {
    RatFunc q = RatFunc::q();
    RatFunc x = (q * q - RatFunc(1)) / (q - RatFunc(1));
    CHECK(x == q + RatFunc(1));
    CHECK(x.is_laurent());
    RatFunc y = RatFunc(-2) / (RatFunc(-4) * q);
    CHECK(y == RatFunc(mpq_class(1, 2)) * q.inverse());
    CHECK(y.den().lead() > 0);
    CHECK((q - q).is_zero());
    CHECK((q / q).is_one());
    CHECK(RatFunc::t_pow(3) * RatFunc::t_pow(-3) == RatFunc(1));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == RatFunc());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("printing in q syntax") {
    RatFunc q = RatFunc::q();
    CHECK(q.to_string() == "q");
    CHECK((q + q.inverse()).to_string() == "q + q^-1");
    CHECK(RatFunc::t_pow(3).to_string() == "q^(3/2)");
    CHECK((-RatFunc::t_pow(-1)).to_string() == "-q^(-1/2)");
    CHECK(RatFunc(mpq_class(-3, 7)).to_string() == "-3/7");
    CHECK((RatFunc(2) * q * q - RatFunc(1)).to_string() == "2*q^2 - 1");
    CHECK(RatFunc().to_string() == "0");
}

TEST_CASE("parsing") {
    RatFunc q = RatFunc::q();
    CHECK(RatFunc::parse("q") == q);
    CHECK(RatFunc::parse("q^(1/2)") == RatFunc::t_pow(1));
    CHECK(RatFunc::parse("-1/(q+q^-1)^2") ==
          -(q + q.inverse()).pow(2).inverse());
    CHECK(RatFunc::parse("2q^2 - 3") == RatFunc(2) * q * q - RatFunc(3));
    CHECK(RatFunc::parse("(q^(1/2) - q^(-1/2))^-2") ==
          (RatFunc::t_pow(1) - RatFunc::t_pow(-1)).pow(-2));
    CHECK(RatFunc::parse(" 3 / 4 ") == RatFunc(mpq_class(3, 4)));
    CHECK_THROWS_AS(RatFunc::parse("q^(1/3)"), ParseError);
    CHECK_THROWS_AS(RatFunc::parse("2^(1/2)"), ParseError);
    CHECK_THROWS_AS(RatFunc::parse("(q"), ParseError);
    CHECK_THROWS_AS(RatFunc::parse("1/0"), ParseError);
    CHECK_THROWS_AS(RatFunc::parse("x"), ParseError);
}

TEST_CASE("print/parse round trip on random elements") {
    std::mt19937 rng(777);
    for (int i = 0; i < 300; ++i) {
        RatFunc a = random_ratfunc(rng);
        CHECK(RatFunc::parse(a.to_string()) == a);
    }
}

TEST_CASE("evaluation and square roots") {
    RatFunc x = RatFunc::parse("(q + 1)/(q - 2)");
    CHECK(x.evaluate(mpq_class(1)) == mpq_class(-2));
    CHECK_THROWS_AS((void)RatFunc::parse("1/(q-1)").evaluate(mpq_class(1)), std::domain_error);
    auto r = RatFunc::parse("9/4*q^-2").monomial_sqrt();
    REQUIRE(r);
    CHECK(*r * *r == RatFunc::parse("9/4*q^-2"));
    CHECK_FALSE(RatFunc::parse("2").monomial_sqrt());
    CHECK_FALSE(RatFunc::parse("q+1").monomial_sqrt());
    CHECK_FALSE(RatFunc::t_pow(1).monomial_sqrt());
}
