#include "qsphere/cparam.hpp"

#include <doctest.h>

using namespace qsphere;

namespace {

const RatFunc q = RatFunc::q();
const RatFunc qi = RatFunc::q_pow(-1);

}  // namespace

TEST_CASE("quantum integers") {
    CHECK(qint(0) == RatFunc());
    CHECK(qint(1) == RatFunc(1));
    CHECK(qint(3) == q * q + RatFunc(1) + qi * qi);
    CHECK(qint(-2) == -qint(2));
    for (int l = -20; l <= 20; ++l)
        CHECK(qint(l) * (q - qi) == RatFunc::q_pow(l) - RatFunc::q_pow(-l));
}

TEST_CASE("Gaussian binomials") {
    CHECK(qbinom(5, 0) == RatFunc(1));
    CHECK(qbinom(2, 1) == q + qi);
    CHECK(qbinom(4, 2) == qfactorial(4) / (qfactorial(2) * qfactorial(2)));
    CHECK_THROWS_AS(qbinom(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(qbinom(3, -1), std::invalid_argument);
    for (int l = 1; l <= 10; ++l)
        for (int r = 1; r < l; ++r)
            CHECK(qbinom(l, r) ==
                  RatFunc::q_pow(-r) * qbinom(l - 1, r) + RatFunc::q_pow(l - r) * qbinom(l - 1, r - 1));
    for (int l = 1; l <= 10; ++l)
        for (int r = 1; r < l; ++r)
            CHECK(qbinom(l, r) ==
                  RatFunc::q_pow(r) * qbinom(l - 1, r) + RatFunc::q_pow(r - l) * qbinom(l - 1, r - 1));
}

TEST_CASE("exceptional values c(n)") {
    CHECK(cn_value(2) == -(q + qi).pow(-2));
    CHECK(cn_value(1) == -(RatFunc::t_pow(1) + RatFunc::t_pow(-1)).pow(-2));
    CHECK(cn_value(4) == -(q * q + qi * qi).pow(-2));
    for (int n = 0; n <= 20; ++n)
        for (int m = n + 1; m <= 20; ++m) CHECK(cn_value(n) != cn_value(m));
}

TEST_CASE("admissibility") {
    auto r1 = check_admissible(CParam::generic(RatFunc(1)));
    CHECK(r1.admissible());
    auto r2 = check_admissible(CParam::cn(2));
    CHECK_FALSE(r2.admissible());
    REQUIRE(r2.witness_n2);
    CHECK(*r2.witness_n2 == 2);
    CHECK(check_admissible(CParam::infinity()).admissible());
    CHECK_FALSE(check_admissible(CParam::zero()).admissible());
    CHECK(check_admissible(CParam::exceptional(1)).admissible());
}

TEST_CASE("X_c coefficients") {
    XcData g = xc_data(CParam::generic(RatFunc(2)));
    CHECK(g.alpha == -(RatFunc(2) * (q - qi)).inverse());
    CHECK(g.beta == q * g.gamma);
    XcData inf = xc_data(CParam::infinity());
    CHECK(inf.alpha.is_zero());
    CHECK(inf.beta == q);
    CHECK_THROWS(xc_data(CParam::zero()));
    CHECK_THROWS(xc_data(CParam::cn(2)));
}

TEST_CASE("parameter specs") {
    CHECK(parse_param_spec("inf").is_infinity());
    CParam s = parse_param_spec("s=q+1");
    CHECK(s.s() == q + RatFunc(1));
    CHECK(s.c() == (q + RatFunc(1)).pow(2));
    CHECK(parse_param_spec("cn:2").c() == cn_value(2));
    CHECK_FALSE(parse_param_spec("cn:2").has_sqrt());
    CParam e = parse_param_spec("exc:1");
    CHECK(e.c() == (RatFunc::t_pow(1) - RatFunc::t_pow(-1)).pow(-2));
    CHECK(parse_param_spec("s=0").is_zero());
    CHECK_THROWS_AS(parse_param_spec("bogus"), ParseError);
    CHECK_THROWS_AS(parse_param_spec("cn:x"), ParseError);
    CHECK(parse_param_spec(s.to_string()) == s);
}

TEST_CASE("specialization guard") {
    CHECK(specialize(qint(2), mpq_class(2)) == mpq_class(17, 4));
    CHECK_THROWS_AS(specialize(qint(2), mpq_class(1)), std::domain_error);
    CHECK_THROWS_AS(specialize(qint(2), mpq_class(-1)), std::domain_error);
    CHECK_THROWS_AS(specialize(qint(2), mpq_class(0)), std::domain_error);
}
