#include "qsphere/matrix.hpp"

#include <doctest.h>

using namespace qsphere;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<const char*>> rows) {
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (const char* x : r) m(i, j++) = RatFunc::parse(x);
        ++i;
    }
    return m;
}

RatFunc eval_poly(const RatPoly& p, const RatFunc& x) {
    RatFunc acc;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

}  // namespace

TEST_CASE("rank, null space and solve") {
    Matrix m = from_rows({{"1", "q", "q^2"}, {"q", "q^2", "q^3"}, {"1", "0", "1"}});
    CHECK(rank(m) == 2);
    auto ns = null_space(m);
    REQUIRE(ns.size() == 1);
    for (int i = 0; i < 3; ++i) {
        RatFunc acc;
        for (int j = 0; j < 3; ++j) acc += m(i, j) * ns[0][static_cast<size_t>(j)];
        CHECK(acc.is_zero());
    }
    auto x = solve(m, {RatFunc(1), RatFunc::q(), RatFunc(2)});
    REQUIRE(x);
    CHECK_FALSE(solve(m, {RatFunc(1), RatFunc(1), RatFunc(2)}));
}

TEST_CASE("determinant and characteristic polynomial") {
    Matrix m = from_rows({{"q", "1", "0"}, {"2", "q^-1", "q+1"}, {"1", "0", "3"}});
    CHECK(determinant(m) == RatFunc::parse("q*(3*q^-1) - 1*(2*3 - (q+1)*1)"));
    RatPoly p = charpoly(m);
    REQUIRE(p.size() == 4);
    CHECK(p[3] == RatFunc(1));
    for (int x = -2; x <= 3; ++x) {
        Matrix xi = Matrix::identity(3) * RatFunc(x) - m;
        CHECK(eval_poly(p, RatFunc(x)) == determinant(xi));
    }
    CHECK(charpoly(Matrix(1, 1)) == RatPoly{RatFunc(), RatFunc(1)});
}

TEST_CASE("products and transpose") {
    Matrix a = from_rows({{"1", "q"}, {"0", "1"}});
    CHECK(a.pow(3) == from_rows({{"1", "3*q"}, {"0", "1"}}));
    CHECK(a.transpose().transpose() == a);
    CHECK((a - a).is_zero());
}
