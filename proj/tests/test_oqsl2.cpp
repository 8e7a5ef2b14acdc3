#include "qsphere/oqsl2.hpp"

#include <doctest.h>

#include <functional>

using namespace qsphere;

namespace {

const RatFunc q = RatFunc::q();
const RatFunc qi = RatFunc::q_pow(-1);

SL2Element gen(char x) { return SL2Element::generator(x); }

std::vector<std::string> words_up_to(int n) {
    std::vector<std::string> out{""};
    std::vector<std::string> layer{""};
    for (int k = 0; k < n; ++k) {
        std::vector<std::string> next;
        for (const auto& w : layer)
            for (char ch : std::string("abcd")) next.push_back(w + ch);
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

GenWord to_genword(const std::string& w) {
    GenWord g;
    for (char ch : w) {
        if (ch == 'a') g.emplace_back(1, 1);
        if (ch == 'b') g.emplace_back(1, 2);
        if (ch == 'c') g.emplace_back(2, 1);
        if (ch == 'd') g.emplace_back(2, 2);
    }
    return g;
}

std::vector<PBWMono> monomials_up_to(int deg) {
    std::vector<PBWMono> out;
    for (int b = 0; b <= deg; ++b)
        for (int c = 0; b + c <= deg; ++c)
            for (int x = 0; b + c + x <= deg; ++x) {
                out.push_back({b, c, x, 0});
                if (x > 0) out.push_back({b, c, 0, x});
            }
    return out;
}

// Evaluates L1 (x) L2 on a tensor.
RatFunc eval_tensor(const FunctionalWord& l1, const FunctionalWord& l2, const SL2Tensor& t) {
    RatFunc r;
    for (const auto& [k, c] : t)
        r += c * eval_functional(l1, SL2Element::monomial(k.first)) *
             eval_functional(l2, SL2Element::monomial(k.second));
    return r;
}

}  // namespace

TEST_CASE("multiplication basics") {
    SL2Element x = SL2Element::parse("a^2*b + q*c");
    CHECK(SL2Element(RatFunc(1)) * x == x);
    CHECK(x * SL2Element(RatFunc(1)) == x);
    CHECK(gen('b') * gen('c') == gen('c') * gen('b'));
    CHECK(gen('a') * gen('b') == q * (gen('b') * gen('a')));
    CHECK(gen('d') * gen('a') - qi * gen('b') * gen('c') == SL2Element(RatFunc(1)));
    CHECK(gen('a') * gen('d') - q * gen('b') * gen('c') == SL2Element(RatFunc(1)));
    CHECK(SL2Element::parse("a*d - q*b*c") == SL2Element(RatFunc(1)));
    CHECK(SL2Element::parse(x.to_string()) == x);
}

TEST_CASE("rewriting is confluent and matches the closed-form product") {
    for (const auto& w : words_up_to(4)) {
        SL2Element left = reduce_word(w, RewriteOrder::Leftmost);
        SL2Element right = reduce_word(w, RewriteOrder::Rightmost);
        CHECK_MESSAGE(left == right, w);
        CHECK_MESSAGE(left == word_product(to_genword(w)), w);
    }
}

TEST_CASE("associativity on monomials") {
    auto mons = monomials_up_to(2);
    for (const auto& x : mons)
        for (const auto& y : mons)
            for (const auto& z : mons) {
                SL2Element X = SL2Element::monomial(x), Y = SL2Element::monomial(y),
                           Z = SL2Element::monomial(z);
                CHECK((X * Y) * Z == X * (Y * Z));
            }
}

TEST_CASE("coproduct and counit") {
    SL2Tensor one = coproduct(SL2Element(RatFunc(1)));
    REQUIRE(one.size() == 1);
    CHECK(one.begin()->first == std::make_pair(PBWMono{}, PBWMono{}));
    SL2Tensor da = coproduct(gen('a'));
    SL2Tensor expect;
    add_to(expect, {0, 0, 1, 0}, {0, 0, 1, 0}, RatFunc(1));
    add_to(expect, {1, 0, 0, 0}, {0, 1, 0, 0}, RatFunc(1));
    CHECK(da == expect);
    CHECK(coproduct(gen('a') * gen('b')) == tensor_multiply(coproduct(gen('a')), coproduct(gen('b'))));

    auto mons = monomials_up_to(3);
    for (const auto& x : mons) {
        SL2Element X = SL2Element::monomial(x);
        SL2Tensor t = coproduct(X);
        SL2Element left, right;
        for (const auto& [k, c] : t) {
            left += SL2Element::monomial(k.second) * (c * counit(k.first));
            right += SL2Element::monomial(k.first) * (c * counit(k.second));
        }
        CHECK(left == X);
        CHECK(right == X);
        for (const auto& y : monomials_up_to(1)) {
            SL2Element Y = SL2Element::monomial(y);
            CHECK(coproduct(X * Y) == tensor_multiply(t, coproduct(Y)));
        }
    }
}

TEST_CASE("antipode") {
    CHECK(antipode(SL2Element(RatFunc(1))) == SL2Element(RatFunc(1)));
    CHECK(antipode(antipode(gen('b'), true)) == gen('b'));
    CHECK(antipode_convolution(coproduct(gen('a'))) == SL2Element(RatFunc(1)));
    for (const auto& x : monomials_up_to(3)) {
        SL2Element X = SL2Element::monomial(x);
        SL2Tensor t = coproduct(X);
        CHECK(antipode_convolution(t) == SL2Element(counit(X)));
        SL2Element right;
        for (const auto& [k, c] : t)
            right += SL2Element::monomial(k.first) * antipode(SL2Element::monomial(k.second)) * c;
        CHECK(right == SL2Element(counit(X)));
        CHECK(antipode(antipode(X, true)) == X);
        CHECK(antipode(antipode(X), true) == X);
        for (const auto& y : monomials_up_to(1)) {
            SL2Element Y = SL2Element::monomial(y);
            CHECK(antipode(X * Y) == antipode(Y) * antipode(X));
        }
    }
}

TEST_CASE("pi matrix is a corepresentation") {
    CHECK(pi_coeff(-1, -1) == gen('d') * gen('d'));
    CHECK(pi_coeff(0, 0) == SL2Element(RatFunc(1)) + (q + qi) * (gen('b') * gen('c')));
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
            CHECK(counit(pi_coeff(i, j)) == RatFunc(i == j ? 1 : 0));
            SL2Tensor expect;
            for (int k = -1; k <= 1; ++k) {
                SL2Element x = pi_coeff(i, k), y = pi_coeff(k, j);
                for (const auto& [mx, cx] : x.terms())
                    for (const auto& [my, cy] : y.terms()) add_to(expect, mx, my, cx * cy);
            }
            CHECK(coproduct(pi_coeff(i, j)) == expect);
        }
}

TEST_CASE("functional evaluation") {
    const RatFunc lam = RatFunc::parse("q+2");
    FunctionalWord f{FunctionalLetter::pow(lam)};
    FunctionalWord g{FunctionalLetter::g()};
    FunctionalWord E{FunctionalLetter::e()};
    CHECK(eval_functional(f, pi_coeff(1, 1)) == lam * lam);
    CHECK(eval_functional(E, pi_coeff(-1, 0)) == -(q * q + RatFunc(1)));
    CHECK(eval_functional(g, SL2Element(RatFunc(1))).is_zero());
    CHECK(eval_functional(FunctionalWord{}, SL2Element::parse("3 + a*b")) == RatFunc(3));

    // Functionals are well defined on the quotient: raw words agree with normal forms.
    std::vector<FunctionalWord> letters = {f, g, E, {FunctionalLetter::f()}, {FunctionalLetter::k()}};
    for (const auto& w : words_up_to(3))
        for (const auto& L1 : letters)
            for (const auto& L2 : letters) {
                FunctionalWord L = L1;
                L.insert(L.end(), L2.begin(), L2.end());
                CHECK_MESSAGE(eval_functional(L, to_genword(w)) == eval_functional(L, word_product(to_genword(w))), w);
            }
}

TEST_CASE("functional products are convolutions") {
    const RatFunc lam = RatFunc::parse("2*q");
    FunctionalWord f{FunctionalLetter::pow(lam)}, g{FunctionalLetter::g()};
    FunctionalWord E{FunctionalLetter::e()}, F{FunctionalLetter::f()};
    for (const auto& x : monomials_up_to(4)) {
        SL2Element X = SL2Element::monomial(x);
        SL2Tensor t = coproduct(X);
        CHECK(eval_functional(FunctionalWord{f[0], g[0]}, X) == eval_tensor(f, g, t));
        CHECK(eval_functional(FunctionalWord{E[0], F[0]}, X) == eval_tensor(E, F, t));
    }
}

TEST_CASE("functional relations") {
    const RatFunc lam = RatFunc::parse("q^2 - 3");
    using FL = FunctionalLetter;
    auto ev = [](std::initializer_list<FL> w, const SL2Element& x) { return eval_functional(FunctionalWord(w), x); };
    for (const auto& x : monomials_up_to(3)) {
        SL2Element X = SL2Element::monomial(x);
        CHECK(ev({FL::e(), FL::f()}, X) - ev({FL::f(), FL::e()}, X) ==
              (ev({FL::k()}, X) - ev({FL::k_inv()}, X)) / (q - qi));
        CHECK(ev({FL::pow(lam), FL::e()}, X) == lam.pow(-2) * ev({FL::e(), FL::pow(lam)}, X));
        CHECK(ev({FL::pow(lam), FL::f()}, X) == lam.pow(2) * ev({FL::f(), FL::pow(lam)}, X));
        CHECK(ev({FL::pow(lam), FL::g()}, X) == ev({FL::g(), FL::pow(lam)}, X));
        CHECK(ev({FL::e(), FL::g()}, X) == ev({FL::g(), FL::e()}, X) + RatFunc(2) * ev({FL::e()}, X));
        CHECK(ev({FL::f(), FL::g()}, X) == ev({FL::g(), FL::f()}, X) - RatFunc(2) * ev({FL::f()}, X));
        CHECK(ev({FL::pow(lam), FL::pow(q)}, X) == ev({FL::pow(lam * q)}, X));
    }
}

TEST_CASE("universal r-form") {
    CHECK(rform(gen('a'), gen('a')) == RatFunc::t_pow(1));
    CHECK(rform(SL2Element(RatFunc(1)), gen('b')).is_zero());
    CHECK(rform(SL2Element(RatFunc(1)), gen('a')) == RatFunc(1));
    CHECK(rform(gen('c'), gen('b')) == RatFunc::t_pow(-1) * (q - qi));
    for (const auto& x : monomials_up_to(3)) {
        SL2Element X = SL2Element::monomial(x);
        CHECK(rform(X, gen('c')).is_zero());
        CHECK(rform(SL2Element(RatFunc(1)), X) == counit(X));
        CHECK(rform(X, SL2Element(RatFunc(1))) == counit(X));
    }
    // Well defined on the relation ideal: r(x, w) and r(w, x) depend only on the normal form of w.
    for (const auto& w : words_up_to(3))
        for (const auto& x : words_up_to(2)) {
            GenWord gw = to_genword(w), gx = to_genword(x);
            CHECK(rform(gx, gw) == rform(word_product(gx), word_product(gw)));
            CHECK(rform(gw, gx) == rform(word_product(gw), word_product(gx)));
        }
}

TEST_CASE("r-form bimultiplicativity on normal forms") {
    auto mons = monomials_up_to(2);
    for (const auto& x : mons)
        for (const auto& y : mons)
            for (const auto& z : monomials_up_to(1)) {
                SL2Element X = SL2Element::monomial(x), Y = SL2Element::monomial(y),
                           Z = SL2Element::monomial(z);
                RatFunc lhs = rform(X * Y, Z);
                RatFunc rhs;
                for (const auto& [k, c] : coproduct(Z))
                    rhs += c * rform(X, SL2Element::monomial(k.first)) * rform(Y, SL2Element::monomial(k.second));
                CHECK(lhs == rhs);
                RatFunc lhs2 = rform(Z, X * Y);
                RatFunc rhs2;
                for (const auto& [k, c] : coproduct(Z))
                    rhs2 += c * rform(SL2Element::monomial(k.first), Y) * rform(SL2Element::monomial(k.second), X);
                CHECK(lhs2 == rhs2);
            }
}
