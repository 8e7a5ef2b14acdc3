#include "qsphere/podles.hpp"

#include <doctest.h>

using namespace qsphere;

namespace {

const RatFunc q = RatFunc::q();
const RatFunc qi = RatFunc::q_pow(-1);

std::vector<CParam> params() {
    return {CParam::generic(RatFunc(1)), CParam::generic(RatFunc(2)), CParam::generic(RatFunc::parse("q+1")),
            CParam::infinity(), CParam::zero()};
}

std::vector<std::vector<int>> words(int n) {
    std::vector<std::vector<int>> out{{}};
    std::vector<std::vector<int>> layer{{}};
    for (int k = 0; k < n; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& w : layer)
            for (int x : {-1, 0, 1}) {
                auto nw = w;
                nw.push_back(x);
                next.push_back(nw);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("relations of the normal-form product") {
    PodlesAlgebra alg(CParam::generic(RatFunc(2)));
    CHECK(alg.multiply(alg.e1(), alg.A()) - alg.multiply(alg.A(), alg.e1()) * (q * q) == PodlesElement());
    CHECK(alg.multiply(alg.em1(), alg.e1()) == alg.A() - alg.multiply(alg.A(), alg.A()) + PodlesElement(RatFunc(4)));
    CHECK(alg.multiply(alg.e1(), alg.em1()) ==
          alg.A() * (q * q) - alg.multiply(alg.A(), alg.A()) * q.pow(4) + PodlesElement(RatFunc(4)));
    CHECK(alg.e0() == PodlesElement(RatFunc(1)) - alg.A() * (q * q + RatFunc(1)));
    PodlesAlgebra inf(CParam::infinity());
    CHECK(inf.multiply(inf.em1(), inf.e1()) == PodlesElement(RatFunc(1)) - inf.multiply(inf.A(), inf.A()));
    CHECK(inf.e0() == inf.A() * -(q * q + RatFunc(1)));
}

TEST_CASE("rewriting is confluent and agrees with the product") {
    for (const auto& c : params()) {
        PodlesAlgebra alg(c);
        for (const auto& w : words(4)) {
            PodlesElement l = alg.reduce_word(w, RewriteOrder::Leftmost);
            PodlesElement r = alg.reduce_word(w, RewriteOrder::Rightmost);
            CHECK(l == r);
            PodlesElement prod(RatFunc(1));
            for (int x : w) prod = alg.multiply(prod, x == 0 ? alg.A() : (x < 0 ? alg.em1() : alg.e1()));
            CHECK(l == prod);
        }
    }
}

TEST_CASE("parsing and printing") {
    PodlesAlgebra alg(CParam::generic(RatFunc(1)));
    PodlesElement x = alg.parse("em1*e1 - q*A^2*e1^2 + 3*em1^2*A");
    PodlesElement expect = alg.multiply(alg.em1(), alg.e1()) -
                           alg.multiply(alg.pow(alg.A(), 2), alg.pow(alg.e1(), 2)) * q +
                           alg.multiply(alg.pow(alg.em1(), 2), alg.A()) * RatFunc(3);
    CHECK(x == expect);
    CHECK(alg.parse(x.to_string()) == x);
    CHECK(alg.parse("e0") == alg.e0());
    CHECK_THROWS_AS(alg.parse("e2"), ParseError);
}

TEST_CASE("embedding is an algebra map") {
    for (const auto& c : params()) {
        PodlesAlgebra alg(c);
        CHECK(alg.embed(PodlesElement(RatFunc(1))) == SL2Element(RatFunc(1)));
        auto mons = PodlesAlgebra::monomials(2);
        for (const auto& x : mons)
            for (const auto& y : mons)
                CHECK(alg.embed(alg.multiply(x, y)) == alg.embed(x) * alg.embed(y));
        for (const auto& r : embedded_relation_residuals(alg)) CHECK_MESSAGE(r.zero, (r.name + ": " + r.residual));
    }
}

TEST_CASE("embedded generators satisfy the relations in their original form") {
    for (const auto& c : params()) {
        PodlesAlgebra alg(c);
        const auto eps = alg.counit_values();
        const RatFunc rho = qi * qi * (q * q + RatFunc(1)).pow(2) * eps[0] * eps[2] + eps[1] * eps[1];
        const RatFunc lam = (RatFunc(1) - q * q) * eps[1];
        SL2Element em = alg.embed(alg.em1()), e0 = alg.embed(alg.e0()), ep = alg.embed(alg.e1());
        const RatFunc q2p1 = q * q + RatFunc(1);
        CHECK(q2p1 * (em * ep + qi * qi * (ep * em)) + e0 * e0 == SL2Element(rho));
        CHECK(-(q * q) * (em * e0) + e0 * em == lam * em);
        CHECK(q2p1 * (em * ep - ep * em) + (RatFunc(1) - q * q) * (e0 * e0) == lam * e0);
        CHECK(ep * e0 - q * q * (e0 * ep) == lam * ep);
        CHECK(counit(e0) == eps[1]);
        CHECK(counit(em) == eps[0]);
        CHECK(alg.counit(alg.e0()) == eps[1]);
    }
}

TEST_CASE("normal-form monomials embed independently") {
    PodlesAlgebra alg(CParam::generic(RatFunc(1)));
    CHECK(basis_independence(alg, 0).independent());
    auto r1 = basis_independence(alg, 1);
    CHECK(r1.monomials == 4);
    CHECK(r1.rank == 4);
    for (const auto& c : {CParam::generic(RatFunc(2)), CParam::infinity()}) {
        auto r = basis_independence(PodlesAlgebra(c), 4);
        CHECK(r.independent());
    }
    CHECK(basis_independence(alg, 3).independent());
}

TEST_CASE("coaction") {
    for (const auto& c : {CParam::generic(RatFunc(2)), CParam::infinity()}) {
        PodlesAlgebra alg(c);
        for (const auto& m : PodlesAlgebra::monomials(3)) {
            const PodlesCoaction& t = alg.coaction(m);
            PodlesElement back;
            SL2Tensor via_embed;
            for (const auto& [k, v] : t) {
                back.add_term(k.first, v * counit(SL2Element::monomial(k.second)));
                for (const auto& [em, ec] : alg.embed(k.first).terms()) add_to(via_embed, em, k.second, v * ec);
            }
            CHECK(back == PodlesElement::monomial(m));
            CHECK(via_embed == coproduct(alg.embed(m)));
        }
    }
}

TEST_CASE("left action on generators") {
    PodlesAlgebra alg(CParam::generic(RatFunc(3)));
    const RatFunc lam = RatFunc::parse("q+5");
    for (int i = -1; i <= 1; ++i) {
        PodlesElement ei = alg.e(i);
        CHECK(alg.act({FunctionalLetter::pow(lam)}, ei) == ei * lam.pow(2 * i));
        CHECK(alg.act({FunctionalLetter::g()}, ei) == ei * RatFunc(2 * i));
    }
    using FL = FunctionalLetter;
    CHECK(alg.act({FL::e()}, alg.e1()) == alg.e0());
    CHECK(alg.act({FL::e()}, alg.e0()) == alg.em1() * -(q * q + RatFunc(1)));
    CHECK(alg.act({FL::e()}, alg.em1()).is_zero());
    CHECK(alg.act({FL::f()}, alg.em1()) == alg.e0() * -qi);
    CHECK(alg.act({FL::f()}, alg.e0()) == alg.e1() * (q + qi));
    CHECK(alg.act({FL::f()}, alg.e1()).is_zero());
    // Module algebra: E |> (xy) = (E |> x)(K |> y) + x (E |> y).
    for (const auto& x : PodlesAlgebra::monomials(2))
        for (const auto& y : PodlesAlgebra::monomials(1)) {
            PodlesElement X = PodlesElement::monomial(x), Y = PodlesElement::monomial(y);
            CHECK(alg.act({FL::e()}, alg.multiply(X, Y)) ==
                  alg.multiply(alg.act({FL::e()}, X), alg.act({FL::k()}, Y)) + alg.multiply(X, alg.act({FL::e()}, Y)));
        }
}

TEST_CASE("mu_n representations") {
    MuRep one = build_mu_n(1);
    CHECK(one.A(0, 0) == qi / (q + qi));
    CHECK(one.e1.is_zero());
    CHECK(one.em1.is_zero());
    for (int n = 1; n <= 4; ++n) {
        MuRep rep = build_mu_n(n);
        for (const auto& r : mu_relation_residuals(rep)) CHECK_MESSAGE(r.zero, r.name);
        CHECK_FALSE(determinant(rep.A).is_zero());
        CHECK(rep.e1.pow(n).is_zero());
        CHECK(rep.em1.pow(n).is_zero());
        for (int k = 1; k <= n; ++k)
            CHECK(rep.A(k - 1, k - 1) == RatFunc::q_pow(n - 2 * k) / (RatFunc::q_pow(n) + RatFunc::q_pow(-n)));
    }
}

TEST_CASE("localization into the opposite Borel algebra") {
    for (const auto& s : {"1", "2", "q", "q^(1/2) + 3"}) {
        PodbmReport rep = verify_podbm(CParam::generic(RatFunc::parse(s)));
        CHECK(rep.counit_ok);
        for (const auto& r : rep.relations) CHECK_MESSAGE(r.zero, (r.name + ": " + r.residual));
    }
    CHECK_THROWS(verify_podbm(CParam::infinity()));
}
