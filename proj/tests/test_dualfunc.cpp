#include "qsphere/dualfunc.hpp"

#include <doctest.h>

using namespace qsphere;

namespace {

const RatFunc q = RatFunc::q();
const RatFunc qi = RatFunc::q_pow(-1);

std::vector<RatFunc> lambda_grid() {
    return {RatFunc(1),          q,          qi,          q * q,
            RatFunc::q_pow(-4),  RatFunc(-1), -q,         RatFunc(2),
            RatFunc::parse("q+1")};
}

// (psi X_c)(x) = psi(x_(1)) X_c(x_(2)) with X_c = alpha (K^-1 - 1) + beta K^-1 E + gamma F.
RatFunc eval_times_xc(const PsiSymbol& s, const PodlesMono& x, const PodlesAlgebra& alg) {
    const XcData xd = xc_data(alg.param());
    const SL2Element img = alg.embed(x);
    FunctionalWord w = psi_word(s.lambda, s.m, s.l);
    auto with = [&](std::vector<FunctionalLetter> extra) {
        FunctionalWord v = w;
        v.insert(v.end(), extra.begin(), extra.end());
        return eval_functional(v, img);
    };
    const FunctionalLetter k_inv = FunctionalLetter::k_inv();
    return xd.alpha * (with({k_inv}) - with({})) + xd.beta * with({k_inv, FunctionalLetter::e()}) +
           xd.gamma * with({FunctionalLetter::f()});
}

}  // namespace

TEST_CASE("operator examples") {
    const RatFunc alpha = xc_data(CParam::generic(RatFunc(1))).alpha;
    const RatFunc l4 = RatFunc::q_pow(-4);
    CHECK(apply_operator(PsiOp::Kappa, PsiVector::psi(2, l4), alpha) == PsiVector::psi(2, l4, l4));
    CHECK(apply_operator(PsiOp::VarPhi, PsiVector::psi(0, q), alpha).is_zero());
    CHECK(apply_operator(PsiOp::Phi, PsiVector::counit(), alpha).is_zero());
    CHECK_THROWS_AS(apply_operator(PsiOp::Phi, PsiVector::symbol({0, q, 1}), alpha),
                    std::invalid_argument);
}

TEST_CASE("operators represent U_q(sl2)") {
    const RatFunc alpha = xc_data(CParam::generic(RatFunc(1))).alpha;
    const RatFunc qh_inv = (q - qi).inverse();
    const RatFunc q2 = q * q;
    auto op = [&](PsiOp o, const PsiVector& v) { return apply_operator(o, v, alpha); };
    for (const auto& lam : lambda_grid())
        for (int l = 0; l <= 6; ++l) {
            const PsiVector v = PsiVector::psi(l, lam);
            CHECK(op(PsiOp::Phi, op(PsiOp::VarPhi, v)) - op(PsiOp::VarPhi, op(PsiOp::Phi, v)) ==
                  qh_inv * (op(PsiOp::Kappa, v) - op(PsiOp::KappaInv, v)));
            CHECK(op(PsiOp::Kappa, op(PsiOp::Phi, v)) == q2 * op(PsiOp::Phi, op(PsiOp::Kappa, v)));
            CHECK(op(PsiOp::Kappa, op(PsiOp::VarPhi, v)) ==
                  q2.inverse() * op(PsiOp::VarPhi, op(PsiOp::Kappa, v)));
        }
}

TEST_CASE("right X_c action examples") {
    const CParam c = CParam::generic(RatFunc(1));
    const RatFunc alpha = xc_data(c).alpha;
    CHECK(xc_right_action(PsiVector::counit(), c).is_zero());
    for (const auto& lam : lambda_grid()) {
        PsiVector expect = PsiVector::psi(0, q * q * lam, alpha * (RatFunc(1) - lam)) +
                           PsiVector::psi(1, q * q * lam, q * (RatFunc(1) - lam * lam)) +
                           PsiVector::psi(0, lam, alpha * (lam - RatFunc(1)));
        CHECK(xc_right_action(PsiVector::psi(0, lam), c) == expect);
    }
    PsiVector a = PsiVector::psi(0, q), b = PsiVector::psi(1, q);
    CHECK(xc_right_action(a + b, c) == xc_right_action(a, c) + xc_right_action(b, c));
}

TEST_CASE("right X_c action agrees with the functional product") {
    for (const CParam& c : {CParam::generic(RatFunc(1)), CParam::generic(RatFunc(2)), CParam::infinity()}) {
        PodlesAlgebra alg(c);
        for (const auto& lam : {RatFunc(1), q, qi * qi, RatFunc(-1)})
            for (int l = 0; l <= 2; ++l) {
                const PsiSymbol s{l, lam, 0};
                const PsiVector img = xc_right_action(PsiVector::symbol(s), c);
                for (const auto& m : PodlesAlgebra::monomials(3))
                    CHECK(psi_eval(img, PodlesElement::monomial(m), alg) == eval_times_xc(s, m, alg));
            }
    }
}

TEST_CASE("coproduct of psi symbols") {
    const RatFunc lam = q * q;
    PsiTensor d0 = psi_coproduct(PsiSymbol{0, lam, 0});
    CHECK(d0 == PsiTensor{{{PsiSymbol{0, lam, 0}, PsiSymbol{0, lam, 0}}, RatFunc(1)}});
    PsiTensor d1 = psi_coproduct(PsiSymbol{1, lam, 0});
    PsiTensor e1{{{PsiSymbol{0, lam, 0}, PsiSymbol{1, lam, 0}}, RatFunc(1)},
                 {{PsiSymbol{1, lam, 0}, PsiSymbol{0, lam * RatFunc::q_pow(-2), 0}}, RatFunc(1)}};
    CHECK(d1 == e1);
}

TEST_CASE("coproduct is dual to the product of the sphere") {
    PodlesAlgebra alg(CParam::generic(RatFunc(1)));
    std::vector<PodlesMono> mons = PodlesAlgebra::monomials(2);
    for (const auto& lam : {RatFunc(1), q, -qi})
        for (int l = 0; l <= 3; ++l) {
            const PsiSymbol s{l, lam, 0};
            PsiTensor d = psi_coproduct(s);
            for (const auto& x : mons)
                for (const auto& y : mons) {
                    if (x.degree() + y.degree() > 3) continue;
                    RatFunc lhs = psi_eval(s, alg.multiply(x, y), alg);
                    RatFunc rhs;
                    for (const auto& [k, c] : d)
                        rhs += c * psi_eval(k.first, x, alg) * psi_eval(k.second, y, alg);
                    CHECK(lhs == rhs);
                }
            // counit law: contracting the second leg with the counit returns the input
            for (const auto& x : mons) {
                RatFunc r;
                for (const auto& [k, c] : d)
                    r += c * psi_eval(k.first, x, alg) * psi_eval(k.second, PodlesElement(RatFunc(1)), alg);
                CHECK(r == psi_eval(s, x, alg));
            }
        }
}

TEST_CASE("evaluation examples") {
    for (const CParam& c : {CParam::generic(RatFunc(1)), CParam::generic(RatFunc(3)), CParam::infinity()}) {
        PodlesAlgebra alg(c);
        for (const auto& lam : {q, RatFunc(2), -qi}) {
            CHECK(psi_eval(PsiSymbol{0, lam * lam, 0}, alg.e1(), alg) == lam * lam * alg.counit(alg.e1()));
            CHECK(psi_eval(PsiSymbol{0, lam * lam, 0}, alg.em1(), alg) ==
                  (lam * lam).inverse() * alg.counit(alg.em1()));
        }
        for (const auto& m : PodlesAlgebra::monomials(3))
            CHECK(psi_eval(PsiSymbol{0, RatFunc(1), 0}, m, alg) ==
                  alg.counit(PodlesElement::monomial(m)));
    }
}

TEST_CASE("psi symbols do not depend on the choice of square root") {
    PodlesAlgebra alg(CParam::generic(RatFunc(1)));
    for (const auto& mu : {q, RatFunc(2), qi})
        for (int l = 0; l <= 2; ++l)
            for (const auto& m : PodlesAlgebra::monomials(3)) {
                auto word = [&](const RatFunc& root) {
                    FunctionalWord w{FunctionalLetter::pow(root)};
                    for (int i = 0; i < l; ++i) w.push_back(FunctionalLetter::e());
                    return eval_functional(w, alg.embed(m));
                };
                const RatFunc v = psi_eval(PsiSymbol{l, mu * mu, 0}, m, alg);
                CHECK(word(mu) == v);
                CHECK(word(-mu) == v);
            }
}

TEST_CASE("rescaled phi block equals the closed tridiagonal form") {
    for (const CParam& c : {CParam::generic(RatFunc(1)), CParam::infinity()})
        for (Sign s : {Sign::Plus, Sign::Minus})
            for (int l = 0; l <= 6; ++l) CHECK(phi_block_matrix(l, c, s) == displayed_matrix(l, c, s));
}

TEST_CASE("highest weights of the sphere") {
    auto members = [](const CParam& c, int lmax) { return scan_Jc(c, lmax).members(); };
    using P = std::vector<std::pair<Sign, int>>;
    CHECK(members(CParam::generic(RatFunc(1)), 4) == P{{Sign::Plus, 0}, {Sign::Plus, 2}, {Sign::Plus, 4}});
    CHECK(members(CParam::infinity(), 2) ==
          P{{Sign::Plus, 0}, {Sign::Plus, 2}, {Sign::Minus, 0}, {Sign::Minus, 2}});
    CHECK(members(CParam::exceptional(1), 3) ==
          P{{Sign::Plus, 0}, {Sign::Plus, 2}, {Sign::Minus, 1}, {Sign::Minus, 3}});
    CHECK(members(CParam::exceptional(2), 4) ==
          P{{Sign::Plus, 0}, {Sign::Plus, 2}, {Sign::Plus, 4}, {Sign::Minus, 2}, {Sign::Minus, 4}});
}

TEST_CASE("phi is not nilpotent away from the highest weights") {
    const RatFunc alpha = xc_data(CParam::generic(RatFunc(1))).alpha;
    for (const auto& lam : {RatFunc(2), q, -q * q, RatFunc::parse("q+1"), RatFunc::t_pow(-1)}) {
        PsiVector v = PsiVector::psi(0, lam);
        for (int k = 0; k <= 7; ++k) v = apply_operator(PsiOp::Phi, v, alpha);
        CHECK_FALSE(v.is_zero());
    }
}

TEST_CASE("highest weight modules") {
    const CParam c = CParam::generic(RatFunc(1));
    HWModule triv = build_module(Sign::Plus, 0, c);
    REQUIRE(triv.basis.size() == 1);
    CHECK(triv.basis[0] == PsiVector::counit());
    CHECK(triv.K == Matrix::identity(1));
    CHECK(triv.E.is_zero());
    CHECK(triv.F.is_zero());

    HWModule m2 = build_module(Sign::Plus, 2, c);
    REQUIRE(m2.basis.size() == 3);
    CHECK(m2.K == Matrix::diagonal({RatFunc::q_pow(-2), RatFunc(1), RatFunc::q_pow(2)}));

    HWModule m1 = build_module(Sign::Minus, 1, CParam::exceptional(1));
    CHECK(m1.basis.size() == 2);
    CHECK(m1.K_inv(0, 0) == -q);

    CHECK_THROWS_AS(build_module(Sign::Plus, 1, c), std::invalid_argument);

    for (auto [cp, s, l] : {std::tuple{c, Sign::Plus, 4}, std::tuple{CParam::infinity(), Sign::Minus, 2},
                            std::tuple{CParam::exceptional(1), Sign::Minus, 3}}) {
        HWModule m = build_module(s, l, cp);
        for (const auto& r : uqsl2_relations(m.E, m.F, m.K, m.K_inv)) CHECK_MESSAGE(r.holds, r.name);
        CHECK(m.E.pow(l + 1).is_zero());
        CHECK_FALSE(m.E.pow(l).is_zero());
        for (size_t k = 0; k < m.basis.size(); ++k) {
            const RatFunc deg = m.lambda0 * RatFunc::q_pow(2 * static_cast<int>(k));
            for (const auto& [sym, coeff] : m.basis[k].terms()) CHECK(sym.lambda == deg);
        }
    }
}

TEST_CASE("truncated independence of the psi functionals") {
    PodlesAlgebra alg(CParam::generic(RatFunc(1)));
    PsiIndependenceReport r = psi_independence(alg, 2, {RatFunc(1), q * q, RatFunc::q_pow(4)}, 4);
    CHECK(r.functionals == 18);
    CHECK(r.independent());
}
