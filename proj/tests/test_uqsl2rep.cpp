#include "qsphere/uqsl2rep.hpp"

#include <doctest.h>

using namespace qsphere;

namespace {

const RatFunc q = RatFunc::q();
const RatFunc qi = RatFunc::q_pow(-1);

std::vector<CParam> spectral_params() {
    return {CParam::generic(RatFunc(1)), CParam::generic(RatFunc(2)), CParam::infinity(),
            CParam::exceptional(1)};
}

}  // namespace

TEST_CASE("irreducible modules satisfy the U_q(sl2) relations") {
    for (Sign s : {Sign::Plus, Sign::Minus})
        for (int l = 0; l <= 6; ++l) {
            IrrepVl v = irrep(l, s);
            for (const auto& r : uqsl2_relations(v.E, v.F, v.K, v.K_inv))
                CHECK_MESSAGE(r.holds, (r.name + " at l=" + std::to_string(l)));
            CHECK(v.E(0, 0).is_zero());
            CHECK(v.K(0, 0) == RatFunc(sign_value(s)) * RatFunc::q_pow(l));
        }
}

TEST_CASE("irrep examples") {
    IrrepVl v0 = irrep(0, Sign::Plus);
    CHECK(v0.E.is_zero());
    CHECK(v0.F.is_zero());
    CHECK(v0.K == Matrix::identity(1));

    IrrepVl v1 = irrep(1, Sign::Plus);
    CHECK(v1.E * v1.F - v1.F * v1.E == Matrix::diagonal({qint(1), -qint(1)}));

    IrrepVl v2 = irrep(2, Sign::Minus);
    CHECK(v2.K == Matrix::diagonal({-q * q, RatFunc(-1), -qi * qi}));
}

TEST_CASE("X_c matrix examples") {
    const CParam c = CParam::generic(RatFunc(1));
    const RatFunc alpha = xc_data(c).alpha;
    CHECK(displayed_matrix(0, c, Sign::Plus) == Matrix(1, 1));

    Matrix m1 = displayed_matrix(1, c, Sign::Plus);
    CHECK(m1(0, 0) == q * q * (qi - RatFunc(1)) * alpha);
    CHECK(m1(1, 1) == q * q * (q - RatFunc(1)) * alpha);
    CHECK(m1(0, 1) == q * q);
    CHECK(m1(1, 0) == q * q * qi * q);

    for (int l = 0; l <= 5; ++l) {
        Matrix m = displayed_matrix(l, c, Sign::Plus);
        for (int k = 0; k < l; ++k) CHECK(m(k, k + 1) == RatFunc::q_pow(l + 1) * qint(k + 1));
    }
}

TEST_CASE("transpose of the X_c action agrees with the closed tridiagonal form") {
    for (const CParam& c : spectral_params())
        for (int l = 0; l <= 6; ++l) {
            CHECK(xc_matrix(l, c, Sign::Plus) == displayed_matrix(l, c, Sign::Plus));
            CHECK(xc_matrix(l, c, Sign::Minus) == displayed_matrix(l, c, Sign::Minus));
            const Matrix endo = RatFunc::q_pow(l + 1) * xc_action(irrep(l, Sign::Minus), xc_data(c)).transpose();
            CHECK(endo == RatFunc(-1) * displayed_matrix(l, c, Sign::Minus));
        }
}

TEST_CASE("characteristic polynomials factor into the closed-form pairs") {
    for (const CParam& c : spectral_params())
        for (Sign s : {Sign::Plus, Sign::Minus})
            for (int l = 0; l <= 6; ++l) {
                SpectralData d = charpoly_check(l, c, s);
                CHECK_MESSAGE(d.equal, (c.to_string() + " l=" + std::to_string(l) + " sign " +
                                        sign_name(s) + ": " + poly_to_string(d.charpoly) +
                                        " vs " + poly_to_string(d.expected)));
                CHECK(static_cast<int>(d.pairs.size()) == (l + 1) / 2);
            }
}

TEST_CASE("spectral examples") {
    const CParam c = CParam::generic(RatFunc(1));
    SpectralData d2 = charpoly_check(2, c, Sign::Plus);
    CHECK(d2.equal);
    CHECK(d2.zero_root_multiplicity == 1);
    CHECK(charpoly_check(1, c, Sign::Plus).zero_root_multiplicity == 0);
    CHECK(charpoly_check(0, c, Sign::Plus).charpoly == RatPoly{RatFunc(), RatFunc(1)});
}

TEST_CASE("kernel dichotomy for generic c") {
    for (const CParam& c : {CParam::generic(RatFunc(1)), CParam::generic(RatFunc(2))})
        for (int l = 0; l <= 8; ++l) CHECK(kernel_dim(l, c, Sign::Plus) == (l % 2 == 0 ? 1 : 0));
    CHECK(kernel_dim(4, CParam::generic(RatFunc(1)), Sign::Plus) == 1);
    CHECK(kernel_dim(3, CParam::generic(RatFunc(1)), Sign::Minus) == 0);
}

TEST_CASE("sign-twisted kernels at the exceptional values") {
    CHECK(kernel_dim(1, CParam::exceptional(1), Sign::Minus) >= 1);
    CHECK(kernel_dim(2, CParam::exceptional(1), Sign::Minus) == 0);
    CHECK(kernel_dim(3, CParam::exceptional(1), Sign::Minus) >= 1);
    CHECK(kernel_dim(2, CParam::exceptional(2), Sign::Minus) >= 1);
    CHECK(kernel_dim(1, CParam::exceptional(2), Sign::Minus) == 0);
    for (int l = 0; l <= 6; l += 2) CHECK(kernel_dim(l, CParam::infinity(), Sign::Minus) == 1);
}

TEST_CASE("the pair product vanishes exactly at c(n)") {
    // P_r as a function of c, using alpha^2 = 1/(c (q - q^-1)^2) and beta gamma = q.
    const RatFunc qh = q - qi;
    for (int n2 = 1; n2 <= 8; ++n2) {
        const RatFunc c = cn_value(n2);
        for (int r2 = 1; r2 <= 8; ++r2) {
            const RatFunc plus = RatFunc::t_pow(r2) + RatFunc::t_pow(-r2);
            const RatFunc minus = RatFunc::t_pow(r2) - RatFunc::t_pow(-r2);
            const RatFunc alpha2 = (c * qh * qh).inverse();
            const RatFunc f = plus / qh;
            const RatFunc p = -(minus * minus) * (alpha2 + f * f);
            CHECK(p.is_zero() == (r2 == n2));
        }
    }
}
