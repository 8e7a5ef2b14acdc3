#include "qsphere/uqsl2rep.hpp"

#include <stdexcept>

namespace qsphere {

namespace {

RatFunc qhat() { return RatFunc::q() - RatFunc::q_pow(-1); }

}  // namespace

IrrepVl irrep(int l, Sign sign) {
    if (l < 0) throw std::invalid_argument("irrep: l must be nonnegative");
    const int n = l + 1;
    const RatFunc s(sign_value(sign));
    IrrepVl v;
    v.l = l;
    v.sign = sign;
    v.E = Matrix(n, n);
    v.F = Matrix(n, n);
    v.K = Matrix(n, n);
    v.K_inv = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        v.K(k, k) = s * RatFunc::q_pow(l - 2 * k);
        v.K_inv(k, k) = s * RatFunc::q_pow(2 * k - l);
        if (k > 0) v.E(k - 1, k) = qint(l - k + 1);
        if (k < l) v.F(k + 1, k) = s * qint(k + 1);
    }
    return v;
}

std::vector<RelationCheck> uqsl2_relations(const Matrix& E, const Matrix& F, const Matrix& K,
                                           const Matrix& K_inv) {
    const RatFunc q2 = RatFunc::q_pow(2);
    const int n = K.rows();
    std::vector<RelationCheck> out;
    out.push_back({"K K^-1 = 1", K * K_inv == Matrix::identity(n)});
    out.push_back({"EF - FE = (K - K^-1)/(q - q^-1)",
                   E * F - F * E == (K - K_inv) * qhat().inverse()});
    out.push_back({"K E = q^2 E K", K * E == q2 * (E * K)});
    out.push_back({"K F = q^-2 F K", K * F == q2.inverse() * (F * K)});
    return out;
}

Matrix xc_action(const IrrepVl& v, const XcData& x) {
    const int n = v.l + 1;
    return x.alpha * (v.K_inv - Matrix::identity(n)) + x.beta * (v.K_inv * v.E) + x.gamma * v.F;
}

Matrix xc_matrix(int l, const CParam& c, Sign sign) {
    return RatFunc(sign_value(sign)) * RatFunc::q_pow(l + 1) *
           xc_action(irrep(l, sign), xc_data(c)).transpose();
}

Matrix displayed_matrix(int l, const CParam& c, Sign sign) {
    const XcData x = xc_data(c);
    const int n = l + 1;
    const RatFunc s(sign_value(sign));
    Matrix m(n, n);
    for (int k = 0; k < n; ++k) {
        m(k, k) = (RatFunc::q_pow(2 * k - l) - s) * x.alpha;
        if (k < l) {
            m(k, k + 1) = qint(k + 1) * x.gamma;
            m(k + 1, k) = RatFunc::q_pow(2 * k - l) * qint(l - k) * x.beta;
        }
    }
    return RatFunc::q_pow(l + 1) * m;
}

SpectralData charpoly_check(int l, const CParam& c, Sign sign) {
    const XcData x = xc_data(c);
    const RatFunc sigma = RatFunc::q_pow(l + 1);
    const RatFunc bgq = x.beta * x.gamma * RatFunc::q_pow(-1);
    const RatFunc qh = qhat();

    SpectralData d;
    d.l = l;
    d.sign = sign;
    d.charpoly = charpoly(displayed_matrix(l, c, sign));

    RatPoly expected{RatFunc(1)};
    if (l % 2 == 0) {
        d.linear_root = sign == Sign::Plus ? RatFunc() : RatFunc(2) * x.alpha * sigma;
        expected = poly_mul(expected, RatPoly{-*d.linear_root, RatFunc(1)});
    }
    for (int r2 = l; r2 > 0; r2 -= 2) {
        const RatFunc plus = RatFunc::t_pow(r2) + RatFunc::t_pow(-r2);
        const RatFunc minus = RatFunc::t_pow(r2) - RatFunc::t_pow(-r2);
        SpectralPair p;
        p.r2 = r2;
        if (sign == Sign::Plus) {
            p.sum = x.alpha * minus * minus;
            const RatFunc f = plus / qh;
            p.prod = -(minus * minus) * (x.alpha * x.alpha + bgq * f * f);
        } else {
            p.sum = x.alpha * minus * minus + RatFunc(4) * x.alpha;
            const RatFunc f = minus / qh;
            p.prod = plus * plus * (x.alpha * x.alpha - bgq * f * f);
        }
        expected = poly_mul(expected, RatPoly{sigma * sigma * p.prod, -sigma * p.sum, RatFunc(1)});
        d.pairs.push_back(std::move(p));
    }
    trim(expected);
    d.expected = expected;
    d.equal = d.charpoly == d.expected;
    while (d.zero_root_multiplicity < static_cast<int>(d.charpoly.size()) &&
           d.charpoly[static_cast<size_t>(d.zero_root_multiplicity)].is_zero())
        ++d.zero_root_multiplicity;
    return d;
}

int kernel_dim(int l, const CParam& c, Sign sign) { return nullity(xc_matrix(l, c, sign)); }

}  // namespace qsphere
