#pragma once

#include "qsphere/cparam.hpp"
#include "qsphere/matrix.hpp"
#include "qsphere/podles.hpp"
#include "qsphere/uqsl2rep.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsphere {

/// psi^{ml}_lambda: the restriction of f_mu g^m E^l to the sphere, mu^2 = lambda.
struct PsiSymbol {
    int l = 0;
    RatFunc lambda{1};
    int m = 0;

    friend auto operator<=>(const PsiSymbol& x, const PsiSymbol& y) {
        if (auto c = x.lambda <=> y.lambda; c != 0) return c;
        if (auto c = x.l <=> y.l; c != 0) return c;
        return x.m <=> y.m;
    }
    friend bool operator==(const PsiSymbol&, const PsiSymbol&) = default;

    std::string to_string() const;
};

class PsiVector {
public:
    using Terms = std::map<PsiSymbol, RatFunc>;

    PsiVector() = default;
    static PsiVector symbol(const PsiSymbol& s, const RatFunc& coeff = RatFunc(1));
    /// psi^l_lambda with m = 0.
    static PsiVector psi(int l, const RatFunc& lambda, const RatFunc& coeff = RatFunc(1));
    /// The counit psi^0_1.
    static PsiVector counit() { return psi(0, RatFunc(1)); }

    const Terms& terms() const& noexcept { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add_term(const PsiSymbol& s, const RatFunc& coeff);
    RatFunc coeff(const PsiSymbol& s) const;

    PsiVector operator-() const;
    PsiVector& operator+=(const PsiVector& o);
    PsiVector& operator-=(const PsiVector& o);
    PsiVector& operator*=(const RatFunc& s);
    friend PsiVector operator+(PsiVector a, const PsiVector& b) { return a += b; }
    friend PsiVector operator-(PsiVector a, const PsiVector& b) { return a -= b; }
    friend PsiVector operator*(PsiVector a, const RatFunc& s) { return a *= s; }
    friend PsiVector operator*(const RatFunc& s, PsiVector a) { return a *= s; }

    std::string to_string() const;

    friend bool operator==(const PsiVector&, const PsiVector&) = default;

private:
    Terms terms_;
};

enum class PsiOp { Phi, VarPhi, Kappa, KappaInv };

/// phi(psi^l_lambda) = -(q^l [l]/(q - q^-1)) psi^{l-1}_{q^2 lambda}
///                    + alpha q (q^{2l} - lambda) psi^l_{q^2 lambda}
///                    + q^2 (q^{2l} - lambda^2) psi^{l+1}_{q^2 lambda},
/// varphi(psi^l_lambda) = lambda^-1 (q^{1-l} [l]/(q - q^-1)) psi^{l-1}_{q^-2 lambda},
/// kappa(psi^l_lambda) = lambda psi^l_lambda.
/// Throws std::invalid_argument on symbols with m != 0.
PsiVector apply_operator(PsiOp op, const PsiVector& v, const RatFunc& alpha);
PsiVector apply_operator(PsiOp op, const PsiVector& v, const CParam& c);

/// psi X_c = q^-1 phi(psi) + lambda varphi(psi) + alpha (1 - lambda^-1) kappa(psi).
PsiVector xc_right_action(const PsiVector& v, const CParam& c);

using PsiTensor = std::map<std::pair<PsiSymbol, PsiSymbol>, RatFunc>;

/// Delta psi^l_lambda = sum_r [l; r] q^{-r(l-r)} psi^r_lambda (x) psi^{l-r}_{q^{-2r} lambda}.
PsiTensor psi_coproduct(const PsiSymbol& s);
PsiTensor psi_coproduct(const PsiVector& v);

/// f_mu g^m E^l evaluated on the image of x in O_q(SL2).
RatFunc psi_eval(const PsiSymbol& s, const PodlesElement& x, const PodlesAlgebra& alg);
RatFunc psi_eval(const PsiSymbol& s, const PodlesMono& x, const PodlesAlgebra& alg);
RatFunc psi_eval(const PsiVector& v, const PodlesElement& x, const PodlesAlgebra& alg);

/// Rows: functionals; columns: normal-form monomials of degree <= degree.
Matrix evaluation_matrix(const std::vector<PsiVector>& fs, int degree, const PodlesAlgebra& alg);

/// Rank of a family of vectors in the span of the symbols.
int psi_rank(const std::vector<PsiVector>& vs);
/// Coordinates of v in the span of basis, if v lies in it.
std::optional<std::vector<RatFunc>> psi_coordinates(const std::vector<PsiVector>& basis,
                                                    const PsiVector& v);

/// +-q^-l.
RatFunc highest_weight_lambda(Sign sign, int l);

/// The phi block Lin{psi^k_mu} -> Lin{psi^k_{q^2 mu}}, mu = +-q^l, k = 0..l, written in the
/// rescaled basis (-(q - q^-1))^k q^{-(l-k)(l-k+1)/2} psi^k_mu. Entry (i, j) is the
/// coefficient of the i-th basis vector in the image of the j-th.
Matrix phi_block_matrix(int l, const CParam& c, Sign sign);

struct JcEntry {
    Sign sign = Sign::Plus;
    int l = 0;
    /// phi^{l+1}(psi^0_lambda) = 0.
    bool nilpotent = false;
    /// Nullity of the X_c matrix for (l, sign).
    int kernel = 0;
    bool member() const noexcept { return nilpotent; }
};

struct JcScan {
    int lmax = 0;
    std::vector<JcEntry> entries;
    std::vector<std::pair<Sign, int>> members() const;
};

/// Tests lambda = +-q^-l for l <= lmax by both routes; throws std::runtime_error if they disagree.
JcScan scan_Jc(const CParam& c, int lmax);

/// Highest weight module spanned by the phi-orbit of psi^0_lambda, lambda = +-q^-l.
struct HWModule {
    Sign sign = Sign::Plus;
    int l = 0;
    RatFunc lambda0;
    std::vector<PsiVector> basis;
    /// Matrices of rho(E) = phi, rho(F) = varphi, rho(K) = kappa in the orbit basis.
    Matrix E, F, K, K_inv;
};

/// Throws std::invalid_argument if phi does not act nilpotently on psi^0_lambda.
HWModule build_module(Sign sign, int l, const CParam& c);

struct PsiIndependenceReport {
    int functionals = 0;
    int degree = 0;
    int monomials = 0;
    int rank = 0;
    bool independent() const noexcept { return rank == functionals; }
};

/// Rank of the evaluation matrix of {psi^{ml}_lambda : m + l <= max_ml, lambda in lambdas}
/// against normal-form monomials of degree <= degree.
PsiIndependenceReport psi_independence(const PodlesAlgebra& alg, int max_ml,
                                       const std::vector<RatFunc>& lambdas, int degree);

}  // namespace qsphere
