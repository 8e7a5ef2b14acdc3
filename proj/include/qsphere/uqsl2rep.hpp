#pragma once

#include "qsphere/cparam.hpp"
#include "qsphere/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsphere {

/// Sign of a highest weight +-q^l; Minus means V_l tensored with the character
/// E w = 0, F w = 0, K w = -w.
enum class Sign { Plus, Minus };

inline int sign_value(Sign s) noexcept { return s == Sign::Plus ? 1 : -1; }
inline const char* sign_name(Sign s) noexcept { return s == Sign::Plus ? "+" : "-"; }

/// The (l+1)-dimensional module with basis v_0..v_l:
/// K v_k = +-q^{l-2k} v_k, E v_k = [l-k+1] v_{k-1}, F v_k = +-[k+1] v_{k+1}.
/// Entry (i, j) is the coefficient of v_i in the image of v_j.
struct IrrepVl {
    int l = 0;
    Sign sign = Sign::Plus;
    Matrix E, F, K, K_inv;
};

IrrepVl irrep(int l, Sign sign);

struct RelationCheck {
    std::string name;
    bool holds = false;
};

/// EF - FE = (K - K^-1)/(q - q^-1), K E K^-1 = q^2 E, K F K^-1 = q^-2 F.
std::vector<RelationCheck> uqsl2_relations(const Matrix& E, const Matrix& F, const Matrix& K,
                                           const Matrix& K_inv);

/// Left action of X_c = alpha (K^-1 - 1) + beta K^-1 E + gamma F.
Matrix xc_action(const IrrepVl& v, const XcData& x);

/// q^{l+1} times the transpose of the left X_c action on the sign-twisted irrep, as the matrix
/// of a map Lin{psi^k_mu} -> Lin{psi^k_{q^2 mu}}: the target basis is rescaled by the sign,
/// so for Minus this is the negative of the endomorphism matrix. Equals displayed_matrix.
Matrix xc_matrix(int l, const CParam& c, Sign sign);

/// The closed tridiagonal form q^{l+1} M with M(k, k) = (q^{2k-l} -+ 1) alpha,
/// M(k, k+1) = [k+1] gamma and M(k+1, k) = q^{2k-l} [l-k] beta.
Matrix displayed_matrix(int l, const CParam& c, Sign sign);

/// One pair of eigenvalues of displayed_matrix / q^{l+1} for +-r, r = r2/2 > 0.
struct SpectralPair {
    int r2 = 0;
    RatFunc sum;
    RatFunc prod;
};

struct SpectralData {
    int l = 0;
    Sign sign = Sign::Plus;
    std::vector<SpectralPair> pairs;
    /// Root of the extra linear factor for even l: 0 for Plus, 2 alpha q^{l+1} for Minus.
    std::optional<RatFunc> linear_root;
    int zero_root_multiplicity = 0;
    RatPoly charpoly;
    RatPoly expected;
    bool equal = false;
};

/// Compares det(x - displayed_matrix) with the product of closed-form quadratic factors
/// x^2 - q^{l+1} S_r x + q^{2l+2} P_r, where for Plus
/// S_r = alpha (q^r - q^-r)^2, P_r = -(q^r - q^-r)^2 (alpha^2 + beta gamma q^-1 ((q^r + q^-r)/(q - q^-1))^2)
/// and for Minus S_r + 4 alpha and (q^r + q^-r)^2 (alpha^2 - beta gamma q^-1 ((q^r - q^-r)/(q - q^-1))^2).
SpectralData charpoly_check(int l, const CParam& c, Sign sign);

/// Nullity of xc_matrix over Q(t).
int kernel_dim(int l, const CParam& c, Sign sign);

}  // namespace qsphere
