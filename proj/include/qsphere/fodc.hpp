#pragma once

#include "qsphere/dualfunc.hpp"
#include "qsphere/podles.hpp"
#include "qsphere/uqsl2rep.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsphere {

/// An irreducible summand V_{+-q^-l}, identified by (sign, l).
using Component = std::pair<Sign, int>;

std::string component_name(const Component& c);

struct ClosureCheck {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// T^eps = C eps + sum of the components, with the three closure conditions
/// eps in T^eps, Delta T^eps in B° (x) T^eps, T^eps X_c in T^eps checked exactly.
struct TangentSpace {
    CParam c;
    std::vector<Component> components;
    /// Basis of T^eps; the first vector is eps. The component (+, 0) is C eps itself.
    std::vector<PsiVector> basis;
    std::vector<ClosureCheck> checks;

    int dim_T_eps() const noexcept { return static_cast<int>(basis.size()); }
    /// Dimension of the calculus, dim T^eps - 1.
    int dim() const noexcept { return dim_T_eps() - 1; }
    bool certified() const;
    /// Basis v - v(1) eps of T = (T^eps)^+, skipping eps.
    std::vector<PsiVector> tangent_basis(const PodlesAlgebra& alg) const;
};

/// Throws std::invalid_argument for c = 0 or components outside J^c.
TangentSpace tangent_space(const CParam& c, const std::vector<Component>& components);

/// Smallest subspace containing eps and the seeds that is closed under the second legs
/// of Delta and the right X_c action.
std::vector<PsiVector> generated_subspace(const CParam& c, const std::vector<PsiVector>& seeds);

/// True when the non-eps basis vectors have pairwise distinct weights lambda and each one
/// generates all of T^eps. Delta-closed subspaces contain the lambda-homogeneous parts of their
/// vectors (the second legs over psi^0_lambda), so then every vector outside C eps generates T^eps.
bool is_irreducible(const TangentSpace& t);

/// Entry (k, j) = t_k(w_j) for the tangent basis t_k.
Matrix pairing_matrix(const TangentSpace& t, const std::vector<PodlesElement>& w,
                      const PodlesAlgebra& alg);

struct DeGeneratedCalculus {
    std::vector<Component> components;
    int dim = 0;
    int pairing_rank = 0;
    /// d e_{-1}, d e_0, d e_1 generate the calculus as a right module.
    bool generated() const noexcept { return pairing_rank == dim; }
    /// They form a right module basis.
    bool free_basis() const noexcept { return generated() && dim == 3; }
};

struct DeClassification {
    CParam c;
    int lmax = 0;
    /// Components of J^c other than (+, 0) with l + 1 <= 3.
    std::vector<Component> candidates;
    std::vector<DeGeneratedCalculus> tested;
    std::vector<DeGeneratedCalculus> calculi;
};

/// Direct sums of the nontrivial irreducible calculi generated by the d e_i. A right module
/// generated by three elements has dimension <= 3, so only sums with total dimension <= 3
/// are tested. Throws std::invalid_argument for c = 0 or c = c(n).
DeClassification classify_de_generated(const CParam& c, int lmax);

/// Basis b_0 = e1^n, b_{k+1} = E |> b_k of the (2n+1)-dimensional submodule V(n).
std::vector<PodlesElement> submodule_Vn(int n, const PodlesAlgebra& alg);

/// Coordinates of x in the span of basis, if x lies in it.
std::optional<std::vector<RatFunc>> podles_coordinates(const std::vector<PodlesElement>& basis,
                                                       const PodlesElement& x);
int podles_rank(const std::vector<PodlesElement>& xs);

enum class NuKind { Identity, SignFlip };

/// e_i -> -e_i, defined only for c = infinity (where A -> -A).
PodlesElement apply_nu(NuKind nu, const PodlesElement& x, const PodlesAlgebra& alg);

/// Element sum_j gamma^j x_j of the free right module W' (x) B.
using OneForm = std::vector<PodlesElement>;

/// The bimodule W' (x) B with a f b = f_(0) nu(a_(0)) b r(a_(1), f_(1)) for W = V(n),
/// and d x = omega x - x omega with omega = sum_i gamma^i b_i.
class HermissonCalculus {
public:
    HermissonCalculus(int n, NuKind nu, const CParam& c);

    int n() const noexcept { return n_; }
    NuKind nu() const noexcept { return nu_; }
    int size() const noexcept { return static_cast<int>(basis_.size()); }
    const PodlesAlgebra& algebra() const noexcept { return alg_; }
    const std::vector<PodlesElement>& basis() const noexcept { return basis_; }
    /// corep()[j][i] = psi^j_i with Delta b_i = sum_j b_j (x) psi^j_i.
    const std::vector<std::vector<SL2Element>>& corep() const noexcept { return corep_; }

    /// L(a) with a gamma^i = sum_j gamma^j L(a)[j][i].
    std::vector<std::vector<PodlesElement>> left_matrix(const PodlesElement& a) const;
    const std::vector<std::vector<PodlesElement>>& left_matrix(const PodlesMono& m) const;

    OneForm left_multiply(const PodlesElement& a, const OneForm& w) const;
    OneForm right_multiply(const OneForm& w, const PodlesElement& b) const;
    OneForm omega() const { return basis_; }
    OneForm d(const PodlesElement& x) const;

    /// chi_i(a) = r(nu(a), S^-1(b_i)) - eps(b_i) eps(a).
    RatFunc chi(int i, const PodlesElement& a) const;
    /// eps(e_1)^-n r(nu(a), S^-1(e_1^n)).
    RatFunc chi_bar(const PodlesElement& a) const;

private:
    int n_;
    NuKind nu_;
    PodlesAlgebra alg_;
    std::vector<PodlesElement> basis_;
    std::vector<std::vector<SL2Element>> corep_;
    std::vector<std::vector<SL2Element>> corep_sinv_;
    std::vector<SL2Element> basis_sinv_;
    mutable std::map<PodlesMono, std::vector<std::vector<PodlesElement>>> left_cache_;
};

bool forms_equal(const OneForm& x, const OneForm& y);

/// Rows chi_i, columns normal-form monomials of degree <= degree.
Matrix chi_table(const HermissonCalculus& h, int degree);

struct TangentMatch {
    int degree = 0;
    int chi_rank = 0;
    int module_rank = 0;
    int joint_rank = 0;
    bool matches() const noexcept { return chi_rank == module_rank && joint_rank == chi_rank; }
};

/// Compares span{chi_i} + C eps with the tangent space of the component (sign, 2n).
TangentMatch match_tangent_space(const HermissonCalculus& h, int degree);

struct LeibnizReport {
    int pairs = 0;
    int failures = 0;
    std::string witness;
    bool holds() const noexcept { return failures == 0; }
};

/// d(xy) = x dy + dx y and L(xy) = L(x) L(y) for monomials of total degree <= degree.
LeibnizReport verify_leibniz(const HermissonCalculus& h, int degree);

struct FreenessReport {
    int degree = 0;
    int coefficient_degree = 0;
    int unknowns = 0;
    int rank = 0;
    int generated = 0;
    int targets = 0;
    std::string witness;
    bool injective() const noexcept { return rank == unknowns; }
    bool holds() const noexcept { return injective() && generated == targets; }
};

/// {d b_i} is right-linearly independent with coefficients of degree <= coefficient_degree,
/// and d x lies in their right span for every monomial x of degree <= degree.
/// The relations are not homogeneous, so d x of degree k may need coefficients of degree k + 1.
FreenessReport verify_freeness(const HermissonCalculus& h, int degree, int coefficient_degree);
inline FreenessReport verify_freeness(const HermissonCalculus& h, int degree) {
    return verify_freeness(h, degree, degree + 1);
}

}  // namespace qsphere
