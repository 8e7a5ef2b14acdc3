#pragma once

#include "qsphere/cparam.hpp"
#include "qsphere/matrix.hpp"
#include "qsphere/oqsl2.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsphere {

/// Normal-form monomial A^a e^m of the Podles sphere: e^m = e1^m for m > 0, em1^{-m} for m < 0.
struct PodlesMono {
    int a = 0;
    int m = 0;

    int degree() const noexcept { return a + (m < 0 ? -m : m); }
    friend auto operator<=>(const PodlesMono& x, const PodlesMono& y) {
        if (auto c = x.degree() <=> y.degree(); c != 0) return c;
        if (auto c = x.m <=> y.m; c != 0) return c;
        return x.a <=> y.a;
    }
    friend bool operator==(const PodlesMono&, const PodlesMono&) = default;
};

/// Linear combination of normal-form monomials; zero coefficients are never stored.
class PodlesElement {
public:
    using Terms = std::map<PodlesMono, RatFunc>;

    PodlesElement() = default;
    PodlesElement(const RatFunc& scalar);  // NOLINT(google-explicit-constructor)
    static PodlesElement monomial(const PodlesMono& m, const RatFunc& coeff = RatFunc(1));

    const Terms& terms() const& noexcept { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add_term(const PodlesMono& m, const RatFunc& coeff);
    RatFunc coeff(const PodlesMono& m) const;

    PodlesElement operator-() const;
    PodlesElement& operator+=(const PodlesElement& o);
    PodlesElement& operator-=(const PodlesElement& o);
    PodlesElement& operator*=(const RatFunc& s);
    friend PodlesElement operator+(PodlesElement a, const PodlesElement& b) { return a += b; }
    friend PodlesElement operator-(PodlesElement a, const PodlesElement& b) { return a -= b; }
    friend PodlesElement operator*(PodlesElement a, const RatFunc& s) { return a *= s; }
    friend PodlesElement operator*(const RatFunc& s, PodlesElement a) { return a *= s; }

    /// Text using the generator names A, em1, e1.
    std::string to_string() const;

    friend bool operator==(const PodlesElement&, const PodlesElement&) = default;

private:
    Terms terms_;
};

/// Right coaction values: sum over terms x (x) y with x in the sphere, y in O_q(SL2).
using PodlesCoaction = std::map<std::pair<PodlesMono, PBWMono>, RatFunc>;

/// The Podles sphere for a fixed parameter c, realized by normal-form rewriting
/// {e1 A -> q^2 A e1, em1 A -> q^-2 A em1, em1 e1 -> A - A^2 + c, e1 em1 -> q^2 A - q^4 A^2 + c}
/// (for c = infinity: em1 e1 -> 1 - A^2, e1 em1 -> 1 - q^4 A^2).
class PodlesAlgebra {
public:
    explicit PodlesAlgebra(CParam c);

    const CParam& param() const noexcept { return c_; }

    PodlesElement A() const { return PodlesElement::monomial({1, 0}); }
    PodlesElement em1() const { return PodlesElement::monomial({0, -1}); }
    PodlesElement e1() const { return PodlesElement::monomial({0, 1}); }
    /// e0 = 1 - (1 + q^2) A, or -(1 + q^2) A for c = infinity.
    PodlesElement e0() const;
    /// e_i for i in {-1, 0, 1}.
    PodlesElement e(int i) const;

    PodlesElement multiply(const PodlesElement& x, const PodlesElement& y) const;
    PodlesElement multiply(const PodlesMono& x, const PodlesMono& y) const;
    PodlesElement pow(const PodlesElement& x, int e) const;

    /// Parses expressions in em1, e0, e1, A and q.
    PodlesElement parse(std::string_view text) const;

    /// Reduces a word over {-1, 0, 1} (em1, A, e1) by applying the rewriting rules at the
    /// leftmost or rightmost reducible position.
    PodlesElement reduce_word(const std::vector<int>& word, RewriteOrder order) const;

    /// Normal-form monomials of total degree <= degree, in monomial order.
    static std::vector<PodlesMono> monomials(int degree);

    /// eps(e_{-1}), eps(e_0), eps(e_1); requires a known square root of c.
    std::vector<RatFunc> counit_values() const;
    RatFunc counit(const PodlesElement& x) const;

    /// Image in O_q(SL2) under e_i -> sum_j eps(e_j) pi^j_i.
    SL2Element embed(const PodlesElement& x) const;
    SL2Element embed(const PodlesMono& m) const;

    /// Delta(e_i) = sum_j e_j (x) pi^j_i, extended multiplicatively.
    PodlesCoaction coaction(const PodlesElement& x) const;
    const PodlesCoaction& coaction(const PodlesMono& m) const;

    /// Left action X |> x = x_(0) X(x_(1)) of a functional word.
    PodlesElement act(const FunctionalWord& w, const PodlesElement& x) const;

private:
    CParam c_;
    mutable std::map<std::pair<int, int>, PodlesElement> ee_cache_;
    mutable std::map<PodlesMono, SL2Element> embed_cache_;
    mutable std::map<PodlesMono, PodlesCoaction> coaction_cache_;

    const PodlesElement& ee(int m1, int m2) const;
    PodlesElement relation_poly(bool em1_first, int shift) const;
};

struct IndependenceReport {
    int degree = 0;
    int monomials = 0;
    int rank = 0;
    bool independent() const noexcept { return rank == monomials; }
};

/// Rank of the embedded normal-form monomials of degree <= degree inside O_q(SL2).
IndependenceReport basis_independence(const PodlesAlgebra& alg, int degree);

/// Residual of each defining relation: em1 e1, e1 em1, e1 A, em1 A.
struct RelationResidual {
    std::string name;
    std::string residual;
    bool zero = false;
};

/// The four rewriting relations for the embedded generators, evaluated in O_q(SL2).
std::vector<RelationResidual> embedded_relation_residuals(const PodlesAlgebra& alg);

/// The n-dimensional representation with invertible A at c = c(n).
/// Basis v_1..v_n; entry (i, j) is the coefficient of v_i in the image of v_j.
struct MuRep {
    int n = 0;
    Matrix A, em1, e1;
};

MuRep build_mu_n(int n);
/// Residuals of the four relations at c = c(n), in order em1 e1, e1 em1, e1 A, em1 A.
std::vector<RelationResidual> mu_relation_residuals(const MuRep& rep);

/// Element of the opposite lower Borel algebra in the basis F^a K^b, b in Z,
/// with product x * y = y x of U_q(sl2), so K * F = q^2 F * K.
class BorelOpElement {
public:
    using Terms = std::map<std::pair<int, int>, RatFunc>;

    BorelOpElement() = default;
    BorelOpElement(const RatFunc& scalar);  // NOLINT(google-explicit-constructor)
    static BorelOpElement F();
    static BorelOpElement K(int power = 1);

    const Terms& terms() const& noexcept { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add_term(int a, int b, const RatFunc& coeff);

    BorelOpElement& operator+=(const BorelOpElement& o);
    BorelOpElement& operator-=(const BorelOpElement& o);
    friend BorelOpElement operator+(BorelOpElement x, const BorelOpElement& y) { return x += y; }
    friend BorelOpElement operator-(BorelOpElement x, const BorelOpElement& y) { return x -= y; }
    friend BorelOpElement operator*(const BorelOpElement& x, const BorelOpElement& y);
    friend BorelOpElement operator*(BorelOpElement x, const RatFunc& s);

    /// Counit F -> 0, K -> 1.
    RatFunc counit() const;
    std::string to_string() const;

private:
    Terms terms_;
};

struct PodbmReport {
    std::vector<RatFunc> counit_images;
    std::vector<RelationResidual> relations;
    bool counit_ok = false;
    bool ok() const;
};

/// Checks that e_{-1} -> s K^-1, e_0 -> s (q^3 - q^-1) F + 1,
/// e_1 -> -s (q - q^-1)^2 K F^2 - (q - q^-1) K F + s K respects the sphere relations.
/// Requires generic c with known square root.
PodbmReport verify_podbm(const CParam& c);

}  // namespace qsphere
