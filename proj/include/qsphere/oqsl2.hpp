#pragma once

#include "qsphere/ratfunc.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsphere {

/// PBW monomial b^b c^c a^a d^d of O_q(SL2) with a = u11, b = u12, c = u21, d = u22.
/// Normal form requires a == 0 or d == 0.
struct PBWMono {
    int b = 0, c = 0, a = 0, d = 0;

    int degree() const noexcept { return a + b + c + d; }
    friend auto operator<=>(const PBWMono&, const PBWMono&) = default;
};

/// Finite linear combination of PBW monomials; zero coefficients are never stored.
class SL2Element {
public:
    using Terms = std::map<PBWMono, RatFunc>;

    SL2Element() = default;
    SL2Element(const RatFunc& scalar);  // NOLINT(google-explicit-constructor)
    static SL2Element monomial(const PBWMono& m, const RatFunc& coeff = RatFunc(1));
    /// Generator by name: one of a, b, c, d.
    static SL2Element generator(char name);
    /// Generator u^i_j with i, j in {1, 2}.
    static SL2Element u(int i, int j);

    const Terms& terms() const& noexcept { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add_term(const PBWMono& m, const RatFunc& coeff);
    /// Coefficient of m (zero if absent).
    RatFunc coeff(const PBWMono& m) const;

    SL2Element operator-() const;
    SL2Element& operator+=(const SL2Element& o);
    SL2Element& operator-=(const SL2Element& o);
    SL2Element& operator*=(const RatFunc& s);
    friend SL2Element operator+(SL2Element a, const SL2Element& b) { return a += b; }
    friend SL2Element operator-(SL2Element a, const SL2Element& b) { return a -= b; }
    friend SL2Element operator*(SL2Element a, const RatFunc& s) { return a *= s; }
    friend SL2Element operator*(const RatFunc& s, SL2Element a) { return a *= s; }
    friend SL2Element operator*(const SL2Element& x, const SL2Element& y);

    SL2Element pow(int e) const;

    std::string to_string() const;
    /// Parses expressions in a, b, c, d and q, e.g. "a*d - q*b*c".
    static SL2Element parse(std::string_view text);

    friend bool operator==(const SL2Element&, const SL2Element&) = default;

private:
    Terms terms_;
};

/// Product of two normal-form monomials, reduced to normal form.
SL2Element multiply_monomials(const PBWMono& x, const PBWMono& y);

/// Element of O_q(SL2) (x) O_q(SL2) in the basis of monomial pairs.
using SL2Tensor = std::map<std::pair<PBWMono, PBWMono>, RatFunc>;

void add_to(SL2Tensor& t, const PBWMono& x, const PBWMono& y, const RatFunc& coeff);
SL2Tensor tensor_multiply(const SL2Tensor& x, const SL2Tensor& y);

/// Matrix comultiplication, Delta(u^i_j) = sum_k u^i_k (x) u^k_j.
SL2Tensor coproduct(const SL2Element& x);
RatFunc counit(const SL2Element& x);
RatFunc counit(const PBWMono& m);
/// Antipode S(a) = d, S(d) = a, S(b) = -q^-1 b, S(c) = -q c, or its inverse.
SL2Element antipode(const SL2Element& x, bool inverse = false);

/// sum x y over the terms x (x) y.
SL2Element multiply_legs(const SL2Tensor& t);
/// sum S(x) y over the terms x (x) y.
SL2Element antipode_convolution(const SL2Tensor& t);

/// Matrix coefficient pi^i_j of the three-dimensional corepresentation, i, j in {-1, 0, 1}.
SL2Element pi_coeff(int i, int j);

/// A word in the generators u^i_j, stored as (i, j) pairs with i, j in {1, 2}.
using GenWord = std::vector<std::pair<int, int>>;

GenWord monomial_word(const PBWMono& m);
/// Product of the letters of a word, reduced to normal form.
SL2Element word_product(const GenWord& w);

enum class RewriteOrder { Leftmost, Rightmost };
/// Reduces a word over {a, b, c, d} by the rewriting rules
/// cb -> bc, ab -> q ba, ac -> q ca, db -> q^-1 bd, dc -> q^-1 cd,
/// ad -> 1 + q bc, da -> 1 + q^-1 bc, always rewriting the chosen occurrence.
SL2Element reduce_word(std::string_view word, RewriteOrder order);

/// One letter of a functional word acting on O_q(SL2).
struct FunctionalLetter {
    enum class Kind {
        Pow,      ///< f_lambda: u11 -> lambda, u22 -> lambda^-1
        HalfPow,  ///< f_mu with mu^2 = lambda; defined on even weight
        G,        ///< g: u11 -> 1, u22 -> -1, primitive
        E,        ///< E(u21) = 1, Delta E = E (x) K + eps (x) E
        F,        ///< F(u12) = 1, Delta F = F (x) eps + K^-1 (x) F
    };
    Kind kind;
    RatFunc lambda;

    static FunctionalLetter pow(const RatFunc& l) { return {Kind::Pow, l}; }
    static FunctionalLetter half_pow(const RatFunc& l) { return {Kind::HalfPow, l}; }
    static FunctionalLetter g() { return {Kind::G, RatFunc()}; }
    static FunctionalLetter e() { return {Kind::E, RatFunc()}; }
    static FunctionalLetter f() { return {Kind::F, RatFunc()}; }
    /// K = f_{q^-1}.
    static FunctionalLetter k() { return pow(RatFunc::q_pow(-1)); }
    static FunctionalLetter k_inv() { return pow(RatFunc::q()); }
};

/// Product L1 L2 ... Lm of functionals, evaluated as (L1 L2)(x) = L1(x1) L2(x2).
using FunctionalWord = std::vector<FunctionalLetter>;

/// f_mu g^m E^l written with mu^2 = lambda.
FunctionalWord psi_word(const RatFunc& lambda, int m, int l);

RatFunc eval_functional(const FunctionalWord& w, const SL2Element& x);
RatFunc eval_functional(const FunctionalWord& w, const GenWord& x);

/// Universal r-form with r(u^i_j, u^k_l) = q^{-1/2} R^{ik}_{jl}.
RatFunc rform(const SL2Element& x, const SL2Element& y);
RatFunc rform(const GenWord& x, const GenWord& y);

}  // namespace qsphere
