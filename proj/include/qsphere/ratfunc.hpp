#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsphere {

/// Dense polynomial in t with integer coefficients; coefficient i multiplies t^i.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(const mpz_class& c);
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly monomial(const mpz_class& c, int deg);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
    const mpz_class& lead() const { return c_.back(); }
    const mpz_class& coeff(int i) const;
    /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
    int low_order() const noexcept;

    IntPoly shifted_down(int k) const;
    IntPoly shifted_up(int k) const;
    mpz_class content() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const mpz_class& s);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }

    /// Exact division by an integer that divides every coefficient.
    IntPoly divexact(const mpz_class& s) const;
    /// Exact division in Z[t]; throws std::domain_error if `d` does not divide.
    IntPoly divexact(const IntPoly& d) const;

    mpq_class evaluate(const mpq_class& t) const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b);

private:
    std::vector<mpz_class> c_;
    void trim();
};

/// Greatest common divisor in Z[t], normalized to a positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Element of Q(t) where q = t^2, so q^{1/2} = t.
///
/// Stored as t^shift * num / den with num(0) != 0, den(0) != 0, gcd(num, den) = 1
/// in Z[t] and lead(den) > 0. The representation is canonical, so structural
/// equality is field equality and the type can key ordered maps.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long v);  // NOLINT(google-explicit-constructor)
    explicit RatFunc(const mpz_class& v);
    explicit RatFunc(const mpq_class& v);

    static RatFunc t_pow(int k);
    static RatFunc q_pow(int k) { return t_pow(2 * k); }
    static RatFunc q() { return t_pow(2); }
    static RatFunc from_parts(int shift, IntPoly num, IntPoly den);

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept;
    bool is_laurent() const noexcept { return den_.is_constant(); }
    /// True when the value is c * t^k for a rational c.
    bool is_monomial() const noexcept { return num_.degree() == 0 && den_.degree() == 0; }

    int shift() const noexcept { return shift_; }
    const IntPoly& num() const noexcept { return num_; }
    const IntPoly& den() const noexcept { return den_; }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    RatFunc inverse() const;
    RatFunc pow(int e) const;
    /// Square root when the value is a rational square times an even power of t.
    std::optional<RatFunc> monomial_sqrt() const;

    /// Value at a rational t; throws std::domain_error at a pole.
    mpq_class evaluate(const mpq_class& t) const;

    /// Text in q-syntax: t^2 prints as q, t as q^(1/2).
    std::string to_string() const;
    /// Inverse of to_string; accepts integer expressions in q and q^(k/2).
    static RatFunc parse(std::string_view text);

    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;
    friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b);

private:
    int shift_ = 0;
    IntPoly num_;
    IntPoly den_{mpz_class(1)};

    void normalize();
};

std::ostream& operator<<(std::ostream& os, const RatFunc& x);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qsphere
