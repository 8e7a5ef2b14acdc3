#pragma once

#include "qsphere/ratfunc.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qsphere {

/// Quantum integer [l] = (q^l - q^-l)/(q - q^-1).
RatFunc qint(int l);
/// [n]! = [1][2]...[n].
RatFunc qfactorial(int n);
/// Gaussian binomial [l; r]; throws std::invalid_argument unless 0 <= r <= l.
RatFunc qbinom(int l, int r);

/// c(n) = -1/(q^n + q^-n)^2 with n = n2/2.
RatFunc cn_value(int n2);

/// The sphere parameter c, kept through its square root s whenever one is known.
class CParam {
public:
    enum class Kind { Generic, Infinity, Zero };

    static CParam generic(RatFunc s);
    /// Generic parameter known only through c; a rational square root is used if it exists.
    static CParam from_c(RatFunc c);
    static CParam infinity();
    static CParam zero();
    /// c(n) with n = n2/2; c(n) has no square root in Q(t), so only c is stored.
    static CParam cn(int n2);
    /// c = (q^r - q^-r)^-2 with r = r2/2, s = 1/(q^r - q^-r).
    static CParam exceptional(int r2);

    Kind kind() const noexcept { return kind_; }
    bool is_generic() const noexcept { return kind_ == Kind::Generic; }
    bool is_infinity() const noexcept { return kind_ == Kind::Infinity; }
    bool is_zero() const noexcept { return kind_ == Kind::Zero; }
    bool has_sqrt() const noexcept { return s_.has_value(); }

    /// s = c^{1/2}; throws std::logic_error if unknown or c = infinity.
    const RatFunc& s() const;
    /// c itself; throws std::logic_error for c = infinity.
    const RatFunc& c() const;

    /// `inf`, `s=<ratfunc>`, or `c=<ratfunc>`.
    std::string to_string() const;

    friend bool operator==(const CParam&, const CParam&) = default;

private:
    Kind kind_ = Kind::Zero;
    std::optional<RatFunc> s_;
    RatFunc c_;
};

/// Parses `inf`, `s=<ratfunc>`, `cn:<n2>` or `exc:<r2>`.
CParam parse_param_spec(std::string_view text);

/// Coefficients of X = alpha (K^-1 - 1) + beta K^-1 E + gamma F cutting out the sphere.
struct XcData {
    RatFunc alpha;
    RatFunc beta;
    RatFunc gamma;
};

/// Requires c != 0 and a known square root for generic c.
XcData xc_data(const CParam& c);

struct AdmissibilityReport {
    bool is_zero = false;
    bool is_infinity = false;
    /// Smallest n2 <= n2_max with c = c(n2/2), if any.
    std::optional<int> witness_n2;
    int n2_max = 0;

    /// c not among the tested c(n) and c != 0.
    bool admissible() const noexcept { return !is_zero && !witness_n2; }
};

AdmissibilityReport check_admissible(const CParam& c, int n2_max = 64);

/// Evaluates x at a rational specialization of t = q^{1/2}.
/// Rejects values where |q| lies in {0, 1}.
mpq_class specialize(const RatFunc& x, const mpq_class& t);

}  // namespace qsphere
