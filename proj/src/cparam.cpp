#include "qsphere/cparam.hpp"

#include <charconv>
#include <stdexcept>

namespace qsphere {

RatFunc qint(int l) {
    if (l < 0) return -qint(-l);
    std::vector<mpz_class> coeffs(l > 0 ? static_cast<size_t>(4 * (l - 1) + 1) : 0);
    for (int k = 0; k < l; ++k) coeffs[static_cast<size_t>(4 * k)] = 1;
    // sum_{k} q^{l-1-2k} = t^{-2(l-1)} * sum_k t^{4k}
    return RatFunc::from_parts(-2 * (l - 1), IntPoly(std::move(coeffs)), IntPoly(mpz_class(1)));
}

RatFunc qfactorial(int n) {
    RatFunc r(1);
    for (int i = 2; i <= n; ++i) r *= qint(i);
    return r;
}

RatFunc qbinom(int l, int r) {
    if (r < 0 || r > l) throw std::invalid_argument("qbinom: need 0 <= r <= l");
    RatFunc num(1), den(1);
    for (int i = 1; i <= r; ++i) {
        num *= qint(l - r + i);
        den *= qint(i);
    }
    return num / den;
}

RatFunc cn_value(int n2) {
    RatFunc v = RatFunc::t_pow(n2) + RatFunc::t_pow(-n2);
    return -(v * v).inverse();
}

CParam CParam::generic(RatFunc s) {
    if (s.is_zero()) throw std::invalid_argument("CParam: s must be nonzero");
    CParam p;
    p.kind_ = Kind::Generic;
    p.c_ = s * s;
    p.s_ = std::move(s);
    return p;
}

CParam CParam::from_c(RatFunc c) {
    if (c.is_zero()) return zero();
    CParam p;
    p.kind_ = Kind::Generic;
    p.s_ = c.monomial_sqrt();
    p.c_ = std::move(c);
    return p;
}

CParam CParam::infinity() {
    CParam p;
    p.kind_ = Kind::Infinity;
    return p;
}

CParam CParam::zero() {
    CParam p;
    p.kind_ = Kind::Zero;
    p.s_ = RatFunc();
    return p;
}

CParam CParam::cn(int n2) {
    if (n2 < 0) throw std::invalid_argument("cn: n2 must be nonnegative");
    return from_c(cn_value(n2));
}

CParam CParam::exceptional(int r2) {
    if (r2 <= 0) throw std::invalid_argument("exc: r2 must be positive");
    return generic((RatFunc::t_pow(r2) - RatFunc::t_pow(-r2)).inverse());
}

const RatFunc& CParam::s() const {
    if (!s_) throw std::logic_error("CParam: square root of c is not available for " + to_string());
    return *s_;
}

const RatFunc& CParam::c() const {
    if (kind_ == Kind::Infinity) throw std::logic_error("CParam: c is infinite");
    return c_;
}

std::string CParam::to_string() const {
    switch (kind_) {
        case Kind::Infinity:
            return "inf";
        case Kind::Zero:
            return "s=0";
        case Kind::Generic:
            return s_ ? "s=" + s_->to_string() : "c=" + c_.to_string();
    }
    return {};
}

namespace {

int parse_int(std::string_view text, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
    return v;
}

}  // namespace

CParam parse_param_spec(std::string_view text) {
    if (text == "inf") return CParam::infinity();
    if (text.starts_with("s=")) {
        RatFunc s = RatFunc::parse(text.substr(2));
        return s.is_zero() ? CParam::zero() : CParam::generic(std::move(s));
    }
    if (text.starts_with("cn:")) return CParam::cn(parse_int(text.substr(3), "n2"));
    if (text.starts_with("exc:")) return CParam::exceptional(parse_int(text.substr(4), "r2"));
    throw ParseError("unknown parameter spec '" + std::string(text) +
                     "' (expected inf, s=<ratfunc>, cn:<n2> or exc:<r2>)");
}

XcData xc_data(const CParam& c) {
    const RatFunc q = RatFunc::q();
    switch (c.kind()) {
        case CParam::Kind::Infinity:
            return {RatFunc(), q, RatFunc(1)};
        case CParam::Kind::Zero:
            throw std::invalid_argument("X_c data is not defined for c = 0");
        case CParam::Kind::Generic:
            break;
    }
    RatFunc alpha = -(c.s() * (q - q.inverse())).inverse();
    return {alpha, q, RatFunc(1)};
}

AdmissibilityReport check_admissible(const CParam& c, int n2_max) {
    AdmissibilityReport r;
    r.n2_max = n2_max;
    r.is_zero = c.is_zero();
    r.is_infinity = c.is_infinity();
    if (!c.is_generic()) return r;
    for (int n2 = 0; n2 <= n2_max; ++n2) {
        if (c.c() == cn_value(n2)) {
            r.witness_n2 = n2;
            break;
        }
    }
    return r;
}

mpq_class specialize(const RatFunc& x, const mpq_class& t) {
    mpq_class q = t * t;
    if (q == 0 || q == 1) throw std::domain_error("specialize: |q| must not be 0 or 1");
    return x.evaluate(t);
}

}  // namespace qsphere
