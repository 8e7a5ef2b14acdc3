#include "qsphere/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace qsphere {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const mpz_class& c, int deg) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(deg) + 1, mpz_class(0));
        p.c_.back() = c;
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(int i) const {
    static const mpz_class zero(0);
    if (i < 0 || i > degree()) return zero;
    return c_[static_cast<size_t>(i)];
}

int IntPoly::low_order() const noexcept {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

IntPoly IntPoly::shifted_down(int k) const {
    if (k == 0 || is_zero()) return *this;
    IntPoly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

IntPoly IntPoly::shifted_up(int k) const {
    if (k == 0 || is_zero()) return *this;
    IntPoly r;
    r.c_.assign(static_cast<size_t>(k), mpz_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    r.trim();
    return r;
}

IntPoly IntPoly::divexact(const mpz_class& s) const {
    IntPoly r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
    return r;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    if (d.is_zero()) throw std::domain_error("IntPoly: division by zero");
    if (d.degree() == 0) return divexact(d.c_[0]);
    if (is_zero()) return {};
    if (degree() < d.degree()) throw std::domain_error("IntPoly: inexact division");
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> quo(static_cast<size_t>(degree() - d.degree()) + 1);
    const int dd = d.degree();
    for (int i = degree(); i >= dd; --i) {
        mpz_class& top = rem[static_cast<size_t>(i)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.lead().get_mpz_t()))
            throw std::domain_error("IntPoly: inexact division");
        mpz_class f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), d.lead().get_mpz_t());
        quo[static_cast<size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            mpz_submul(rem[static_cast<size_t>(i - dd + j)].get_mpz_t(), f.get_mpz_t(),
                       d.c_[static_cast<size_t>(j)].get_mpz_t());
    }
    for (const auto& x : rem)
        if (x != 0) throw std::domain_error("IntPoly: inexact division");
    return IntPoly(std::move(quo));
}

mpq_class IntPoly::evaluate(const mpq_class& t) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + mpq_class(*it);
    return acc;
}

std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
    for (size_t i = a.c_.size(); i-- > 0;) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

namespace {

// a <- lead(b) * a - lead(a) t^k b until deg a < deg b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        IntPoly t = b.shifted_up(a.degree() - db) * a.lead();
        a *= b.lead();
        a -= t;
    }
    return a;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    mpz_class c = p.content();
    if (p.lead() < 0) c = -c;
    return c == 1 ? p : p.divexact(c);
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return primitive_part(b) * b.content();
    if (b.is_zero()) return primitive_part(a) * a.content();
    mpz_class cg;
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.degree() == 0 || b.degree() == 0) return IntPoly(cg);
    IntPoly x = primitive_part(a), y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (true) {
        if (y.degree() == 0) return IntPoly(cg);
        IntPoly r = pseudo_remainder(std::move(x), y);
        if (r.is_zero()) return y * cg;
        x = std::move(y);
        y = primitive_part(r);
    }
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(long v) : num_(mpz_class(v)) {}

RatFunc::RatFunc(const mpz_class& v) : num_(v) {}

RatFunc::RatFunc(const mpq_class& v) {
    *this = from_parts(0, IntPoly(v.get_num()), IntPoly(v.get_den()));
}

RatFunc RatFunc::t_pow(int k) {
    RatFunc r(1);
    r.shift_ = k;
    return r;
}

RatFunc RatFunc::from_parts(int shift, IntPoly num, IntPoly den) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    RatFunc r;
    r.shift_ = shift;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = IntPoly(mpz_class(1));
        return;
    }
    if (int k = num_.low_order(); k > 0) {
        num_ = num_.shifted_down(k);
        shift_ += k;
    }
    if (int k = den_.low_order(); k > 0) {
        den_ = den_.shifted_down(k);
        shift_ -= k;
    }
    IntPoly g = gcd(num_, den_);
    if (!(g.degree() == 0 && g.lead() == 1)) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool RatFunc::is_one() const noexcept {
    return shift_ == 0 && num_.degree() == 0 && den_.degree() == 0 && num_.lead() == 1 &&
           den_.lead() == 1;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int s = std::min(shift_, o.shift_);
    IntPoly na = num_.shifted_up(shift_ - s);
    IntPoly nb = o.num_.shifted_up(o.shift_ - s);
    if (den_ == o.den_) {
        na += nb;
        return *this = from_parts(s, std::move(na), den_);
    }
    IntPoly g = gcd(den_, o.den_);
    IntPoly da = den_.divexact(g), db = o.den_.divexact(g);
    IntPoly n = na * db + nb * da;
    IntPoly d = den_ * db;
    return *this = from_parts(s, std::move(n), std::move(d));
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RatFunc r;
    r.shift_ = a.shift_ + b.shift_;
    IntPoly g1 = gcd(a.num_, b.den_);
    IntPoly g2 = gcd(b.num_, a.den_);
    auto reduce = [](const IntPoly& p, const IntPoly& g) {
        return (g.degree() == 0 && g.lead() == 1) ? p : p.divexact(g);
    };
    r.num_ = reduce(a.num_, g1) * reduce(b.num_, g2);
    r.den_ = reduce(a.den_, g2) * reduce(b.den_, g1);
    if (r.den_.lead() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) { return *this = *this * o; }

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this = *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    RatFunc r;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.lead() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::optional<RatFunc> RatFunc::monomial_sqrt() const {
    if (is_zero()) return RatFunc();
    if (!is_monomial() || shift_ % 2 != 0 || num_.lead() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(num_.lead().get_mpz_t()) ||
        !mpz_perfect_square_p(den_.lead().get_mpz_t()))
        return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), num_.lead().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), den_.lead().get_mpz_t());
    return from_parts(shift_ / 2, IntPoly(n), IntPoly(d));
}

mpq_class RatFunc::evaluate(const mpq_class& t) const {
    mpq_class d = den_.evaluate(t);
    if (d == 0) throw std::domain_error("RatFunc: pole at evaluation point");
    if (t == 0 && shift_ < 0) throw std::domain_error("RatFunc: pole at t = 0");
    mpq_class tp = 1;
    mpq_class base = shift_ >= 0 ? t : mpq_class(1) / t;
    for (int i = 0; i < std::abs(shift_); ++i) tp *= base;
    return tp * num_.evaluate(t) / d;
}

std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
    if (auto c = a.shift_ <=> b.shift_; c != 0) return c;
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
}

// ---------------------------------------------------------------- text

namespace {

std::string q_monomial(int t_exp) {
    if (t_exp == 0) return "";
    if (t_exp % 2 == 0) {
        int k = t_exp / 2;
        return k == 1 ? "q" : "q^" + std::to_string(k);
    }
    return "q^(" + std::to_string(t_exp) + "/2)";
}

// Terms c * t^(i + shift), highest exponent first.
std::string laurent_text(const IntPoly& p, int shift, int* term_count) {
    std::ostringstream os;
    int terms = 0;
    for (int i = p.degree(); i >= 0; --i) {
        const mpz_class& c = p.coeff(i);
        if (c == 0) continue;
        std::string mono = q_monomial(i + shift);
        mpz_class mag = abs(c);
        std::string body;
        if (mono.empty())
            body = mag.get_str();
        else if (mag == 1)
            body = mono;
        else
            body = mag.get_str() + "*" + mono;
        if (terms == 0)
            os << (c < 0 ? "-" : "") << body;
        else
            os << (c < 0 ? " - " : " + ") << body;
        ++terms;
    }
    if (terms == 0) os << "0";
    if (term_count) *term_count = terms;
    return os.str();
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RatFunc parse_all() {
        RatFunc v = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    std::string_view s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("RatFunc parse error at " + std::to_string(pos_) + ": " + msg + " in '" +
                         std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    mpz_class big_integer() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    RatFunc sum() {
        RatFunc acc;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        RatFunc first = product();
        acc = neg ? -first : first;
        while (true) {
            if (accept('+'))
                acc += product();
            else if (accept('-'))
                acc -= product();
            else
                return acc;
        }
    }

    RatFunc product() {
        RatFunc acc = power();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= power();
            } else if (c == '/') {
                ++pos_;
                RatFunc d = power();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else if (c == '(' || c == 'q') {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    // Returns the exponent as numerator over denominator in {1, 2}.
    std::pair<long, long> exponent() {
        if (accept('(')) {
            bool neg = accept('-');
            if (!neg) accept('+');
            long n = integer();
            long d = 1;
            if (accept('/')) d = integer();
            if (!accept(')')) fail("expected ')'");
            if (d != 1 && d != 2) fail("only exponents with denominator 1 or 2 are supported");
            return {neg ? -n : n, d};
        }
        bool neg = accept('-');
        if (!neg) accept('+');
        long n = integer();
        return {neg ? -n : n, 1};
    }

    RatFunc power() {
        bool is_q = false;
        RatFunc base;
        char c = peek();
        if (c == '(') {
            ++pos_;
            base = sum();
            if (!accept(')')) fail("expected ')'");
        } else if (c == 'q') {
            ++pos_;
            is_q = true;
            base = RatFunc::q();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = RatFunc(big_integer());
        } else {
            fail("expected number, 'q' or '('");
        }
        if (!accept('^')) return base;
        auto [n, d] = exponent();
        if (d == 2) {
            if (!is_q) fail("half-integer exponent only allowed on q");
            return RatFunc::t_pow(static_cast<int>(n));
        }
        if (is_q) return RatFunc::q_pow(static_cast<int>(n));
        if (n < 0 && base.is_zero()) fail("zero to a negative power");
        return base.pow(static_cast<int>(n));
    }
};

}  // namespace

std::string RatFunc::to_string() const {
    int nterms = 0;
    std::string n = laurent_text(num_, shift_, &nterms);
    if (den_.degree() == 0 && den_.lead() == 1) return n;
    int dterms = 0;
    std::string d = laurent_text(den_, 0, &dterms);
    if (nterms > 1) n = "(" + n + ")";
    if (dterms > 1 || den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

RatFunc RatFunc::parse(std::string_view text) { return Parser(text).parse_all(); }

std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.to_string(); }

}  // namespace qsphere
