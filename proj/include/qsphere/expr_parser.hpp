#pragma once

#include "qsphere/ratfunc.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace qsphere {

/// Recursive-descent parser for ring expressions over Q(t) with named generators.
///
/// `Ops` provides:
///   T one(const RatFunc& scalar);
///   std::optional<T> generator(std::string_view name);
///   T mul(const T& x, const T& y);
///   std::optional<RatFunc> as_scalar(const T& x);
/// and T supports +, - and unary -.
template <class T, class Ops>
class ExprParser {
public:
    ExprParser(std::string_view text, const Ops& ops) : s_(text), ops_(ops) {}

    T parse() {
        T v = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    std::string_view s_;
    const Ops& ops_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("parse error at " + std::to_string(pos_) + ": " + msg + " in '" +
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
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string_view digits() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return s_.substr(start, pos_ - start);
    }
    long small_int() { return std::stol(std::string(digits())); }

    T sum() {
        bool neg = accept('-');
        if (!neg) accept('+');
        T acc = product();
        if (neg) acc = -acc;
        while (true) {
            if (accept('+'))
                acc = acc + product();
            else if (accept('-'))
                acc = acc - product();
            else
                return acc;
        }
    }

    T product() {
        T acc = power();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = ops_.mul(acc, power());
            } else if (c == '/') {
                ++pos_;
                T d = power();
                auto sc = ops_.as_scalar(d);
                if (!sc || sc->is_zero()) fail("division only by nonzero scalars");
                acc = ops_.mul(acc, ops_.one(sc->inverse()));
            } else if (c == '(' || ident_start(c)) {
                acc = ops_.mul(acc, power());
            } else {
                return acc;
            }
        }
    }

    T power() {
        bool is_q = false;
        T base = ops_.one(RatFunc());
        char c = peek();
        if (c == '(') {
            ++pos_;
            base = sum();
            if (!accept(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = ops_.one(RatFunc(mpz_class(std::string(digits()))));
        } else if (ident_start(c)) {
            size_t start = pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            if (name == "q") {
                is_q = true;
                base = ops_.one(RatFunc::q());
            } else if (auto g = ops_.generator(name)) {
                base = *g;
            } else {
                fail("unknown generator '" + std::string(name) + "'");
            }
        } else {
            fail("expected number, name or '('");
        }
        if (!accept('^')) return base;
        long num = 0, den = 1;
        if (accept('(')) {
            bool neg = accept('-');
            if (!neg) accept('+');
            num = small_int();
            if (accept('/')) den = small_int();
            if (!accept(')')) fail("expected ')'");
            if (neg) num = -num;
        } else {
            bool neg = accept('-');
            if (!neg) accept('+');
            num = small_int();
            if (neg) num = -num;
        }
        if (den == 2 && num % 2 != 0) {
            if (!is_q) fail("half-integer exponent only allowed on q");
            return ops_.one(RatFunc::t_pow(static_cast<int>(num)));
        }
        if (den == 2) num /= 2;
        else if (den != 1) fail("exponent denominator must be 1 or 2");
        if (num < 0) {
            auto sc = ops_.as_scalar(base);
            if (!sc || sc->is_zero()) fail("negative exponent only on nonzero scalars");
            return ops_.one(sc->pow(static_cast<int>(num)));
        }
        T r = ops_.one(RatFunc(1));
        for (long i = 0; i < num; ++i) r = ops_.mul(r, base);
        return r;
    }
};

template <class T, class Ops>
T parse_expression(std::string_view text, const Ops& ops) {
    return ExprParser<T, Ops>(text, ops).parse();
}

}  // namespace qsphere
