#include "qsphere/oqsl2.hpp"

#include "qsphere/expr_parser.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qsphere {

// ---------------------------------------------------------------- SL2Element

SL2Element::SL2Element(const RatFunc& scalar) {
    if (!scalar.is_zero()) terms_.emplace(PBWMono{}, scalar);
}

SL2Element SL2Element::monomial(const PBWMono& m, const RatFunc& coeff) {
    if (m.a != 0 && m.d != 0) throw std::invalid_argument("PBWMono: a and d both present");
    SL2Element x;
    x.add_term(m, coeff);
    return x;
}

SL2Element SL2Element::generator(char name) {
    switch (name) {
        case 'a':
            return monomial({0, 0, 1, 0});
        case 'b':
            return monomial({1, 0, 0, 0});
        case 'c':
            return monomial({0, 1, 0, 0});
        case 'd':
            return monomial({0, 0, 0, 1});
        default:
            throw std::invalid_argument(std::string("unknown O_q(SL2) generator '") + name + "'");
    }
}

SL2Element SL2Element::u(int i, int j) {
    static constexpr char names[2][2] = {{'a', 'b'}, {'c', 'd'}};
    if (i < 1 || i > 2 || j < 1 || j > 2) throw std::out_of_range("u^i_j: indices must be 1 or 2");
    return generator(names[i - 1][j - 1]);
}

void SL2Element::add_term(const PBWMono& m, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFunc SL2Element::coeff(const PBWMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFunc() : it->second;
}

SL2Element SL2Element::operator-() const {
    SL2Element r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

SL2Element& SL2Element::operator+=(const SL2Element& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SL2Element& SL2Element::operator-=(const SL2Element& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SL2Element& SL2Element::operator*=(const RatFunc& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

namespace {

// prod_i (1 + q^{e_i} z) as coefficients of z^p.
std::vector<RatFunc> bc_product(const std::vector<int>& exps) {
    std::vector<RatFunc> p{RatFunc(1)};
    for (int e : exps) {
        std::vector<RatFunc> next(p.size() + 1);
        RatFunc w = RatFunc::q_pow(e);
        for (size_t k = 0; k < p.size(); ++k) {
            next[k] += p[k];
            next[k + 1] += w * p[k];
        }
        p = std::move(next);
    }
    return p;
}

}  // namespace

SL2Element multiply_monomials(const PBWMono& x, const PBWMono& y) {
    // a^k b^i c^j = q^{k(i+j)} b^i c^j a^k and d^l b^i c^j = q^{-l(i+j)} b^i c^j d^l.
    RatFunc factor = RatFunc::q_pow((x.a - x.d) * (y.b + y.c));
    const int b = x.b + y.b, c = x.c + y.c;
    SL2Element r;
    if (x.d == 0 && y.d == 0) {
        r.add_term({b, c, x.a + y.a, 0}, factor);
        return r;
    }
    if (x.a == 0 && y.a == 0) {
        r.add_term({b, c, 0, x.d + y.d}, factor);
        return r;
    }
    std::vector<int> exps;
    int ra = 0, rd = 0;
    if (x.a > 0) {
        // a^k d^l = prod_{i<m} (1 + q^{2(k-i)-1} bc) a^{k-m} d^{l-m}
        const int k = x.a, l = y.d, m = std::min(k, l);
        for (int i = 0; i < m; ++i) exps.push_back(2 * (k - i) - 1);
        ra = k - m + y.a;
        rd = l - m;
    } else {
        // d^l a^k = prod_{i<m} (1 + q^{1-2(l-i)} bc) d^{l-m} a^{k-m}
        const int l = x.d, k = y.a, m = std::min(k, l);
        for (int i = 0; i < m; ++i) exps.push_back(1 - 2 * (l - i));
        ra = k - m;
        rd = l - m + y.d;
    }
    std::vector<RatFunc> poly = bc_product(exps);
    for (size_t p = 0; p < poly.size(); ++p) {
        const int pi = static_cast<int>(p);
        r.add_term({b + pi, c + pi, ra, rd}, factor * poly[p]);
    }
    return r;
}

SL2Element operator*(const SL2Element& x, const SL2Element& y) {
    SL2Element r;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) {
            RatFunc c = cx * cy;
            for (const auto& [m, k] : multiply_monomials(mx, my).terms_) r.add_term(m, c * k);
        }
    return r;
}

SL2Element SL2Element::pow(int e) const {
    if (e < 0) throw std::invalid_argument("SL2Element::pow: negative exponent");
    SL2Element r(RatFunc(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

namespace {

void append_power(std::ostringstream& os, bool& first, char name, int e) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << name;
    if (e > 1) os << "^" << e;
}

}  // namespace

std::string SL2Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [m, c] : terms_) {
        std::ostringstream mono;
        bool first = true;
        append_power(mono, first, 'b', m.b);
        append_power(mono, first, 'c', m.c);
        append_power(mono, first, 'a', m.a);
        append_power(mono, first, 'd', m.d);
        std::string ms = mono.str();
        std::string cs = c.to_string();
        bool neg = false;
        if (!ms.empty()) {
            if (c == RatFunc(1))
                cs.clear();
            else if (c == RatFunc(-1))
                cs.clear(), neg = true;
            else
                cs = "(" + cs + ")*";
        }
        if (!first_term) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first_term = false;
        os << cs << ms;
    }
    return os.str();
}

namespace {

struct SL2Ops {
    SL2Element one(const RatFunc& s) const { return SL2Element(s); }
    std::optional<SL2Element> generator(std::string_view name) const {
        if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'd') return SL2Element::generator(name[0]);
        return std::nullopt;
    }
    SL2Element mul(const SL2Element& x, const SL2Element& y) const { return x * y; }
    std::optional<RatFunc> as_scalar(const SL2Element& x) const {
        if (x.is_zero()) return RatFunc();
        if (x.terms().size() == 1 && x.terms().begin()->first == PBWMono{})
            return x.terms().begin()->second;
        return std::nullopt;
    }
};

}  // namespace

SL2Element SL2Element::parse(std::string_view text) {
    return parse_expression<SL2Element>(text, SL2Ops{});
}

// ---------------------------------------------------------------- Hopf structure

void add_to(SL2Tensor& t, const PBWMono& x, const PBWMono& y, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = t.try_emplace({x, y}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) t.erase(it);
    }
}

SL2Tensor tensor_multiply(const SL2Tensor& x, const SL2Tensor& y) {
    SL2Tensor r;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            SL2Element left = multiply_monomials(kx.first, ky.first);
            SL2Element right = multiply_monomials(kx.second, ky.second);
            RatFunc c = cx * cy;
            for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms()) add_to(r, ml, mr, c * cl * cr);
        }
    return r;
}

namespace {

PBWMono gen_mono(int i, int j) {
    PBWMono m;
    if (i == 1 && j == 1) m.a = 1;
    if (i == 1 && j == 2) m.b = 1;
    if (i == 2 && j == 1) m.c = 1;
    if (i == 2 && j == 2) m.d = 1;
    return m;
}

SL2Tensor generator_coproduct(int i, int j) {
    SL2Tensor t;
    for (int k = 1; k <= 2; ++k) add_to(t, gen_mono(i, k), gen_mono(k, j), RatFunc(1));
    return t;
}

SL2Tensor tensor_power(const SL2Tensor& t, int e) {
    SL2Tensor r;
    add_to(r, PBWMono{}, PBWMono{}, RatFunc(1));
    for (int i = 0; i < e; ++i) r = tensor_multiply(r, t);
    return r;
}

const SL2Tensor& monomial_coproduct(const PBWMono& m) {
    thread_local std::map<PBWMono, SL2Tensor> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    SL2Tensor r = tensor_power(generator_coproduct(1, 2), m.b);
    r = tensor_multiply(r, tensor_power(generator_coproduct(2, 1), m.c));
    r = tensor_multiply(r, tensor_power(generator_coproduct(1, 1), m.a));
    r = tensor_multiply(r, tensor_power(generator_coproduct(2, 2), m.d));
    return cache.emplace(m, std::move(r)).first->second;
}

}  // namespace

SL2Tensor coproduct(const SL2Element& x) {
    SL2Tensor r;
    for (const auto& [m, c] : x.terms())
        for (const auto& [k, v] : monomial_coproduct(m)) add_to(r, k.first, k.second, c * v);
    return r;
}

RatFunc counit(const PBWMono& m) { return (m.b == 0 && m.c == 0) ? RatFunc(1) : RatFunc(); }

RatFunc counit(const SL2Element& x) {
    RatFunc r;
    for (const auto& [m, c] : x.terms()) r += c * counit(m);
    return r;
}

namespace {

SL2Element antipode_monomial(const PBWMono& m, bool inverse) {
    const RatFunc q = RatFunc::q();
    // S is anti-multiplicative: S(b^i c^j a^k d^l) = S(d)^l S(a)^k S(c)^j S(b)^i.
    SL2Element sa = SL2Element::generator('d');
    SL2Element sd = SL2Element::generator('a');
    SL2Element sb = SL2Element::generator('b') * (inverse ? -q : -q.inverse());
    SL2Element sc = SL2Element::generator('c') * (inverse ? -q.inverse() : -q);
    return sd.pow(m.d) * sa.pow(m.a) * sc.pow(m.c) * sb.pow(m.b);
}

}  // namespace

SL2Element antipode(const SL2Element& x, bool inverse) {
    SL2Element r;
    for (const auto& [m, c] : x.terms()) r += antipode_monomial(m, inverse) * c;
    return r;
}

SL2Element multiply_legs(const SL2Tensor& t) {
    SL2Element r;
    for (const auto& [k, c] : t) r += multiply_monomials(k.first, k.second) * c;
    return r;
}

SL2Element antipode_convolution(const SL2Tensor& t) {
    SL2Element r;
    for (const auto& [k, c] : t)
        r += antipode(SL2Element::monomial(k.first), false) * SL2Element::monomial(k.second) * c;
    return r;
}

SL2Element pi_coeff(int i, int j) {
    if (i < -1 || i > 1 || j < -1 || j > 1) throw std::out_of_range("pi_coeff: indices must be -1, 0, 1");
    const RatFunc q = RatFunc::q(), qi = RatFunc::q_pow(-1);
    const SL2Element a = SL2Element::generator('a'), b = SL2Element::generator('b'),
                     c = SL2Element::generator('c'), d = SL2Element::generator('d');
    switch ((i + 1) * 3 + (j + 1)) {
        case 0:
            return d * d;
        case 1:
            return d * c * -(q * q + RatFunc(1));
        case 2:
            return c * c * -q;
        case 3:
            return b * d * -qi;
        case 4:
            return SL2Element(RatFunc(1)) + b * c * (q + qi);
        case 5:
            return a * c;
        case 6:
            return b * b * -qi;
        case 7:
            return b * a * (q + qi);
        default:
            return a * a;
    }
}

GenWord monomial_word(const PBWMono& m) {
    GenWord w;
    for (int i = 0; i < m.b; ++i) w.emplace_back(1, 2);
    for (int i = 0; i < m.c; ++i) w.emplace_back(2, 1);
    for (int i = 0; i < m.a; ++i) w.emplace_back(1, 1);
    for (int i = 0; i < m.d; ++i) w.emplace_back(2, 2);
    return w;
}

SL2Element word_product(const GenWord& w) {
    SL2Element r(RatFunc(1));
    for (auto [i, j] : w) r = r * SL2Element::u(i, j);
    return r;
}

namespace {

// Right-hand side of a rewriting rule as (coefficient, replacement word) pairs.
const std::vector<std::pair<RatFunc, std::string>>* rule_for(char x, char y) {
    static const RatFunc q = RatFunc::q(), qi = RatFunc::q_pow(-1);
    static const std::map<std::string, std::vector<std::pair<RatFunc, std::string>>> rules = {
        {"cb", {{RatFunc(1), "bc"}}},
        {"ab", {{q, "ba"}}},
        {"ac", {{q, "ca"}}},
        {"db", {{qi, "bd"}}},
        {"dc", {{qi, "cd"}}},
        {"ad", {{RatFunc(1), ""}, {q, "bc"}}},
        {"da", {{RatFunc(1), ""}, {qi, "bc"}}},
    };
    auto it = rules.find(std::string{x, y});
    return it == rules.end() ? nullptr : &it->second;
}

PBWMono word_to_mono(const std::string& w) {
    PBWMono m;
    for (char ch : w) {
        if (ch == 'a') ++m.a;
        if (ch == 'b') ++m.b;
        if (ch == 'c') ++m.c;
        if (ch == 'd') ++m.d;
    }
    return m;
}

}  // namespace

SL2Element reduce_word(std::string_view word, RewriteOrder order) {
    for (char ch : word)
        if (ch < 'a' || ch > 'd') throw std::invalid_argument("reduce_word: letters must be a, b, c, d");
    std::map<std::string, RatFunc> pending{{std::string(word), RatFunc(1)}};
    SL2Element result;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::string& w = node.key();
        const RatFunc coeff = node.mapped();
        int pos = -1;
        const int n = static_cast<int>(w.size());
        for (int k = 0; k + 1 < n; ++k) {
            int p = order == RewriteOrder::Leftmost ? k : n - 2 - k;
            if (rule_for(w[static_cast<size_t>(p)], w[static_cast<size_t>(p) + 1])) {
                pos = p;
                break;
            }
        }
        if (pos < 0) {
            result.add_term(word_to_mono(w), coeff);
            continue;
        }
        for (const auto& [k, rep] : *rule_for(w[static_cast<size_t>(pos)], w[static_cast<size_t>(pos) + 1])) {
            std::string nw = w.substr(0, static_cast<size_t>(pos)) + rep + w.substr(static_cast<size_t>(pos) + 2);
            RatFunc& slot = pending[nw];
            slot += coeff * k;
        }
    }
    return result;
}

// ---------------------------------------------------------------- functionals

FunctionalWord psi_word(const RatFunc& lambda, int m, int l) {
    FunctionalWord w{FunctionalLetter::half_pow(lambda)};
    for (int i = 0; i < m; ++i) w.push_back(FunctionalLetter::g());
    for (int i = 0; i < l; ++i) w.push_back(FunctionalLetter::e());
    return w;
}

namespace {

// Bit p of a state is set when the index at tensor position p equals 2.
using State = std::uint64_t;
using RowVector = std::map<State, RatFunc>;

void accumulate(RowVector& v, State s, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

RowVector apply_letter(const FunctionalLetter& L, const RowVector& v, int n) {
    RowVector out;
    for (const auto& [s, c] : v) {
        const int n2 = std::popcount(s);
        const int weight = n - 2 * n2;  // #1 - #2
        switch (L.kind) {
            case FunctionalLetter::Kind::Pow:
                accumulate(out, s, c * L.lambda.pow(weight));
                break;
            case FunctionalLetter::Kind::HalfPow:
                if (weight % 2 != 0)
                    throw std::domain_error("f_mu with mu^2 = lambda is undefined on odd weight");
                accumulate(out, s, c * L.lambda.pow(weight / 2));
                break;
            case FunctionalLetter::Kind::G:
                accumulate(out, s, c * RatFunc(weight));
                break;
            case FunctionalLetter::Kind::E: {
                // position p: 2 -> 1, positions after p weighted by K = diag(q^-1, q)
                int after = 0;  // (#2 - #1) strictly after p
                for (int p = n - 1; p >= 0; --p) {
                    bool two = (s >> p) & 1u;
                    if (two) accumulate(out, s & ~(State(1) << p), c * RatFunc::q_pow(after));
                    after += two ? 1 : -1;
                }
                break;
            }
            case FunctionalLetter::Kind::F: {
                // position p: 1 -> 2, positions before p weighted by K^-1 = diag(q, q^-1)
                int before = 0;  // (#1 - #2) strictly before p
                for (int p = 0; p < n; ++p) {
                    bool two = (s >> p) & 1u;
                    if (!two) accumulate(out, s | (State(1) << p), c * RatFunc::q_pow(before));
                    before += two ? -1 : 1;
                }
                break;
            }
        }
    }
    return out;
}

RatFunc eval_on_indices(const FunctionalWord& w, State in, State out, int n) {
    RowVector v{{in, RatFunc(1)}};
    for (const auto& L : w) {
        v = apply_letter(L, v, n);
        if (v.empty()) return {};
    }
    auto it = v.find(out);
    return it == v.end() ? RatFunc() : it->second;
}

std::pair<State, State> word_states(const GenWord& x) {
    if (x.size() > 63) throw std::length_error("functional evaluation: word too long");
    State in = 0, out = 0;
    for (size_t p = 0; p < x.size(); ++p) {
        if (x[p].first == 2) in |= State(1) << p;
        if (x[p].second == 2) out |= State(1) << p;
    }
    return {in, out};
}

}  // namespace

RatFunc eval_functional(const FunctionalWord& w, const GenWord& x) {
    auto [in, out] = word_states(x);
    return eval_on_indices(w, in, out, static_cast<int>(x.size()));
}

RatFunc eval_functional(const FunctionalWord& w, const SL2Element& x) {
    RatFunc r;
    for (const auto& [m, c] : x.terms()) r += c * eval_functional(w, monomial_word(m));
    return r;
}

// ---------------------------------------------------------------- r-form

namespace {

// Vertex-model transfer: each letter of x is a row whose horizontal index runs from
// i_p at the last column to j_p at the first; columns carry the vertical indices of y.
RatFunc rform_numerator(const GenWord& x, const GenWord& y) {
    const int m = static_cast<int>(y.size());
    if (m > 63) throw std::length_error("rform: word too long");
    const RatFunc q = RatFunc::q();
    const RatFunc qdiff = q - q.inverse();
    State start = 0, finish = 0;
    for (int s = 0; s < m; ++s) {
        if (y[static_cast<size_t>(s)].first == 2) start |= State(1) << s;
        if (y[static_cast<size_t>(s)].second == 2) finish |= State(1) << s;
    }
    RowVector v{{start, RatFunc(1)}};
    for (auto [ip, jp] : x) {
        RowVector next;
        for (const auto& [mask, c] : v) {
            std::vector<std::tuple<int, State, RatFunc>> paths{{ip, mask, c}};
            for (int s = m - 1; s >= 0; --s) {
                std::vector<std::tuple<int, State, RatFunc>> np;
                for (auto& [h, st, w] : paths) {
                    const int vin = ((st >> s) & 1u) ? 2 : 1;
                    np.emplace_back(h, st, h == vin ? w * q : w);
                    if (h == 2 && vin == 1) np.emplace_back(1, st | (State(1) << s), w * qdiff);
                }
                paths = std::move(np);
            }
            for (auto& [h, st, w] : paths)
                if (h == jp) accumulate(next, st, w);
        }
        v = std::move(next);
        if (v.empty()) return {};
    }
    auto it = v.find(finish);
    return it == v.end() ? RatFunc() : it->second;
}

}  // namespace

RatFunc rform(const GenWord& x, const GenWord& y) {
    RatFunc num = rform_numerator(x, y);
    if (num.is_zero()) return num;
    return num * RatFunc::t_pow(-static_cast<int>(x.size() * y.size()));
}

RatFunc rform(const SL2Element& x, const SL2Element& y) {
    thread_local std::map<std::pair<PBWMono, PBWMono>, RatFunc> cache;
    RatFunc r;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            auto key = std::make_pair(mx, my);
            auto it = cache.find(key);
            if (it == cache.end())
                it = cache.emplace(key, rform(monomial_word(mx), monomial_word(my))).first;
            r += cx * cy * it->second;
        }
    return r;
}

}  // namespace qsphere
