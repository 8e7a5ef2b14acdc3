#include "qsphere/podles.hpp"

#include "qsphere/expr_parser.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace qsphere {

// ---------------------------------------------------------------- PodlesElement

PodlesElement::PodlesElement(const RatFunc& scalar) {
    if (!scalar.is_zero()) terms_.emplace(PodlesMono{}, scalar);
}

PodlesElement PodlesElement::monomial(const PodlesMono& m, const RatFunc& coeff) {
    PodlesElement x;
    x.add_term(m, coeff);
    return x;
}

void PodlesElement::add_term(const PodlesMono& m, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFunc PodlesElement::coeff(const PodlesMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFunc() : it->second;
}

PodlesElement PodlesElement::operator-() const {
    PodlesElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

PodlesElement& PodlesElement::operator+=(const PodlesElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PodlesElement& PodlesElement::operator-=(const PodlesElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

PodlesElement& PodlesElement::operator*=(const RatFunc& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

std::string PodlesElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [m, c] : terms_) {
        std::ostringstream mono;
        if (m.a > 0) mono << "A" << (m.a > 1 ? "^" + std::to_string(m.a) : "");
        if (m.m != 0) {
            if (m.a > 0) mono << "*";
            const int k = m.m < 0 ? -m.m : m.m;
            mono << (m.m < 0 ? "em1" : "e1") << (k > 1 ? "^" + std::to_string(k) : "");
        }
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
        if (!first_term)
            os << (neg ? " - " : " + ");
        else if (neg)
            os << "-";
        first_term = false;
        os << cs << ms;
    }
    return os.str();
}

// ---------------------------------------------------------------- PodlesAlgebra

PodlesAlgebra::PodlesAlgebra(CParam c) : c_(std::move(c)) {}

PodlesElement PodlesAlgebra::e0() const {
    const RatFunc f = -(RatFunc::q_pow(2) + RatFunc(1));
    PodlesElement r = A() * f;
    if (!c_.is_infinity()) r += PodlesElement(RatFunc(1));
    return r;
}

PodlesElement PodlesAlgebra::e(int i) const {
    switch (i) {
        case -1:
            return em1();
        case 0:
            return e0();
        case 1:
            return e1();
        default:
            throw std::out_of_range("e_i: index must be -1, 0 or 1");
    }
}

PodlesElement PodlesAlgebra::relation_poly(bool em1_first, int shift) const {
    // P(x) with x = q^shift A; em1 e1 = P(A), e1 em1 = P2(A).
    const RatFunc x = RatFunc::q_pow(shift);
    PodlesElement r;
    if (c_.is_infinity()) {
        r += PodlesElement(RatFunc(1));
        RatFunc k = em1_first ? RatFunc(-1) : -RatFunc::q_pow(4);
        r.add_term({2, 0}, k * x * x);
        return r;
    }
    r += PodlesElement(c_.c());
    if (em1_first) {
        r.add_term({1, 0}, x);
        r.add_term({2, 0}, -(x * x));
    } else {
        r.add_term({1, 0}, RatFunc::q_pow(2) * x);
        r.add_term({2, 0}, -RatFunc::q_pow(4) * x * x);
    }
    return r;
}

const PodlesElement& PodlesAlgebra::ee(int m1, int m2) const {
    auto key = std::make_pair(m1, m2);
    auto it = ee_cache_.find(key);
    if (it != ee_cache_.end()) return it->second;
    PodlesElement r;
    if (m1 == 0 || m2 == 0 || (m1 < 0) == (m2 < 0)) {
        r = PodlesElement::monomial({0, m1 + m2});
    } else {
        PodlesElement poly;
        PodlesElement rest;
        if (m1 < 0) {
            // em1^j e1 = P(q^{-2(j-1)} A) em1^{j-1}
            poly = relation_poly(true, -2 * (-m1 - 1));
            rest = ee(m1 + 1, m2 - 1);
        } else {
            // e1^k em1 = P2(q^{2(k-1)} A) e1^{k-1}
            poly = relation_poly(false, 2 * (m1 - 1));
            rest = ee(m1 - 1, m2 + 1);
        }
        for (const auto& [pm, pc] : poly.terms())
            for (const auto& [rm, rc] : rest.terms()) r.add_term({pm.a + rm.a, rm.m}, pc * rc);
    }
    return ee_cache_.emplace(key, std::move(r)).first->second;
}

PodlesElement PodlesAlgebra::multiply(const PodlesMono& x, const PodlesMono& y) const {
    // e^m A^a = q^{2ma} A^a e^m
    const RatFunc factor = RatFunc::q_pow(2 * x.m * y.a);
    PodlesElement r;
    for (const auto& [m, c] : ee(x.m, y.m).terms()) r.add_term({x.a + y.a + m.a, m.m}, factor * c);
    return r;
}

PodlesElement PodlesAlgebra::multiply(const PodlesElement& x, const PodlesElement& y) const {
    PodlesElement r;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            RatFunc c = cx * cy;
            for (const auto& [m, k] : multiply(mx, my).terms()) r.add_term(m, c * k);
        }
    return r;
}

PodlesElement PodlesAlgebra::pow(const PodlesElement& x, int e) const {
    if (e < 0) throw std::invalid_argument("PodlesAlgebra::pow: negative exponent");
    PodlesElement r(RatFunc(1));
    for (int i = 0; i < e; ++i) r = multiply(r, x);
    return r;
}

namespace {

struct PodlesOps {
    const PodlesAlgebra* alg;
    PodlesElement one(const RatFunc& s) const { return PodlesElement(s); }
    std::optional<PodlesElement> generator(std::string_view name) const {
        if (name == "A") return alg->A();
        if (name == "em1") return alg->em1();
        if (name == "e0") return alg->e0();
        if (name == "e1") return alg->e1();
        return std::nullopt;
    }
    PodlesElement mul(const PodlesElement& x, const PodlesElement& y) const { return alg->multiply(x, y); }
    std::optional<RatFunc> as_scalar(const PodlesElement& x) const {
        if (x.is_zero()) return RatFunc();
        if (x.terms().size() == 1 && x.terms().begin()->first == PodlesMono{})
            return x.terms().begin()->second;
        return std::nullopt;
    }
};

}  // namespace

PodlesElement PodlesAlgebra::parse(std::string_view text) const {
    return parse_expression<PodlesElement>(text, PodlesOps{this});
}

PodlesElement PodlesAlgebra::reduce_word(const std::vector<int>& word, RewriteOrder order) const {
    for (int x : word)
        if (x < -1 || x > 1) throw std::invalid_argument("reduce_word: letters must be -1, 0, 1");
    auto reducible = [](int x, int y) { return (x != 0 && y == 0) || (x == -y && x != 0); };
    std::map<std::vector<int>, RatFunc> pending{{word, RatFunc(1)}};
    PodlesElement result;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::vector<int>& w = node.key();
        const RatFunc coeff = node.mapped();
        const int n = static_cast<int>(w.size());
        int pos = -1;
        for (int k = 0; k + 1 < n; ++k) {
            int p = order == RewriteOrder::Leftmost ? k : n - 2 - k;
            if (reducible(w[static_cast<size_t>(p)], w[static_cast<size_t>(p) + 1])) {
                pos = p;
                break;
            }
        }
        if (pos < 0) {
            PodlesMono m;
            for (int x : w) (x == 0 ? m.a : m.m) += (x == 0 ? 1 : x);
            result.add_term(m, coeff);
            continue;
        }
        const int x = w[static_cast<size_t>(pos)], y = w[static_cast<size_t>(pos) + 1];
        std::vector<std::pair<RatFunc, std::vector<int>>> rhs;
        if (y == 0) {
            rhs.push_back({RatFunc::q_pow(2 * x), {0, x}});
        } else {
            for (const auto& [m, c] : relation_poly(x < 0, 0).terms())
                rhs.push_back({c, std::vector<int>(static_cast<size_t>(m.a), 0)});
        }
        for (auto& [c, rep] : rhs) {
            std::vector<int> nw(w.begin(), w.begin() + pos);
            nw.insert(nw.end(), rep.begin(), rep.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            pending[nw] += coeff * c;
        }
    }
    return result;
}

std::vector<PodlesMono> PodlesAlgebra::monomials(int degree) {
    std::set<PodlesMono> s;
    for (int a = 0; a <= degree; ++a)
        for (int m = -(degree - a); m <= degree - a; ++m) s.insert({a, m});
    return {s.begin(), s.end()};
}

std::vector<RatFunc> PodlesAlgebra::counit_values() const {
    switch (c_.kind()) {
        case CParam::Kind::Infinity:
            return {RatFunc(1), RatFunc(), RatFunc(1)};
        case CParam::Kind::Zero:
            return {RatFunc(1), RatFunc(1), RatFunc()};
        case CParam::Kind::Generic:
            break;
    }
    return {c_.s(), RatFunc(1), c_.s()};
}

RatFunc PodlesAlgebra::counit(const PodlesElement& x) const {
    const std::vector<RatFunc> eps = counit_values();
    RatFunc r;
    for (const auto& [m, c] : x.terms()) {
        if (m.a > 0) continue;  // eps(A) = 0
        const RatFunc& base = m.m < 0 ? eps[0] : eps[2];
        r += c * base.pow(m.m < 0 ? -m.m : m.m);
    }
    return r;
}

SL2Element PodlesAlgebra::embed(const PodlesMono& m) const {
    auto it = embed_cache_.find(m);
    if (it != embed_cache_.end()) return it->second;
    SL2Element r;
    if (m.a == 0 && m.m == 0) {
        r = SL2Element(RatFunc(1));
    } else if (m.a > 0) {
        // A^a e^m = A * (A^{a-1} e^m)
        SL2Element gen_a;
        {
            const std::vector<RatFunc> eps = counit_values();
            SL2Element e0;
            for (int j = -1; j <= 1; ++j) e0 += pi_coeff(j, 0) * eps[static_cast<size_t>(j + 1)];
            RatFunc inv = (RatFunc::q_pow(2) + RatFunc(1)).inverse();
            gen_a = c_.is_infinity() ? e0 * -inv : (SL2Element(RatFunc(1)) - e0) * inv;
        }
        r = gen_a * embed(PodlesMono{m.a - 1, m.m});
    } else {
        const int i = m.m < 0 ? -1 : 1;
        const std::vector<RatFunc> eps = counit_values();
        SL2Element gen;
        for (int j = -1; j <= 1; ++j) gen += pi_coeff(j, i) * eps[static_cast<size_t>(j + 1)];
        r = gen * embed(PodlesMono{0, m.m - i});
    }
    return embed_cache_.emplace(m, r).first->second;
}

SL2Element PodlesAlgebra::embed(const PodlesElement& x) const {
    SL2Element r;
    for (const auto& [m, c] : x.terms()) r += embed(m) * c;
    return r;
}

namespace {

void add_to(PodlesCoaction& t, const PodlesMono& x, const PBWMono& y, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace({x, y}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

}  // namespace

const PodlesCoaction& PodlesAlgebra::coaction(const PodlesMono& m) const {
    auto it = coaction_cache_.find(m);
    if (it != coaction_cache_.end()) return it->second;
    PodlesCoaction r;
    if (m.a == 0 && m.m == 0) {
        add_to(r, PodlesMono{}, PBWMono{}, RatFunc(1));
    } else {
        // Split off the first letter: A, em1 or e1.
        PodlesMono first = m.a > 0 ? PodlesMono{1, 0} : PodlesMono{0, m.m < 0 ? -1 : 1};
        PodlesMono rest = m.a > 0 ? PodlesMono{m.a - 1, m.m} : PodlesMono{0, m.m - first.m};
        PodlesCoaction head;
        auto gen_coaction = [&](int i) {
            PodlesCoaction g;
            for (int j = -1; j <= 1; ++j) {
                SL2Element p = pi_coeff(j, i);
                for (const auto& [em, ec] : e(j).terms())
                    for (const auto& [pm, pc] : p.terms()) add_to(g, em, pm, ec * pc);
            }
            return g;
        };
        if (first.a == 1) {
            // A = (1 - e0)/(1 + q^2), or -e0/(1 + q^2) for c = infinity.
            RatFunc inv = (RatFunc::q_pow(2) + RatFunc(1)).inverse();
            for (const auto& [k, c] : gen_coaction(0)) add_to(head, k.first, k.second, -c * inv);
            if (!c_.is_infinity()) add_to(head, PodlesMono{}, PBWMono{}, inv);
        } else {
            head = gen_coaction(first.m);
        }
        const PodlesCoaction& tail = coaction(rest);
        for (const auto& [hk, hc] : head)
            for (const auto& [tk, tc] : tail) {
                PodlesElement left = multiply(hk.first, tk.first);
                SL2Element right = multiply_monomials(hk.second, tk.second);
                RatFunc c = hc * tc;
                for (const auto& [lm, lc] : left.terms())
                    for (const auto& [rm, rc] : right.terms()) add_to(r, lm, rm, c * lc * rc);
            }
    }
    return coaction_cache_.emplace(m, std::move(r)).first->second;
}

PodlesCoaction PodlesAlgebra::coaction(const PodlesElement& x) const {
    PodlesCoaction r;
    for (const auto& [m, c] : x.terms())
        for (const auto& [k, v] : coaction(m)) add_to(r, k.first, k.second, c * v);
    return r;
}

PodlesElement PodlesAlgebra::act(const FunctionalWord& w, const PodlesElement& x) const {
    PodlesElement r;
    for (const auto& [k, c] : coaction(x)) {
        RatFunc v = eval_functional(w, monomial_word(k.second));
        if (!v.is_zero()) r.add_term(k.first, c * v);
    }
    return r;
}

// ---------------------------------------------------------------- certificates

IndependenceReport basis_independence(const PodlesAlgebra& alg, int degree) {
    IndependenceReport rep;
    rep.degree = degree;
    std::vector<PodlesMono> mons = PodlesAlgebra::monomials(degree);
    std::vector<SL2Element> images;
    std::map<PBWMono, int> columns;
    for (const auto& m : mons) {
        images.push_back(alg.embed(m));
        for (const auto& [pm, pc] : images.back().terms()) columns.try_emplace(pm, 0);
    }
    int idx = 0;
    for (auto& [pm, col] : columns) col = idx++;
    Matrix mat(static_cast<int>(mons.size()), static_cast<int>(columns.size()));
    for (size_t i = 0; i < images.size(); ++i)
        for (const auto& [pm, pc] : images[i].terms()) mat(static_cast<int>(i), columns[pm]) = pc;
    rep.monomials = static_cast<int>(mons.size());
    rep.rank = rank(mat);
    return rep;
}

namespace {

RelationResidual make_residual(std::string name, const SL2Element& r) {
    return {std::move(name), r.to_string(), r.is_zero()};
}

RelationResidual make_residual(std::string name, const Matrix& r) {
    std::string text = "0";
    if (!r.is_zero()) {
        std::ostringstream os;
        for (int i = 0; i < r.rows(); ++i)
            for (int j = 0; j < r.cols(); ++j)
                if (!r(i, j).is_zero()) os << "(" << i << "," << j << "): " << r(i, j) << "; ";
        text = os.str();
    }
    return {std::move(name), text, r.is_zero()};
}

}  // namespace

std::vector<RelationResidual> embedded_relation_residuals(const PodlesAlgebra& alg) {
    const SL2Element em1 = alg.embed(alg.em1()), e1 = alg.embed(alg.e1()), A = alg.embed(alg.A());
    const RatFunc q2 = RatFunc::q_pow(2), q4 = RatFunc::q_pow(4);
    const bool inf = alg.param().is_infinity();
    const SL2Element one(RatFunc(1));
    SL2Element rhs1 = inf ? one - A * A : A - A * A + SL2Element(alg.param().c());
    SL2Element rhs2 = inf ? one - A * A * q4 : A * q2 - A * A * q4 + SL2Element(alg.param().c());
    return {
        make_residual("em1*e1", em1 * e1 - rhs1),
        make_residual("e1*em1", e1 * em1 - rhs2),
        make_residual("e1*A", e1 * A - A * e1 * q2),
        make_residual("em1*A", em1 * A - A * em1 * RatFunc::q_pow(-2)),
    };
}

MuRep build_mu_n(int n) {
    if (n < 1) throw std::invalid_argument("build_mu_n: n must be positive");
    MuRep rep;
    rep.n = n;
    rep.A = Matrix(n, n);
    rep.em1 = Matrix(n, n);
    rep.e1 = Matrix(n, n);
    const RatFunc c = cn_value(2 * n);
    const RatFunc norm = (RatFunc::q_pow(n) + RatFunc::q_pow(-n)).inverse();
    std::vector<RatFunc> a(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        a[static_cast<size_t>(k - 1)] = RatFunc::q_pow(n - 2 * k) * norm;
        rep.A(k - 1, k - 1) = a[static_cast<size_t>(k - 1)];
    }
    // e1 v_k = v_{k+1}; em1 v_{k+1} = (a_k - a_k^2 + c) v_k.
    for (int k = 1; k < n; ++k) {
        const RatFunc& ak = a[static_cast<size_t>(k - 1)];
        rep.e1(k, k - 1) = RatFunc(1);
        rep.em1(k - 1, k) = ak - ak * ak + c;
    }
    return rep;
}

std::vector<RelationResidual> mu_relation_residuals(const MuRep& rep) {
    const RatFunc c = cn_value(2 * rep.n);
    const Matrix I = Matrix::identity(rep.n);
    const RatFunc q2 = RatFunc::q_pow(2), q4 = RatFunc::q_pow(4);
    const Matrix& A = rep.A;
    return {
        make_residual("em1*e1", rep.em1 * rep.e1 - (A - A * A + I * c)),
        make_residual("e1*em1", rep.e1 * rep.em1 - (A * q2 - (A * A) * q4 + I * c)),
        make_residual("e1*A", rep.e1 * A - (A * rep.e1) * q2),
        make_residual("em1*A", rep.em1 * A - (A * rep.em1) * RatFunc::q_pow(-2)),
    };
}

// ---------------------------------------------------------------- Borel algebra

BorelOpElement::BorelOpElement(const RatFunc& scalar) { add_term(0, 0, scalar); }

BorelOpElement BorelOpElement::F() {
    BorelOpElement x;
    x.add_term(1, 0, RatFunc(1));
    return x;
}

BorelOpElement BorelOpElement::K(int power) {
    BorelOpElement x;
    x.add_term(0, power, RatFunc(1));
    return x;
}

void BorelOpElement::add_term(int a, int b, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BorelOpElement& BorelOpElement::operator+=(const BorelOpElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

BorelOpElement& BorelOpElement::operator-=(const BorelOpElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BorelOpElement operator*(const BorelOpElement& x, const BorelOpElement& y) {
    // (F^a K^b) * (F^c K^d) = q^{2bc} F^{a+c} K^{b+d}
    BorelOpElement r;
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_)
            r.add_term(kx.first + ky.first, kx.second + ky.second,
                       cx * cy * RatFunc::q_pow(2 * kx.second * ky.first));
    return r;
}

BorelOpElement operator*(BorelOpElement x, const RatFunc& s) {
    BorelOpElement r;
    for (const auto& [k, c] : x.terms_) r.add_term(k.first, k.second, c * s);
    return r;
}

RatFunc BorelOpElement::counit() const {
    RatFunc r;
    for (const auto& [k, c] : terms_)
        if (k.first == 0) r += c;
    return r;
}

std::string BorelOpElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (k.first) os << "*F^" << k.first;
        if (k.second) os << "*K^" << k.second;
    }
    return os.str();
}

bool PodbmReport::ok() const {
    if (!counit_ok) return false;
    for (const auto& r : relations)
        if (!r.zero) return false;
    return true;
}

PodbmReport verify_podbm(const CParam& c) {
    if (!c.is_generic()) throw std::invalid_argument("verify_podbm: requires c != 0, infinity");
    const RatFunc s = c.s();
    const RatFunc q = RatFunc::q(), qi = q.inverse(), qhat = q - qi;
    using B = BorelOpElement;
    const B F = B::F(), K = B::K(), one(RatFunc(1));
    const B em1 = B::K(-1) * s;
    const B e0 = F * (s * (q.pow(3) - qi)) + one;
    const B e1 = K * F * F * (-s * qhat * qhat) - K * F * qhat + K * s;
    const B A = (one - e0) * (RatFunc::q_pow(2) + RatFunc(1)).inverse();

    PodbmReport rep;
    rep.counit_images = {em1.counit(), e0.counit(), e1.counit()};
    rep.counit_ok = rep.counit_images == std::vector<RatFunc>{s, RatFunc(1), s};
    auto residual = [](std::string name, const B& r) {
        return RelationResidual{std::move(name), r.to_string(), r.is_zero()};
    };
    const B cc(c.c());
    rep.relations = {
        residual("em1*e1", em1 * e1 - (A - A * A + cc)),
        residual("e1*em1", e1 * em1 - (A * RatFunc::q_pow(2) - A * A * RatFunc::q_pow(4) + cc)),
        residual("e1*A", e1 * A - A * e1 * RatFunc::q_pow(2)),
        residual("em1*A", em1 * A - A * em1 * RatFunc::q_pow(-2)),
    };
    return rep;
}

}  // namespace qsphere
