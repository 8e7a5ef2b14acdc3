#include "qsphere/dualfunc.hpp"

#include <stdexcept>

namespace qsphere {

namespace {

RatFunc qhat() { return RatFunc::q() - RatFunc::q_pow(-1); }

void add_tensor(PsiTensor& t, const PsiSymbol& x, const PsiSymbol& y, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace({x, y}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

RatFunc alpha_of(const CParam& c) { return xc_data(c).alpha; }

}  // namespace

std::string PsiSymbol::to_string() const {
    std::string s = "psi";
    if (m != 0) s += "^{" + std::to_string(m) + "," + std::to_string(l) + "}";
    else s += "^" + std::to_string(l);
    return s + "_[" + lambda.to_string() + "]";
}

PsiVector PsiVector::symbol(const PsiSymbol& s, const RatFunc& coeff) {
    PsiVector v;
    v.add_term(s, coeff);
    return v;
}

PsiVector PsiVector::psi(int l, const RatFunc& lambda, const RatFunc& coeff) {
    return symbol({l, lambda, 0}, coeff);
}

void PsiVector::add_term(const PsiSymbol& s, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    if (s.lambda.is_zero()) throw std::invalid_argument("psi symbol with lambda = 0");
    auto [it, inserted] = terms_.try_emplace(s, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFunc PsiVector::coeff(const PsiSymbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? RatFunc() : it->second;
}

PsiVector PsiVector::operator-() const {
    PsiVector r = *this;
    for (auto& [s, c] : r.terms_) c = -c;
    return r;
}

PsiVector& PsiVector::operator+=(const PsiVector& o) {
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

PsiVector& PsiVector::operator-=(const PsiVector& o) {
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
}

PsiVector& PsiVector::operator*=(const RatFunc& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

std::string PsiVector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*" + s.to_string();
    }
    return out;
}

PsiVector apply_operator(PsiOp op, const PsiVector& v, const RatFunc& alpha) {
    const RatFunc q = RatFunc::q();
    const RatFunc q2 = RatFunc::q_pow(2);
    const RatFunc qh_inv = qhat().inverse();
    PsiVector out;
    for (const auto& [s, c] : v.terms()) {
        if (s.m != 0) throw std::invalid_argument("operators act only on symbols with m = 0");
        const int l = s.l;
        const RatFunc& lam = s.lambda;
        switch (op) {
            case PsiOp::Phi: {
                const RatFunc up = q2 * lam;
                const RatFunc q2l = RatFunc::q_pow(2 * l);
                if (l > 0) out.add_term({l - 1, up, 0}, -c * RatFunc::q_pow(l) * qint(l) * qh_inv);
                out.add_term({l, up, 0}, c * alpha * q * (q2l - lam));
                out.add_term({l + 1, up, 0}, c * q2 * (q2l - lam * lam));
                break;
            }
            case PsiOp::VarPhi:
                if (l > 0)
                    out.add_term({l - 1, q2.inverse() * lam, 0},
                                 c * lam.inverse() * RatFunc::q_pow(1 - l) * qint(l) * qh_inv);
                break;
            case PsiOp::Kappa:
                out.add_term(s, c * lam);
                break;
            case PsiOp::KappaInv:
                out.add_term(s, c * lam.inverse());
                break;
        }
    }
    return out;
}

PsiVector apply_operator(PsiOp op, const PsiVector& v, const CParam& c) {
    return apply_operator(op, v, op == PsiOp::Phi ? alpha_of(c) : RatFunc());
}

PsiVector xc_right_action(const PsiVector& v, const CParam& c) {
    const RatFunc alpha = alpha_of(c);
    PsiVector out;
    for (const auto& [s, k] : v.terms()) {
        PsiVector one = PsiVector::symbol(s, k);
        out += RatFunc::q_pow(-1) * apply_operator(PsiOp::Phi, one, alpha);
        out += s.lambda * apply_operator(PsiOp::VarPhi, one, alpha);
        out += alpha * (RatFunc(1) - s.lambda.inverse()) * apply_operator(PsiOp::Kappa, one, alpha);
    }
    return out;
}

PsiTensor psi_coproduct(const PsiSymbol& s) {
    if (s.m != 0) throw std::invalid_argument("psi_coproduct: symbols with m != 0 are not supported");
    PsiTensor t;
    for (int r = 0; r <= s.l; ++r)
        add_tensor(t, {r, s.lambda, 0}, {s.l - r, RatFunc::q_pow(-2 * r) * s.lambda, 0},
                   qbinom(s.l, r) * RatFunc::q_pow(-r * (s.l - r)));
    return t;
}

PsiTensor psi_coproduct(const PsiVector& v) {
    PsiTensor t;
    for (const auto& [s, c] : v.terms())
        for (const auto& [k, w] : psi_coproduct(s)) add_tensor(t, k.first, k.second, c * w);
    return t;
}

RatFunc psi_eval(const PsiSymbol& s, const PodlesMono& x, const PodlesAlgebra& alg) {
    return eval_functional(psi_word(s.lambda, s.m, s.l), alg.embed(x));
}

RatFunc psi_eval(const PsiSymbol& s, const PodlesElement& x, const PodlesAlgebra& alg) {
    RatFunc r;
    for (const auto& [m, c] : x.terms()) r += c * psi_eval(s, m, alg);
    return r;
}

RatFunc psi_eval(const PsiVector& v, const PodlesElement& x, const PodlesAlgebra& alg) {
    RatFunc r;
    for (const auto& [s, c] : v.terms()) r += c * psi_eval(s, x, alg);
    return r;
}

Matrix evaluation_matrix(const std::vector<PsiVector>& fs, int degree, const PodlesAlgebra& alg) {
    const std::vector<PodlesMono> mons = PodlesAlgebra::monomials(degree);
    std::map<PsiSymbol, std::vector<RatFunc>> rows;
    for (const auto& f : fs)
        for (const auto& [s, c] : f.terms()) {
            auto [it, inserted] = rows.try_emplace(s);
            if (!inserted) continue;
            it->second.reserve(mons.size());
            for (const auto& m : mons) it->second.push_back(psi_eval(s, m, alg));
        }
    Matrix mat(static_cast<int>(fs.size()), static_cast<int>(mons.size()));
    for (size_t i = 0; i < fs.size(); ++i)
        for (const auto& [s, c] : fs[i].terms()) {
            const auto& row = rows.at(s);
            for (size_t j = 0; j < mons.size(); ++j)
                if (!row[j].is_zero())
                    mat(static_cast<int>(i), static_cast<int>(j)) += c * row[j];
        }
    return mat;
}

namespace {

struct SymbolMatrix {
    Matrix m;
    std::map<PsiSymbol, int> index;
};

SymbolMatrix symbol_matrix(const std::vector<PsiVector>& vs, const PsiVector* extra) {
    SymbolMatrix out;
    for (const auto& v : vs)
        for (const auto& [s, c] : v.terms()) out.index.try_emplace(s, 0);
    if (extra)
        for (const auto& [s, c] : extra->terms()) out.index.try_emplace(s, 0);
    int i = 0;
    for (auto& [s, k] : out.index) k = i++;
    out.m = Matrix(static_cast<int>(out.index.size()), static_cast<int>(vs.size()));
    for (size_t j = 0; j < vs.size(); ++j)
        for (const auto& [s, c] : vs[j].terms()) out.m(out.index.at(s), static_cast<int>(j)) = c;
    return out;
}

}  // namespace

int psi_rank(const std::vector<PsiVector>& vs) { return rank(symbol_matrix(vs, nullptr).m); }

std::optional<std::vector<RatFunc>> psi_coordinates(const std::vector<PsiVector>& basis,
                                                    const PsiVector& v) {
    SymbolMatrix sm = symbol_matrix(basis, &v);
    std::vector<RatFunc> rhs(sm.index.size());
    for (const auto& [s, c] : v.terms()) rhs[static_cast<size_t>(sm.index.at(s))] = c;
    return solve(sm.m, rhs);
}

RatFunc highest_weight_lambda(Sign sign, int l) {
    return RatFunc(sign_value(sign)) * RatFunc::q_pow(-l);
}

Matrix phi_block_matrix(int l, const CParam& c, Sign sign) {
    const RatFunc alpha = alpha_of(c);
    const RatFunc mu = RatFunc(sign_value(sign)) * RatFunc::q_pow(l);
    const RatFunc up = RatFunc::q_pow(2) * mu;
    std::vector<RatFunc> scale;
    for (int k = 0; k <= l; ++k) {
        const int e = (l - k) * (l - k + 1) / 2;
        scale.push_back((-qhat()).pow(k) * RatFunc::q_pow(-e));
    }
    Matrix m(l + 1, l + 1);
    for (int j = 0; j <= l; ++j) {
        PsiVector img = apply_operator(PsiOp::Phi, PsiVector::psi(j, mu), alpha);
        for (const auto& [s, v] : img.terms()) {
            if (s.lambda != up || s.l > l)
                throw std::logic_error("phi block does not close on psi^k_mu, k <= l");
            m(s.l, j) = scale[static_cast<size_t>(j)] * v / scale[static_cast<size_t>(s.l)];
        }
    }
    return m;
}

std::vector<std::pair<Sign, int>> JcScan::members() const {
    std::vector<std::pair<Sign, int>> out;
    for (const auto& e : entries)
        if (e.member()) out.emplace_back(e.sign, e.l);
    return out;
}

JcScan scan_Jc(const CParam& c, int lmax) {
    const RatFunc alpha = alpha_of(c);
    JcScan scan;
    scan.lmax = lmax;
    for (Sign sign : {Sign::Plus, Sign::Minus})
        for (int l = 0; l <= lmax; ++l) {
            JcEntry e;
            e.sign = sign;
            e.l = l;
            PsiVector v = PsiVector::psi(0, highest_weight_lambda(sign, l));
            for (int k = 0; k <= l && !v.is_zero(); ++k) v = apply_operator(PsiOp::Phi, v, alpha);
            e.nilpotent = v.is_zero();
            e.kernel = kernel_dim(l, c, sign);
            if (e.nilpotent != (e.kernel > 0))
                throw std::runtime_error("scan_Jc: nilpotency and kernel routes disagree at sign " +
                                         std::string(sign_name(sign)) + " l=" + std::to_string(l));
            scan.entries.push_back(e);
        }
    return scan;
}

HWModule build_module(Sign sign, int l, const CParam& c) {
    const RatFunc alpha = alpha_of(c);
    HWModule mod;
    mod.sign = sign;
    mod.l = l;
    mod.lambda0 = highest_weight_lambda(sign, l);
    PsiVector v = PsiVector::psi(0, mod.lambda0);
    for (int k = 0; k <= l; ++k) {
        mod.basis.push_back(v);
        v = apply_operator(PsiOp::Phi, v, alpha);
    }
    if (!v.is_zero())
        throw std::invalid_argument("build_module: (" + std::string(sign_name(sign)) + "," +
                                    std::to_string(l) + ") is not a highest weight of the sphere");
    const int n = l + 1;
    mod.E = Matrix(n, n);
    mod.F = Matrix(n, n);
    mod.K = Matrix(n, n);
    mod.K_inv = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        if (k + 1 < n) mod.E(k + 1, k) = RatFunc(1);
        const RatFunc w = mod.lambda0 * RatFunc::q_pow(2 * k);
        mod.K(k, k) = w;
        mod.K_inv(k, k) = w.inverse();
        auto coords = psi_coordinates(mod.basis,
                                      apply_operator(PsiOp::VarPhi, mod.basis[static_cast<size_t>(k)], alpha));
        if (!coords) throw std::logic_error("build_module: varphi leaves the orbit span");
        for (int i = 0; i < n; ++i) mod.F(i, k) = (*coords)[static_cast<size_t>(i)];
    }
    return mod;
}

PsiIndependenceReport psi_independence(const PodlesAlgebra& alg, int max_ml,
                                       const std::vector<RatFunc>& lambdas, int degree) {
    std::vector<PsiVector> fs;
    for (const auto& lam : lambdas)
        for (int m = 0; m <= max_ml; ++m)
            for (int l = 0; m + l <= max_ml; ++l) fs.push_back(PsiVector::symbol({l, lam, m}));
    PsiIndependenceReport r;
    r.functionals = static_cast<int>(fs.size());
    r.degree = degree;
    r.monomials = static_cast<int>(PodlesAlgebra::monomials(degree).size());
    r.rank = rank(evaluation_matrix(fs, degree, alg));
    return r;
}

}  // namespace qsphere
