#include "qsphere/fodc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qsphere {

std::string component_name(const Component& c) {
    return std::string("(") + sign_name(c.first) + "," + std::to_string(c.second) + ")";
}

// ---------------------------------------------------------------- tangent spaces

namespace {

bool in_span(const std::vector<PsiVector>& basis, const PsiVector& v) {
    return v.is_zero() || psi_coordinates(basis, v).has_value();
}

// Second legs of Delta v grouped by the first-leg symbol.
std::vector<PsiVector> second_legs(const PsiVector& v) {
    std::map<PsiSymbol, PsiVector> legs;
    for (const auto& [k, c] : psi_coproduct(v)) legs[k.first].add_term(k.second, c);
    std::vector<PsiVector> out;
    for (auto& [s, w] : legs)
        if (!w.is_zero()) out.push_back(std::move(w));
    return out;
}

void require_classifiable(const CParam& c) {
    if (c.is_zero()) throw std::invalid_argument("c = 0 is outside the classification");
    AdmissibilityReport r = check_admissible(c);
    if (!r.admissible())
        throw std::invalid_argument("c = c(n) with n2 = " + std::to_string(*r.witness_n2) +
                                    " is excluded from the classification");
}

}  // namespace

bool TangentSpace::certified() const {
    return std::all_of(checks.begin(), checks.end(), [](const ClosureCheck& c) { return c.holds; });
}

std::vector<PsiVector> TangentSpace::tangent_basis(const PodlesAlgebra& alg) const {
    std::vector<PsiVector> out;
    const PodlesElement one(RatFunc(1));
    for (size_t i = 1; i < basis.size(); ++i)
        out.push_back(basis[i] - psi_eval(basis[i], one, alg) * PsiVector::counit());
    return out;
}

TangentSpace tangent_space(const CParam& c, const std::vector<Component>& components) {
    if (c.is_zero()) throw std::invalid_argument("tangent_space: c = 0 is not supported");
    TangentSpace t;
    t.c = c;
    t.components = components;
    std::sort(t.components.begin(), t.components.end());
    if (std::adjacent_find(t.components.begin(), t.components.end()) != t.components.end())
        throw std::invalid_argument("tangent_space: repeated component");
    t.basis.push_back(PsiVector::counit());
    for (const auto& comp : t.components) {
        if (comp == Component{Sign::Plus, 0}) continue;
        HWModule m = build_module(comp.first, comp.second, c);
        t.basis.insert(t.basis.end(), m.basis.begin(), m.basis.end());
    }

    const bool independent = psi_rank(t.basis) == t.dim_T_eps();
    t.checks.push_back({"basis independent", independent, ""});
    t.checks.push_back({"eps in T^eps", in_span(t.basis, PsiVector::counit()), ""});

    ClosureCheck delta{"Delta T^eps in B° (x) T^eps", true, ""};
    ClosureCheck xc{"T^eps X_c in T^eps", true, ""};
    for (const auto& v : t.basis) {
        for (const auto& w : second_legs(v))
            if (delta.holds && !in_span(t.basis, w)) {
                delta.holds = false;
                delta.detail = "second leg " + w.to_string() + " of " + v.to_string();
            }
        PsiVector img = xc_right_action(v, c);
        if (xc.holds && !in_span(t.basis, img)) {
            xc.holds = false;
            xc.detail = v.to_string() + " X_c = " + img.to_string();
        }
    }
    t.checks.push_back(std::move(delta));
    t.checks.push_back(std::move(xc));
    return t;
}

std::vector<PsiVector> generated_subspace(const CParam& c, const std::vector<PsiVector>& seeds) {
    constexpr size_t kMaxDim = 64;
    // Echelon rows with coefficient 1 at their pivot; each row is reduced against the earlier ones.
    std::vector<std::pair<PsiSymbol, PsiVector>> rows;
    auto reduce = [&](PsiVector v) {
        for (const auto& [p, row] : rows) {
            const RatFunc k = v.coeff(p);
            if (!k.is_zero()) v -= k * row;
        }
        return v;
    };
    std::vector<PsiVector> basis{PsiVector::counit()};
    rows.emplace_back(PsiVector::counit().terms().begin()->first, PsiVector::counit());
    std::vector<PsiVector> queue = seeds;
    while (!queue.empty()) {
        PsiVector v = std::move(queue.back());
        queue.pop_back();
        PsiVector r = reduce(v);
        if (r.is_zero()) continue;
        const PsiSymbol pivot = r.terms().begin()->first;
        r *= r.coeff(pivot).inverse();
        // r and v differ by earlier basis vectors, so their images generate the same span.
        for (auto& w : second_legs(r)) queue.push_back(std::move(w));
        queue.push_back(xc_right_action(r, c));
        rows.emplace_back(pivot, std::move(r));
        basis.push_back(std::move(v));
        if (basis.size() > kMaxDim) throw std::runtime_error("generated_subspace: dimension bound exceeded");
    }
    return basis;
}

bool is_irreducible(const TangentSpace& t) {
    if (t.basis.size() <= 1) return true;
    std::set<RatFunc> weights;
    for (size_t i = 1; i < t.basis.size(); ++i) {
        const auto& terms = t.basis[i].terms();
        const RatFunc& lambda = terms.begin()->first.lambda;
        if (!std::all_of(terms.begin(), terms.end(), [&](const auto& e) { return e.first.lambda == lambda; }))
            return false;
        if (!weights.insert(lambda).second) return false;
    }
    for (size_t i = 1; i < t.basis.size(); ++i)
        if (static_cast<int>(generated_subspace(t.c, {t.basis[i]}).size()) != t.dim_T_eps()) return false;
    return true;
}

Matrix pairing_matrix(const TangentSpace& t, const std::vector<PodlesElement>& w,
                      const PodlesAlgebra& alg) {
    const std::vector<PsiVector> tb = t.tangent_basis(alg);
    Matrix m(static_cast<int>(tb.size()), static_cast<int>(w.size()));
    for (size_t k = 0; k < tb.size(); ++k)
        for (size_t j = 0; j < w.size(); ++j)
            m(static_cast<int>(k), static_cast<int>(j)) = psi_eval(tb[k], w[j], alg);
    return m;
}

DeClassification classify_de_generated(const CParam& c, int lmax) {
    require_classifiable(c);
    constexpr int kGenerators = 3;
    DeClassification out;
    out.c = c;
    out.lmax = lmax;
    for (const auto& comp : scan_Jc(c, lmax).members())
        if (comp != Component{Sign::Plus, 0} && comp.second + 1 <= kGenerators)
            out.candidates.push_back(comp);

    PodlesAlgebra alg(c);
    const std::vector<PodlesElement> w{alg.e(-1), alg.e(0), alg.e(1)};
    const size_t n = out.candidates.size();
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        std::vector<Component> comps;
        int dim = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) {
                comps.push_back(out.candidates[i]);
                dim += out.candidates[i].second + 1;
            }
        if (dim > kGenerators) continue;
        TangentSpace t = tangent_space(c, comps);
        if (!t.certified()) throw std::logic_error("classify_de_generated: tangent space not closed");
        DeGeneratedCalculus calc;
        calc.components = t.components;
        calc.dim = t.dim();
        calc.pairing_rank = rank(pairing_matrix(t, w, alg));
        out.tested.push_back(calc);
        if (calc.generated()) out.calculi.push_back(calc);
    }
    return out;
}

// ---------------------------------------------------------------- V(n)

std::vector<PodlesElement> submodule_Vn(int n, const PodlesAlgebra& alg) {
    if (n < 1) throw std::invalid_argument("submodule_Vn: n must be positive");
    if (alg.param().is_zero()) throw std::invalid_argument("submodule_Vn: c = 0 is not supported");
    const FunctionalWord e{FunctionalLetter::e()};
    std::vector<PodlesElement> out{alg.pow(alg.e1(), n)};
    for (int k = 0; k < 2 * n; ++k) out.push_back(alg.act(e, out.back()));
    return out;
}

namespace {

struct PodlesMatrix {
    Matrix m;
    std::map<PodlesMono, int> index;
};

PodlesMatrix podles_matrix(const std::vector<PodlesElement>& xs, const PodlesElement* extra) {
    PodlesMatrix out;
    for (const auto& x : xs)
        for (const auto& [m, c] : x.terms()) out.index.try_emplace(m, 0);
    if (extra)
        for (const auto& [m, c] : extra->terms()) out.index.try_emplace(m, 0);
    int i = 0;
    for (auto& [m, k] : out.index) k = i++;
    out.m = Matrix(static_cast<int>(out.index.size()), static_cast<int>(xs.size()));
    for (size_t j = 0; j < xs.size(); ++j)
        for (const auto& [m, c] : xs[j].terms()) out.m(out.index.at(m), static_cast<int>(j)) = c;
    return out;
}

}  // namespace

std::optional<std::vector<RatFunc>> podles_coordinates(const std::vector<PodlesElement>& basis,
                                                       const PodlesElement& x) {
    PodlesMatrix pm = podles_matrix(basis, &x);
    std::vector<RatFunc> rhs(pm.index.size());
    for (const auto& [m, c] : x.terms()) rhs[static_cast<size_t>(pm.index.at(m))] = c;
    return solve(pm.m, rhs);
}

int podles_rank(const std::vector<PodlesElement>& xs) { return rank(podles_matrix(xs, nullptr).m); }

PodlesElement apply_nu(NuKind nu, const PodlesElement& x, const PodlesAlgebra& alg) {
    if (nu == NuKind::Identity) return x;
    if (!alg.param().is_infinity())
        throw std::invalid_argument("the sign flip e_i -> -e_i is an algebra map only for c = infinity");
    PodlesElement out;
    for (const auto& [m, c] : x.terms()) out.add_term(m, (m.degree() % 2 == 0) ? c : -c);
    return out;
}

// ---------------------------------------------------------------- Hermisson construction

HermissonCalculus::HermissonCalculus(int n, NuKind nu, const CParam& c) : n_(n), nu_(nu), alg_(c) {
    if (c.is_zero()) throw std::invalid_argument("HermissonCalculus: c = 0 is not supported");
    if (nu == NuKind::SignFlip && !c.is_infinity())
        throw std::invalid_argument("the sign flip e_i -> -e_i is an algebra map only for c = infinity");
    basis_ = submodule_Vn(n, alg_);
    const size_t N = basis_.size();
    corep_.assign(N, std::vector<SL2Element>(N));
    for (size_t i = 0; i < N; ++i) {
        std::map<PBWMono, PodlesElement> legs;
        for (const auto& [k, v] : alg_.coaction(basis_[i])) legs[k.second].add_term(k.first, v);
        for (const auto& [y, x] : legs) {
            auto coords = podles_coordinates(basis_, x);
            if (!coords) throw std::logic_error("HermissonCalculus: V(n) is not a subcomodule");
            for (size_t j = 0; j < N; ++j)
                corep_[j][i] += SL2Element::monomial(y, (*coords)[j]);
        }
    }
    corep_sinv_.assign(N, std::vector<SL2Element>(N));
    for (size_t j = 0; j < N; ++j)
        for (size_t i = 0; i < N; ++i) corep_sinv_[j][i] = antipode(corep_[j][i], true);
    for (const auto& b : basis_) basis_sinv_.push_back(antipode(alg_.embed(b), true));
}

const std::vector<std::vector<PodlesElement>>& HermissonCalculus::left_matrix(const PodlesMono& m) const {
    auto it = left_cache_.find(m);
    if (it != left_cache_.end()) return it->second;
    const size_t N = basis_.size();
    std::map<PBWMono, PodlesElement> legs;
    for (const auto& [k, v] : alg_.coaction(m)) legs[k.second].add_term(k.first, v);
    std::vector<std::vector<PodlesElement>> L(N, std::vector<PodlesElement>(N));
    for (const auto& [y, x] : legs) {
        const PodlesElement nx = apply_nu(nu_, x, alg_);
        const SL2Element ym = SL2Element::monomial(y);
        for (size_t j = 0; j < N; ++j)
            for (size_t i = 0; i < N; ++i) {
                const RatFunc r = rform(ym, corep_sinv_[i][j]);
                if (!r.is_zero()) L[j][i] += r * nx;
            }
    }
    return left_cache_.emplace(m, std::move(L)).first->second;
}

std::vector<std::vector<PodlesElement>> HermissonCalculus::left_matrix(const PodlesElement& a) const {
    const size_t N = basis_.size();
    std::vector<std::vector<PodlesElement>> L(N, std::vector<PodlesElement>(N));
    for (const auto& [m, c] : a.terms()) {
        const auto& Lm = left_matrix(m);
        for (size_t j = 0; j < N; ++j)
            for (size_t i = 0; i < N; ++i) L[j][i] += c * Lm[j][i];
    }
    return L;
}

OneForm HermissonCalculus::left_multiply(const PodlesElement& a, const OneForm& w) const {
    const size_t N = basis_.size();
    OneForm out(N);
    for (const auto& [m, c] : a.terms()) {
        const auto& L = left_matrix(m);
        for (size_t j = 0; j < N; ++j)
            for (size_t i = 0; i < N; ++i)
                if (!L[j][i].is_zero() && !w[i].is_zero()) out[j] += c * alg_.multiply(L[j][i], w[i]);
    }
    return out;
}

OneForm HermissonCalculus::right_multiply(const OneForm& w, const PodlesElement& b) const {
    OneForm out;
    out.reserve(w.size());
    for (const auto& x : w) out.push_back(alg_.multiply(x, b));
    return out;
}

OneForm HermissonCalculus::d(const PodlesElement& x) const {
    OneForm r = right_multiply(omega(), x);
    OneForm l = left_multiply(x, omega());
    for (size_t j = 0; j < r.size(); ++j) r[j] -= l[j];
    return r;
}

RatFunc HermissonCalculus::chi(int i, const PodlesElement& a) const {
    const PodlesElement& b = basis_[static_cast<size_t>(i)];
    return rform(alg_.embed(apply_nu(nu_, a, alg_)), basis_sinv_[static_cast<size_t>(i)]) -
           alg_.counit(b) * alg_.counit(a);
}

RatFunc HermissonCalculus::chi_bar(const PodlesElement& a) const {
    const RatFunc eps_e1 = alg_.counit_values()[2];
    return eps_e1.pow(-n_) * rform(alg_.embed(apply_nu(nu_, a, alg_)), basis_sinv_[0]);
}

bool forms_equal(const OneForm& x, const OneForm& y) { return x == y; }

Matrix chi_table(const HermissonCalculus& h, int degree) {
    const std::vector<PodlesMono> mons = PodlesAlgebra::monomials(degree);
    Matrix m(h.size(), static_cast<int>(mons.size()));
    for (int i = 0; i < h.size(); ++i)
        for (size_t j = 0; j < mons.size(); ++j)
            m(i, static_cast<int>(j)) = h.chi(i, PodlesElement::monomial(mons[j]));
    return m;
}

namespace {

Matrix stack(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

}  // namespace

TangentMatch match_tangent_space(const HermissonCalculus& h, int degree) {
    const PodlesAlgebra& alg = h.algebra();
    const Sign sign = h.nu() == NuKind::Identity ? Sign::Plus : Sign::Minus;
    HWModule mod = build_module(sign, 2 * h.n(), alg.param());
    Matrix eps = evaluation_matrix({PsiVector::counit()}, degree, alg);
    Matrix chi = stack(chi_table(h, degree), eps);
    Matrix module = stack(evaluation_matrix(mod.basis, degree, alg), eps);
    TangentMatch r;
    r.degree = degree;
    r.chi_rank = rank(chi);
    r.module_rank = rank(module);
    r.joint_rank = rank(stack(chi, module));
    return r;
}

LeibnizReport verify_leibniz(const HermissonCalculus& h, int degree) {
    const PodlesAlgebra& alg = h.algebra();
    const size_t N = static_cast<size_t>(h.size());
    LeibnizReport r;
    const std::vector<PodlesMono> mons = PodlesAlgebra::monomials(degree);
    for (const auto& mx : mons)
        for (const auto& my : mons) {
            if (mx.degree() + my.degree() > degree) continue;
            ++r.pairs;
            const PodlesElement x = PodlesElement::monomial(mx), y = PodlesElement::monomial(my);
            const PodlesElement xy = alg.multiply(x, y);
            OneForm lhs = h.d(xy);
            OneForm rhs = h.left_multiply(x, h.d(y));
            OneForm dx_y = h.right_multiply(h.d(x), y);
            for (size_t j = 0; j < N; ++j) rhs[j] += dx_y[j];
            bool ok = forms_equal(lhs, rhs);
            const auto Lx = h.left_matrix(mx);
            const auto Ly = h.left_matrix(my);
            const auto Lxy = h.left_matrix(xy);
            for (size_t j = 0; j < N && ok; ++j)
                for (size_t i = 0; i < N && ok; ++i) {
                    PodlesElement prod;
                    for (size_t k = 0; k < N; ++k) prod += alg.multiply(Lx[j][k], Ly[k][i]);
                    ok = prod == Lxy[j][i];
                }
            if (!ok) {
                ++r.failures;
                if (r.witness.empty())
                    r.witness = PodlesElement::monomial(mx).to_string() + " * " +
                                PodlesElement::monomial(my).to_string();
            }
        }
    return r;
}

FreenessReport verify_freeness(const HermissonCalculus& h, int degree, int coefficient_degree) {
    const size_t N = static_cast<size_t>(h.size());
    FreenessReport r;
    r.degree = degree;
    r.coefficient_degree = coefficient_degree;

    std::vector<OneForm> db;
    for (const auto& b : h.basis()) db.push_back(h.d(b));

    // Columns: d(b_i) m for monomials m; rows: (component, monomial).
    std::vector<OneForm> columns;
    for (size_t i = 0; i < N; ++i)
        for (const auto& m : PodlesAlgebra::monomials(coefficient_degree))
            columns.push_back(h.right_multiply(db[i], PodlesElement::monomial(m)));
    std::vector<OneForm> targets;
    for (const auto& m : PodlesAlgebra::monomials(degree)) targets.push_back(h.d(PodlesElement::monomial(m)));

    std::map<std::pair<size_t, PodlesMono>, int> index;
    auto collect = [&](const OneForm& w) {
        for (size_t j = 0; j < N; ++j)
            for (const auto& [m, c] : w[j].terms()) index.try_emplace({j, m}, 0);
    };
    for (const auto& w : columns) collect(w);
    for (const auto& w : targets) collect(w);
    int k = 0;
    for (auto& [key, v] : index) v = k++;

    Matrix mat(static_cast<int>(index.size()), static_cast<int>(columns.size()));
    for (size_t col = 0; col < columns.size(); ++col)
        for (size_t j = 0; j < N; ++j)
            for (const auto& [m, c] : columns[col][j].terms()) mat(index.at({j, m}), static_cast<int>(col)) = c;
    r.unknowns = static_cast<int>(columns.size());
    r.rank = rank(mat);

    r.targets = static_cast<int>(targets.size());
    const std::vector<PodlesMono> tmons = PodlesAlgebra::monomials(degree);
    for (size_t t = 0; t < targets.size(); ++t) {
        std::vector<RatFunc> rhs(index.size());
        for (size_t j = 0; j < N; ++j)
            for (const auto& [m, c] : targets[t][j].terms()) rhs[static_cast<size_t>(index.at({j, m}))] = c;
        if (solve(mat, rhs))
            ++r.generated;
        else if (r.witness.empty())
            r.witness = "d(" + PodlesElement::monomial(tmons[t]).to_string() + ")";
    }
    return r;
}

}  // namespace qsphere
