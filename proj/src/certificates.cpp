#include "qsphere/certificates.hpp"

#include "qsphere/dualfunc.hpp"
#include "qsphere/fodc.hpp"
#include "qsphere/oqsl2.hpp"
#include "qsphere/podles.hpp"
#include "qsphere/uqsl2rep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace qsphere {

Certificate Tally::finish(std::string id, std::string name, const std::string& summary) const {
    Certificate c;
    c.id = std::move(id);
    c.name = std::move(name);
    c.pass = failures_ == 0;
    c.detail = std::to_string(checks_) + " checks";
    if (!summary.empty()) c.detail += ", " + summary;
    if (failures_ > 0) c.detail += "; " + std::to_string(failures_) + " failed, first: " + first_;
    return c;
}

Certificate guarded(const std::string& id, const std::string& name,
                    const std::function<Certificate()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {id, name, false, std::string("exception: ") + e.what()};
    }
}

namespace {

const RatFunc q = RatFunc::q();
const RatFunc qi = RatFunc::q_pow(-1);

std::vector<PBWMono> sl2_monomials(int deg) {
    std::vector<PBWMono> out;
    for (int b = 0; b <= deg; ++b)
        for (int c = 0; b + c <= deg; ++c)
            for (int x = 0; b + c + x <= deg; ++x) {
                out.push_back({b, c, x, 0});
                if (x > 0) out.push_back({b, c, 0, x});
            }
    return out;
}

std::vector<std::string> sl2_words(int n) {
    std::vector<std::string> out{""}, layer{""};
    for (int k = 0; k < n; ++k) {
        std::vector<std::string> next;
        for (const auto& w : layer)
            for (char ch : std::string("abcd")) next.push_back(w + ch);
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

GenWord to_genword(const std::string& w) {
    GenWord g;
    for (char ch : w) g.emplace_back(ch == 'a' || ch == 'b' ? 1 : 2, ch == 'a' || ch == 'c' ? 1 : 2);
    return g;
}

std::vector<std::vector<int>> podles_words(int n) {
    std::vector<std::vector<int>> out{{}}, layer{{}};
    for (int k = 0; k < n; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& w : layer)
            for (int x : {-1, 0, 1}) {
                auto nw = w;
                nw.push_back(x);
                next.push_back(std::move(nw));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::string word_name(const std::vector<int>& w) {
    std::string s;
    for (int x : w) s += x < 0 ? "em1 " : (x == 0 ? "A " : "e1 ");
    return s.empty() ? "1" : s;
}

using Triple = std::map<std::tuple<PBWMono, PBWMono, PBWMono>, RatFunc>;

void add_triple(Triple& t, const PBWMono& x, const PBWMono& y, const PBWMono& z, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.try_emplace({x, y, z}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

// (Delta (x) id) Delta and (id (x) Delta) Delta.
std::pair<Triple, Triple> coassociativity_sides(const SL2Element& x) {
    Triple left, right;
    for (const auto& [k, c] : coproduct(x)) {
        for (const auto& [k1, c1] : coproduct(SL2Element::monomial(k.first)))
            add_triple(left, k1.first, k1.second, k.second, c * c1);
        for (const auto& [k2, c2] : coproduct(SL2Element::monomial(k.second)))
            add_triple(right, k.first, k2.first, k2.second, c * c2);
    }
    return {left, right};
}

std::string sl2_name(const PBWMono& m) { return SL2Element::monomial(m).to_string(); }

}  // namespace

// ---------------------------------------------------------------- AC-1

Certificate check_embedded_relations() {
    const std::string id = "AC-1", name = "embedded sphere relations";
    return guarded(id, name, [&] {
        Tally t;
        for (const auto& c : {CParam::generic(RatFunc(1)), CParam::generic(RatFunc(2)), CParam::infinity()}) {
            PodlesAlgebra alg(c);
            for (const auto& r : embedded_relation_residuals(alg))
                t.expect(r.zero, [&] { return c.to_string() + " " + r.name + ": " + r.residual; });

            const auto eps = alg.counit_values();
            const RatFunc q2p1 = q * q + RatFunc(1);
            const RatFunc rho = qi * qi * q2p1.pow(2) * eps[0] * eps[2] + eps[1] * eps[1];
            const RatFunc lam = (RatFunc(1) - q * q) * eps[1];
            const SL2Element em = alg.embed(alg.em1()), e0 = alg.embed(alg.e0()), ep = alg.embed(alg.e1());
            auto expect_zero = [&](const SL2Element& x, const char* label) {
                t.expect(x.is_zero(), [&] { return c.to_string() + " " + label + ": " + x.to_string(); });
            };
            expect_zero(q2p1 * (em * ep + qi * qi * (ep * em)) + e0 * e0 - SL2Element(rho), "sum relation");
            expect_zero(-(q * q) * (em * e0) + e0 * em - lam * em, "em1 e0 relation");
            expect_zero(q2p1 * (em * ep - ep * em) + (RatFunc(1) - q * q) * (e0 * e0) - lam * e0,
                        "commutator relation");
            expect_zero(ep * e0 - q * q * (e0 * ep) - lam * ep, "e0 e1 relation");
        }
        return t.finish(id, name, "c in {s=1, s=2, inf}");
    });
}

// ---------------------------------------------------------------- AC-2

Certificate check_functional_tables() {
    const std::string id = "AC-2", name = "functional tables on the pi matrix";
    return guarded(id, name, [&] {
        Tally t;
        const RatFunc lam = RatFunc::parse("q+2");
        using Table = std::map<std::pair<int, int>, RatFunc>;
        const std::vector<std::pair<std::string, std::pair<FunctionalLetter, Table>>> tables = {
            {"f_lambda", {FunctionalLetter::pow(lam), {{{-1, -1}, lam.pow(-2)}, {{0, 0}, RatFunc(1)}, {{1, 1}, lam.pow(2)}}}},
            {"g", {FunctionalLetter::g(), {{{-1, -1}, RatFunc(-2)}, {{1, 1}, RatFunc(2)}}}},
            {"E", {FunctionalLetter::e(), {{{-1, 0}, -(q * q + RatFunc(1))}, {{0, 1}, RatFunc(1)}}}},
            {"F", {FunctionalLetter::f(), {{{0, -1}, -qi}, {{1, 0}, q + qi}}}},
        };
        for (const auto& [fname, entry] : tables) {
            const auto& [letter, table] = entry;
            for (int i = -1; i <= 1; ++i)
                for (int j = -1; j <= 1; ++j) {
                    auto it = table.find({i, j});
                    const RatFunc expected = it == table.end() ? RatFunc() : it->second;
                    const RatFunc got = eval_functional({letter}, pi_coeff(i, j));
                    t.expect(got == expected, [&] {
                        return fname + "(pi^" + std::to_string(i) + "_" + std::to_string(j) + ") = " +
                               got.to_string() + ", expected " + expected.to_string();
                    });
                }
        }
        return t.finish(id, name, "4 tables x 9 entries");
    });
}

// ---------------------------------------------------------------- AC-3

Certificate check_operator_algebra() {
    const std::string id = "AC-3", name = "operator algebra phi, varphi, kappa";
    return guarded(id, name, [&] {
        Tally t;
        const RatFunc alpha = xc_data(CParam::generic(RatFunc(1))).alpha;
        const RatFunc qh_inv = (q - qi).inverse();
        const RatFunc q2 = q * q;
        auto op = [&](PsiOp o, const PsiVector& v) { return apply_operator(o, v, alpha); };
        const std::vector<RatFunc> grid = {RatFunc(1), q, qi, q * q, RatFunc::q_pow(-4),
                                           RatFunc(-1), -q, RatFunc(2), RatFunc::parse("q+1")};
        for (const auto& lam : grid)
            for (int l = 0; l <= 6; ++l) {
                const PsiVector v = PsiVector::psi(l, lam);
                auto where = [&](const char* rel) {
                    return [&, rel] { return std::string(rel) + " on " + v.to_string(); };
                };
                t.expect(op(PsiOp::Phi, op(PsiOp::VarPhi, v)) - op(PsiOp::VarPhi, op(PsiOp::Phi, v)) ==
                             qh_inv * (op(PsiOp::Kappa, v) - op(PsiOp::KappaInv, v)),
                         where("commutator"));
                t.expect(op(PsiOp::Kappa, op(PsiOp::Phi, v)) == q2 * op(PsiOp::Phi, op(PsiOp::Kappa, v)),
                         where("kappa phi"));
                t.expect(op(PsiOp::Kappa, op(PsiOp::VarPhi, v)) ==
                             q2.inverse() * op(PsiOp::VarPhi, op(PsiOp::Kappa, v)),
                         where("kappa varphi"));
            }
        return t.finish(id, name, "l <= 6, 9 values of lambda");
    });
}

// ---------------------------------------------------------------- AC-4

Certificate check_xc_matrices() {
    const std::string id = "AC-4", name = "X_c matrix equals the tridiagonal form";
    return guarded(id, name, [&] {
        Tally t;
        for (const auto& c : {CParam::generic(RatFunc(1)), CParam::infinity()})
            for (Sign s : {Sign::Plus, Sign::Minus})
                for (int l = 0; l <= 6; ++l) {
                    const Matrix shown = displayed_matrix(l, c, s);
                    t.expect(xc_matrix(l, c, s) == shown, [&] {
                        return "irrep route " + c.to_string() + " l=" + std::to_string(l) + " sign " + sign_name(s);
                    });
                    t.expect(phi_block_matrix(l, c, s) == shown, [&] {
                        return "phi route " + c.to_string() + " l=" + std::to_string(l) + " sign " + sign_name(s);
                    });
                }
        return t.finish(id, name, "l <= 6, both signs, c in {s=1, inf}");
    });
}

// ---------------------------------------------------------------- AC-5

Certificate check_spectra() {
    const std::string id = "AC-5", name = "spectra and kernel dichotomy";
    return guarded(id, name, [&] {
        Tally t;
        for (const auto& c : {CParam::generic(RatFunc(1)), CParam::generic(RatFunc(2)), CParam::infinity(),
                              CParam::exceptional(1)})
            for (Sign s : {Sign::Plus, Sign::Minus})
                for (int l = 0; l <= 6; ++l) {
                    SpectralData d = charpoly_check(l, c, s);
                    t.expect(d.equal, [&] {
                        return c.to_string() + " l=" + std::to_string(l) + " sign " + sign_name(s) + ": " +
                               poly_to_string(d.charpoly) + " vs " + poly_to_string(d.expected);
                    });
                }
        for (const auto& c : {CParam::generic(RatFunc(1)), CParam::generic(RatFunc(2))})
            for (int l = 0; l <= 8; ++l) {
                const int k = kernel_dim(l, c, Sign::Plus);
                t.expect(k == (l % 2 == 0 ? 1 : 0), [&] {
                    return "kernel " + std::to_string(k) + " at l=" + std::to_string(l) + " for " + c.to_string();
                });
            }
        return t.finish(id, name, "charpoly l <= 6 for 4 values of c, kernels l <= 8");
    });
}

// ---------------------------------------------------------------- AC-6

Certificate check_jc_sets(int lmax) {
    const std::string id = "AC-6", name = "highest weight sets J^c";
    return guarded(id, name, [&] {
        Tally t;
        struct Case {
            CParam c;
            std::string label;
            std::function<bool(Sign, int)> member;
        };
        auto even_plus = [](Sign s, int l) { return s == Sign::Plus && l % 2 == 0; };
        std::vector<Case> cases = {
            {CParam::generic(RatFunc(1)), "s=1", even_plus},
            {CParam::generic(RatFunc(2)), "s=2", even_plus},
            {CParam::infinity(), "inf", [](Sign, int l) { return l % 2 == 0; }},
        };
        for (int r2 : {1, 2})
            cases.push_back({CParam::exceptional(r2), "exc:" + std::to_string(r2), [=](Sign s, int l) {
                                 if (s == Sign::Plus) return l % 2 == 0;
                                 return l >= r2 && (l - r2) % 2 == 0;
                             }});
        std::string summary;
        for (const auto& cs : cases) {
            JcScan scan = scan_Jc(cs.c, lmax);
            for (const auto& e : scan.entries) {
                const bool expected = cs.member(e.sign, e.l);
                t.expect(e.member() == expected, [&] {
                    return cs.label + " (" + sign_name(e.sign) + "," + std::to_string(e.l) + ") member=" +
                           (e.member() ? "yes" : "no");
                });
                t.expect(e.nilpotent == (e.kernel > 0), [&] {
                    return cs.label + " routes disagree at (" + std::string(sign_name(e.sign)) + "," +
                           std::to_string(e.l) + ")";
                });
            }
            summary += (summary.empty() ? "" : "; ") + cs.label + ": " +
                       std::to_string(scan.members().size()) + " members";
        }
        return t.finish(id, name, "lmax=" + std::to_string(lmax) + ", " + summary);
    });
}

// ---------------------------------------------------------------- AC-7

Certificate check_de_generated_counts(int lmax) {
    const std::string id = "AC-7", name = "calculi generated by d e_i";
    return guarded(id, name, [&] {
        Tally t;
        const std::vector<std::tuple<CParam, std::string, std::vector<int>>> cases = {
            {CParam::generic(RatFunc(1)), "s=1", {3}},
            {CParam::infinity(), "inf", {1, 3, 3}},
            {CParam::exceptional(1), "exc:1", {2, 3}},
        };
        std::string summary;
        for (const auto& [c, label, dims] : cases) {
            DeClassification d = classify_de_generated(c, lmax);
            std::vector<int> got;
            for (const auto& calc : d.calculi) got.push_back(calc.dim);
            std::sort(got.begin(), got.end());
            t.expect(got == dims, [&, label = label] {
                std::string s = label + " dims {";
                for (int x : got) s += " " + std::to_string(x);
                return s + " }";
            });
            summary += (summary.empty() ? "" : ", ") + label + ": " + std::to_string(got.size());
        }
        return t.finish(id, name, summary);
    });
}

// ---------------------------------------------------------------- AC-8

Certificate check_inner_calculi() {
    const std::string id = "AC-8", name = "inner calculi on V(n)";
    return guarded(id, name, [&] {
        Tally t;
        std::string summary;
        auto run = [&](int n, NuKind nu, const CParam& c, const RatFunc& top) {
            const std::string label = "n=" + std::to_string(n) + (nu == NuKind::SignFlip ? " flip " : " id ") + c.to_string();
            HermissonCalculus h(n, nu, c);
            const PodlesAlgebra& alg = h.algebra();

            TangentMatch m = match_tangent_space(h, 2 * n + 2);
            t.expect(m.matches() && m.chi_rank == 2 * n + 2, [&] {
                return label + " chi span rank " + std::to_string(m.chi_rank) + ", module " +
                       std::to_string(m.module_rank) + ", joint " + std::to_string(m.joint_rank);
            });
            const RatFunc sign(nu == NuKind::SignFlip ? -1 : 1);
            for (int i = -1; i <= 1; ++i) {
                const RatFunc want = sign * RatFunc::q_pow(-2 * n * i) * alg.counit(alg.e(i));
                const RatFunc got = h.chi_bar(alg.e(i));
                t.expect(got == want, [&] { return label + " chi_bar(e_" + std::to_string(i) + ") = " + got.to_string(); });
            }
            const PsiSymbol psi_top{0, top, 0};
            for (const auto& mono : PodlesAlgebra::monomials(2 * n + 2)) {
                const RatFunc got = h.chi_bar(PodlesElement::monomial(mono));
                t.expect(got == psi_eval(psi_top, mono, alg), [&] { return label + " chi_bar differs from psi^0"; });
            }
            LeibnizReport lr = verify_leibniz(h, 4);
            t.expect(lr.holds(), [&] { return label + " Leibniz: " + lr.witness; });
            FreenessReport fr = verify_freeness(h, 2);
            t.expect(fr.holds(), [&] {
                return label + " freeness: rank " + std::to_string(fr.rank) + "/" + std::to_string(fr.unknowns) +
                       ", generated " + std::to_string(fr.generated) + "/" + std::to_string(fr.targets) + " " + fr.witness;
            });
            summary += (summary.empty() ? "" : "; ") + label + ": Leibniz pairs " + std::to_string(lr.pairs) +
                       ", freeness coefficient degree " + std::to_string(fr.coefficient_degree);
        };
        run(1, NuKind::Identity, CParam::generic(RatFunc(1)), RatFunc::q_pow(-2));
        run(2, NuKind::Identity, CParam::generic(RatFunc(1)), RatFunc::q_pow(-4));
        run(1, NuKind::SignFlip, CParam::infinity(), -RatFunc::q_pow(-2));
        return t.finish(id, name, summary);
    });
}

// ---------------------------------------------------------------- AC-9

Certificate check_mu_representations(int nmax) {
    const std::string id = "AC-9", name = "finite-dimensional representations mu_n";
    return guarded(id, name, [&] {
        Tally t;
        for (int n = 1; n <= nmax; ++n) {
            MuRep rep = build_mu_n(n);
            const std::string label = "n=" + std::to_string(n);
            for (const auto& r : mu_relation_residuals(rep))
                t.expect(r.zero, [&] { return label + " " + r.name + ": " + r.residual; });
            t.expect(!determinant(rep.A).is_zero(), [&] { return label + " A singular"; });
            t.expect(rep.e1.pow(n).is_zero(), [&] { return label + " e1 not nilpotent"; });
            t.expect(rep.em1.pow(n).is_zero(), [&] { return label + " em1 not nilpotent"; });
        }
        return t.finish(id, name, "n <= " + std::to_string(nmax));
    });
}

// ---------------------------------------------------------------- AC-10

Certificate check_structural_suites(int independence_degree) {
    const std::string id = "AC-10", name = "structural suites";
    return guarded(id, name, [&] {
        Tally t;

        for (const auto& w : sl2_words(4)) {
            SL2Element l = reduce_word(w, RewriteOrder::Leftmost);
            SL2Element r = reduce_word(w, RewriteOrder::Rightmost);
            t.expect(l == r && l == word_product(to_genword(w)), [&] { return "O_q(SL2) confluence on " + w; });
        }
        for (const auto& c : {CParam::generic(RatFunc(1)), CParam::infinity()}) {
            PodlesAlgebra alg(c);
            for (const auto& w : podles_words(4))
                t.expect(alg.reduce_word(w, RewriteOrder::Leftmost) == alg.reduce_word(w, RewriteOrder::Rightmost),
                         [&] { return "sphere confluence " + c.to_string() + " on " + word_name(w); });
        }

        const SL2Element one(RatFunc(1));
        for (const auto& x : sl2_monomials(3)) {
            const SL2Element X = SL2Element::monomial(x);
            const SL2Tensor dx = coproduct(X);
            SL2Element left, right, s_right;
            for (const auto& [k, c] : dx) {
                left += SL2Element::monomial(k.second) * (c * counit(k.first));
                right += SL2Element::monomial(k.first) * (c * counit(k.second));
                s_right += SL2Element::monomial(k.first) * antipode(SL2Element::monomial(k.second)) * c;
            }
            t.expect(left == X && right == X, [&] { return "counit law on " + sl2_name(x); });
            auto [ca, cb] = coassociativity_sides(X);
            t.expect(ca == cb, [&] { return "coassociativity on " + sl2_name(x); });
            t.expect(antipode_convolution(dx) == SL2Element(counit(X)) && s_right == SL2Element(counit(X)),
                     [&] { return "antipode law on " + sl2_name(x); });
            t.expect(antipode(antipode(X, true)) == X, [&] { return "S S^-1 on " + sl2_name(x); });
            for (const auto& y : sl2_monomials(3 - x.degree())) {
                const SL2Element Y = SL2Element::monomial(y);
                t.expect(coproduct(X * Y) == tensor_multiply(dx, coproduct(Y)),
                         [&] { return "coproduct multiplicative on " + sl2_name(x) + " " + sl2_name(y); });
                t.expect(counit(X * Y) == counit(X) * counit(Y),
                         [&] { return "counit multiplicative on " + sl2_name(x) + " " + sl2_name(y); });
                t.expect(antipode(X * Y) == antipode(Y) * antipode(X),
                         [&] { return "antipode anti-multiplicative on " + sl2_name(x) + " " + sl2_name(y); });
            }
        }

        for (const auto& w : sl2_words(3))
            for (const auto& x : sl2_words(2)) {
                const GenWord gw = to_genword(w), gx = to_genword(x);
                t.expect(rform(gx, gw) == rform(word_product(gx), word_product(gw)) &&
                             rform(gw, gx) == rform(word_product(gw), word_product(gx)),
                         [&] { return "r-form on words " + x + ", " + w; });
            }

        PodlesAlgebra alg(CParam::generic(RatFunc(1)));
        PsiIndependenceReport ind =
            psi_independence(alg, 2, {RatFunc(1), q * q, RatFunc::q_pow(4)}, independence_degree);
        t.expect(ind.independent(), [&] {
            return "psi-independence at degree " + std::to_string(ind.degree) + ": rank " + std::to_string(ind.rank) +
                   " of " + std::to_string(ind.functionals) + " functionals on " + std::to_string(ind.monomials) +
                   " monomials";
        });

        for (const char* s : {"1", "2", "q"}) {
            PodbmReport rep = verify_podbm(CParam::generic(RatFunc::parse(s)));
            t.expect(rep.counit_ok, [&] { return std::string("localization counit at s=") + s; });
            for (const auto& r : rep.relations)
                t.expect(r.zero, [&] { return std::string("localization at s=") + s + " " + r.name + ": " + r.residual; });
        }
        return t.finish(id, name,
                        "psi-independence rank " + std::to_string(ind.rank) + "/" + std::to_string(ind.functionals) +
                            " on " + std::to_string(ind.monomials) + " monomials of degree <= " +
                            std::to_string(independence_degree));
    });
}

std::vector<NamedCheck> acceptance_checks(int independence_degree) {
    return {
        {"AC-1", "embedded sphere relations", [] { return check_embedded_relations(); }},
        {"AC-2", "functional tables on the pi matrix", [] { return check_functional_tables(); }},
        {"AC-3", "operator algebra phi, varphi, kappa", [] { return check_operator_algebra(); }},
        {"AC-4", "X_c matrix equals the tridiagonal form", [] { return check_xc_matrices(); }},
        {"AC-5", "spectra and kernel dichotomy", [] { return check_spectra(); }},
        {"AC-6", "highest weight sets J^c", [] { return check_jc_sets(); }},
        {"AC-7", "calculi generated by d e_i", [] { return check_de_generated_counts(); }},
        {"AC-8", "inner calculi on V(n)", [] { return check_inner_calculi(); }},
        {"AC-9", "finite-dimensional representations mu_n", [] { return check_mu_representations(); }},
        {"AC-10", "structural suites", [=] { return check_structural_suites(independence_degree); }},
    };
}

}  // namespace qsphere
