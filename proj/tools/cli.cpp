#include "cli.hpp"

#include "qsphere/dualfunc.hpp"
#include "qsphere/fodc.hpp"
#include "qsphere/podles.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace qsphere::cli {

using json = nlohmann::ordered_json;

ParamSpec parse_param(const std::string& text) {
    ParamSpec p;
    p.text = text;
    p.param = parse_param_spec(text);
    if (text.starts_with("cn:")) p.cn_n2 = std::stoi(text.substr(3));
    return p;
}

Sign parse_sign(const std::string& text) {
    if (text == "+" || text == "plus") return Sign::Plus;
    if (text == "-" || text == "minus") return Sign::Minus;
    throw std::invalid_argument("sign must be + or -, got '" + text + "'");
}

std::pair<Sign, int> parse_component(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != ',' && ch != ' ') s += ch;
    if (s.size() < 2) throw std::invalid_argument("component must look like +2 or (-,0), got '" + text + "'");
    const Sign sign = parse_sign(s.substr(0, 1));
    size_t used = 0;
    const int l = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1 || l < 0) throw std::invalid_argument("bad component '" + text + "'");
    return {sign, l};
}

// ---------------------------------------------------------------- reports

bool Report::pass() const {
    return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.pass; });
}

const Certificate* Report::first_failure() const {
    for (const auto& c : certificates)
        if (!c.pass) return &c;
    return nullptr;
}

json to_json(const Report& r) {
    json certs = json::array();
    for (const auto& c : r.certificates)
        certs.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"schema", kSchema}, {"command", r.command}, {"pass", r.pass()},
            {"params", r.params}, {"certificates", certs}, {"data", r.data}};
}

Report report_from_json(const json& j) {
    if (!j.is_object() || j.value("schema", "") != kSchema)
        throw std::invalid_argument(std::string("expected a report with schema ") + kSchema);
    Report r;
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params");
    r.data = j.at("data");
    for (const auto& c : j.at("certificates"))
        r.certificates.push_back({c.at("id").get<std::string>(), c.at("name").get<std::string>(),
                                  c.at("pass").get<bool>(), c.at("detail").get<std::string>()});
    if (j.at("pass").get<bool>() != r.pass()) throw std::invalid_argument("report pass flag is inconsistent");
    return r;
}

namespace {

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

bool is_flat_object(const json& v) {
    return v.is_object() && std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); });
}

void render_table(std::ostream& out, const json& rows, const std::string& pad) {
    std::vector<std::string> cols;
    for (const auto& row : rows)
        for (const auto& [k, v] : row.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    std::vector<size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    for (const auto& row : rows)
        for (size_t i = 0; i < cols.size(); ++i)
            width[i] = std::max(width[i], scalar_text(row.value(cols[i], json())).size());
    auto line = [&](auto cell) {
        out << pad;
        for (size_t i = 0; i < cols.size(); ++i) {
            std::string s = cell(i);
            out << s << std::string(width[i] - s.size() + 2, ' ');
        }
        out << '\n';
    };
    line([&](size_t i) { return cols[i]; });
    for (const auto& row : rows) line([&](size_t i) { return scalar_text(row.value(cols[i], json())); });
}

void render_value(std::ostream& out, const std::string& key, const json& v, const std::string& pad) {
    if (!v.is_structured()) {
        out << pad << key << ": " << scalar_text(v) << '\n';
        return;
    }
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); })) {
        const bool listed = v.size() > 4 || std::any_of(v.begin(), v.end(), [](const json& x) {
                                return scalar_text(x).find(' ') != std::string::npos;
                            });
        out << pad << key << ":";
        for (const auto& x : v) out << (listed ? "\n" + pad + "  - " : " ") << scalar_text(x);
        out << '\n';
        return;
    }
    out << pad << key << ":\n";
    if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), is_flat_object)) {
        render_table(out, v, pad + "  ");
        return;
    }
    if (v.is_array()) {
        for (size_t i = 0; i < v.size(); ++i) render_value(out, "[" + std::to_string(i) + "]", v[i], pad + "  ");
        return;
    }
    for (const auto& [k, x] : v.items()) render_value(out, k, x, pad + "  ");
}

}  // namespace

std::string render_text(const Report& r) {
    std::ostringstream out;
    out << "qsphere " << r.command << '\n';
    for (const auto& [k, v] : r.params.items()) render_value(out, k, v, "  ");
    for (const auto& [k, v] : r.data.items()) render_value(out, k, v, "");
    out << "certificates:\n";
    for (const auto& c : r.certificates)
        out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name
            << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
    out << "result: " << (r.pass() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

// ---------------------------------------------------------------- commands

namespace {

json bounds_json(const Bounds& b) { return {{"lmax", b.lmax}, {"degree", b.degree}, {"n2_max", b.n2_max}}; }

void require_classifiable(const ParamSpec& c) {
    if (c.cn_n2) throw std::invalid_argument("cn: values are excluded from the classification; use mu-rep");
    if (c.param.is_zero()) throw std::invalid_argument("c = 0 is outside the classification");
}

Certificate admissibility(const ParamSpec& c, int n2_max) {
    AdmissibilityReport a = check_admissible(c.param, n2_max);
    std::string detail = "no c(n) with n2 <= " + std::to_string(n2_max);
    if (a.witness_n2) detail = "c = c(n) with n2 = " + std::to_string(*a.witness_n2);
    return {"admissible", "c is not one of the excluded values c(n)", a.admissible(), detail};
}

std::string lambda_text(Sign s, int l) { return highest_weight_lambda(s, l).to_string(); }

std::string components_text(const std::vector<Component>& cs) {
    if (cs.empty()) return "trivial";
    std::string s;
    for (const auto& c : cs) s += (s.empty() ? "" : "+") + component_name(c);
    return s;
}

json strings(const std::vector<PodlesElement>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.to_string());
    return a;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

Report run_selftest() {
    constexpr int kIndependenceDegree = 4;
    Report r;
    r.command = "selftest";
    r.params = {{"psi_independence_degree", kIndependenceDegree}};
    for (const auto& check : acceptance_checks(kIndependenceDegree)) r.certificates.push_back(check.run());
    return r;
}

Report run_classify(const ParamSpec& c, const Bounds& b) {
    require_classifiable(c);
    Report r;
    r.command = "classify";
    r.params = {{"c", c.text}, {"bounds", bounds_json(b)}};
    r.certificates.push_back(admissibility(c, b.n2_max));

    JcScan scan;
    r.certificates.push_back(guarded("routes", "nilpotency and kernel routes agree", [&] {
        scan = scan_Jc(c.param, b.lmax);
        return Certificate{"routes", "nilpotency and kernel routes agree", true,
                           std::to_string(scan.entries.size()) + " weights"};
    }));

    json weights = json::array();
    for (const auto& e : scan.entries)
        weights.push_back({{"sign", sign_name(e.sign)}, {"l", e.l}, {"lambda", lambda_text(e.sign, e.l)},
                           {"nilpotent", e.nilpotent}, {"kernel", e.kernel}, {"member", e.member()}});
    r.data["weights"] = weights;

    auto members = scan.members();
    std::sort(members.begin(), members.end());
    json table = json::array();
    for (const auto& comp : members) {
        const std::string name = component_name(comp);
        TangentSpace t = tangent_space(c.param, {comp});
        const bool irreducible = is_irreducible(t);
        json row = {{"component", name}, {"lambda", lambda_text(comp.first, comp.second)}};
        if (comp == Component{Sign::Plus, 0})
            row["dim"] = "trivial";
        else
            row["dim"] = t.dim();
        row["closed"] = t.certified();
        row["irreducible"] = irreducible;
        table.push_back(row);
        std::string failed;
        for (const auto& ck : t.checks)
            if (!ck.holds) failed += ck.name + " " + ck.detail;
        r.certificates.push_back({"closed" + name, "tangent space closure " + name, t.certified(), failed});
        r.certificates.push_back({"irreducible" + name, "irreducible calculus " + name, irreducible, ""});
    }
    r.data["calculi"] = table;
    return r;
}

Report run_eigenvalues(int l, const ParamSpec& c, Sign sign, const Bounds& b) {
    if (c.cn_n2) throw std::invalid_argument("cn: values have no square root of c; use s=, inf or exc:");
    if (l < 0) throw std::invalid_argument("l must be nonnegative");
    Report r;
    r.command = "eigenvalues";
    r.params = {{"l", l}, {"c", c.text}, {"sign", sign_name(sign)}, {"bounds", bounds_json(b)}};
    SpectralData d = charpoly_check(l, c.param, sign);
    json pairs = json::array();
    for (const auto& p : d.pairs)
        pairs.push_back({{"r", std::to_string(p.r2) + "/2"}, {"sum", p.sum.to_string()}, {"product", p.prod.to_string()}});
    r.data["pairs"] = pairs;
    r.data["linear_root"] = d.linear_root ? json(d.linear_root->to_string()) : json();
    r.data["zero_root_multiplicity"] = d.zero_root_multiplicity;
    r.data["kernel_dim"] = kernel_dim(l, c.param, sign);
    r.data["charpoly"] = poly_to_string(d.charpoly);
    r.data["expected"] = poly_to_string(d.expected);
    r.data["verdict"] = d.equal ? "equal" : "unequal";
    r.certificates.push_back({"charpoly", "characteristic polynomial factors into the closed-form pairs", d.equal,
                              d.equal ? "" : "difference " + poly_to_string(poly_sub(d.charpoly, d.expected))});
    return r;
}

Report run_tangent_space(const ParamSpec& c, const std::vector<std::pair<Sign, int>>& components,
                         const Bounds& b) {
    require_classifiable(c);
    Report r;
    r.command = "tangent-space";
    json comps = json::array();
    for (const auto& comp : components) comps.push_back(component_name(comp));
    r.params = {{"c", c.text}, {"components", comps}, {"bounds", bounds_json(b)}};

    TangentSpace t = tangent_space(c.param, components);
    PodlesAlgebra alg(c.param);
    json basis = json::array();
    for (const auto& v : t.basis) basis.push_back(v.to_string());
    r.data["dim_T_eps"] = t.dim_T_eps();
    r.data["dim"] = t.dim();
    r.data["basis"] = basis;
    const int eval_rank = rank(evaluation_matrix(t.basis, b.degree, alg));
    r.data["evaluation_rank"] = eval_rank;
    for (const auto& ck : t.checks) r.certificates.push_back({ck.name, ck.name, ck.holds, ck.detail});
    r.certificates.push_back({"separated", "basis is separated by evaluation on monomials of degree <= " +
                                                std::to_string(b.degree),
                              eval_rank == t.dim_T_eps(),
                              "rank " + std::to_string(eval_rank) + " of " + std::to_string(t.dim_T_eps())});
    if (components.size() == 1) {
        const bool irr = is_irreducible(t);
        r.certificates.push_back({"irreducible", "single component generates T^eps", irr, ""});
    }
    return r;
}

Report run_build_fodc(int n, bool flip, const std::optional<ParamSpec>& c_opt, int freeness_degree,
                      const Bounds& b) {
    const ParamSpec c = c_opt ? *c_opt : parse_param(flip ? "inf" : "s=1");
    require_classifiable(c);
    const NuKind nu = flip ? NuKind::SignFlip : NuKind::Identity;
    constexpr int kLeibnizDegree = 4;
    const int chi_degree = 2 * n + 2;
    Report r;
    r.command = "build-fodc";
    r.params = {{"n", n},
                {"nu", flip ? "sign-flip" : "identity"},
                {"c", c.text},
                {"leibniz_degree", kLeibnizDegree},
                {"chi_degree", chi_degree},
                {"freeness_degree", freeness_degree},
                {"freeness_coefficient_degree", freeness_degree >= 0 ? json(freeness_degree + 1) : json()},
                {"bounds", bounds_json(b)}};

    HermissonCalculus h(n, nu, c.param);
    const PodlesAlgebra& alg = h.algebra();
    json labels = json::array();
    std::string omega;
    for (int i = 0; i < h.size(); ++i) {
        const std::string g = "gamma^" + std::to_string(i);
        labels.push_back(g);
        omega += (omega.empty() ? "" : " + ") + g + "*(" + h.basis()[static_cast<size_t>(i)].to_string() + ")";
    }
    json left = json::array();
    const std::vector<std::pair<std::string, PodlesElement>> gens = {
        {"em1", alg.em1()}, {"A", alg.A()}, {"e1", alg.e1()}};
    for (const auto& [name, a] : gens) {
        auto L = h.left_matrix(a);
        for (int i = 0; i < h.size(); ++i)
            for (int j = 0; j < h.size(); ++j) {
                const PodlesElement& v = L[static_cast<size_t>(j)][static_cast<size_t>(i)];
                if (!v.is_zero())
                    left.push_back({{"a", name}, {"i", i}, {"j", j}, {"coefficient", v.to_string()}});
            }
    }
    json diff = json::array();
    for (int k = -1; k <= 1; ++k)
        diff.push_back({{"x", "e" + std::to_string(k)}, {"components", strings(h.d(alg.e(k)))}});
    r.data["presentation"] = {{"n", n},
                              {"W_basis", strings(h.basis())},
                              {"dual_labels", labels},
                              {"omega", omega},
                              {"left_action_table", left},
                              {"differential_table", diff}};

    LeibnizReport lr = verify_leibniz(h, kLeibnizDegree);
    r.certificates.push_back({"leibniz", "Leibniz rule for the inner differential", lr.holds(),
                              std::to_string(lr.pairs) + " pairs" + (lr.holds() ? "" : ", " + lr.witness)});
    TangentMatch m = match_tangent_space(h, chi_degree);
    r.certificates.push_back({"tangent", "chi span equals the tangent space of " +
                                             component_name({flip ? Sign::Minus : Sign::Plus, 2 * n}),
                              m.matches(),
                              "ranks " + std::to_string(m.chi_rank) + "/" + std::to_string(m.module_rank) + "/" +
                                  std::to_string(m.joint_rank)});
    const RatFunc sign(flip ? -1 : 1);
    const PsiSymbol top{0, sign * RatFunc::q_pow(-2 * n), 0};
    Tally chi;
    for (const auto& mono : PodlesAlgebra::monomials(b.degree))
        chi.expect(h.chi_bar(PodlesElement::monomial(mono)) == psi_eval(top, mono, alg),
                   [&] { return PodlesElement::monomial(mono).to_string(); });
    Certificate cb = chi.finish("chi_bar", "chi_bar equals psi^0 at " + top.lambda.to_string());
    r.certificates.push_back(cb);
    if (freeness_degree >= 0) {
        FreenessReport fr = verify_freeness(h, freeness_degree);
        r.certificates.push_back({"freeness", "d b_i form a right module basis",
                                  fr.holds(),
                                  "rank " + std::to_string(fr.rank) + "/" + std::to_string(fr.unknowns) +
                                      ", generated " + std::to_string(fr.generated) + "/" +
                                      std::to_string(fr.targets) + (fr.witness.empty() ? "" : ", " + fr.witness)});
    }
    return r;
}

Report run_mu_rep(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Report r;
    r.command = "mu-rep";
    r.params = {{"n", n}, {"c", "cn:" + std::to_string(2 * n)}};
    MuRep rep = build_mu_n(n);
    r.data["c"] = cn_value(2 * n).to_string();
    r.data["A"] = matrix_json(rep.A);
    r.data["em1"] = matrix_json(rep.em1);
    r.data["e1"] = matrix_json(rep.e1);
    for (const auto& res : mu_relation_residuals(rep))
        r.certificates.push_back({"relation", "relation " + res.name, res.zero, res.zero ? "" : res.residual});
    r.certificates.push_back({"invertible", "A is invertible", !determinant(rep.A).is_zero(), ""});
    r.certificates.push_back({"nilpotent", "e1 and em1 are nilpotent",
                              rep.e1.pow(n).is_zero() && rep.em1.pow(n).is_zero(), ""});
    return r;
}

Report run_de_generated(const ParamSpec& c, const Bounds& b) {
    require_classifiable(c);
    Report r;
    r.command = "de-generated";
    r.params = {{"c", c.text}, {"bounds", bounds_json(b)}, {"max_dim", 3}};
    r.certificates.push_back(admissibility(c, b.n2_max));
    DeClassification d;
    r.certificates.push_back(guarded("enumeration", "every tested tangent space is closed", [&] {
        d = classify_de_generated(c.param, b.lmax);
        return Certificate{"enumeration", "every tested tangent space is closed", true,
                           std::to_string(d.tested.size()) + " sums tested"};
    }));
    json cands = json::array();
    for (const auto& comp : d.candidates) cands.push_back(component_name(comp));
    auto rows = [](const std::vector<DeGeneratedCalculus>& cs) {
        json a = json::array();
        for (const auto& x : cs)
            a.push_back({{"components", components_text(x.components)}, {"dim", x.dim},
                         {"pairing_rank", x.pairing_rank}, {"generated", x.generated()},
                         {"free_basis", x.free_basis()}});
        return a;
    };
    r.data["candidates"] = cands;
    r.data["tested"] = rows(d.tested);
    r.data["calculi"] = rows(d.calculi);
    r.data["count"] = d.calculi.size();
    return r;
}

// ---------------------------------------------------------------- command line

int run(int argc, char** argv) {
    CLI::App app{"Exact computations on the Podles quantum sphere"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    Bounds b;
    auto add_bounds = [&](CLI::App* sub) {
        sub->add_option("--lmax", b.lmax, "Largest l scanned")->capture_default_str();
        sub->add_option("--degree", b.degree, "Evaluation degree")->capture_default_str();
        sub->add_option("--n2-max", b.n2_max, "Largest n2 tested for c = c(n2/2)")->capture_default_str();
    };

    std::string c_text, sign_text = "+";
    std::vector<std::string> comp_texts;
    int l = 0, n = 1, freeness_degree = 2;
    bool flip = false;

    auto* selftest = app.add_subcommand("selftest", "Run the full invariant suite");
    auto* classify = app.add_subcommand("classify", "Highest weights J^c and irreducible calculi");
    classify->add_option("--c", c_text, "inf | s=<ratfunc> | exc:<r2>")->required();
    add_bounds(classify);
    auto* eigen = app.add_subcommand("eigenvalues", "Spectrum of the X_c matrix");
    eigen->add_option("--l", l, "Highest weight l")->required();
    eigen->add_option("--c", c_text, "inf | s=<ratfunc> | exc:<r2>")->required();
    eigen->add_option("--sign", sign_text, "+ or -")->capture_default_str();
    add_bounds(eigen);
    auto* tangent = app.add_subcommand("tangent-space", "Build and certify a quantum tangent space");
    tangent->add_option("--c", c_text, "inf | s=<ratfunc> | exc:<r2>")->required();
    tangent->add_option("--component", comp_texts, "Component such as +2 or -0; repeatable");
    add_bounds(tangent);
    auto* fodc = app.add_subcommand("build-fodc", "Inner calculus on V(n)");
    fodc->add_option("--n", n, "Dimension parameter n")->capture_default_str();
    fodc->add_flag("--nu-flip", flip, "Use nu(e_i) = -e_i (c = inf only)");
    auto* nu_opt = fodc->add_option("--nu", "identity | flip");
    fodc->add_option("--c", c_text, "Defaults to s=1, or inf with the sign flip");
    fodc->add_option("--freeness-degree", freeness_degree, "Degree of the freeness check, -1 to skip")
        ->capture_default_str();
    add_bounds(fodc);
    auto* mu = app.add_subcommand("mu-rep", "Finite-dimensional representation at c = c(n)");
    auto* mu_n = mu->add_option("--n", n, "Dimension n");
    mu->add_option("--c", c_text, "cn:<n2> with n2 = 2n");
    auto* de = app.add_subcommand("de-generated", "Calculi generated by d e_-1, d e_0, d e_1");
    de->add_option("--c", c_text, "inf | s=<ratfunc> | exc:<r2>")->required();
    add_bounds(de);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    Report report;
    try {
        if (selftest->parsed()) {
            report = run_selftest();
        } else if (classify->parsed()) {
            report = run_classify(parse_param(c_text), b);
        } else if (eigen->parsed()) {
            report = run_eigenvalues(l, parse_param(c_text), parse_sign(sign_text), b);
        } else if (tangent->parsed()) {
            std::vector<std::pair<Sign, int>> comps;
            for (const auto& t : comp_texts) comps.push_back(parse_component(t));
            report = run_tangent_space(parse_param(c_text), comps, b);
        } else if (fodc->parsed()) {
            if (*nu_opt) {
                const std::string v = nu_opt->as<std::string>();
                if (v != "identity" && v != "id" && v != "flip")
                    throw std::invalid_argument("--nu must be identity or flip");
                flip = flip || v == "flip";
            }
            std::optional<ParamSpec> c;
            if (!c_text.empty()) c = parse_param(c_text);
            report = run_build_fodc(n, flip, c, freeness_degree, b);
        } else if (mu->parsed()) {
            if (!c_text.empty()) {
                ParamSpec c = parse_param(c_text);
                if (!c.cn_n2 || *c.cn_n2 % 2 != 0 || *c.cn_n2 <= 0)
                    throw std::invalid_argument("mu-rep takes --c cn:<n2> with positive even n2");
                if (*mu_n && n != *c.cn_n2 / 2) throw std::invalid_argument("--n and --c disagree");
                n = *c.cn_n2 / 2;
            }
            report = run_mu_rep(n);
        } else if (de->parsed()) {
            report = run_de_generated(parse_param(c_text), b);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (format == "text")
        std::cout << render_text(report);
    else
        std::cout << to_json(report).dump(2) << '\n';
    if (const Certificate* f = report.first_failure()) {
        std::cerr << "failed: " << f->id << " " << f->name << (f->detail.empty() ? "" : ": " + f->detail) << '\n';
        return 1;
    }
    return 0;
}

}  // namespace qsphere::cli
