#pragma once

#include "qsphere/certificates.hpp"
#include "qsphere/cparam.hpp"
#include "qsphere/uqsl2rep.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsphere::cli {

inline constexpr const char* kSchema = "qsphere-report/1";

/// A c-specifier as typed on the command line.
struct ParamSpec {
    std::string text;
    CParam param;
    /// Set for `cn:<n2>`.
    std::optional<int> cn_n2;
};

ParamSpec parse_param(const std::string& text);

struct Report {
    std::string command;
    /// Inputs and every bound used.
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<Certificate> certificates;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();

    bool pass() const;
    /// First certificate not marked pass.
    const Certificate* first_failure() const;

    friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::ordered_json to_json(const Report& r);
/// Throws std::invalid_argument on a wrong schema or missing fields.
Report report_from_json(const nlohmann::ordered_json& j);
std::string render_text(const Report& r);

struct Bounds {
    int lmax = 6;
    int degree = 3;
    int n2_max = 64;
};

Report run_selftest();
Report run_classify(const ParamSpec& c, const Bounds& b);
Report run_eigenvalues(int l, const ParamSpec& c, Sign sign, const Bounds& b);
Report run_tangent_space(const ParamSpec& c, const std::vector<std::pair<Sign, int>>& components,
                         const Bounds& b);
Report run_build_fodc(int n, bool flip, const std::optional<ParamSpec>& c, int freeness_degree,
                      const Bounds& b);
Report run_mu_rep(int n);
Report run_de_generated(const ParamSpec& c, const Bounds& b);

/// Parses `+2`, `-0`, `(+,2)`.
std::pair<Sign, int> parse_component(const std::string& text);
Sign parse_sign(const std::string& text);

/// Full command line handling; returns the process exit code.
int run(int argc, char** argv);

}  // namespace qsphere::cli
