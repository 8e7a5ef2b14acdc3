#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qsphere {

/// Outcome of one exact verification run.
struct Certificate {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Counts checks and keeps the first failure; messages are only built on failure.
class Tally {
public:
    template <class Msg>
    void expect(bool ok, Msg&& message) {
        ++checks_;
        if (ok) return;
        if (failures_++ == 0) first_ = std::forward<Msg>(message)();
    }
    int checks() const noexcept { return checks_; }
    int failures() const noexcept { return failures_; }
    Certificate finish(std::string id, std::string name, const std::string& summary = "") const;

private:
    int checks_ = 0;
    int failures_ = 0;
    std::string first_;
};

/// Runs body, turning exceptions into a failed certificate.
Certificate guarded(const std::string& id, const std::string& name,
                    const std::function<Certificate()>& body);

Certificate check_embedded_relations();
Certificate check_functional_tables();
Certificate check_operator_algebra();
Certificate check_xc_matrices();
Certificate check_spectra();
Certificate check_jc_sets(int lmax = 8);
Certificate check_de_generated_counts(int lmax = 6);
Certificate check_inner_calculi();
Certificate check_mu_representations(int nmax = 4);
/// Confluence, Hopf axioms, r-form well-definedness, truncated psi-independence of
/// {psi^{ml}_lambda : m + l <= 2, lambda in {1, q^2, q^4}} and the localization map.
Certificate check_structural_suites(int independence_degree = 3);

struct NamedCheck {
    std::string id;
    std::string name;
    std::function<Certificate()> run;
};

/// AC-1 .. AC-10 in order.
std::vector<NamedCheck> acceptance_checks(int independence_degree = 3);

}  // namespace qsphere
