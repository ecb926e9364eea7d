#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "msurg/pauli.hpp"

namespace msurg {

// CSS stabilizer code: pure-X and pure-Z check lists over n qubits.
// Dependent checks are retained; ranks are computed on demand.
struct CssCode {
    std::size_t n = 0;
    std::vector<PauliOperator> x_checks;
    std::vector<PauliOperator> z_checks;
    std::vector<PauliOperator> logical_x;
    std::vector<PauliOperator> logical_z;
    nlohmann::json labels;

    BitMatrix x_matrix() const;  // rows = x-support of x_checks
    BitMatrix z_matrix() const;  // rows = z-support of z_checks
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
};

struct DistanceCertificate {
    std::size_t checked_weight = 0;
    std::optional<std::size_t> found_weight;  // nullopt = "none <= checked_weight"
    std::optional<PauliOperator> witness;
};

ValidationReport validate(const CssCode& code);
std::size_t num_logical(const CssCode& code);

// k symplectically-paired (X, Z) logical representatives, greedily
// weight-reduced against the check rows.
std::pair<std::vector<PauliOperator>, std::vector<PauliOperator>>
logical_representatives(const CssCode& code);

// Exhaustive search over pure-X and pure-Z errors of weight <= w_max
// (sufficient for CSS distance). Ties broken by lexicographic qubit index.
// Throws if C(n, w_max) exceeds the enumeration budget.
DistanceCertificate distance_brute_force(const CssCode& code, std::size_t w_max,
                                         uint64_t budget = 400000000ull);

// True when p is a nontrivial logical operator: commutes with every check
// and lies outside the check rowspans.
bool is_nontrivial_logical(const CssCode& code, const PauliOperator& p);

// Two operators in the same logical class differ by a stabilizer.
bool same_logical_class(const CssCode& code, const PauliOperator& a, const PauliOperator& b);

nlohmann::json code_to_json(const CssCode& code);
CssCode code_from_json(const nlohmann::json& j);

}  // namespace msurg
