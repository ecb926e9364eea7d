#include "msurg/cost.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace msurg {

nlohmann::json params_to_json(const CostModelParams& p) {
    return {{"model_a", p.model_a},
            {"p_over_pth", p.p_over_pth},
            {"distil_n", p.distil_n},
            {"distil_k", p.distil_k},
            {"distil_d", p.distil_d},
            {"distil_c", p.distil_c},
            {"msd_input_error", p.msd_input_error},
            {"msd_final_round_factor", p.msd_final_round_factor},
            {"qldpc_alpha", p.qldpc_alpha},
            {"qldpc_beta", p.qldpc_beta},
            {"meas_log_factor", p.meas_log_factor}};
}

CostModelParams params_from_json(const nlohmann::json& j) {
    CostModelParams p;
    p.model_a = j.value("model_a", p.model_a);
    p.p_over_pth = j.value("p_over_pth", p.p_over_pth);
    p.distil_n = j.value("distil_n", p.distil_n);
    p.distil_k = j.value("distil_k", p.distil_k);
    p.distil_d = j.value("distil_d", p.distil_d);
    p.distil_c = j.value("distil_c", p.distil_c);
    p.msd_input_error = j.value("msd_input_error", p.msd_input_error);
    p.msd_final_round_factor = j.value("msd_final_round_factor", p.msd_final_round_factor);
    p.qldpc_alpha = j.value("qldpc_alpha", p.qldpc_alpha);
    p.qldpc_beta = j.value("qldpc_beta", p.qldpc_beta);
    p.meas_log_factor = j.value("meas_log_factor", p.meas_log_factor);
    return p;
}

double gamma_exponent(double n_d, double k_d, double d_d) {
    if (n_d < k_d || k_d < 1 || d_d < 2) throw std::invalid_argument("gamma: domain violation");
    return std::log(n_d / k_d) / std::log(d_d);
}

int distance_for_epsilon(const CostModelParams& p, double epsilon) {
    if (!(epsilon > 0 && epsilon < 1))
        throw std::invalid_argument("distance_for_epsilon: epsilon out of range");
    if (!(p.p_over_pth > 0 && p.p_over_pth < 1))
        throw std::invalid_argument("distance_for_epsilon: p >= p_th, unreachable");
    const double dec = -std::log10(p.p_over_pth);  // decades gained per exponent step
    const double target = std::log10(epsilon) - std::log10(p.model_a);
    for (int d = 3;; d += 2) {
        double log_eps = -std::ceil((d + 1) / 2.0) * dec;
        if (log_eps <= target + 1e-9) return d;
        if (d > 9999) throw std::runtime_error("distance_for_epsilon: no d found");
    }
}

int surface_qubits(int d) { return d * d + (d - 1) * (d - 1); }
int color_code_qubits(int l) { return 4 * l * l * l + 6 * l * l + 4 * l + 1; }

CostBreakdown q_total_teleport(const CostModelParams& p, double epsilon,
                               const std::string& scheme) {
    CostBreakdown b;
    b.scheme = scheme;
    b.epsilon = epsilon;
    b.d = distance_for_epsilon(p, epsilon);
    b.q_base = surface_qubits(b.d);
    if (scheme == "colorcode-teleport") {
        int l = (b.d - 1) / 2;
        b.q_magic = color_code_qubits(l);
        b.q_meas = 2 * l;
    } else if (scheme == "qldpc-teleport") {
        b.q_magic = std::pow(double(b.d), p.qldpc_alpha / p.qldpc_beta);
        double lg = std::max(1.0, std::log2(double(b.d)));
        b.q_meas = p.meas_log_factor * b.d * lg * lg;
    } else {
        throw std::invalid_argument("q_total_teleport: unknown scheme " + scheme);
    }
    b.q_total = b.q_base + b.q_magic + b.q_meas;
    return b;
}

namespace {

int distillation_rounds(const CostModelParams& p, double epsilon) {
    double e = p.msd_input_error;
    if (p.distil_c * std::pow(e, p.distil_d) >= e)
        throw std::invalid_argument("q_total_msd: input error above distillation break-even");
    int r = 0;
    while (e > epsilon) {
        e = p.distil_c * std::pow(e, p.distil_d);
        if (++r > 64) break;
    }
    return r;
}

}  // namespace

CostBreakdown q_total_msd(const CostModelParams& p, double epsilon, const std::string& scheme) {
    CostBreakdown b;
    b.scheme = scheme;
    b.epsilon = epsilon;
    b.d = distance_for_epsilon(p, epsilon);
    b.q_base = surface_qubits(b.d);
    const double gamma = gamma_exponent(p.distil_n, p.distil_k, p.distil_d);
    const double logeps = std::log(1.0 / epsilon);
    if (scheme == "msd-small-code" || scheme == "msd-single-round") {
        b.rounds = distillation_rounds(p, epsilon);
        b.q_distil = std::pow(logeps, gamma);
        b.q_total = b.q_base * b.q_distil;
    } else if (scheme == "msd-optimized") {
        b.q_distil = p.msd_final_round_factor * logeps * logeps;
        b.q_total = b.q_distil;  // additional-qubit count; dominated by final round
    } else {
        throw std::invalid_argument("q_total_msd: unknown scheme " + scheme);
    }
    return b;
}

std::vector<double> default_epsilon_grid() {
    std::vector<double> grid;
    for (int i = 0; i < 28; ++i)
        grid.push_back(std::pow(10.0, -6.0 - 9.0 * i / 27.0));
    return grid;
}

namespace {

CostBreakdown breakdown_for(const CostModelParams& p, const std::string& scheme, double eps) {
    if (scheme == "colorcode-teleport" || scheme == "qldpc-teleport")
        return q_total_teleport(p, eps, scheme);
    return q_total_msd(p, eps, scheme);
}

}  // namespace

std::string emit_comparison(const CostModelParams& p, const std::vector<double>& eps_grid) {
    if (eps_grid.empty()) throw std::invalid_argument("emit_comparison: empty grid");
    std::ostringstream out;
    out << "# params " << params_to_json(p).dump() << "\n";
    out << "scheme,epsilon,d,rounds,q_base,q_magic,q_meas,q_distil,q_total\n";
    for (const char* scheme : {"colorcode-teleport", "qldpc-teleport", "msd-small-code",
                               "msd-single-round", "msd-optimized"})
        for (double eps : eps_grid) {
            CostBreakdown b = breakdown_for(p, scheme, eps);
            out << b.scheme << "," << b.epsilon << "," << b.d << "," << b.rounds << ","
                << b.q_base << "," << b.q_magic << "," << b.q_meas << "," << b.q_distil << ","
                << b.q_total << "\n";
        }
    return out.str();
}

double curve_slope(const CostModelParams& p, const std::string& scheme,
                   const std::vector<double>& eps_grid) {
    if (eps_grid.size() < 2) throw std::invalid_argument("curve_slope: need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(eps_grid.size());
    for (double eps : eps_grid) {
        double x = std::log(std::log(1.0 / eps));
        double y = std::log(breakdown_for(p, scheme, eps).q_total);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace msurg
