// Command-line front end: build codes, verify them, run the teleportation
// checks, the detection Monte Carlo, and the overhead comparison.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "msurg/color3d.hpp"
#include "msurg/cost.hpp"
#include "msurg/css.hpp"
#include "msurg/diag.hpp"
#include "msurg/mc.hpp"
#include "msurg/protocol.hpp"
#include "msurg/surface.hpp"
#include "msurg/surgery.hpp"

using namespace msurg;

namespace {

void write_out(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << data;
}

CssCode build_kind(const std::string& kind, int l, int d, nlohmann::json* extra) {
    if (kind == "color3d") {
        auto b = build_color_code(l);
        if (extra) (*extra)["interface_qubits"] = b.interface.qubit_ids;
        return b.code;
    }
    if (kind == "surface") {
        auto b = build_surface_code(d);
        if (extra) (*extra)["interface_qubits"] = b.interface.qubit_ids;
        return b.code;
    }
    if (kind == "merged") {
        auto c = build_color_code(l);
        auto s = build_surface_code(2 * l + 1);
        auto m = merge(c.code, c.interface, s.code, s.interface);
        if (extra) {
            (*extra)["ancillas"] = m.ancilla_ids;
            (*extra)["new_z_checks"] = m.new_z_check_ids.size();
        }
        return m.code;
    }
    throw CLI::ValidationError("kind must be color3d, surface, or merged");
}

int cmd_build(const std::string& kind, int l, int d, const std::string& out) {
    nlohmann::json extra;
    CssCode code = build_kind(kind, l, d, &extra);
    nlohmann::json j = code_to_json(code);
    for (auto& [k, v] : extra.items()) j["labels"][k] = v;
    write_out(out, j.dump(2) + "\n");
    std::cerr << "n=" << code.n << " x_checks=" << code.x_checks.size()
              << " z_checks=" << code.z_checks.size() << " k=" << num_logical(code) << "\n";
    return 0;
}

int cmd_verify(const std::string& file, std::size_t wmax, uint64_t budget) {
    std::ifstream f(file);
    if (!f) throw std::runtime_error("cannot open " + file);
    nlohmann::json j;
    f >> j;
    CssCode code = code_from_json(j);
    auto rep = validate(code);
    for (const auto& msg : rep.failures) std::cout << "FAIL " << msg << "\n";
    if (!rep.ok) return 1;
    std::cout << "validate: ok, k=" << num_logical(code) << "\n";
    auto cert = distance_brute_force(code, wmax, budget);
    if (cert.found_weight)
        std::cout << "distance: minimal logical weight " << *cert.found_weight << " (witness "
                  << to_string(*cert.witness) << ")\n";
    else
        std::cout << "distance: no logical of weight <= " << cert.checked_weight << "\n";
    return 0;
}

int cmd_teleport(const std::string& gate, const std::string& mode, uint64_t seed,
                 const std::string& out) {
    if (mode == "logical-dense") {
        DiagonalGateSpec spec = gate == "T"    ? DiagonalGateSpec::t_gate()
                                : gate == "CS" ? DiagonalGateSpec::cs_gate()
                                               : DiagonalGateSpec::ccz_gate();
        std::mt19937_64 rng(seed);
        const std::size_t dim = std::size_t(1) << spec.n;
        int failures = 0, branches = 0;
        for (std::size_t mz = 0; mz < dim; ++mz)
            for (std::size_t mx = 0; mx < dim; ++mx) {
                Amplitudes psi(dim);
                double norm = 0;
                std::normal_distribution<> g;
                for (auto& a : psi) {
                    a = {g(rng), g(rng)};
                    norm += std::norm(a);
                }
                for (auto& a : psi) a /= std::sqrt(norm);
                BitVector bz(spec.n), bx(spec.n);
                for (int i = 0; i < spec.n; ++i) {
                    bz.set(i, (mz >> i) & 1);
                    bx.set(i, (mx >> i) & 1);
                }
                auto res = simulate_teleport(spec, psi, bz, bx);
                ++branches;
                if (res.fidelity_vs_u < 1 - 1e-10) ++failures;
            }
        std::cout << gate << " logical-dense: " << (branches - failures) << "/" << branches
                  << " branches pass\n";
        write_out(out, key_table_csv(correction_key_table(spec)));
        return failures ? 1 : 0;
    }
    if (mode == "physical-clifford-analog") {
        auto color = build_color_code(1);
        auto surf = build_surface_code(3);
        int t_sign = transversal_t_exponent(color).sign;
        int failures = 0, runs = 0;
        for (char basis : {'Z', 'X', 'Y'})
            for (int sgn : {0, 1})
                for (int mzz : {0, 1})
                    for (int mx : {0, 1}) {
                        auto rep = teleport_clifford_resource(color, surf, t_sign, basis, sgn,
                                                              seed + runs, mzz, mx);
                        ++runs;
                        if (!rep.ok) ++failures;
                    }
        std::cout << "physical-clifford-analog: " << (runs - failures) << "/" << runs
                  << " branches pass\n";
        return failures ? 1 : 0;
    }
    throw CLI::ValidationError("mode must be logical-dense or physical-clifford-analog");
}

int cmd_mc(const std::string& kind, int l, int d, std::vector<double> pgrid, uint64_t trials,
           uint64_t seed, const std::string& out) {
    CssCode code = build_kind(kind, l, d, nullptr);
    if (code.logical_x.empty()) {
        auto reps = logical_representatives(code);
        code.logical_x = reps.first;
        code.logical_z = reps.second;
    }
    std::vector<McResult> results;
    for (double p : pgrid) results.push_back(run_mc(code, {"depolarizing", p, seed}, trials));
    std::string csv = mc_csv(results);
    try {
        auto fit = slope_fit(results);
        csv += "# slope " + std::to_string(fit.exponent) + " stderr " +
               std::to_string(fit.stderr_) + "\n";
    } catch (const std::exception& e) {
        csv += std::string("# slope unavailable: ") + e.what() + "\n";
    }
    write_out(out, csv);
    return 0;
}

int cmd_cost(const std::string& config, const std::string& out) {
    CostModelParams params;
    if (!config.empty()) {
        std::ifstream f(config);
        if (!f) throw std::runtime_error("cannot open " + config);
        nlohmann::json j;
        f >> j;
        params = params_from_json(j);
    }
    write_out(out, emit_comparison(params, default_epsilon_grid()));
    std::cerr << "gamma(15,1,3)=" << gamma_exponent(15, 1, 3)
              << " slope(colorcode-teleport)="
              << curve_slope(params, "colorcode-teleport", default_epsilon_grid())
              << " slope(msd-small-code)="
              << curve_slope(params, "msd-small-code", default_epsilon_grid()) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and verification toolkit for code-surgery gate teleportation"};
    app.require_subcommand(1);

    std::string kind = "color3d", out, file, gate = "T", mode = "logical-dense", config;
    int l = 1, d = 3;
    std::size_t wmax = 3;
    uint64_t seed = 1, trials = 100000, budget = 400000000ull;
    std::vector<double> pgrid = {1e-3, 3e-3, 1e-2};

    auto* b = app.add_subcommand("build", "construct a code and write it as JSON");
    b->add_option("--kind", kind, "color3d | surface | merged");
    b->add_option("--l", l, "color-code scale");
    b->add_option("--d", d, "surface-code distance");
    b->add_option("--out", out, "output path (default stdout)");

    auto* v = app.add_subcommand("verify", "validate a code file and certify its distance");
    v->add_option("file", file)->required();
    v->add_option("--wmax", wmax, "exhaustive search weight");
    v->add_option("--budget", budget, "enumeration budget");

    auto* t = app.add_subcommand("teleport", "run the teleportation verification suites");
    t->add_option("--gate", gate, "T | CS | CCZ");
    t->add_option("--mode", mode, "logical-dense | physical-clifford-analog");
    t->add_option("--seed", seed);
    t->add_option("--out", out, "key-table CSV path (logical-dense mode)");

    auto* m = app.add_subcommand("mc", "detection/post-selection Monte Carlo");
    m->add_option("--kind", kind);
    m->add_option("--l", l);
    m->add_option("--d", d);
    m->add_option("--p-grid", pgrid, "physical error rates (comma-separated)")->delimiter(',');
    m->add_option("--trials", trials);
    m->add_option("--seed", seed);
    m->add_option("--out", out);

    auto* c = app.add_subcommand("cost", "emit the overhead comparison CSV");
    c->add_option("--config", config, "JSON cost-model parameters");
    c->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);
    try {
        if (b->parsed()) return cmd_build(kind, l, d, out);
        if (v->parsed()) return cmd_verify(file, wmax, budget);
        if (t->parsed()) return cmd_teleport(gate, mode, seed, out);
        if (m->parsed()) return cmd_mc(kind, l, d, pgrid, trials, seed, out);
        if (c->parsed()) return cmd_cost(config, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
