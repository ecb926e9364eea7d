#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "msurg/cost.hpp"

using namespace msurg;

TEST_CASE("distillation exponent gamma") {
    CHECK(gamma_exponent(15, 1, 3) == doctest::Approx(2.46497).epsilon(1e-5));
    CHECK(gamma_exponent(2, 1, 2) == doctest::Approx(1.0));
    CHECK_THROWS(gamma_exponent(1, 2, 3));
    CHECK_THROWS(gamma_exponent(15, 1, 1));
}

TEST_CASE("distance selection at the default working point") {
    CostModelParams p;
    CHECK(distance_for_epsilon(p, 1e-2) == 3);
    CHECK(distance_for_epsilon(p, 1e-3) == 5);
    CHECK(distance_for_epsilon(p, 1e-4) == 7);
    // Exact powers of the suppression factor must land on the intended d,
    // not get bumped by floating-point representation error.
    CHECK(distance_for_epsilon(p, 1e-6) == 11);
    CHECK(distance_for_epsilon(p, 1e-7) == 13);
    CHECK(distance_for_epsilon(p, 1e-15) == 29);
    CHECK_THROWS(distance_for_epsilon(p, 0.0));
    CHECK_THROWS(distance_for_epsilon(p, 2.0));
    CostModelParams bad;
    bad.p_over_pth = 1.5;
    CHECK_THROWS(distance_for_epsilon(bad, 1e-3));
}

TEST_CASE("prefactor shifts the distance as expected") {
    CostModelParams p;
    p.model_a = 0.1;  // one free decade
    CHECK(distance_for_epsilon(p, 1e-6) == 9);
    CHECK(distance_for_epsilon(p, 1e-2) == 3);
}

TEST_CASE("block sizes") {
    CHECK(surface_qubits(3) == 13);
    CHECK(surface_qubits(5) == 41);
    CHECK(color_code_qubits(1) == 15);
    CHECK(color_code_qubits(2) == 65);
}

TEST_CASE("teleport breakdown at d = 3 is 13 + 15 + 2") {
    CostModelParams p;
    auto b = q_total_teleport(p, 1e-2, "colorcode-teleport");
    CHECK(b.d == 3);
    CHECK(b.q_base == 13);
    CHECK(b.q_magic == 15);
    CHECK(b.q_meas == 2);
    CHECK(b.q_total == 30);
    CHECK_THROWS(q_total_teleport(p, 1e-2, "nonsense"));
}

TEST_CASE("distillation rounds recursion") {
    CostModelParams p;  // eps_0 = 1e-2, eps' = 35 eps^3
    CHECK(q_total_msd(p, 1e-4).rounds == 1);
    CHECK(q_total_msd(p, 1e-6).rounds == 2);
    CHECK(q_total_msd(p, 1e-12).rounds == 3);
    CHECK(q_total_msd(p, 1e-15).rounds == 3);
    CostModelParams broken;
    broken.msd_input_error = 0.5;  // above break-even
    CHECK_THROWS(q_total_msd(broken, 1e-6));
    CHECK_THROWS(q_total_msd(p, 1e-6, "nonsense"));
}

TEST_CASE("msd totals follow their closed forms") {
    CostModelParams p;
    const double eps = 1e-8;
    const double gamma = gamma_exponent(p.distil_n, p.distil_k, p.distil_d);
    auto small = q_total_msd(p, eps, "msd-small-code");
    CHECK(small.q_total ==
          doctest::Approx(small.q_base * std::pow(std::log(1 / eps), gamma)));
    auto opt = q_total_msd(p, eps, "msd-optimized");
    CHECK(opt.q_total == doctest::Approx(2.0 * std::pow(std::log(1 / eps), 2.0)));
}

TEST_CASE("every scheme grows monotonically as epsilon shrinks") {
    CostModelParams p;
    auto grid = default_epsilon_grid();
    REQUIRE(grid.size() == 28);
    CHECK(grid.front() == doctest::Approx(1e-6));
    CHECK(grid.back() == doctest::Approx(1e-15));
    for (const char* scheme : {"colorcode-teleport", "qldpc-teleport", "msd-small-code",
                               "msd-optimized"}) {
        CAPTURE(scheme);
        double prev = 0;
        for (double eps : grid) {
            double q = (std::string(scheme).rfind("msd", 0) == 0
                            ? q_total_msd(p, eps, scheme)
                            : q_total_teleport(p, eps, scheme))
                           .q_total;
            CHECK(q >= prev);
            prev = q;
        }
    }
}

TEST_CASE("asymptotic slopes in ln Q vs ln ln(1/eps)") {
    CostModelParams p;
    auto grid = default_epsilon_grid();
    double tele = curve_slope(p, "colorcode-teleport", grid);
    double msd = curve_slope(p, "msd-small-code", grid);
    CHECK(tele == doctest::Approx(2.889).epsilon(0.02));
    CHECK(msd == doctest::Approx(4.564).epsilon(0.02));
    CHECK(msd - tele > 1.0);  // the teleport scheme wins by a full power
    CHECK(curve_slope(p, "msd-optimized", grid) == doctest::Approx(2.0).epsilon(1e-9));
    double qldpc = curve_slope(p, "qldpc-teleport", grid);
    CHECK(qldpc > 1.5);
    CHECK(qldpc < 3.0);
    CHECK_THROWS(curve_slope(p, "colorcode-teleport", {1e-6}));
}

TEST_CASE("comparison table shape") {
    CostModelParams p;
    std::vector<double> grid = {1e-6, 1e-9, 1e-12};
    auto csv = emit_comparison(p, grid);
    CHECK(csv.rfind("# params {", 0) == 0);
    CHECK(csv.find("scheme,epsilon,d,rounds,q_base,q_magic,q_meas,q_distil,q_total\n") !=
          std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2 + 5 * 3);
    CHECK(csv.find("colorcode-teleport,1e-06,11,") != std::string::npos);
    CHECK_THROWS(emit_comparison(p, {}));
}

TEST_CASE("params json round trip") {
    CostModelParams p;
    p.model_a = 0.25;
    p.qldpc_alpha = 0.4;
    auto back = params_from_json(params_to_json(p));
    CHECK(back.model_a == 0.25);
    CHECK(back.qldpc_alpha == 0.4);
    CHECK(back.distil_c == 35.0);
    // Missing fields fall back to the defaults.
    auto sparse = params_from_json({{"p_over_pth", 0.2}});
    CHECK(sparse.p_over_pth == 0.2);
    CHECK(sparse.model_a == 1.0);
}
