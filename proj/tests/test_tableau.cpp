#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <complex>
#include <random>
#include <vector>

#include "msurg/tableau.hpp"

using namespace msurg;

namespace {

using cd = std::complex<double>;
using Mat2 = std::array<std::array<cd, 2>, 2>;
using Mat4 = std::array<std::array<cd, 4>, 4>;

const cd I1(0, 1);
const Mat2 MX{{{cd(0), cd(1)}, {cd(1), cd(0)}}};
const Mat2 MZ{{{cd(1), cd(0)}, {cd(0), cd(-1)}}};
const Mat2 MH{{{cd(1 / std::sqrt(2.0)), cd(1 / std::sqrt(2.0))},
               {cd(1 / std::sqrt(2.0)), cd(-1 / std::sqrt(2.0))}}};
const Mat2 MS{{{cd(1), cd(0)}, {cd(0), I1}}};
const Mat2 MSDG{{{cd(1), cd(0)}, {cd(0), -I1}}};
const Mat2 MY{{{cd(0), -I1}, {I1, cd(0)}}};

// Qubit q is bit q of the basis index (matches the rest of the library).
Mat4 lift(const Mat2& g, int q) {
    Mat4 u{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int other = 1 - q;
            if (((i >> other) & 1) != ((j >> other) & 1)) continue;
            u[i][j] = g[(i >> q) & 1][(j >> q) & 1];
        }
    return u;
}

Mat4 cx_mat(int c, int t) {
    Mat4 u{};
    for (int j = 0; j < 4; ++j) {
        int i = ((j >> c) & 1) ? j ^ (1 << t) : j;
        u[i][j] = 1;
    }
    return u;
}

Mat4 cz_mat() {
    Mat4 u{};
    for (int j = 0; j < 4; ++j) u[j][j] = (j == 3) ? cd(-1) : cd(1);
    return u;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Mat4 dagger(const Mat4& a) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = std::conj(a[j][i]);
    return r;
}

Mat4 pauli_matrix(const PauliOperator& p) {
    REQUIRE(p.n == 2);
    // i^phase times the per-qubit factors X^x * Z^z (X on the left).
    Mat4 out{};
    for (int j = 0; j < 4; ++j) out[j][j] = 1;
    for (int q = 0; q < 2; ++q) {
        Mat2 f{{{cd(1), cd(0)}, {cd(0), cd(1)}}};
        if (p.z.get(q)) f = MZ;
        if (p.x.get(q)) {
            Mat2 g{};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) g[i][j] += MX[i][k] * f[k][j];
            f = g;
        }
        out = mul(lift(f, q), out);
    }
    cd ph = 1;
    for (int i = 0; i < p.phase; ++i) ph *= I1;
    for (auto& row : out)
        for (auto& e : row) e *= ph;
    return out;
}

bool close(const Mat4& a, const Mat4& b) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (std::abs(a[i][j] - b[i][j]) > 1e-12) return false;
    return true;
}

struct NamedGate {
    const char* name;
    void (*apply)(Tableau&);
    Mat4 mat;
};

std::vector<NamedGate> gate_set() {
    std::vector<NamedGate> gs;
    gs.push_back({"h0", [](Tableau& t) { t.h(0); }, lift(MH, 0)});
    gs.push_back({"h1", [](Tableau& t) { t.h(1); }, lift(MH, 1)});
    gs.push_back({"s0", [](Tableau& t) { t.s(0); }, lift(MS, 0)});
    gs.push_back({"s1", [](Tableau& t) { t.s(1); }, lift(MS, 1)});
    gs.push_back({"sdg0", [](Tableau& t) { t.sdg(0); }, lift(MSDG, 0)});
    gs.push_back({"sdg1", [](Tableau& t) { t.sdg(1); }, lift(MSDG, 1)});
    gs.push_back({"x0", [](Tableau& t) { t.x(0); }, lift(MX, 0)});
    gs.push_back({"y1", [](Tableau& t) { t.y(1); }, lift(MY, 1)});
    gs.push_back({"z0", [](Tableau& t) { t.z(0); }, lift(MZ, 0)});
    gs.push_back({"cx01", [](Tableau& t) { t.cx(0, 1); }, cx_mat(0, 1)});
    gs.push_back({"cx10", [](Tableau& t) { t.cx(1, 0); }, cx_mat(1, 0)});
    gs.push_back({"cz", [](Tableau& t) { t.cz(0, 1); }, cz_mat()});
    return gs;
}

void check_rows(const Tableau& t, const Mat4& u) {
    Mat4 ud = dagger(u);
    for (std::size_t i = 0; i < 2; ++i) {
        Mat4 want_s = mul(mul(u, pauli_matrix(PauliOperator::single(2, i, 'Z'))), ud);
        Mat4 want_d = mul(mul(u, pauli_matrix(PauliOperator::single(2, i, 'X'))), ud);
        CHECK(close(pauli_matrix(t.stabilizers()[i]), want_s));
        CHECK(close(pauli_matrix(t.destabilizers()[i]), want_d));
    }
}

}  // namespace

TEST_CASE("every gate conjugates the generator rows like its matrix") {
    for (const auto& g : gate_set()) {
        CAPTURE(g.name);
        Tableau t(2);
        g.apply(t);
        check_rows(t, g.mat);
    }
}

TEST_CASE("random circuits stay consistent with the dense oracle") {
    auto gs = gate_set();
    for (uint64_t seed = 0; seed < 50; ++seed) {
        std::mt19937_64 rng(seed);
        Tableau t(2);
        Mat4 u{};
        for (int j = 0; j < 4; ++j) u[j][j] = 1;
        for (int step = 0; step < 25; ++step) {
            const auto& g = gs[rng() % gs.size()];
            g.apply(t);
            u = mul(g.mat, u);
        }
        check_rows(t, u);
    }
}

TEST_CASE("sanity identities: HZH = X, SXSdg = Y") {
    Tableau t(2);
    t.h(0);
    CHECK(to_string(t.stabilizers()[0]) == "+XI");
    Tableau t2(2);
    t2.s(0);
    CHECK(to_string(t2.destabilizers()[0]) == "+YI");
}

TEST_CASE("measuring |0> is deterministic zero") {
    Tableau t(1);
    CHECK(t.measure_z(0) == 0);
    CHECK(t.transcript().back().deterministic);
    t.apply_pauli(PauliOperator::single(1, 0, 'X'));
    CHECK(t.measure_z(0) == 1);
}

TEST_CASE("forcing against a determined outcome throws") {
    Tableau t(1);
    CHECK_THROWS(t.measure_z(0, 1));
    CHECK(t.measure_z(0, 0) == 0);  // matching force is fine
}

TEST_CASE("random outcomes can be forced either way and then stick") {
    for (int want : {0, 1}) {
        Tableau t(1);
        t.h(0);
        CHECK_FALSE(t.deterministic_outcome(PauliOperator::single(1, 0, 'Z')).has_value());
        CHECK(t.measure_z(0, want) == want);
        CHECK(t.measure_z(0) == want);  // idempotent
        CHECK(t.transcript().back().deterministic);
    }
}

TEST_CASE("bell pair correlations") {
    Tableau t(2, 7);
    t.h(0);
    t.cx(0, 1);
    PauliOperator xx(2), zz(2);
    xx.x.set(0, true);
    xx.x.set(1, true);
    zz.z.set(0, true);
    zz.z.set(1, true);
    CHECK(t.deterministic_outcome(xx) == 0);
    CHECK(t.deterministic_outcome(zz) == 0);
    int m0 = t.measure_z(0, 1);
    CHECK(m0 == 1);
    CHECK(t.measure_z(1) == 1);
    CHECK(t.transcript().back().deterministic);
}

TEST_CASE("negative-sign operators measure as 1") {
    Tableau t(1);
    PauliOperator mz = PauliOperator::single(1, 0, 'Z');
    mz.phase = 2;  // -Z
    CHECK(t.deterministic_outcome(mz) == 1);
    CHECK(t.measure_pauli(mz) == 1);
}

TEST_CASE("non-hermitian measurement is rejected") {
    Tableau t(1);
    PauliOperator p(1);
    p.x.set(0, true);
    p.z.set(0, true);  // phase 0 -> -iY, squares to -I
    CHECK_THROWS(t.measure_pauli(p));
}

TEST_CASE("ghz collapse propagates") {
    Tableau t(3);
    t.h(0);
    t.cx(0, 1);
    t.cx(1, 2);
    CHECK(t.measure_z(0, 1) == 1);
    CHECK(t.measure_z(1) == 1);
    CHECK(t.measure_z(2) == 1);
}

TEST_CASE("same seed reproduces the transcript, forcing replays it seed-free") {
    auto run = [](uint64_t seed, const std::vector<std::optional<int>>& forces) {
        Tableau t(3, seed);
        t.h(0);
        t.cx(0, 1);
        t.h(2);
        t.measure_z(0, forces[0]);
        t.measure_pauli(PauliOperator::single(3, 2, 'X'), forces[1]);
        t.measure_z(1, forces[2]);
        return t.transcript();
    };
    auto a = run(42, {std::nullopt, std::nullopt, std::nullopt});
    auto b = run(42, {std::nullopt, std::nullopt, std::nullopt});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].outcome == b[i].outcome);
    auto c = run(999, {a[0].outcome, a[1].outcome, a[2].outcome});
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(c[i].outcome == a[i].outcome);
}

TEST_CASE("transcript json carries all four fields") {
    Tableau t(1, 3);
    t.h(0);
    t.measure_z(0, 1);
    auto j = t.transcript_json();
    REQUIRE(j.size() == 1);
    CHECK(j[0]["pauli"] == "+Z");
    CHECK(j[0]["outcome"] == 1);
    CHECK(j[0]["forced"] == true);
    CHECK(j[0]["deterministic"] == false);
}
