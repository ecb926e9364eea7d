#include "msurg/diag.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace msurg {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Dyadic Dyadic::make(long long num, int k) {
    if (k < 0) throw std::invalid_argument("Dyadic: negative exponent");
    while (k > 0 && num % 2 == 0) {
        num /= 2;
        --k;
    }
    long long mod = 2ll << k;  // 2 * 2^k
    num %= mod;
    if (num < 0) num += mod;
    if (k > 0 && num % 2 == 0) return make(num, k);  // num became even after mod
    return Dyadic{num, k};
}

std::string Dyadic::str() const {
    if (k == 0) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(1ll << k);
}

double Dyadic::radians_pi() const { return double(num) / double(1ll << k); }

std::complex<double> Dyadic::phase() const { return std::polar(1.0, kPi * radians_pi()); }

Dyadic operator+(Dyadic a, Dyadic b) {
    int k = std::max(a.k, b.k);
    return Dyadic::make((a.num << (k - a.k)) + (b.num << (k - b.k)), k);
}

Dyadic operator-(Dyadic a) { return Dyadic::make(-a.num, a.k); }
Dyadic operator-(Dyadic a, Dyadic b) { return a + (-b); }

DiagonalGateSpec DiagonalGateSpec::identity(int n) {
    return {"I", n, std::vector<Dyadic>(std::size_t(1) << n)};
}

DiagonalGateSpec DiagonalGateSpec::t_gate() {
    DiagonalGateSpec s{"T", 1, std::vector<Dyadic>(2)};
    s.f[1] = Dyadic::make(1, 2);  // x/4
    return s;
}

DiagonalGateSpec DiagonalGateSpec::cs_gate() {
    DiagonalGateSpec s{"CS", 2, std::vector<Dyadic>(4)};
    s.f[3] = Dyadic::make(1, 1);  // x1 x2 / 2
    return s;
}

DiagonalGateSpec DiagonalGateSpec::ccz_gate() {
    DiagonalGateSpec s{"CCZ", 3, std::vector<Dyadic>(8)};
    s.f[7] = Dyadic::make(1, 0);  // x1 x2 x3
    return s;
}

nlohmann::json spec_to_json(const DiagonalGateSpec& spec) {
    nlohmann::json j;
    j["name"] = spec.name;
    j["n"] = spec.n;
    nlohmann::json table = nlohmann::json::array();
    for (const auto& d : spec.f) table.push_back(d.str());
    j["f"] = table;
    return j;
}

DiagonalGateSpec spec_from_json(const nlohmann::json& j) {
    DiagonalGateSpec spec;
    spec.name = j.value("name", "");
    spec.n = j.at("n").get<int>();
    for (const auto& e : j.at("f")) {
        std::string s = e.get<std::string>();
        auto slash = s.find('/');
        long long num = std::stoll(s.substr(0, slash));
        long long den = slash == std::string::npos ? 1 : std::stoll(s.substr(slash + 1));
        int k = 0;
        while ((1ll << k) < den) ++k;
        if ((1ll << k) != den) throw std::invalid_argument("spec_from_json: non-dyadic phase");
        spec.f.push_back(Dyadic::make(num, k));
    }
    if (spec.f.size() != std::size_t(1) << spec.n)
        throw std::invalid_argument("spec_from_json: table size mismatch");
    return spec;
}

std::vector<Dyadic> phase_anf(const DiagonalGateSpec& spec) {
    const std::size_t dim = std::size_t(1) << spec.n;
    std::vector<Dyadic> a(spec.f);
    // Moebius inversion on the subset lattice, exact.
    for (std::size_t s = 1; s < dim; ++s)
        for (std::size_t t = (s - 1) & s;; t = (t - 1) & s) {
            a[s] = a[s] - a[t];
            if (t == 0) break;
        }
    return a;
}

int hierarchy_level(const DiagonalGateSpec& spec) {
    int level = 0;
    auto a = phase_anf(spec);
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a[s].is_zero() || s == 0) continue;
        level = std::max(level, std::popcount(s) + a[s].k);
    }
    return level;
}

std::string DiagGate::str() const {
    std::string s = kind == "Sdg" ? "S" : kind;
    s += "_" + std::to_string(targets[0] + 1);
    for (std::size_t i = 1; i < targets.size(); ++i) s += "," + std::to_string(targets[i] + 1);
    if (kind == "Sdg") s += "^dag";
    return s;
}

namespace {

// Phase table of C(m_ZZ, m_X) = X(m_ZZ) U^dag X(m_ZZ) U Z(m_X):
// c(x) = f(x) - f(x ^ m_ZZ) - (x ^ m_ZZ).m_X.
std::vector<Dyadic> correction_phase(const DiagonalGateSpec& spec, std::size_t mzz,
                                     std::size_t mx) {
    const std::size_t dim = std::size_t(1) << spec.n;
    std::vector<Dyadic> c(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        long long dot = std::popcount((x ^ mzz) & mx);
        c[x] = spec.f[x] - spec.f[x ^ mzz] - Dyadic::make(dot, 0);
    }
    return c;
}

std::size_t bits_to_index(const BitVector& v) {
    std::size_t out = 0;
    for (auto i : v.support()) out |= std::size_t(1) << i;
    return out;
}

// Coefficient in half-units mod 4 (0, 1/2, 1, 3/2 -> 0, 1, 2, 3).
int half_units(const Dyadic& a, const std::string& where) {
    if (a.k > 1) throw std::invalid_argument("correction beyond Clifford on " + where);
    return int((a.num << (1 - a.k)) % 4);
}

}  // namespace

Correction correction_operator(const DiagonalGateSpec& spec, const BitVector& m_zz,
                               const BitVector& m_x) {
    if (m_zz.size() != std::size_t(spec.n) || m_x.size() != std::size_t(spec.n))
        throw std::invalid_argument("correction_operator: outcome length mismatch");
    DiagonalGateSpec cs{spec.name, spec.n,
                        correction_phase(spec, bits_to_index(m_zz), bits_to_index(m_x))};
    auto a = phase_anf(cs);

    Correction corr;
    corr.global_phase = a[0];
    // Degree-1 sites first (qubit order), then degree-2 pairs.
    for (int i = 0; i < spec.n; ++i) {
        int v = half_units(a[std::size_t(1) << i], "qubit " + std::to_string(i + 1));
        if (v == 2) corr.gates.push_back({"Z", {i}});
        if (v == 1) corr.gates.push_back({"S", {i}});
        if (v == 3) corr.gates.push_back({"Sdg", {i}});
    }
    for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j) {
            std::size_t s = (std::size_t(1) << i) | (std::size_t(1) << j);
            int v = half_units(a[s], "pair");
            if (v == 1 || v == 3)
                throw std::invalid_argument("correction beyond Clifford on a pair");
            if (v == 2) corr.gates.push_back({"CZ", {i, j}});
        }
    for (std::size_t s = 0; s < a.size(); ++s)
        if (std::popcount(s) >= 3 && !a[s].is_zero())
            throw std::invalid_argument("correction beyond Clifford: cubic term");
    return corr;
}

namespace {

std::string var_name(int bit, int n) {
    bool is_x = bit >= n;
    int q = bit % n + 1;
    std::string base = is_x ? "m_X" : "m_ZZ";
    return n == 1 ? base : base + "," + std::to_string(q);
}

// ANF of a boolean function over the 2n outcome bits, rendered as a
// "+"-joined list of "*"-joined variables.
std::string boolean_key(const std::vector<int>& truth, int n) {
    const std::size_t dim = truth.size();
    std::vector<int> anf(truth);
    for (std::size_t s = 1; s < dim; ++s)
        for (std::size_t t = (s - 1) & s;; t = (t - 1) & s) {
            anf[s] ^= anf[t];
            if (t == 0) break;
        }
    std::string out;
    for (std::size_t s = 0; s < dim; ++s) {
        if (!anf[s]) continue;
        if (!out.empty()) out += "+";
        if (s == 0) {
            out += "1";
            continue;
        }
        bool first = true;
        for (int b = 0; b < 2 * n; ++b)
            if (s & (std::size_t(1) << b)) {
                if (!first) out += "*";
                out += var_name(b, n);
                first = false;
            }
    }
    return out;
}

}  // namespace

std::vector<KeyRow> correction_key_table(const DiagonalGateSpec& spec) {
    if (hierarchy_level(spec) > 3)
        throw std::invalid_argument("correction_key_table: spec above level 3");
    const int n = spec.n;
    const std::size_t dimn = std::size_t(1) << n;
    const std::size_t outcomes = std::size_t(1) << (2 * n);

    // Half-unit coefficient of each degree-1 and degree-2 site as a function
    // of the outcome assignment (m_ZZ bits low, m_X bits high).
    std::vector<std::vector<int>> site1(n, std::vector<int>(outcomes));
    std::vector<std::vector<std::vector<int>>> site2(
        n, std::vector<std::vector<int>>(n, std::vector<int>(outcomes)));
    for (std::size_t m = 0; m < outcomes; ++m) {
        DiagonalGateSpec cm{spec.name, n,
                            correction_phase(spec, m & (dimn - 1), m >> n)};
        auto a = phase_anf(cm);
        for (int i = 0; i < n; ++i) site1[i][m] = half_units(a[std::size_t(1) << i], "qubit");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                site2[i][j][m] =
                    half_units(a[(std::size_t(1) << i) | (std::size_t(1) << j)], "pair");
    }

    std::vector<KeyRow> rows;
    std::vector<std::pair<std::string, std::string>> s_rows;  // S/Sdg after Z rows
    for (int i = 0; i < n; ++i) {
        // v(m) = u*g(m) + 2*h(m) mod 4 with unit u in {1,3}: g keys S^(u),
        // h keys Z. The unit is read off at the first outcome with v odd.
        std::vector<int> g(outcomes), h(outcomes);
        int u = 0;
        for (std::size_t m = 0; m < outcomes; ++m) {
            g[m] = site1[i][m] & 1;
            if (g[m] && !u) u = site1[i][m];
        }
        for (std::size_t m = 0; m < outcomes; ++m) {
            int rem = (site1[i][m] - u * g[m]) % 4;
            if (rem < 0) rem += 4;
            if (rem % 2) throw std::logic_error("key table: inconsistent unit");
            h[m] = (rem / 2) % 2;
        }
        std::string zkey = boolean_key(h, n);
        if (!zkey.empty())
            rows.push_back({zkey, n == 1 ? "Z" : DiagGate{"Z", {i}}.str()});
        std::string skey = boolean_key(g, n);
        if (!skey.empty())
            s_rows.push_back({skey, n == 1 ? (u == 1 ? "S" : "S^dag")
                                           : DiagGate{u == 1 ? "S" : "Sdg", {i}}.str()});
    }
    for (auto& r : s_rows) rows.push_back({r.first, r.second});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> g(outcomes);
            for (std::size_t m = 0; m < outcomes; ++m) {
                if (site2[i][j][m] % 2) throw std::logic_error("key table: odd pair coefficient");
                g[m] = (site2[i][j][m] / 2) % 2;
            }
            std::string key = boolean_key(g, n);
            if (!key.empty()) rows.push_back({key, DiagGate{"CZ", {i, j}}.str()});
        }
    return rows;
}

std::string key_table_csv(const std::vector<KeyRow>& rows) {
    std::string out = "key,gate\n";
    for (const auto& r : rows) out += r.key + "," + r.gate + "\n";
    return out;
}

Amplitudes magic_state(const DiagonalGateSpec& spec) {
    if (spec.n > 6) throw std::invalid_argument("magic_state: dense budget exceeded");
    const std::size_t dim = std::size_t(1) << spec.n;
    Amplitudes out(dim);
    const double norm = 1.0 / std::sqrt(double(dim));
    for (std::size_t y = 0; y < dim; ++y) out[y] = norm * spec.f[y].phase();
    return out;
}

Amplitudes apply_diagonal(const DiagonalGateSpec& spec, const Amplitudes& psi) {
    Amplitudes out(psi);
    for (std::size_t x = 0; x < out.size(); ++x) out[x] *= spec.f[x].phase();
    return out;
}

Amplitudes apply_correction(const Correction& corr, const Amplitudes& psi,
                            bool include_global_phase) {
    Amplitudes out(psi);
    for (const auto& g : corr.gates)
        for (std::size_t x = 0; x < out.size(); ++x) {
            bool all = true;
            for (int t : g.targets) all &= bool(x & (std::size_t(1) << t));
            if (!all) continue;
            if (g.kind == "Z" || g.kind == "CZ") out[x] *= -1.0;
            if (g.kind == "S") out[x] *= std::complex<double>(0, 1);
            if (g.kind == "Sdg") out[x] *= std::complex<double>(0, -1);
        }
    if (include_global_phase)
        for (auto& a : out) a *= corr.global_phase.phase();
    return out;
}

double fidelity(const Amplitudes& a, const Amplitudes& b) {
    std::complex<double> ip = 0;
    for (std::size_t i = 0; i < a.size(); ++i) ip += std::conj(a[i]) * b[i];
    return std::abs(ip);
}

TeleportResult simulate_teleport(const DiagonalGateSpec& spec, const Amplitudes& psi,
                                 std::optional<BitVector> force_mzz,
                                 std::optional<BitVector> force_mx, uint64_t seed) {
    const int n = spec.n;
    if (n > 6) throw std::invalid_argument("simulate_teleport: dense budget exceeded");
    const std::size_t dim = std::size_t(1) << n;
    if (psi.size() != dim) throw std::invalid_argument("simulate_teleport: state size mismatch");
    {
        double norm = 0;
        for (auto a : psi) norm += std::norm(a);
        if (std::abs(norm - 1.0) > 1e-9)
            throw std::invalid_argument("simulate_teleport: state not normalized");
    }

    std::mt19937_64 rng(seed);
    auto draw = [&](double p1, std::optional<int> force) {
        int bit = force ? *force : (std::uniform_real_distribution<>(0, 1)(rng) < p1 ? 1 : 0);
        double p = bit ? p1 : 1 - p1;
        if (p < 1e-12) throw std::invalid_argument("simulate_teleport: impossible forced outcome");
        return std::pair<int, double>(bit, p);
    };

    // Data register = low n bits, ancilla register = high n bits.
    Amplitudes state(dim * dim);
    Amplitudes magic = magic_state(spec);
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y) state[x | (y << n)] = psi[x] * magic[y];

    TeleportResult res;
    res.m_zz = BitVector(n);
    res.m_x = BitVector(n);

    for (int i = 0; i < n; ++i) {  // Z_i Z_{n+i}
        double p1 = 0;
        for (std::size_t idx = 0; idx < state.size(); ++idx)
            if (((idx >> i) ^ (idx >> (n + i))) & 1) p1 += std::norm(state[idx]);
        auto [bit, p] =
            draw(p1, force_mzz ? std::optional<int>(force_mzz->get(i)) : std::nullopt);
        double scale = 1.0 / std::sqrt(p);
        for (std::size_t idx = 0; idx < state.size(); ++idx) {
            if ((((idx >> i) ^ (idx >> (n + i))) & 1) != std::size_t(bit))
                state[idx] = 0;
            else
                state[idx] *= scale;
        }
        res.m_zz.set(i, bit);
    }

    for (int i = 0; i < n; ++i) {  // X_{n+i}: destructive readout of the magic register
        Amplitudes plus(state.size()), minus(state.size());
        double p0 = 0, p1 = 0;
        for (std::size_t idx = 0; idx < state.size(); ++idx) {
            auto other = state[idx ^ (std::size_t(1) << (n + i))];
            plus[idx] = 0.5 * (state[idx] + other);
            minus[idx] = 0.5 * (state[idx] - other);
            p0 += std::norm(plus[idx]);
            p1 += std::norm(minus[idx]);
        }
        auto [bit, p] = draw(p1, force_mx ? std::optional<int>(force_mx->get(i)) : std::nullopt);
        state = bit ? std::move(minus) : std::move(plus);
        double scale = 1.0 / std::sqrt(p);
        for (auto& a : state) a *= scale;
        res.m_x.set(i, bit);
    }

    // The magic register is now a +/- product state whose y=0 amplitude is
    // the positive real 2^{-n/2}; slice the data register off there.
    Amplitudes raw(dim);
    const double scale = std::sqrt(double(dim));
    for (std::size_t x = 0; x < dim; ++x) raw[x] = state[x] * scale;

    res.correction = correction_operator(spec, res.m_zz, res.m_x);
    res.output = apply_correction(res.correction, raw);
    res.fidelity_vs_u = fidelity(apply_diagonal(spec, psi), res.output);
    return res;
}

Amplitudes simulate_standard_teleport(const Amplitudes& psi, int force_m) {
    if (psi.size() != 2)
        throw std::invalid_argument("simulate_standard_teleport: single-qubit input required");
    Amplitudes magic = magic_state(DiagonalGateSpec::t_gate());
    // Bit 0 = data, bit 1 = ancilla; CX(data -> ancilla).
    Amplitudes state(4);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) state[x | ((y ^ x) << 1)] = psi[x] * magic[y];
    // Z-measure the ancilla.
    int m = force_m & 1;
    double p = std::norm(state[m << 1]) + std::norm(state[1 | (m << 1)]);
    if (p < 1e-12) throw std::invalid_argument("simulate_standard_teleport: impossible outcome");
    Amplitudes out = {state[m << 1] / std::sqrt(p), state[1 | (m << 1)] / std::sqrt(p)};
    if (m) out[1] *= std::complex<double>(0, 1);  // S on the data
    return out;
}

}  // namespace msurg
