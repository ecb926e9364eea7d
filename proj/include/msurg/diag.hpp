#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "msurg/gf2.hpp"

namespace msurg {

// Exact dyadic rational num/2^k taken mod 2 (phases live in R/2Z).
// Normal form: 0 <= num < 2^(k+1), and num odd unless k = 0.
struct Dyadic {
    long long num = 0;
    int k = 0;

    static Dyadic make(long long num, int k);
    bool is_zero() const { return num == 0; }
    bool operator==(const Dyadic&) const = default;
    std::string str() const;       // "num/2^k" ("0", "1", "1/2", "3/4", ...)
    double radians_pi() const;     // the representative in [0, 2)
    std::complex<double> phase() const;  // exp(i*pi*value)
};

Dyadic operator+(Dyadic a, Dyadic b);
Dyadic operator-(Dyadic a, Dyadic b);
Dyadic operator-(Dyadic a);

using Amplitudes = std::vector<std::complex<double>>;

// Diagonal gate U|x> = exp(i*pi*f(x))|x>, f given as an exact table over all
// 2^n bitstrings; qubit i is bit i of the index.
struct DiagonalGateSpec {
    std::string name;
    int n = 0;
    std::vector<Dyadic> f;  // size 2^n

    static DiagonalGateSpec identity(int n);
    static DiagonalGateSpec t_gate();
    static DiagonalGateSpec cs_gate();
    static DiagonalGateSpec ccz_gate();
};

nlohmann::json spec_to_json(const DiagonalGateSpec& spec);
DiagonalGateSpec spec_from_json(const nlohmann::json& j);

// Moebius transform of f over the subset lattice: anf[S] is the exact
// coefficient of the monomial prod_{i in S} x_i, so that
// f(x) = sum_S anf[S] * [S subseteq x]  (mod 2).
std::vector<Dyadic> phase_anf(const DiagonalGateSpec& spec);

// Clifford-hierarchy level: max over nonzero ANF terms of degree + k
// (coefficient odd/2^k). Paulis are level 1, Cliffords 2, T/CS/CCZ 3.
int hierarchy_level(const DiagonalGateSpec& spec);

struct DiagGate {
    std::string kind;          // "Z", "S", "Sdg", "CZ"
    std::vector<int> targets;  // 0-based qubits
    std::string str() const;   // e.g. "S_1^dag", "CZ_1,2" (1-based)
};

struct Correction {
    std::vector<DiagGate> gates;
    Dyadic global_phase;  // exp(i*pi*global_phase) factored out of the gates
};

// Decomposition of C(m_ZZ, m_X) = X(m_ZZ) U^dag X(m_ZZ) U Z(m_X) into
// commuting diagonal gates. Requires hierarchy level <= 3 so the result is
// Clifford.
Correction correction_operator(const DiagonalGateSpec& spec, const BitVector& m_zz,
                               const BitVector& m_x);

struct KeyRow {
    std::string key;   // GF(2) polynomial in m_ZZ,i / m_X,i deciding the gate
    std::string gate;
};

// Symbolic key table: which outcome combination triggers each correction
// gate, for level-3 specs.
std::vector<KeyRow> correction_key_table(const DiagonalGateSpec& spec);
std::string key_table_csv(const std::vector<KeyRow>& rows);

Amplitudes magic_state(const DiagonalGateSpec& spec);       // U |+>^n
Amplitudes apply_diagonal(const DiagonalGateSpec& spec, const Amplitudes& psi);
Amplitudes apply_correction(const Correction& corr, const Amplitudes& psi,
                            bool include_global_phase = true);
double fidelity(const Amplitudes& a, const Amplitudes& b);  // |<a|b>|

struct TeleportResult {
    BitVector m_zz, m_x;
    Correction correction;
    Amplitudes output;       // n-qubit state after correction
    double fidelity_vs_u = 0.0;  // against U|psi>
};

// Dense simulation of the 2n-qubit generalized-teleportation circuit:
// data register carries psi, ancilla register the magic state; pairwise
// Z_i Z_{n+i} measurements give m_ZZ, the magic register is destructively
// X-measured giving m_X, and the correction lands on the data register,
// which holds the output.
TeleportResult simulate_teleport(const DiagonalGateSpec& spec, const Amplitudes& psi,
                                 std::optional<BitVector> force_mzz = std::nullopt,
                                 std::optional<BitVector> force_mx = std::nullopt,
                                 uint64_t seed = 0);

// The single-qubit CNOT-based circuit for T: CX(data -> ancilla), Z-measure
// the ancilla, S^m on the data. Returns the post-correction data state.
Amplitudes simulate_standard_teleport(const Amplitudes& psi, int force_m);

}  // namespace msurg
