#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "msurg/pauli.hpp"

namespace msurg {

struct MeasurementRecord {
    std::string pauli;
    int outcome = 0;
    bool deterministic = false;
    bool forced = false;
};

// Stabilizer simulator over n qubits, CHP-style: n stabilizer rows plus the
// paired destabilizers, all starting from |0...0>.
class Tableau {
  public:
    explicit Tableau(std::size_t n, uint64_t seed = 0);

    std::size_t num_qubits() const { return n_; }

    void h(std::size_t q);
    void s(std::size_t q);
    void sdg(std::size_t q);
    void x(std::size_t q);
    void y(std::size_t q);
    void z(std::size_t q);
    void cx(std::size_t control, std::size_t target);
    void cz(std::size_t a, std::size_t b);

    // Conjugates every row by the given gate sequence is not needed; apply a
    // Pauli operator directly (flips signs of anticommuting rows).
    void apply_pauli(const PauliOperator& p);

    // Measures the Hermitian Pauli product p. A random outcome is drawn when
    // the result is not determined, unless `force` pins it (only legal for
    // non-deterministic measurements or when it matches the determined value).
    int measure_pauli(const PauliOperator& p, std::optional<int> force = std::nullopt);
    int measure_z(std::size_t q, std::optional<int> force = std::nullopt);

    // Determined outcome of measuring p, without collapsing: 0/1 when p is
    // (up to sign) in the stabilizer group, nullopt otherwise.
    std::optional<int> deterministic_outcome(const PauliOperator& p) const;

    const std::vector<PauliOperator>& stabilizers() const { return stab_; }
    const std::vector<PauliOperator>& destabilizers() const { return destab_; }
    const std::vector<MeasurementRecord>& transcript() const { return transcript_; }

    nlohmann::json transcript_json() const;

  private:
    std::size_t n_;
    std::vector<PauliOperator> stab_, destab_;
    std::vector<MeasurementRecord> transcript_;
    std::mt19937_64 rng_;
};

}  // namespace msurg
