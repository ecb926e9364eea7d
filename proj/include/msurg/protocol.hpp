#pragma once

#include <optional>

#include "msurg/color3d.hpp"
#include "msurg/surface.hpp"
#include "msurg/surgery.hpp"
#include "msurg/tableau.hpp"

namespace msurg {

// Re-indexes a block-local operator into a larger register at `offset`.
PauliOperator embed_at(const PauliOperator& p, std::size_t offset, std::size_t n_total);

// Hermitian logical Y = i * Xbar * Zbar.
PauliOperator logical_y(const CssCode& code);

// In-place logical state preparation on the block [offset, offset + code.n):
// |0bar> forces all X-checks to +1 from |0...0>; |+bar> applies H everywhere
// then forces all Z-checks to +1. Dependent checks come out deterministic.
void prepare_logical_zero(Tableau& t, const CssCode& code, std::size_t offset);
void prepare_logical_plus(Tableau& t, const CssCode& code, std::size_t offset);

struct SurgeryRun {
    std::vector<int> chain_outcomes;  // extended X-checks (expected 0)
    std::vector<int> z_outcomes;      // new Z-checks
    int m_zz = 0;
    std::vector<int> ancilla_outcomes;  // split X-measurements
};

// Merge-phase measurements: ancillas into |+>, then the new Z-checks (the
// first 2l optionally forced to 0 and the last to the requested m_ZZ), then
// the extended chain X-checks. m_ZZ = XOR of the Z outcomes.
SurgeryRun run_surgery_measurement(Tableau& t, const MergedCode& merged,
                                   std::optional<int> force_mzz = std::nullopt);

// Split phase: X-measure each ancilla and apply the Z frames restoring both
// parents' chain-check signs.
void run_split(Tableau& t, const MergedCode& merged, const SplitResult& frames, SurgeryRun& run);

struct TeleportReport {
    char basis = 'Z';   // input eigenbasis on the data (surface) code
    int sign = 0;       // input eigenvalue bit (0 -> +1, 1 -> -1)
    int m_zz = 0;
    int m_x = 0;
    bool checks_clean = false;  // destructive-readout X-check parities all 0
    char output_basis = '?';    // S basis S^dag
    int output_sign = -1;       // measured eigenvalue bit of the output logical
    bool ok = false;
};

// Full physical-level run of the Clifford analog of the teleportation
// protocol: the color code carries the resource S|+bar> (via transversal
// S^{t_sign}), the surface code carries a logical Pauli eigenstate, the
// merged code measures ZbarZbar, the ancillas are split out, the color block
// is destructively read in the X basis, and the Pauli correction
// Zbar^(m_ZZ xor m_X) lands on the surface code. The report records whether
// the output matches S P S^dag on the input eigenstate.
TeleportReport teleport_clifford_resource(const ColorCodeBundle& color,
                                          const SurfaceCodeBundle& surf, int t_sign, char basis,
                                          int sign, uint64_t seed,
                                          std::optional<int> force_mzz = std::nullopt,
                                          std::optional<int> force_mx = std::nullopt);

}  // namespace msurg
