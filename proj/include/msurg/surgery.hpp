#pragma once

#include <vector>

#include "msurg/css.hpp"

namespace msurg {

// Ordered boundary qubits of a logical Z together with the chain of
// X-checks linking consecutive qubits; the classical-repetition-code
// structure both codes must expose for the merge.
struct SurgeryInterface {
    std::vector<std::size_t> qubit_ids;        // length 2l+1
    std::vector<std::size_t> chain_check_ids;  // length 2l; check i covers qubits {i, i+1}
};

// Checks the repetition structure of an interface against its host code:
// chain check i restricted to the interface is exactly {qubit_i, qubit_{i+1}},
// no other X-check touches interface qubits, and the product of interface
// Z's is a nontrivial logical.
ValidationReport check_interface(const CssCode& code, const SurgeryInterface& iface);

struct MergedCode {
    CssCode code;  // qubits: [A | B | ancillas]
    std::size_t n_a = 0, n_b = 0;
    std::vector<std::size_t> ancilla_ids;      // 2l new qubits
    std::vector<std::size_t> new_z_check_ids;  // 2l+1 added Z-checks (indices into z_checks)
    // Indices of the extended chain X-checks, in interface order.
    std::vector<std::size_t> chain_a_check_ids;
    std::vector<std::size_t> chain_b_check_ids;
    // Interface qubits re-indexed into the merged code.
    std::vector<std::size_t> iface_a, iface_b;
    // Provenance: the unmodified parent codes.
    CssCode parent_a, parent_b;
};

// Appendix-style merge: ancilla c_i between chain checks i of both sides;
// new Z-check j covers {a_j, b_j, c_j, c_{j+1}} with the absent ends dropped.
MergedCode merge(const CssCode& a, const SurgeryInterface& ia, const CssCode& b,
                 const SurgeryInterface& ib);

struct SplitResult {
    CssCode code_a;
    CssCode code_b;
    // frame_a[i] / frame_b[i]: parent-qubit Z-supports to apply when the
    // X-measurement of ancilla i returns 1 (restores chain-check signs).
    std::vector<BitVector> frame_a;
    std::vector<BitVector> frame_b;
};

SplitResult split(const MergedCode& merged);

// m_ZZ = XOR of the new Z-check outcomes.
int logical_zz_from_checks(const MergedCode& merged, const std::vector<int>& outcomes);

}  // namespace msurg
