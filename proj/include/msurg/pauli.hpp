#pragma once

#include <string>

#include "msurg/gf2.hpp"

namespace msurg {

// n-qubit Pauli operator stored as i^phase * prod_j X_j^{x_j} Z_j^{z_j},
// with X written before Z inside each qubit. Under this convention
// (x=1,z=1,phase=1) is +Y, and (x=1,z=1,phase=0) is -iY.
struct PauliOperator {
    std::size_t n = 0;
    BitVector x;
    BitVector z;
    int phase = 0;  // exponent of i, mod 4

    PauliOperator() = default;
    explicit PauliOperator(std::size_t n_) : n(n_), x(n_), z(n_) {}

    static PauliOperator identity(std::size_t n);
    // Single-qubit X/Y/Z at position q (positive sign).
    static PauliOperator single(std::size_t n, std::size_t q, char kind);
    static PauliOperator from_x_bits(const BitVector& xs);
    static PauliOperator from_z_bits(const BitVector& zs);

    std::size_t weight() const;
    bool is_identity() const { return !x.any() && !z.any() && phase == 0; }
    // True when the operator squares to +I (phase is a pure sign).
    bool is_hermitian() const;
    // +1 or -1 for a Hermitian operator.
    int sign() const;

    bool operator==(const PauliOperator& o) const {
        return n == o.n && x == o.x && z == o.z && phase == o.phase;
    }
    bool operator!=(const PauliOperator& o) const { return !(*this == o); }
};

bool commutes(const PauliOperator& p, const PauliOperator& q);
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

// Text format: optional sign among {+, -, +i, -i} followed by n letters
// from {I,X,Y,Z}. Round-trips bit-exactly.
std::string to_string(const PauliOperator& p);
PauliOperator pauli_from_string(const std::string& s);

}  // namespace msurg
