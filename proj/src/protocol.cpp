#include "msurg/protocol.hpp"

#include <stdexcept>

namespace msurg {

PauliOperator embed_at(const PauliOperator& p, std::size_t offset, std::size_t n_total) {
    PauliOperator out(n_total);
    for (auto i : p.x.support()) out.x.set(offset + i, true);
    for (auto i : p.z.support()) out.z.set(offset + i, true);
    out.phase = p.phase;
    return out;
}

PauliOperator logical_y(const CssCode& code) {
    PauliOperator y = multiply(code.logical_x.at(0), code.logical_z.at(0));
    y.phase = (y.phase + 1) % 4;
    if (!y.is_hermitian()) throw std::logic_error("logical_y: not Hermitian");
    return y;
}

void prepare_logical_zero(Tableau& t, const CssCode& code, std::size_t offset) {
    for (const auto& c : code.x_checks)
        t.measure_pauli(embed_at(c, offset, t.num_qubits()), 0);
}

void prepare_logical_plus(Tableau& t, const CssCode& code, std::size_t offset) {
    for (std::size_t i = 0; i < code.n; ++i) t.h(offset + i);
    for (const auto& c : code.z_checks)
        t.measure_pauli(embed_at(c, offset, t.num_qubits()), 0);
}

SurgeryRun run_surgery_measurement(Tableau& t, const MergedCode& merged,
                                   std::optional<int> force_mzz) {
    if (t.num_qubits() != merged.code.n)
        throw std::invalid_argument("run_surgery_measurement: tableau size mismatch");
    SurgeryRun run;

    for (auto a : merged.ancilla_ids) t.h(a);

    const std::size_t last = merged.new_z_check_ids.size() - 1;
    for (std::size_t j = 0; j <= last; ++j) {
        std::optional<int> force;
        if (force_mzz) force = (j < last) ? 0 : *force_mzz;
        int o = t.measure_pauli(merged.code.z_checks[merged.new_z_check_ids[j]], force);
        run.z_outcomes.push_back(o);
        run.m_zz ^= o;
    }
    for (std::size_t i = 0; i < merged.chain_a_check_ids.size(); ++i) {
        run.chain_outcomes.push_back(
            t.measure_pauli(merged.code.x_checks[merged.chain_a_check_ids[i]]));
        run.chain_outcomes.push_back(
            t.measure_pauli(merged.code.x_checks[merged.chain_b_check_ids[i]]));
    }
    for (int o : run.chain_outcomes)
        if (o != 0) throw std::logic_error("run_surgery_measurement: extended chain check flipped");
    return run;
}

void run_split(Tableau& t, const MergedCode& merged, const SplitResult& frames, SurgeryRun& run) {
    const std::size_t n = t.num_qubits();
    for (std::size_t i = 0; i < merged.ancilla_ids.size(); ++i) {
        int o = t.measure_pauli(PauliOperator::single(n, merged.ancilla_ids[i], 'X'));
        run.ancilla_outcomes.push_back(o);
        if (!o) continue;
        PauliOperator fix(n);
        for (auto q : frames.frame_a[i].support()) fix.z.flip(q);
        for (auto q : frames.frame_b[i].support()) fix.z.flip(merged.n_a + q);
        t.apply_pauli(fix);
    }
}

TeleportReport teleport_clifford_resource(const ColorCodeBundle& color,
                                          const SurfaceCodeBundle& surf, int t_sign, char basis,
                                          int sign, uint64_t seed, std::optional<int> force_mzz,
                                          std::optional<int> force_mx) {
    MergedCode merged = merge(color.code, color.interface, surf.code, surf.interface);
    const std::size_t n = merged.code.n;
    const std::size_t off_c = 0, off_s = merged.n_a;
    Tableau t(n, seed);

    // Resource block: |+bar> then transversal S^{t_sign}, giving Sbar|+bar>.
    prepare_logical_plus(t, color.code, off_c);
    for (std::size_t i = 0; i < color.code.n; ++i)
        t_sign > 0 ? t.s(off_c + i) : t.sdg(off_c + i);

    // Data block: the requested logical Pauli eigenstate.
    const PauliOperator sx = embed_at(surf.code.logical_x[0], off_s, n);
    const PauliOperator sz = embed_at(surf.code.logical_z[0], off_s, n);
    const PauliOperator sy = embed_at(logical_y(surf.code), off_s, n);
    switch (basis) {
        case 'Z':
            prepare_logical_zero(t, surf.code, off_s);
            if (sign) t.apply_pauli(sx);
            break;
        case 'X':
            prepare_logical_plus(t, surf.code, off_s);
            if (sign) t.apply_pauli(sz);
            break;
        case 'Y':
            prepare_logical_zero(t, surf.code, off_s);
            t.measure_pauli(sy, sign);
            break;
        default:
            throw std::invalid_argument("teleport: basis must be Z, X, or Y");
    }

    TeleportReport rep;
    rep.basis = basis;
    rep.sign = sign;

    SurgeryRun run = run_surgery_measurement(t, merged, force_mzz);
    rep.m_zz = run.m_zz;
    run_split(t, merged, split(merged), run);

    // Destructive Xbar readout on the color block: pin the logical value
    // first (it is unconstrained), then measure every physical qubit in the
    // X basis and take parities.
    t.measure_pauli(embed_at(color.code.logical_x[0], off_c, n), force_mx);
    std::vector<int> xbits(color.code.n);
    for (std::size_t i = 0; i < color.code.n; ++i)
        xbits[i] = t.measure_pauli(PauliOperator::single(n, off_c + i, 'X'));
    rep.m_x = 0;
    for (auto i : color.code.logical_x[0].x.support()) rep.m_x ^= xbits[i];
    rep.checks_clean = true;
    for (const auto& c : color.code.x_checks) {
        int par = 0;
        for (auto i : c.x.support()) par ^= xbits[i];
        if (par) rep.checks_clean = false;
    }

    // Pauli correction for the S resource: Zbar on the data iff m_ZZ xor m_X.
    if (rep.m_zz ^ rep.m_x) t.apply_pauli(sz);

    // The output must be the S-conjugated eigenstate: Z -> Z, X -> Y, Y -> -X.
    PauliOperator out_op = sz;
    int expected = sign;
    if (basis == 'X') {
        out_op = sy;
        rep.output_basis = 'Y';
    } else if (basis == 'Y') {
        out_op = sx;
        expected ^= 1;
        rep.output_basis = 'X';
    } else {
        rep.output_basis = 'Z';
    }
    auto det = t.deterministic_outcome(out_op);
    if (!det) throw std::logic_error("teleport: output logical is not deterministic");
    rep.output_sign = *det;
    rep.ok = rep.checks_clean && (rep.output_sign == expected);
    return rep;
}

}  // namespace msurg
