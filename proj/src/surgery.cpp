#include "msurg/surgery.hpp"

#include <set>
#include <stdexcept>

namespace msurg {

namespace {

void fail(ValidationReport& r, const std::string& msg) {
    r.ok = false;
    r.failures.push_back(msg);
}

}  // namespace

ValidationReport check_interface(const CssCode& code, const SurgeryInterface& iface) {
    ValidationReport r;
    const auto& q = iface.qubit_ids;
    const auto& c = iface.chain_check_ids;
    if (q.size() < 2 || c.size() + 1 != q.size()) {
        fail(r, "interface: need 2l+1 qubits and 2l chain checks");
        return r;
    }
    std::set<std::size_t> qset(q.begin(), q.end());
    if (qset.size() != q.size()) fail(r, "interface: duplicate qubit ids");

    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= code.x_checks.size()) {
            fail(r, "interface: chain check id out of range");
            continue;
        }
        const BitVector& sup = code.x_checks[c[i]].x;
        std::size_t hits = 0;
        bool covers = sup.get(q[i]) && sup.get(q[i + 1]);
        for (auto qq : q)
            if (sup.get(qq)) ++hits;
        if (!covers || hits != 2)
            fail(r, "interface: chain check " + std::to_string(i) +
                        " does not restrict to {q_i, q_{i+1}}");
    }

    std::set<std::size_t> cset(c.begin(), c.end());
    for (std::size_t j = 0; j < code.x_checks.size(); ++j) {
        if (cset.count(j)) continue;
        for (auto qq : q)
            if (code.x_checks[j].x.get(qq)) {
                fail(r, "interface: non-chain X-check " + std::to_string(j) +
                            " touches interface qubit " + std::to_string(qq));
                break;
            }
    }

    PauliOperator zprod = PauliOperator::from_z_bits(BitVector::from_support(code.n, q));
    if (!is_nontrivial_logical(code, zprod))
        fail(r, "interface: product of interface Z's is not a nontrivial logical");
    return r;
}

MergedCode merge(const CssCode& a, const SurgeryInterface& ia, const CssCode& b,
                 const SurgeryInterface& ib) {
    if (ia.qubit_ids.size() != ib.qubit_ids.size())
        throw std::invalid_argument("merge: interface lengths differ");
    auto ra = check_interface(a, ia);
    auto rb = check_interface(b, ib);
    if (!ra.ok || !rb.ok) throw std::invalid_argument("merge: invalid interface");

    const std::size_t n_a = a.n, n_b = b.n;
    const std::size_t L = ia.chain_check_ids.size();  // 2l ancillas
    const std::size_t n = n_a + n_b + L;

    MergedCode m;
    m.n_a = n_a;
    m.n_b = n_b;
    m.parent_a = a;
    m.parent_b = b;
    m.code.n = n;
    for (std::size_t i = 0; i < L; ++i) m.ancilla_ids.push_back(n_a + n_b + i);
    for (auto q : ia.qubit_ids) m.iface_a.push_back(q);
    for (auto q : ib.qubit_ids) m.iface_b.push_back(q + n_a);

    auto embed = [&](const PauliOperator& p, std::size_t offset) {
        PauliOperator out(n);
        for (auto i : p.x.support()) out.x.set(offset + i, true);
        for (auto i : p.z.support()) out.z.set(offset + i, true);
        out.phase = p.phase;
        return out;
    };

    // X-checks: all parent checks; chain check i on each side gains ancilla c_i.
    for (std::size_t j = 0; j < a.x_checks.size(); ++j)
        m.code.x_checks.push_back(embed(a.x_checks[j], 0));
    for (std::size_t j = 0; j < b.x_checks.size(); ++j)
        m.code.x_checks.push_back(embed(b.x_checks[j], n_a));
    for (std::size_t i = 0; i < L; ++i) {
        m.code.x_checks[ia.chain_check_ids[i]].x.set(m.ancilla_ids[i], true);
        m.code.x_checks[a.x_checks.size() + ib.chain_check_ids[i]].x.set(m.ancilla_ids[i], true);
        m.chain_a_check_ids.push_back(ia.chain_check_ids[i]);
        m.chain_b_check_ids.push_back(a.x_checks.size() + ib.chain_check_ids[i]);
    }

    // Z-checks: all parent checks, then 2l+1 new ones {a_j, b_j, c_j, c_{j+1}}.
    for (std::size_t j = 0; j < a.z_checks.size(); ++j)
        m.code.z_checks.push_back(embed(a.z_checks[j], 0));
    for (std::size_t j = 0; j < b.z_checks.size(); ++j)
        m.code.z_checks.push_back(embed(b.z_checks[j], n_a));
    for (std::size_t j = 0; j <= L; ++j) {
        PauliOperator p(n);
        p.z.set(m.iface_a[j], true);
        p.z.set(m.iface_b[j], true);
        if (j > 0) p.z.set(m.ancilla_ids[j - 1], true);
        if (j < L) p.z.set(m.ancilla_ids[j], true);
        m.new_z_check_ids.push_back(m.code.z_checks.size());
        m.code.z_checks.push_back(p);
    }

    // Surviving logicals: Z-bar of either parent (same class in the merged
    // code); X-bar_A X-bar_B completed over the ancillas so every extended
    // chain check is commuted with. Ancilla c_i carries X iff the prefix
    // {q_0..q_i} of either interface overlaps the parent X-bar oddly.
    if (a.logical_z.empty() || b.logical_x.empty() || a.logical_x.empty())
        throw std::invalid_argument("merge: parents must carry logical representatives");
    m.code.logical_z = {embed(a.logical_z[0], 0)};

    PauliOperator lx = multiply(embed(a.logical_x[0], 0), embed(b.logical_x[0], n_a));
    for (std::size_t i = 0; i < L; ++i) {
        int par = 0;
        for (std::size_t j = 0; j <= i; ++j)
            par ^= int(lx.x.get(m.iface_a[j])) ^ int(lx.x.get(m.iface_b[j]));
        if (par) lx.x.set(m.ancilla_ids[i], true);
    }
    m.code.logical_x = {lx};

    m.code.labels["family"] = "merged";
    return m;
}

SplitResult split(const MergedCode& merged) {
    SplitResult s;
    s.code_a = merged.parent_a;
    s.code_b = merged.parent_b;
    const std::size_t L = merged.ancilla_ids.size();
    // Ancilla i is read out in the X basis. Outcome 1 flips the sign of the
    // two extended chain checks i. A Z string on the interface prefix
    // {q_0..q_i} anticommutes with chain check i and nothing else (check j
    // covers {q_j, q_{j+1}}, and exactly one endpoint is in the prefix only
    // for j = i), so applying it to each parent flips those checks back.
    for (std::size_t i = 0; i < L; ++i) {
        BitVector fa(merged.n_a), fb(merged.n_b);
        for (std::size_t j = 0; j <= i; ++j) {
            fa.flip(merged.iface_a[j]);
            fb.flip(merged.iface_b[j] - merged.n_a);
        }
        s.frame_a.push_back(fa);
        s.frame_b.push_back(fb);
    }
    return s;
}

int logical_zz_from_checks(const MergedCode& merged, const std::vector<int>& outcomes) {
    if (outcomes.size() != merged.new_z_check_ids.size())
        throw std::invalid_argument("logical_zz_from_checks: outcome count mismatch");
    int m = 0;
    for (int o : outcomes) m ^= (o & 1);
    return m;
}

}  // namespace msurg
