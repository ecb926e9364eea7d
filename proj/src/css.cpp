#include "msurg/css.hpp"

#include <algorithm>
#include <stdexcept>

namespace msurg {

BitMatrix CssCode::x_matrix() const {
    BitMatrix m(x_checks.size(), n);
    for (std::size_t i = 0; i < x_checks.size(); ++i) m.row(i) = x_checks[i].x;
    return m;
}

BitMatrix CssCode::z_matrix() const {
    BitMatrix m(z_checks.size(), n);
    for (std::size_t i = 0; i < z_checks.size(); ++i) m.row(i) = z_checks[i].z;
    return m;
}

ValidationReport validate(const CssCode& code) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.failures.push_back(std::move(msg));
    };
    for (std::size_t i = 0; i < code.x_checks.size(); ++i)
        if (code.x_checks[i].z.any() || code.x_checks[i].n != code.n)
            fail("x_check " + std::to_string(i) + " is not a pure-X operator on n qubits");
    for (std::size_t i = 0; i < code.z_checks.size(); ++i)
        if (code.z_checks[i].x.any() || code.z_checks[i].n != code.n)
            fail("z_check " + std::to_string(i) + " is not a pure-Z operator on n qubits");
    if (!rep.ok) return rep;
    for (std::size_t i = 0; i < code.x_checks.size(); ++i)
        for (std::size_t j = 0; j < code.z_checks.size(); ++j)
            if (!commutes(code.x_checks[i], code.z_checks[j]))
                fail("x_check " + std::to_string(i) + " anticommutes with z_check " +
                     std::to_string(j));
    auto check_logical = [&](const PauliOperator& l, const std::string& name) {
        for (const auto& c : code.x_checks)
            if (!commutes(l, c)) fail(name + " anticommutes with an x_check");
        for (const auto& c : code.z_checks)
            if (!commutes(l, c)) fail(name + " anticommutes with a z_check");
    };
    for (std::size_t i = 0; i < code.logical_x.size(); ++i)
        check_logical(code.logical_x[i], "logical_x[" + std::to_string(i) + "]");
    for (std::size_t i = 0; i < code.logical_z.size(); ++i)
        check_logical(code.logical_z[i], "logical_z[" + std::to_string(i) + "]");
    if (code.logical_x.size() == code.logical_z.size()) {
        for (std::size_t i = 0; i < code.logical_x.size(); ++i)
            for (std::size_t j = 0; j < code.logical_z.size(); ++j) {
                bool anti = !commutes(code.logical_x[i], code.logical_z[j]);
                if (anti != (i == j))
                    fail("logical pair (" + std::to_string(i) + "," + std::to_string(j) +
                         ") violates symplectic pairing");
            }
    } else if (!code.logical_x.empty() || !code.logical_z.empty()) {
        fail("logical_x and logical_z have different lengths");
    }
    return rep;
}

std::size_t num_logical(const CssCode& code) {
    std::size_t rx = rank(code.x_matrix());
    std::size_t rz = rank(code.z_matrix());
    if (rx + rz > code.n) throw std::runtime_error("num_logical: checks over-determine code");
    return code.n - rx - rz;
}

namespace {

// Greedy support reduction: XOR in stabilizer rows (singly, then in pairs)
// while the weight strictly drops.
BitVector reduce_weight(BitVector v, const std::vector<BitVector>& rows) {
    bool improved = true;
    while (improved) {
        improved = false;
        for (const auto& r : rows) {
            BitVector t = v;
            t.xor_with(r);
            if (t.popcount() < v.popcount()) {
                v = t;
                improved = true;
            }
        }
        if (!improved) {
            for (std::size_t i = 0; i < rows.size() && !improved; ++i)
                for (std::size_t j = i + 1; j < rows.size() && !improved; ++j) {
                    BitVector t = v;
                    t.xor_with(rows[i]);
                    t.xor_with(rows[j]);
                    if (t.popcount() < v.popcount()) {
                        v = t;
                        improved = true;
                    }
                }
        }
    }
    return v;
}

// Basis of ker(constraints) modulo rowspace(quotient).
std::vector<BitVector> logical_candidates(const BitMatrix& constraints,
                                          const BitMatrix& quotient) {
    auto kern = kernel_basis(constraints);
    RowEchelon q = row_echelon(quotient);
    // Extend the quotient echelon with kernel vectors; the ones that add
    // rank are logical-class representatives.
    std::vector<BitVector> reps;
    std::vector<BitVector> rows = q.rows;
    std::vector<std::size_t> pivots = q.pivots;
    for (const auto& v : kern) {
        BitVector r = v;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (r.get(pivots[i])) r.xor_with(rows[i]);
        if (!r.any()) continue;
        std::size_t p = 0;
        while (!r.get(p)) ++p;
        rows.push_back(r);
        pivots.push_back(p);
        reps.push_back(r);
    }
    return reps;
}

}  // namespace

std::pair<std::vector<PauliOperator>, std::vector<PauliOperator>>
logical_representatives(const CssCode& code) {
    std::size_t k = num_logical(code);
    if (k == 0) throw std::runtime_error("logical_representatives: k = 0");
    BitMatrix hx = code.x_matrix(), hz = code.z_matrix();
    auto zreps = logical_candidates(hx, hz);  // pure-Z logicals
    auto xreps = logical_candidates(hz, hx);  // pure-X logicals
    if (zreps.size() != k || xreps.size() != k)
        throw std::runtime_error("logical_representatives: rank bookkeeping mismatch");

    // Transform the Z side so that <X_i, Z_j> = delta_ij.
    // pairing M_ij = xreps[i] . zreps[j]; Z' = (M^T)^{-1} Z.
    std::vector<BitVector> m(k, BitVector(k)), inv(k, BitVector(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[j].set(i, xreps[i].dot(zreps[j]));  // M^T
        inv[i].set(i, true);
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && !m[piv].get(c)) ++piv;
        if (piv == k) throw std::runtime_error("logical pairing matrix is singular");
        std::swap(m[c], m[piv]);
        std::swap(inv[c], inv[piv]);
        for (std::size_t i = 0; i < k; ++i)
            if (i != c && m[i].get(c)) {
                m[i].xor_with(m[c]);
                inv[i].xor_with(inv[c]);
            }
    }
    std::vector<BitVector> zpaired;
    for (std::size_t j = 0; j < k; ++j) {
        BitVector v(code.n);
        for (std::size_t mcol = 0; mcol < k; ++mcol)
            if (inv[j].get(mcol)) v.xor_with(zreps[mcol]);
        zpaired.push_back(v);
    }

    std::vector<BitVector> zrows, xrows;
    for (const auto& c : code.z_checks) zrows.push_back(c.z);
    for (const auto& c : code.x_checks) xrows.push_back(c.x);
    std::pair<std::vector<PauliOperator>, std::vector<PauliOperator>> out;
    for (std::size_t i = 0; i < k; ++i) {
        out.first.push_back(PauliOperator::from_x_bits(reduce_weight(xreps[i], xrows)));
        out.second.push_back(PauliOperator::from_z_bits(reduce_weight(zpaired[i], zrows)));
    }
    return out;
}

namespace {

uint64_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    long double acc = 1;
    for (std::size_t i = 0; i < k; ++i) acc = acc * (long double)(n - i) / (long double)(i + 1);
    return acc > 1e18L ? uint64_t(2e18) : uint64_t(acc + 0.5L);
}

// Enumerate weight-w supports in lexicographic order; returns the first
// support whose vector passes the predicate, if any.
template <typename Pred>
std::optional<BitVector> first_passing(std::size_t n, std::size_t w, Pred&& pred) {
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    BitVector v(n);
    while (true) {
        for (auto i : idx) v.set(i, true);
        bool hit = pred(v);
        if (hit) return v;
        for (auto i : idx) v.set(i, false);
        // next combination
        std::size_t i = w;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - w) break;
            if (i == 0) return std::nullopt;
        }
        if (idx[i] == i + n - w) return std::nullopt;
        ++idx[i];
        for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

DistanceCertificate distance_brute_force(const CssCode& code, std::size_t w_max,
                                         uint64_t budget) {
    if (num_logical(code) == 0) throw std::runtime_error("distance_brute_force: k = 0");
    uint64_t total = 0;
    for (std::size_t w = 1; w <= w_max; ++w) total += binom(code.n, w);
    if (2 * total > budget)
        throw std::runtime_error("distance_brute_force: enumeration budget exceeded");

    std::vector<BitVector> xcheck_rows, zcheck_rows;
    for (const auto& c : code.x_checks) xcheck_rows.push_back(c.x);
    for (const auto& c : code.z_checks) zcheck_rows.push_back(c.z);
    RowEchelon hz_ech = row_echelon(code.z_matrix());
    RowEchelon hx_ech = row_echelon(code.x_matrix());

    DistanceCertificate cert;
    cert.checked_weight = w_max;
    for (std::size_t w = 1; w <= w_max; ++w) {
        // Z-type errors first, then X-type; first hit at the lowest weight wins.
        auto z_hit = first_passing(code.n, w, [&](const BitVector& v) {
            for (const auto& row : xcheck_rows)
                if (row.dot(v)) return false;
            return !hz_ech.contains(v);
        });
        if (z_hit) {
            cert.found_weight = w;
            cert.witness = PauliOperator::from_z_bits(*z_hit);
            return cert;
        }
        auto x_hit = first_passing(code.n, w, [&](const BitVector& v) {
            for (const auto& row : zcheck_rows)
                if (row.dot(v)) return false;
            return !hx_ech.contains(v);
        });
        if (x_hit) {
            cert.found_weight = w;
            cert.witness = PauliOperator::from_x_bits(*x_hit);
            return cert;
        }
    }
    return cert;
}

bool is_nontrivial_logical(const CssCode& code, const PauliOperator& p) {
    for (const auto& c : code.x_checks)
        if (!commutes(p, c)) return false;
    for (const auto& c : code.z_checks)
        if (!commutes(p, c)) return false;
    bool x_stab = !p.x.any() || in_rowspace(code.x_matrix(), p.x);
    bool z_stab = !p.z.any() || in_rowspace(code.z_matrix(), p.z);
    return !(x_stab && z_stab);
}

bool same_logical_class(const CssCode& code, const PauliOperator& a, const PauliOperator& b) {
    BitVector dx = a.x, dz = a.z;
    dx.xor_with(b.x);
    dz.xor_with(b.z);
    return in_rowspace(code.x_matrix(), dx) && in_rowspace(code.z_matrix(), dz);
}

nlohmann::json code_to_json(const CssCode& code) {
    nlohmann::json j;
    j["n"] = code.n;
    auto dump = [](const std::vector<PauliOperator>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& p : v) a.push_back(to_string(p));
        return a;
    };
    j["x_checks"] = dump(code.x_checks);
    j["z_checks"] = dump(code.z_checks);
    j["logical_x"] = dump(code.logical_x);
    j["logical_z"] = dump(code.logical_z);
    j["labels"] = code.labels.is_null() ? nlohmann::json::object() : code.labels;
    return j;
}

CssCode code_from_json(const nlohmann::json& j) {
    CssCode c;
    c.n = j.at("n").get<std::size_t>();
    auto load = [](const nlohmann::json& a) {
        std::vector<PauliOperator> v;
        for (const auto& s : a) v.push_back(pauli_from_string(s.get<std::string>()));
        return v;
    };
    c.x_checks = load(j.at("x_checks"));
    c.z_checks = load(j.at("z_checks"));
    if (j.contains("logical_x")) c.logical_x = load(j.at("logical_x"));
    if (j.contains("logical_z")) c.logical_z = load(j.at("logical_z"));
    if (j.contains("labels")) c.labels = j.at("labels");
    return c;
}

}  // namespace msurg
