#include "msurg/tableau.hpp"

#include <stdexcept>

namespace msurg {

Tableau::Tableau(std::size_t n, uint64_t seed) : n_(n), rng_(seed) {
    for (std::size_t i = 0; i < n; ++i) {
        stab_.push_back(PauliOperator::single(n, i, 'Z'));    // Z_i
        destab_.push_back(PauliOperator::single(n, i, 'X'));  // X_i
    }
}

// Single-row conjugation rules for the i^phase * prod X^x Z^z convention.
void Tableau::h(std::size_t q) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows) {
            bool x = r.x.get(q), z = r.z.get(q);
            if (x && z) r.phase = (r.phase + 2) % 4;
            r.x.set(q, z);
            r.z.set(q, x);
        }
}

void Tableau::s(std::size_t q) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows)
            if (r.x.get(q)) {
                r.z.flip(q);
                r.phase = (r.phase + 1) % 4;
            }
}

void Tableau::sdg(std::size_t q) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows)
            if (r.x.get(q)) {
                r.z.flip(q);
                r.phase = (r.phase + 3) % 4;
            }
}

void Tableau::x(std::size_t q) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows)
            if (r.z.get(q)) r.phase = (r.phase + 2) % 4;
}

void Tableau::z(std::size_t q) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows)
            if (r.x.get(q)) r.phase = (r.phase + 2) % 4;
}

void Tableau::y(std::size_t q) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows)
            if (r.x.get(q) != r.z.get(q)) r.phase = (r.phase + 2) % 4;
}

void Tableau::cx(std::size_t control, std::size_t target) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows) {
            if (r.x.get(control)) r.x.flip(target);
            if (r.z.get(target)) r.z.flip(control);
        }
}

void Tableau::cz(std::size_t a, std::size_t b) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows) {
            bool xa = r.x.get(a), xb = r.x.get(b);
            if (xb) r.z.flip(a);
            if (xa) r.z.flip(b);
            if (xa && xb) r.phase = (r.phase + 2) % 4;
        }
}

void Tableau::apply_pauli(const PauliOperator& p) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows)
            if (!commutes(r, p)) r.phase = (r.phase + 2) % 4;
}

std::optional<int> Tableau::deterministic_outcome(const PauliOperator& p) const {
    if (!p.is_hermitian()) throw std::invalid_argument("measure: operator is not Hermitian");
    for (const auto& s : stab_)
        if (!commutes(s, p)) return std::nullopt;
    PauliOperator prod = PauliOperator::identity(n_);
    for (std::size_t i = 0; i < n_; ++i)
        if (!commutes(destab_[i], p)) prod = multiply(prod, stab_[i]);
    if (prod.x != p.x || prod.z != p.z)
        throw std::logic_error("measure: commuting operator outside stabilizer group");
    int diff = (prod.phase - p.phase + 4) % 4;
    if (diff % 2 != 0) throw std::logic_error("measure: odd phase offset");
    return diff / 2;
}

int Tableau::measure_pauli(const PauliOperator& p, std::optional<int> force) {
    if (!p.is_hermitian()) throw std::invalid_argument("measure: operator is not Hermitian");
    std::size_t pivot = n_;
    for (std::size_t i = 0; i < n_; ++i)
        if (!commutes(stab_[i], p)) {
            pivot = i;
            break;
        }

    MeasurementRecord rec;
    rec.pauli = to_string(p);
    rec.forced = force.has_value();

    if (pivot == n_) {
        auto det = deterministic_outcome(p);
        if (force && *force != *det)
            throw std::invalid_argument("measure: forced outcome contradicts the state");
        rec.outcome = *det;
        rec.deterministic = true;
        transcript_.push_back(rec);
        return rec.outcome;
    }

    int r = force ? (*force & 1) : int(rng_() & 1);
    PauliOperator old = stab_[pivot];
    for (std::size_t i = 0; i < n_; ++i) {
        if (i != pivot && !commutes(stab_[i], p)) stab_[i] = multiply(old, stab_[i]);
        if (!commutes(destab_[i], p)) destab_[i] = multiply(old, destab_[i]);
    }
    destab_[pivot] = old;
    stab_[pivot] = p;
    stab_[pivot].phase = (p.phase + 2 * r) % 4;

    rec.outcome = r;
    transcript_.push_back(rec);
    return r;
}

int Tableau::measure_z(std::size_t q, std::optional<int> force) {
    return measure_pauli(PauliOperator::single(n_, q, 'Z'), force);
}

nlohmann::json Tableau::transcript_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : transcript_)
        j.push_back({{"pauli", r.pauli},
                     {"outcome", r.outcome},
                     {"deterministic", r.deterministic},
                     {"forced", r.forced}});
    return j;
}

}  // namespace msurg
