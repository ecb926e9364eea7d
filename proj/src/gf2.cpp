#include "msurg/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace msurg {

void BitVector::xor_with(const BitVector& o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVector size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

bool BitVector::dot(const BitVector& o) const {
    if (o.n_ != n_) throw std::invalid_argument("BitVector size mismatch");
    uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

bool BitVector::any() const {
    for (uint64_t w : w_)
        if (w) return true;
    return false;
}

bool BitVector::overlaps(const BitVector& o) const {
    if (o.n_ != n_) throw std::invalid_argument("BitVector size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s.push_back(i);
    return s;
}

BitVector BitVector::from_support(std::size_t n, const std::vector<std::size_t>& idx) {
    BitVector v(n);
    for (auto i : idx) v.set(i, true);
    return v;
}

BitMatrix::BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
    cols_ = rows_.empty() ? 0 : rows_[0].size();
    for (const auto& r : rows_)
        if (r.size() != cols_) throw std::invalid_argument("ragged BitMatrix");
}

void BitMatrix::append_row(const BitVector& r) {
    if (rows_.empty() && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    rows_.push_back(r);
}

BitVector BitMatrix::apply(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    BitVector y(rows());
    for (std::size_t i = 0; i < rows(); ++i) y.set(i, rows_[i].dot(v));
    return y;
}

BitVector RowEchelon::reduce(const BitVector& v) const {
    BitVector r = v;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (r.get(pivots[i])) r.xor_with(rows[i]);
    return r;
}

bool RowEchelon::contains(const BitVector& v) const { return !reduce(v).any(); }

RowEchelon row_echelon(const BitMatrix& m) {
    RowEchelon e;
    e.cols = m.cols();
    std::vector<BitVector> work;
    work.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) work.push_back(m.row(i));
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < work.size(); ++c) {
        std::size_t piv = r;
        while (piv < work.size() && !work[piv].get(c)) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[r], work[piv]);
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != r && work[i].get(c)) work[i].xor_with(work[r]);
        e.pivots.push_back(c);
        ++r;
    }
    // Rows are collected only after elimination finished, so each stored row
    // is fully reduced (zero in every other pivot column).
    for (std::size_t i = 0; i < r; ++i) e.rows.push_back(work[i]);
    return e;
}

std::size_t rank(const BitMatrix& m) { return row_echelon(m).rank(); }

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    RowEchelon e = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<BitVector> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        BitVector v(m.cols());
        v.set(c, true);
        for (std::size_t i = 0; i < e.rows.size(); ++i)
            if (e.rows[i].get(c)) v.set(e.pivots[i], true);
        basis.push_back(v);
    }
    return basis;
}

bool in_rowspace(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("in_rowspace: size mismatch");
    return row_echelon(m).contains(v);
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    // Eliminate on rows of [M | b].
    std::vector<BitVector> work;
    BitVector rhs = b;
    for (std::size_t i = 0; i < m.rows(); ++i) work.push_back(m.row(i));
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> pivrow;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < work.size(); ++c) {
        std::size_t piv = r;
        while (piv < work.size() && !work[piv].get(c)) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[r], work[piv]);
        bool br = rhs.get(r), bp = rhs.get(piv);
        rhs.set(r, bp);
        rhs.set(piv, br);
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != r && work[i].get(c)) {
                work[i].xor_with(work[r]);
                rhs.set(i, rhs.get(i) ^ rhs.get(r));
            }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < work.size(); ++i)
        if (rhs.get(i)) return std::nullopt;  // inconsistent
    BitVector x(m.cols());
    for (std::size_t i = 0; i < r; ++i) x.set(pivots[i], rhs.get(i));
    return x;
}

}  // namespace msurg
