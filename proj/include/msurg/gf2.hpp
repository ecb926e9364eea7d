#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace msurg {

// Bit vector over GF(2), packed into 64-bit words. Bits past size() are
// kept zero so word-wise popcounts and dot products are total.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void xor_with(const BitVector& o);
    std::size_t popcount() const;
    // parity of <this, o>
    bool dot(const BitVector& o) const;
    bool any() const;
    bool overlaps(const BitVector& o) const;  // nonempty AND

    std::vector<std::size_t> support() const;
    static BitVector from_support(std::size_t n, const std::vector<std::size_t>& idx);

    bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    const std::vector<uint64_t>& words() const { return w_; }

  private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Dense GF(2) matrix, one BitVector per row.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVector(cols)) {}
    explicit BitMatrix(std::vector<BitVector> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    BitVector& row(std::size_t i) { return rows_[i]; }
    const BitVector& row(std::size_t i) const { return rows_[i]; }
    void append_row(const BitVector& r);

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    // y = M v (length rows()), each entry a row-dot parity.
    BitVector apply(const BitVector& v) const;

  private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

// Row-reduced form with pivot columns; the workhorse for rank, kernel,
// rowspace membership and linear solves.
struct RowEchelon {
    std::vector<BitVector> rows;     // independent rows, echelon order
    std::vector<std::size_t> pivots; // pivot column of each row
    std::size_t cols = 0;

    std::size_t rank() const { return rows.size(); }
    // Reduce v against the echelon rows; returns the residual.
    BitVector reduce(const BitVector& v) const;
    bool contains(const BitVector& v) const;
};

RowEchelon row_echelon(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);
std::vector<BitVector> kernel_basis(const BitMatrix& m);
bool in_rowspace(const BitMatrix& m, const BitVector& v);

// Solve M x = b; returns a particular solution or nullopt.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

}  // namespace msurg
