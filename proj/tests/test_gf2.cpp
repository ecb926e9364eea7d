#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "msurg/gf2.hpp"

using namespace msurg;

TEST_CASE("bitvector basics") {
    BitVector v(130);
    CHECK(v.size() == 130);
    CHECK_FALSE(v.any());
    v.set(0, true);
    v.set(129, true);
    v.flip(64);
    CHECK(v.popcount() == 3);
    CHECK(v.support() == std::vector<std::size_t>{0, 64, 129});
    BitVector w = BitVector::from_support(130, {64, 129});
    CHECK_FALSE(v.dot(w));  // overlap {64, 129}, even
    w.set(64, false);
    CHECK(v.dot(w));
    CHECK(v.overlaps(w));
    v.xor_with(w);
    CHECK_FALSE(v.get(129));
    CHECK(v.get(64));
}

TEST_CASE("dot is a parity") {
    BitVector a = BitVector::from_support(8, {1, 2, 3});
    BitVector b = BitVector::from_support(8, {2, 3, 4});
    CHECK_FALSE(a.dot(b));  // overlap {2,3}, even
    b.flip(1);
    CHECK(a.dot(b));
}

TEST_CASE("rank of zero, identity and single-row matrices") {
    CHECK(rank(BitMatrix(4, 7)) == 0);
    BitMatrix id(5, 5);
    for (int i = 0; i < 5; ++i) id.set(i, i, true);
    CHECK(rank(id) == 5);
    BitMatrix one_row(1, 3);
    one_row.set(0, 0, true);
    one_row.set(0, 1, true);
    CHECK(rank(one_row) == 1);
    auto ker = kernel_basis(one_row);
    CHECK(ker.size() == 2);
    for (const auto& v : ker) CHECK_FALSE(one_row.apply(v).any());
}

TEST_CASE("kernel of identity is empty") {
    BitMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i, true);
    CHECK(kernel_basis(id).empty());
}

TEST_CASE("rank-nullity on random matrices vs naive oracle") {
    // Naive oracle: count echelon pivots by textbook elimination on a copy.
    auto naive_rank = [](BitMatrix m) {
        std::size_t r = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            std::size_t piv = m.rows();
            for (std::size_t i = r; i < m.rows(); ++i)
                if (m.get(i, c)) {
                    piv = i;
                    break;
                }
            if (piv == m.rows()) continue;
            std::swap(m.row(piv), m.row(r));
            for (std::size_t i = 0; i < m.rows(); ++i)
                if (i != r && m.get(i, c)) m.row(i).xor_with(m.row(r));
            ++r;
        }
        return r;
    };
    for (uint64_t seed = 0; seed < 1000; ++seed) {
        std::mt19937_64 rng(seed);
        BitMatrix m(10, 10);
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) m.set(i, j, rng() & 1);
        std::size_t r = rank(m);
        CHECK(r == naive_rank(m));
        CHECK(r + kernel_basis(m).size() == m.cols());
    }
}

TEST_CASE("rowspace membership") {
    BitMatrix id(4, 4);
    for (int i = 0; i < 4; ++i) id.set(i, i, true);
    CHECK(in_rowspace(id, BitVector::from_support(4, {0, 3})));
    BitMatrix m(2, 4);
    m.row(0) = BitVector::from_support(4, {0, 1});
    m.row(1) = BitVector::from_support(4, {1, 2});
    CHECK(in_rowspace(m, BitVector::from_support(4, {0, 2})));
    CHECK_FALSE(in_rowspace(m, BitVector::from_support(4, {3})));
}

TEST_CASE("solve finds particular solutions and detects inconsistency") {
    BitMatrix m(2, 3);
    m.row(0) = BitVector::from_support(3, {0, 1});
    m.row(1) = BitVector::from_support(3, {1, 2});
    BitVector b(2);
    b.set(0, true);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);

    BitMatrix bad(2, 2);
    bad.row(0) = BitVector::from_support(2, {0});
    bad.row(1) = BitVector::from_support(2, {0});
    BitVector c(2);
    c.set(0, true);
    CHECK_FALSE(solve(bad, c).has_value());
}

TEST_CASE("kernel vectors all satisfy Mv=0 on random instances") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        std::mt19937_64 rng(seed);
        BitMatrix m(6, 13);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 13; ++j) m.set(i, j, rng() & 1);
        for (const auto& v : kernel_basis(m)) CHECK_FALSE(m.apply(v).any());
    }
}
