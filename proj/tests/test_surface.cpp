#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "msurg/surface.hpp"

using namespace msurg;

TEST_CASE("d=3 planar code has 13 qubits and 6+6 checks") {
    auto b = build_surface_code(3);
    CHECK(b.code.n == 13);
    CHECK(b.code.x_checks.size() == 6);
    CHECK(b.code.z_checks.size() == 6);
    CHECK(num_logical(b.code) == 1);
    CHECK(validate(b.code).ok);
}

TEST_CASE("qubit count is d^2 + (d-1)^2") {
    for (int d : {3, 5, 7}) {
        auto b = build_surface_code(d);
        CHECK(b.code.n == std::size_t(d * d + (d - 1) * (d - 1)));
        CHECK(b.code.x_checks.size() == std::size_t(d * (d - 1)));
        CHECK(b.code.z_checks.size() == std::size_t(d * (d - 1)));
        CHECK(num_logical(b.code) == 1);
        CHECK(validate(b.code).ok);
    }
}

TEST_CASE("checks are 3- or 4-body") {
    auto b = build_surface_code(5);
    for (const auto& c : b.code.x_checks) CHECK((c.weight() == 3 || c.weight() == 4));
    for (const auto& c : b.code.z_checks) CHECK((c.weight() == 3 || c.weight() == 4));
}

TEST_CASE("distance certificates") {
    auto b3 = build_surface_code(3);
    auto cert3 = distance_brute_force(b3.code, 3);
    REQUIRE(cert3.found_weight.has_value());
    CHECK(*cert3.found_weight == 3);

    auto b5 = build_surface_code(5);
    auto cert5 = distance_brute_force(b5.code, 5);
    REQUIRE(cert5.found_weight.has_value());
    CHECK(*cert5.found_weight == 5);
}

TEST_CASE("interface: d boundary qubits, d-1 chain checks, nothing else") {
    for (int d : {3, 5}) {
        auto b = build_surface_code(d);
        CHECK(b.interface.qubit_ids.size() == std::size_t(d));
        CHECK(b.interface.chain_check_ids.size() == std::size_t(d - 1));
        for (std::size_t i = 0; i < b.interface.chain_check_ids.size(); ++i) {
            const auto& sup = b.code.x_checks[b.interface.chain_check_ids[i]].x;
            std::size_t hits = 0;
            for (auto q : b.interface.qubit_ids)
                if (sup.get(q)) ++hits;
            CHECK(hits == 2);
            CHECK(sup.get(b.interface.qubit_ids[i]));
            CHECK(sup.get(b.interface.qubit_ids[i + 1]));
        }
        std::set<std::size_t> chain(b.interface.chain_check_ids.begin(),
                                    b.interface.chain_check_ids.end());
        for (std::size_t j = 0; j < b.code.x_checks.size(); ++j) {
            if (chain.count(j)) continue;
            for (auto q : b.interface.qubit_ids) CHECK_FALSE(b.code.x_checks[j].x.get(q));
        }
        auto zprod = PauliOperator::from_z_bits(
            BitVector::from_support(b.code.n, b.interface.qubit_ids));
        CHECK(is_nontrivial_logical(b.code, zprod));
        CHECK(zprod == b.code.logical_z[0]);
    }
}

TEST_CASE("logical pair anticommutes and has weight d") {
    for (int d : {3, 5}) {
        auto b = build_surface_code(d);
        CHECK(b.code.logical_z[0].weight() == std::size_t(d));
        CHECK(b.code.logical_x[0].weight() == std::size_t(d));
        CHECK_FALSE(commutes(b.code.logical_x[0], b.code.logical_z[0]));
    }
}

TEST_CASE("even or tiny d rejected") {
    CHECK_THROWS(build_surface_code(1));
    CHECK_THROWS(build_surface_code(4));
}
