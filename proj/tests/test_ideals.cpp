#include "adnil/ideals.hpp"

#include <doctest.h>

using namespace adnil;

TEST_CASE("antichain to ideal") {
    const RootSystem a2(LieType{Family::A, 2});
    CHECK(antichain_to_ideal(a2, Antichain()).empty());
    Antichain theta;
    theta.set(*a2.highest_root());
    CHECK(antichain_to_ideal(a2, theta) == theta);
    Antichain simple;
    simple.set(*a2.index_of({1, 0}));
    simple.set(*a2.index_of({0, 1}));
    CHECK(antichain_to_ideal(a2, simple) == a2.all_roots());
}

TEST_CASE("minimal elements") {
    const RootSystem a4(LieType{Family::A, 4});
    CHECK(ideal_minimal_elements(a4, IdealSet()).empty());
    const Antichain mins = ideal_minimal_elements(a4, a4.all_roots());
    CHECK(mins.count() == 4);
    mins.for_each([&](int i) { CHECK(a4.height(i) == 1); });
    const RootSystem e6(LieType{Family::E, 6});
    for (int i = 0; i < e6.size(); ++i) {
        Antichain g;
        g.set(i);
        CHECK(ideal_minimal_elements(e6, e6.up_set(i)) == g);
    }
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_ideals(RootSystem(LieType{Family::A, 2})).size() == 5);
    CHECK(enumerate_ideals(RootSystem(LieType{Family::C, 2})).size() == 6);
    CHECK(enumerate_ideals(RootSystem(LieType{Family::G, 2})).size() == 8);
}

TEST_CASE("every enumerated set is an ideal and they are distinct") {
    const RootSystem b4(LieType{Family::B, 4});
    const auto ideals = enumerate_ideals(b4);
    CHECK(ideals.size() == 70);
    for (std::size_t k = 0; k < ideals.size(); ++k) {
        CHECK(is_dual_order_ideal(b4, ideals[k]));
        CHECK(is_antichain(b4, ideal_minimal_elements(b4, ideals[k])));
        CHECK(antichain_to_ideal(b4, ideal_minimal_elements(b4, ideals[k])) == ideals[k]);
        if (k > 0) CHECK(ideals[k - 1] < ideals[k]);
    }
}

TEST_CASE("parallel enumeration equals serial") {
    for (LieType lt : {LieType{Family::E, 6}, LieType{Family::D, 6}, LieType{Family::A, 1}, LieType{Family::D, 2}}) {
        const RootSystem rs(lt);
        CHECK(enumerate_ideals_parallel(rs, 3) == enumerate_ideals(rs));
    }
}

TEST_CASE("dimension") {
    const RootSystem e8(LieType{Family::E, 8});
    CHECK(ideal_dimension(IdealSet()) == 0);
    CHECK(ideal_dimension(e8.all_roots()) == 120);
    CHECK(ideal_dimension(e8.up_set(*e8.highest_root())) == 1);
}
