#include "adnil/rootsys.hpp"

#include <doctest.h>

using namespace adnil;

namespace {

Root r(std::initializer_list<int> v) { return Root(v); }

}  // namespace

TEST_CASE("positive root counts and highest roots") {
    const RootSystem a3(LieType{Family::A, 3});
    CHECK(a3.size() == 6);
    CHECK(a3.root(*a3.highest_root()) == r({1, 1, 1}));

    const RootSystem c3(LieType{Family::C, 3});
    CHECK(c3.size() == 9);
    CHECK(c3.root(*c3.highest_root()) == r({2, 2, 1}));

    const RootSystem e8(LieType{Family::E, 8});
    CHECK(e8.size() == 120);
    CHECK(e8.coxeter_number() == 30);
    CHECK(e8.exponents() == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
    CHECK(2 * e8.size() == e8.rank() * e8.coxeter_number());
}

TEST_CASE("sizes match n h / 2 for every family") {
    for (LieType lt : {LieType{Family::A, 7}, LieType{Family::B, 5}, LieType{Family::C, 6}, LieType{Family::D, 5},
                       LieType{Family::E, 6}, LieType{Family::E, 7}, LieType{Family::F, 4}, LieType{Family::G, 2}}) {
        const RootSystem rs(lt);
        CAPTURE(lt.name());
        CHECK(2 * rs.size() == rs.rank() * rs.coxeter_number());
        CHECK(*rs.highest_root() == 0);
        CHECK(rs.exponents().back() + 1 == rs.coxeter_number());
    }
}

TEST_CASE("D2 has no highest root") {
    const RootSystem d2(LieType{Family::D, 2});
    CHECK(d2.size() == 2);
    CHECK_FALSE(d2.highest_root().has_value());
}

TEST_CASE("root order") {
    CHECK(root_leq(r({1, 0}), r({1, 1})));
    CHECK_FALSE(root_leq(r({1, 0}), r({0, 1})));
    const RootSystem c2(LieType{Family::C, 2});
    CHECK(root_leq(c2, r({0, 1}), r({2, 1})));
    CHECK(c2.index_of(r({2, 1})).has_value());
    CHECK_FALSE(c2.index_of(r({2, 2})).has_value());
}

TEST_CASE("total count formula") {
    CHECK(total_count_formula(RootSystem(LieType{Family::F, 4})) == 105);
    CHECK(total_count_formula(RootSystem(LieType{Family::G, 2})) == 8);
    CHECK(total_count_formula(RootSystem(LieType{Family::E, 6})) == 833);
    CHECK(total_count_formula(RootSystem(LieType{Family::E, 7})) == 4160);
    CHECK(total_count_formula(RootSystem(LieType{Family::E, 8})) == 25080);
    CHECK(total_count_formula(RootSystem(LieType{Family::A, 6})) == 429);
    CHECK(total_count_formula(RootSystem(LieType{Family::C, 2})) == 6);
}

TEST_CASE("sum table is symmetric and consistent with coordinates") {
    const RootSystem f4(LieType{Family::F, 4});
    for (int i = 0; i < f4.size(); ++i)
        for (int j = 0; j < f4.size(); ++j) {
            const auto s = f4.sum_index(i, j);
            CHECK(s == f4.sum_index(j, i));
            Root sum = f4.root(i);
            for (int k = 0; k < f4.rank(); ++k) sum[k] += f4.root(j)[k];
            CHECK(s == f4.index_of(sum));
        }
}

TEST_CASE("cell labelling of type A follows the staircase") {
    const RootSystem a3(LieType{Family::A, 3});
    // row i, column j holds a_i + ... + a_{n-j+1}
    CHECK(a3.root(*a3.root_at({1, 1})) == r({1, 1, 1}));
    CHECK(a3.root(*a3.root_at({1, 3})) == r({1, 0, 0}));
    CHECK(a3.root(*a3.root_at({2, 1})) == r({0, 1, 1}));
    CHECK(a3.root(*a3.root_at({3, 1})) == r({0, 0, 1}));
    CHECK_FALSE(a3.root_at({2, 3}).has_value());
}

TEST_CASE("lie type parsing and validation") {
    CHECK(parse_lie_type("e8") == LieType{Family::E, 8});
    CHECK(parse_lie_type("B", 3) == LieType{Family::B, 3});
    CHECK_THROWS_AS(parse_lie_type("E9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lie_type("B1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lie_type("A16"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lie_type("X3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lie_type("C"), std::invalid_argument);
}

TEST_CASE("cartan matrix of G2 is Bourbaki") {
    const auto m = cartan_matrix(LieType{Family::G, 2});
    CHECK(m == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});
}
