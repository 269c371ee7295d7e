#include "adnil/nilpotence.hpp"

#include <doctest.h>

using namespace adnil;

namespace {

IdealSet ideal_of(const RootSystem& rs, std::initializer_list<Root> roots) {
    IdealSet s;
    for (const Root& r : roots) s.set(rs.index_of(r).value());
    REQUIRE(is_dual_order_ideal(rs, s));
    return s;
}

}  // namespace

TEST_CASE("oracle on small cases") {
    const RootSystem a4(LieType{Family::A, 4});
    CHECK(nilpotence_oracle(a4, IdealSet()) == 0);
    CHECK(nilpotence_oracle(a4, a4.all_roots()) == 4);
    for (LieType lt : {LieType{Family::B, 3}, LieType{Family::E, 8}, LieType{Family::G, 2}}) {
        const RootSystem rs(lt);
        CHECK(nilpotence_oracle(rs, rs.up_set(*rs.highest_root())) == 1);
    }
    const RootSystem d2(LieType{Family::D, 2});
    CHECK(nilpotence_oracle(d2, d2.all_roots()) == 1);
}

TEST_CASE("type A partitions") {
    const RootSystem a3(LieType{Family::A, 3});
    const IdealSet s = ideal_of(a3, {{1, 1, 1}, {1, 1, 0}, {1, 0, 0}, {0, 1, 1}});
    CHECK(ideal_to_partition_A(a3, s) == Partition{3, 1, 0});
    CHECK(ideal_to_partition_A(a3, IdealSet()).empty());
    CHECK(ideal_to_partition_A(a3, a3.all_roots()) == Partition{3, 2, 1});
    for (const IdealSet& t : enumerate_ideals(a3)) CHECK(partition_to_ideal_A(a3, ideal_to_partition_A(a3, t)) == t);
}

TEST_CASE("fillings for n = 4") {
    const Filling f1 = filling_algorithm(Partition{2, 1, 0, 0}, 4);
    CHECK(f1.at(1, 1) == 1);
    CHECK(f1.at(1, 2) == 1);
    CHECK(f1.at(1, 3) == 0);
    CHECK(f1.at(1, 4) == 0);
    CHECK(filling_algorithm(Partition{3, 3, 2, 1}, 4).top() == 3);
    CHECK(filling_algorithm(Partition{4, 3, 2, 1}, 4).top() == 4);
    CHECK(filling_algorithm(Partition{4, 3, 2, 1}, 4).monotone());
}

TEST_CASE("staircase recursion and zigzag") {
    const Partition p{10, 10, 9, 6, 5, 4, 4, 3, 1, 1, 1, 1, 0};
    CHECK(nilpotence_recursive(p, 13) == 3);
    CHECK(zigzag_class(p, 13) == 3);
    CHECK(filling_algorithm(p, 13).top() == 3);
    CHECK(nilpotence_recursive(Partition{0, 0, 0}) == 0);
    CHECK(nilpotence_recursive(Partition{1}, 1) == 1);
    CHECK(zigzag_class(Partition{}, 5) == 0);
    for (int n = 1; n <= 9; ++n) {
        std::vector<int> full;
        for (int i = n; i >= 1; --i) full.push_back(i);
        CHECK(zigzag_class(Partition(full), n) == n);
        CHECK(nilpotence_recursive(Partition(full), n) == n);
    }
}

TEST_CASE("shifted diagrams of the classical types") {
    const RootSystem c3(LieType{Family::C, 3});
    const IdealSet s = ideal_of(c3, {{2, 2, 1}, {1, 2, 1}, {1, 1, 1}, {0, 2, 1}});
    const ShiftedEncoding enc = ideal_to_shifted(c3, s);
    CHECK(enc.diagram == ShiftedPartition{3, 1});
    CHECK_FALSE(enc.swapped);
    CHECK(enc.diagram.fits_shifted_staircase(5));
    CHECK(symmetric_completion(enc.diagram, Family::C, 3) == Partition{3, 2, 1});

    const ShiftedEncoding none = ideal_to_shifted(c3, IdealSet());
    CHECK(none.diagram.empty());
    CHECK_FALSE(none.swapped);
    CHECK(symmetric_completion(none.diagram, Family::C, 3).empty());
}

TEST_CASE("type B completion example") {
    const RootSystem b3(LieType{Family::B, 3});
    const IdealSet s = ideal_of(b3, {{1, 2, 2}, {1, 1, 2}, {0, 1, 2}});
    CHECK(symmetric_completion(ideal_to_shifted(b3, s).diagram, Family::B, 3) == Partition{2, 2, 1});
}

TEST_CASE("type D example needs the swapped diagram") {
    const RootSystem d4(LieType{Family::D, 4});
    const IdealSet s =
        ideal_of(d4, {{1, 2, 1, 1}, {1, 1, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}, {0, 1, 1, 1}, {0, 1, 1, 0}});
    const ShiftedEncoding enc = ideal_to_shifted(d4, s);
    CHECK(enc.swapped);
    CHECK(symmetric_completion(enc.diagram, Family::D, 4) == Partition{4, 3, 1, 1});
    CHECK(shifted_to_ideal(d4, enc.diagram, enc.swapped) == s);
    CHECK(nilpotence_via_p43(d4, s) == nilpotence_oracle(d4, s));
}

TEST_CASE("type C examples in rank 9") {
    const RootSystem c9(LieType{Family::C, 9});
    const ShiftedPartition even{16, 13, 11, 8, 7, 5, 3};
    const IdealSet s = shifted_to_ideal(c9, even);
    CHECK(is_dual_order_ideal(c9, s));
    CHECK(nilpotence_oracle(c9, s) == 6);
    CHECK(nilpotence_via_p43(c9, s) == 6);
    const Partition completion = symmetric_completion(even, Family::C, 9);
    CHECK(completion == Partition{16, 14, 13, 11, 11, 10, 9, 7, 7, 6, 5, 3, 3, 2, 1, 1});
    CHECK(completion.conjugate() == completion);
    CHECK(completion.size() == 119);

    const ShiftedPartition odd{16, 13, 11, 8, 5, 3, 1};
    const IdealSet t = shifted_to_ideal(c9, odd);
    CHECK(nilpotence_oracle(c9, t) == 5);
    CHECK(nilpotence_via_p43(c9, t) == 5);
}

TEST_CASE("completions are symmetric for every diagram") {
    for (int n = 2; n <= 6; ++n) {
        const RootSystem c(LieType{Family::C, n});
        for (const IdealSet& s : enumerate_ideals(c)) {
            const Partition p = symmetric_completion(ideal_to_shifted(c, s).diagram, Family::C, n);
            CHECK(p.conjugate() == p);
            CHECK(p.fits_staircase(2 * n - 1));
        }
        for (Family f : {Family::B, Family::D}) {
            if (f == Family::D && n < 3) continue;
            const RootSystem rs(LieType{f, n});
            const int N = completion_staircase(f, n);
            for (const IdealSet& s : enumerate_ideals(rs)) {
                const Partition p = symmetric_completion(ideal_to_shifted(rs, s).diagram, f, n);
                std::vector<int> tail(p.parts.begin() + std::min<std::size_t>(1, p.parts.size()), p.parts.end());
                const Partition t(tail);
                CHECK(t.conjugate() == t);
                CHECK(p.fits_staircase(N));
                for (int i = 2; i <= N; ++i) CHECK(p[i] != i - 1);
            }
        }
    }
}

TEST_CASE("shifted encodings round-trip") {
    for (LieType lt : {LieType{Family::B, 5}, LieType{Family::C, 5}, LieType{Family::D, 5}}) {
        const RootSystem rs(lt);
        for (const IdealSet& s : enumerate_ideals(rs)) {
            const ShiftedEncoding enc = ideal_to_shifted(rs, s);
            CHECK(enc.diagram.valid());
            CHECK(shifted_to_ideal(rs, enc.diagram, enc.swapped) == s);
        }
    }
}
