#include <doctest.h>

#include <atomic>

#include "q4n/zlattice.hpp"
#include "test_helpers.hpp"

using namespace q4n;
using namespace q4n::testing;

namespace {

IntegerMatrix mat(std::size_t cols, std::vector<std::vector<long>> rows) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Int(rows[r][c]);
    return m;
}

std::vector<Int> vec(std::vector<long> v) {
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Int(v[i]);
    return out;
}

} // namespace

TEST_SUITE("zlattice") {

TEST_CASE("hnf of identity and canonical small cases") {
    CHECK(hnf(IntegerMatrix::identity(3)) == IntegerMatrix::identity(3));
    // [[0,2],[3,0]] row-reduces to [[3,0],[0,2]]
    CHECK(hnf(mat(2, {{0, 2}, {3, 0}})) == mat(2, {{3, 0}, {0, 2}}));
    // zero rows are dropped
    CHECK(hnf(mat(2, {{0, 0}, {1, 1}})).rows() == 1);
}

TEST_CASE("hnf idempotence and canonicity under unimodular transforms") {
    for (int t = 0; t < 50; ++t) {
        IntegerMatrix a = random_matrix(4, 4, -5, 5);
        IntegerMatrix h = hnf(a);
        CHECK(hnf(h) == h);
        IntegerMatrix u = random_unimodular(4);
        CHECK(hnf(u * a) == h);
    }
}

TEST_CASE("hnf transform identity") {
    for (int t = 0; t < 30; ++t) {
        IntegerMatrix a = random_matrix(5, 3, -9, 9);
        HnfTransform tr = hnf_with_transform(a);
        CHECK(tr.u * a == tr.h);
        // u must be unimodular: its own HNF is the identity
        CHECK(hnf(tr.u) == IntegerMatrix::identity(a.rows()));
    }
}

TEST_CASE("snf small cases") {
    SnfResult s = snf(mat(2, {{2, 0}, {0, 3}}));
    REQUIRE(s.invariant_factors.size() == 2);
    CHECK(s.invariant_factors[0] == 1);
    CHECK(s.invariant_factors[1] == 6);

    CHECK(snf(IntegerMatrix(3, 3)).invariant_factors.empty());

    s = snf(IntegerMatrix::identity(4));
    CHECK(s.invariant_factors == std::vector<Int>(4, Int(1)));
}

TEST_CASE("snf contract and minor-gcd oracle") {
    for (int t = 0; t < 60; ++t) {
        std::size_t r = static_cast<std::size_t>(rand_int(1, 4));
        std::size_t c = static_cast<std::size_t>(rand_int(1, 4));
        IntegerMatrix a = random_matrix(r, c, -5, 5);
        SnfResult s = snf(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(hnf(s.u) == IntegerMatrix::identity(r));
        CHECK(hnf(s.v) == IntegerMatrix::identity(c));
        // divisibility chain
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        CHECK(s.invariant_factors == minor_gcd_invariants(a));
    }
}

TEST_CASE("snf cancellation") {
    std::atomic<bool> stop{true};
    IntegerMatrix a = random_matrix(6, 6, -5, 5);
    CHECK_THROWS_AS(snf(a, [&] { return stop.load(); }), OperationCancelled);
}

TEST_CASE("kernel basics") {
    CHECK(kernel(IntegerMatrix::identity(3)).rank() == 0);
    IntegerLattice k = kernel(mat(1, {{1}, {1}}));
    REQUIRE(k.rank() == 1);
    CHECK((k.basis().row(0) == vec({1, -1}) || k.basis().row(0) == vec({-1, 1})));
}

TEST_CASE("kernel is saturated and annihilates") {
    for (int t = 0; t < 40; ++t) {
        IntegerMatrix a = random_matrix(4, 3, -5, 5);
        IntegerLattice k = kernel(a);
        CHECK(k.rank() == 4 - bareiss_rank(a));
        for (std::size_t r = 0; r < k.rank(); ++r) {
            auto prod = mat_vec(k.basis().row(r), a);
            for (const Int& x : prod) CHECK(x == 0);
        }
        if (k.rank() > 0) {
            SnfResult s = snf(k.basis());
            for (const Int& f : s.invariant_factors) CHECK(f == 1);
        }
    }
}

TEST_CASE("image basics") {
    CHECK(image(IntegerMatrix::identity(2)) == IntegerLattice::full(2));
    IntegerMatrix two = mat(2, {{2, 0}, {0, 2}});
    CHECK(lattice_index(image(two)) == 4);
    IntegerLattice g = image(mat(2, {{2, 0}, {3, 0}}));
    REQUIRE(g.rank() == 1);
    CHECK(g.basis().row(0) == vec({1, 0}));
}

TEST_CASE("membership basics") {
    IntegerLattice l = image(mat(2, {{2, 0}}));
    CHECK(membership(vec({0, 0}), l));
    CHECK_FALSE(membership(vec({1, 0}), l));
    CHECK(membership(vec({-6, 0}), l));
    CHECK_THROWS_AS(membership(vec({1, 2, 3}), l), std::invalid_argument);
}

TEST_CASE("membership in Gaussian-integer coordinates") {
    // right multiplication by a+by on Z[y]/<y^2+1> in the basis (1, y):
    // (a-b) + (a+b)y = (1+y)(a+by) always lies in the image
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            if (a == 0 && b == 0) continue;
            IntegerLattice im = image(mat(2, {{a, b}, {-b, a}}));
            CHECK(membership(vec({a - b, a + b}), im));
        }
}

TEST_CASE("sum and intersection basics") {
    IntegerLattice a = image(mat(2, {{2, 0}}));
    IntegerLattice b = image(mat(2, {{0, 3}}));
    CHECK(lattice_sum(a, a) == a);
    CHECK(lattice_sum(a, IntegerLattice::zero(2)) == a);
    CHECK(lattice_sum(a, b) == image(mat(2, {{2, 0}, {0, 3}})));

    IntegerLattice c = image(mat(2, {{3, 0}}));
    CHECK(lattice_intersect(a, a) == a);
    CHECK(lattice_intersect(a, c) == image(mat(2, {{6, 0}})));
    CHECK(lattice_intersect(a, IntegerLattice::full(2)) == a);
}

TEST_CASE("quotient invariants") {
    IntegerLattice full2 = IntegerLattice::full(2);
    IntegerLattice twice = image(mat(2, {{2, 0}, {0, 2}}));
    CHECK(quotient_invariants(twice, full2) == std::vector<Int>{Int(2), Int(2)});
    CHECK(quotient_invariants(full2, full2) == std::vector<Int>{Int(1), Int(1)});
    // free part reported as zeros
    IntegerLattice line = image(mat(2, {{1, 0}}));
    CHECK(quotient_invariants(line, full2) == std::vector<Int>{Int(1), Int(0)});
    CHECK_THROWS_AS(quotient_invariants(full2, twice), std::domain_error);
}

TEST_CASE("box-point agreement between kernel and direct enumeration") {
    int nontrivial = 0;
    for (int t = 0; t < 120; ++t) {
        std::size_t r = static_cast<std::size_t>(rand_int(1, 4));
        std::size_t c = static_cast<std::size_t>(rand_int(1, 4));
        IntegerMatrix a = random_matrix(r, c, -5, 5);
        IntegerLattice k = kernel(a);
        if (k.rank() > 0) ++nontrivial;

        // direct enumeration of the box
        std::vector<std::vector<Int>> direct;
        std::vector<Int> v(r, Int(0));
        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
            if (pos == r) {
                auto prod = mat_vec(v, a);
                for (const Int& x : prod)
                    if (x != 0) return;
                direct.push_back(v);
                return;
            }
            for (long val = -5; val <= 5; ++val) {
                v[pos] = Int(val);
                rec(pos + 1);
            }
            v[pos] = 0;
        };
        rec(0);
        std::sort(direct.begin(), direct.end());
        CHECK(direct == lattice_points_in_box(k, 5));
    }
    CHECK(nontrivial > 10);
}

TEST_CASE("box-point agreement for intersection and sum") {
    for (int t = 0; t < 60; ++t) {
        std::size_t m = static_cast<std::size_t>(rand_int(1, 3));
        IntegerLattice l1 = image(random_matrix(static_cast<std::size_t>(rand_int(1, 3)), m, -4, 4));
        IntegerLattice l2 = image(random_matrix(static_cast<std::size_t>(rand_int(1, 3)), m, -4, 4));
        IntegerLattice isec = lattice_intersect(l1, l2);
        IntegerLattice sum = lattice_sum(l1, l2);

        CHECK(l1.contains(isec));
        CHECK(l2.contains(isec));
        CHECK(sum.contains(l1));
        CHECK(sum.contains(l2));

        auto p1 = lattice_points_in_box(l1, 6);
        auto p2 = lattice_points_in_box(l2, 6);
        std::vector<std::vector<Int>> both;
        std::set_intersection(p1.begin(), p1.end(), p2.begin(), p2.end(),
                              std::back_inserter(both));
        CHECK(both == lattice_points_in_box(isec, 6));
    }
}

TEST_CASE("reduce produces canonical residues") {
    for (int t = 0; t < 30; ++t) {
        IntegerLattice l = image(random_matrix(3, 3, -4, 4));
        std::vector<Int> v = random_matrix(1, 3, -20, 20).row(0);
        std::vector<Int> r = l.reduce(v);
        // v - r lies in the lattice
        std::vector<Int> diff(3);
        for (int i = 0; i < 3; ++i) diff[i] = v[i] - r[i];
        CHECK(l.contains(diff));
        // residues are stable representatives of the coset
        if (l.rank() > 0) {
            std::vector<Int> shifted = v;
            for (int i = 0; i < 3; ++i) shifted[i] += 3 * l.basis()(0, i);
            CHECK(l.reduce(shifted) == r);
        }
    }
}

} // TEST_SUITE
