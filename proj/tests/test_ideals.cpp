#include <doctest.h>

#include "q4n/ideals.hpp"
#include "test_helpers.hpp"

using namespace q4n;
using namespace q4n::testing;

TEST_SUITE("ideals") {

TEST_CASE("unit ideal and norm ideal") {
    GroupParams p(7);
    IdealLattice unit = left_ideal_lattice(IdealSpec{p, {ZRingElem::one(p)}});
    CHECK(unit.lattice == IntegerLattice::full(28));

    IdealLattice nrm = left_ideal_lattice(IdealSpec{p, {norm_element(p)}});
    CHECK(nrm.lattice.rank() == 1);
    CHECK(is_two_sided(nrm));
}

TEST_CASE("P = <-3+4y, x+1> over ZQ28") {
    GroupParams p(7);
    IdealLattice P = p_ideal(p, Int(-3), Int(4));
    CHECK(P.lattice.rank() == 28);
    CHECK(lattice_index(P.lattice) == 25);
    CHECK(is_two_sided(P));
    CHECK(quotient_structure(P) == std::vector<Int>{Int(25)});
}

TEST_CASE("two-sidedness of <x+1> and a one-sided example") {
    GroupParams p(7);
    ZRingElem xp1 = xpow(p, 1) + ZRingElem::one(p);
    CHECK(is_two_sided(left_ideal_lattice(IdealSpec{p, {xp1}})));

    // x + y generates a left ideal that is not right-closed
    ZRingElem xy = xpow(p, 1) + ypow(p, 1);
    IdealLattice one_sided = left_ideal_lattice(IdealSpec{p, {xy}});
    CHECK_FALSE(is_two_sided(one_sided));
}

TEST_CASE("quotient structure across parameter choices") {
    GroupParams p(7);
    CHECK(quotient_structure(p_ideal(p, Int(1), Int(0))).empty()); // P = ZQ28
    CHECK(quotient_structure(p_ideal(p, Int(2), Int(4))) == std::vector<Int>{Int(2), Int(10)});
}

TEST_CASE("projectivity criterion arithmetic") {
    ProjectivityCriterion c = projectivity_criterion(GroupParams(7), Int(-3), Int(4));
    CHECK(c.k == 25);
    CHECK(c.d == 1);
    CHECK(c.t == 25);
    CHECK(c.coprime);

    c = projectivity_criterion(GroupParams(7), Int(1), Int(1));
    CHECK(c.k == 2);
    CHECK_FALSE(c.coprime);

    // even n uses k = a^2 - b^2
    c = projectivity_criterion(GroupParams(6), Int(3), Int(2));
    CHECK(c.k == 5);
    CHECK(c.coprime); // gcd(5, 12) = 1
}

TEST_CASE("invariant factors are {t, d} on a grid") {
    for (int n : {3, 5, 7, 9}) {
        GroupParams p(n);
        for (long a = -3; a <= 3; ++a)
            for (long b = -3; b <= 3; ++b) {
                if (a == 0 && b == 0) continue;
                ProjectivityCriterion c = projectivity_criterion(p, Int(a), Int(b));
                IdealLattice P = p_ideal(p, Int(a), Int(b));
                CHECK(lattice_index(P.lattice) == abs(c.k));
                CHECK(is_two_sided(P));

                std::vector<Int> expected;
                if (c.d != 1) expected.push_back(c.d);
                Int t_abs = abs(c.t);
                if (t_abs != 1) expected.push_back(t_abs);
                std::sort(expected.begin(), expected.end());
                CHECK(quotient_structure(P) == expected);
            }
    }
}

TEST_CASE("quotient structure beyond 64-bit coefficients") {
    // k = a^2 + b^2 overflows any machine word; the whole pipeline must stay exact
    GroupParams p(7);
    Int a = (Int(1) << 40) + 1, b = 2;
    Int k = a * a + b * b;
    IdealLattice P = p_ideal(p, a, b);
    CHECK(lattice_index(P.lattice) == k);
    CHECK(quotient_structure(P) == std::vector<Int>{k});
}

TEST_CASE("norm product lattices") {
    GroupParams p(7);
    ZRingElem nrm = norm_element(p);

    // N * P = <N> whenever P contains an element of augmentation 1
    IdealLattice P = p_ideal(p, Int(-3), Int(4));
    IntegerLattice norm_ideal = left_ideal_lattice(IdealSpec{p, {nrm}}).lattice;
    CHECK(norm_product_lattice(P) == norm_ideal);

    // N * <N> = <4n N>
    IdealLattice nid = left_ideal_lattice(IdealSpec{p, {nrm}});
    CHECK(norm_product_lattice(nid) ==
          left_ideal_lattice(IdealSpec{p, {nrm * Int(28)}}).lattice);

    // N * <x+1> = <2N>
    ZRingElem xp1 = xpow(p, 1) + ZRingElem::one(p);
    CHECK(norm_product_lattice(left_ideal_lattice(IdealSpec{p, {xp1}})) ==
          left_ideal_lattice(IdealSpec{p, {nrm * Int(2)}}).lattice);
}

TEST_CASE("norm product equals <N> for random augmentation-one ideals") {
    GroupParams p(5);
    IntegerLattice norm_ideal =
        left_ideal_lattice(IdealSpec{p, {norm_element(p)}}).lattice;
    for (int t = 0; t < 10; ++t) {
        ZRingElem g = random_ring_elem(p, 3);
        Int aug = augmentation(g);
        g = g - ZRingElem::monomial(p, aug - 1, 0, 0); // force augmentation 1
        IdealLattice ideal = left_ideal_lattice(IdealSpec{p, {g}});
        CHECK(norm_product_lattice(ideal) == norm_ideal);
    }
}

} // TEST_SUITE
