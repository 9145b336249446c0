#pragma once

#include <vector>

#include "q4n/groupring.hpp"
#include "q4n/zlattice.hpp"

namespace q4n {

struct IdealSpec {
    GroupParams params;
    std::vector<ZRingElem> generators; // nonempty, integer coefficients
};

/// A left ideal of Z Q_{4n} realized extensionally as a lattice in Z^{4n}.
/// Construction verifies closure under left multiplication by x and y.
struct IdealLattice {
    IdealSpec spec;
    IntegerLattice lattice;
};

/// Lattice spanned by { g * gen : g in Q_{4n}, gen in generators }.
IdealLattice left_ideal_lattice(const IdealSpec& spec);

/// The ideal P = <a + b y, x + 1> that drives every certificate.
IdealLattice p_ideal(GroupParams params, const Int& a, const Int& b);

/// True iff the lattice is also closed under right multiplication by x and y.
bool is_two_sided(const IdealLattice& ideal);

/// Nontrivial invariant factors of Z Q_{4n} / I (unit factors stripped,
/// zeros kept for any free part).
std::vector<Int> quotient_structure(const IdealLattice& ideal);

/// k = a^2 + b^2 (n odd) or a^2 - b^2 (n even), d = gcd(a,b), t = k/d,
/// and whether gcd(k, 2n) = 1.  When coprime holds, the exponent of the
/// computed quotient Z Q_{4n} / P is re-checked to be coprime to 4n.
struct ProjectivityCriterion {
    Int k, d, t;
    bool coprime;
};
ProjectivityCriterion projectivity_criterion(GroupParams params, const Int& a, const Int& b);

/// Lattice spanned by { N * p : p in basis of I }.  Since N * p = aug(p) * N,
/// this is the multiple of <N> by the gcd of augmentations over I.
IntegerLattice norm_product_lattice(const IdealLattice& ideal);

} // namespace q4n
