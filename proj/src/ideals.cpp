#include "q4n/ideals.hpp"

namespace q4n {

namespace {

bool closed_under(const IntegerLattice& l, const IntegerMatrix& mult) {
    for (std::size_t r = 0; r < l.rank(); ++r)
        if (!l.contains(mat_vec(l.basis().row(r), mult))) return false;
    return true;
}

} // namespace

IdealLattice left_ideal_lattice(const IdealSpec& spec) {
    if (spec.generators.empty())
        throw std::invalid_argument("left_ideal_lattice: no generators");
    const std::size_t m = static_cast<std::size_t>(spec.params.order());
    IntegerMatrix gens(0, m);
    for (const ZRingElem& g : spec.generators) {
        if (!(g.params() == spec.params))
            throw std::invalid_argument("left_ideal_lattice: generator parameter mismatch");
        gens = IntegerMatrix::vstack(gens, right_mult_matrix(g));
    }
    IdealLattice ideal{spec, IntegerLattice::from_generators(gens)};
    // x and y generate the group, so one-step closure is a fixpoint check.
    if (!closed_under(ideal.lattice, left_mult_matrix(xpow(spec.params, 1))) ||
        !closed_under(ideal.lattice, left_mult_matrix(ypow(spec.params, 1))))
        throw std::logic_error("left_ideal_lattice: closure fixpoint violated");
    return ideal;
}

IdealLattice p_ideal(GroupParams params, const Int& a, const Int& b) {
    ZRingElem a_plus_by =
        ZRingElem::monomial(params, a, 0, 0) + ZRingElem::monomial(params, b, 0, 1);
    ZRingElem x_plus_1 = xpow(params, 1) + ZRingElem::one(params);
    return left_ideal_lattice(IdealSpec{params, {a_plus_by, x_plus_1}});
}

bool is_two_sided(const IdealLattice& ideal) {
    return closed_under(ideal.lattice, right_mult_matrix(xpow(ideal.spec.params, 1))) &&
           closed_under(ideal.lattice, right_mult_matrix(ypow(ideal.spec.params, 1)));
}

std::vector<Int> quotient_structure(const IdealLattice& ideal) {
    const std::size_t m = static_cast<std::size_t>(ideal.spec.params.order());
    std::vector<Int> all = quotient_invariants(ideal.lattice, IntegerLattice::full(m));
    std::vector<Int> nontrivial;
    for (const Int& f : all)
        if (f != 1) nontrivial.push_back(f);
    return nontrivial;
}

ProjectivityCriterion projectivity_criterion(GroupParams params, const Int& a, const Int& b) {
    ProjectivityCriterion out;
    out.k = params.n % 2 == 1 ? Int(a * a + b * b) : Int(a * a - b * b);
    mpz_gcd(out.d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    out.t = out.d != 0 ? Int(out.k / out.d) : Int(0);
    Int g;
    Int two_n(2 * params.n);
    mpz_gcd(g.get_mpz_t(), out.k.get_mpz_t(), two_n.get_mpz_t());
    out.coprime = (g == 1);

    if (out.coprime) {
        // Exponent of the quotient must be coprime to 4n (largest invariant).
        std::vector<Int> inv = quotient_structure(p_ideal(params, a, b));
        Int exponent(1);
        for (const Int& f : inv)
            if (f > exponent) exponent = f;
        Int e;
        Int four_n(4 * params.n);
        mpz_gcd(e.get_mpz_t(), exponent.get_mpz_t(), four_n.get_mpz_t());
        if (e != 1)
            throw std::logic_error("projectivity_criterion: quotient exponent not coprime to 4n");
    }
    return out;
}

IntegerLattice norm_product_lattice(const IdealLattice& ideal) {
    return lattice_apply(ideal.lattice, left_mult_matrix(norm_element(ideal.spec.params)));
}

} // namespace q4n
