#pragma once

#include <optional>
#include <string>
#include <vector>

#include "q4n/groupring.hpp"
#include "q4n/ideals.hpp"
#include "q4n/report.hpp"
#include "q4n/zlattice.hpp"

namespace q4n {

/// Quotient ring Z Q_{4n} / I for a two-sided ideal I.  Elements are cosets,
/// held as canonical residues of coefficient vectors modulo the ideal
/// lattice.  Construction rejects one-sided moduli.
class QuotientRing {
public:
    static QuotientRing from_generators(GroupParams params, std::vector<ZRingElem> gens);
    explicit QuotientRing(IdealLattice modulus);

    GroupParams params() const { return modulus_.spec.params; }
    const IdealLattice& modulus() const { return modulus_; }
    const IntegerLattice& modulus_lattice() const { return modulus_.lattice; }

    std::vector<Int> reduce(const std::vector<Int>& v) const { return modulus_.lattice.reduce(v); }
    ZRingElem reduce(const ZRingElem& e) const;

    /// Invariant factors of the additive group Z^{4n} / I, units stripped.
    std::vector<Int> additive_invariants() const;
    /// Free rank of the additive group.
    std::size_t additive_rank() const;
    /// |Z^{4n} / I| when finite, 0 otherwise.
    Int order_if_finite() const;

    /// The canonical projection onto `finer` exists iff our modulus is
    /// contained in theirs.
    bool surjects_onto(const QuotientRing& finer) const;

private:
    IdealLattice modulus_;
};

// The quotient rings named by the two Milnor squares.  The dihedral ring is
// Z Q_{4n} / <x^n - 1> (y^2 - 1 lies in that ideal already, as y^2 = x^n),
// with presentation D_2n = <x, y | x^n, y^2, (xy)^2>.
QuotientRing quotient_mod_xn_plus_1(GroupParams p);  // Z Q_4n / <x^n+1>
QuotientRing quotient_mod_psi(GroupParams p);        // Z Q_4n / <psi_2n>
QuotientRing quotient_mod_x_plus_1(GroupParams p);   // Z Q_4n / <x+1>, Gaussian integers
QuotientRing dihedral_ring(GroupParams p);           // Z D_2n
QuotientRing f2_dihedral_ring(GroupParams p);        // F_2 D_2n = Z Q_4n / <x^n-1, 2>
QuotientRing fiber_mod_n_ring(GroupParams p);        // Z_n[y]/<y^2+1> = Z Q_4n / <x+1, n>

/// Explicit model of the finite commutative ring Z_m[y] / <y^2 + 1>:
/// elements c0 + c1 y with c0, c1 in [0, m).  For odd prime m = 3 mod 4
/// this is the field F_{m^2}.
class GaussianModRing {
public:
    struct Elem {
        long c0, c1;
        bool operator==(const Elem&) const = default;
        auto operator<=>(const Elem&) const = default;
    };

    explicit GaussianModRing(long m);

    long modulus() const { return m_; }
    long size() const { return m_ * m_; }

    Elem zero() const { return {0, 0}; }
    Elem one() const { return {1, 0}; }
    Elem make(long c0, long c1) const { return {norm(c0), norm(c1)}; }
    Elem add(Elem a, Elem b) const { return {norm(a.c0 + b.c0), norm(a.c1 + b.c1)}; }
    Elem neg(Elem a) const { return {norm(-a.c0), norm(-a.c1)}; }
    Elem mul(Elem a, Elem b) const {
        return {norm(a.c0 * b.c0 - a.c1 * b.c1), norm(a.c0 * b.c1 + a.c1 * b.c0)};
    }

    /// Image of a group-ring element under x -> -1 (requires n odd upstream).
    Elem from_ring(const ZRingElem& e) const;

    std::optional<Elem> inverse(Elem a) const; // brute force
    std::vector<Elem> all_elements() const;
    std::vector<Elem> units() const;           // brute force over all elements

    std::string to_string(Elem a) const;

private:
    long norm(long v) const {
        long r = v % m_;
        return r < 0 ? r + m_ : r;
    }
    long m_;
};

/// Brute-force unit group data: order, and a generator when cyclic.
struct UnitGroupInfo {
    Int order;
    bool cyclic = false;
    std::optional<GaussianModRing::Elem> generator;
};
UnitGroupInfo finite_units(const GaussianModRing& ring);

/// The coset data behind the nonfreeness argument: the unit group of
/// Z_7[y]/<y^2+1>, the subgroup <3, y>, the coset group (cyclic of order 4
/// generated by [1+2y]), and the class of [a + b y].
struct CosetCertificate {
    Int unit_group_order;
    std::vector<std::string> subgroup_generators;
    Int subgroup_order;
    Int coset_group_order;
    std::string coset_group_generator;
    long class_of_target = 0; // exponent e with [a+by] = [1+2y]^e
    bool nontrivial = false;

    nlohmann::json to_json() const;
};

/// Computes the certificate for n = 7.  Throws std::domain_error when a+by
/// is not a unit in the fiber (the gcd hypothesis fails).
CosetCertificate coset_classification(GroupParams p, const Int& a, const Int& b);

/// Lattice of pairs (u, v) in Z^{4n} + Z^{4n} whose fiber images satisfy
/// u = alpha * v, intersected with the given submodule preimages.  Submodules
/// of the quotient rings are represented by their full preimage lattices
/// (each contains the corresponding modulus lattice).
IntegerLattice pullback_lattice(const QuotientRing& r1, const IntegerLattice& sub1,
                                const QuotientRing& r2, const IntegerLattice& sub2,
                                const QuotientRing& fiber, const ZRingElem& alpha);

/// Free rank of the pullback module the preimage lattice represents.
std::size_t pullback_module_rank(const IntegerLattice& pullback,
                                 const QuotientRing& r1, const QuotientRing& r2);

VerificationReport verify_milnor_squares(GroupParams p);
VerificationReport verify_prop22(GroupParams p, const Int& a, const Int& b);
VerificationReport nonfreeness_certificate(GroupParams p, const Int& a, const Int& b);

} // namespace q4n
