#pragma once

#include <vector>

#include "q4n/groupring.hpp"
#include "q4n/ideals.hpp"
#include "q4n/report.hpp"
#include "q4n/zlattice.hpp"

namespace q4n {

/// Rectangular matrix over the group ring, acting on row vectors by right
/// multiplication: the integerized map sends flat(v) to flat(v * A).
template <typename Coeff>
class GRMatrix {
public:
    GRMatrix(GroupParams params, std::size_t rows, std::size_t cols)
        : params_(params), rows_(rows), cols_(cols),
          e_(rows * cols, RingElem<Coeff>(params)) {}

    static GRMatrix identity(GroupParams params, std::size_t n) {
        GRMatrix m(params, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingElem<Coeff>::one(params);
        return m;
    }

    GroupParams params() const { return params_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    RingElem<Coeff>& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const RingElem<Coeff>& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool operator==(const GRMatrix&) const = default;

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    GroupParams params_;
    std::size_t rows_, cols_;
    std::vector<RingElem<Coeff>> e_;
};

using ZGRMatrix = GRMatrix<Int>;
using QGRMatrix = GRMatrix<Rat>;

/// Product A * B; entries multiply with the A entry on the left, so that
/// v * (A*B) = (v*A) * B on row vectors.
template <typename Coeff>
GRMatrix<Coeff> gr_compose(const GRMatrix<Coeff>& a, const GRMatrix<Coeff>& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("gr_compose: dimension mismatch");
    if (!(a.params() == b.params()))
        throw std::invalid_argument("gr_compose: group parameter mismatch");
    GRMatrix<Coeff> out(a.params(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            RingElem<Coeff> acc(a.params());
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

template <typename Coeff>
GRMatrix<Coeff> operator*(const GRMatrix<Coeff>& a, const GRMatrix<Coeff>& b) {
    return gr_compose(a, b);
}

/// Left-scalar multiple s * A (entrywise s * a_ij; order matters).
template <typename Coeff>
GRMatrix<Coeff> scalar_left_mul(const RingElem<Coeff>& s, const GRMatrix<Coeff>& a) {
    GRMatrix<Coeff> out(a.params(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = s * a.at(i, j);
    return out;
}

QGRMatrix to_rational(const ZGRMatrix& a);

/// Block matrix of right_mult_matrix per entry: (4n rows(A)) x (4n cols(A)).
/// Functorial: to_integer_matrix(A*B) = to_integer_matrix(A) * to_integer_matrix(B).
IntegerMatrix to_integer_matrix(const ZGRMatrix& a);

/// Flat coefficient vector of a 1 x k row of ring elements (blocks of 4n).
std::vector<Int> flatten(const ZGRMatrix& row);

/// Lattice in Z^{4nk} spanned by { g * e : g in Q_4n, e in elements },
/// each element a 1 x k row over the group ring.
IntegerLattice left_module_lattice(const std::vector<ZGRMatrix>& elements);

/// Fox boundary data of the presentation <x, y | x^n y^-2, y x y x^{-n+1}>:
/// d1 = [x-1; y-1] and the 2x2 matrix of Fox derivatives of the relators,
/// satisfying d2 * d1 = 0 entrywise.
struct FoxBoundaries {
    ZGRMatrix d2; // 2 x 2, rows = relators, cols = generators
    ZGRMatrix d1; // 2 x 1
};
FoxBoundaries fox_boundaries(GroupParams p);

/// The generator sigma = (1-y) R1~ + (1-yx) R2~ of ker d2, as the row (1-y, 1-yx).
ZGRMatrix sigma(GroupParams p);

/// A two-term chain complex ZG^r2 -> ZG^r1 -> ZG^r0 -> Z with the augmentation
/// as the final map.  Construction asserts d2*d1 = 0 and aug(d1) = 0.
struct ChainComplex2 {
    ZGRMatrix d2;
    ZGRMatrix d1;

    ChainComplex2(ZGRMatrix d2_, ZGRMatrix d1_);
};

/// H0 and H1 as invariant-factor lists (units stripped; zeros = free rank),
/// H2 as the kernel lattice of the integerized d2.
struct HomologyReport {
    std::vector<Int> h0;
    std::vector<Int> h1;
    IntegerLattice h2;
    std::vector<Int> h2_invariants;
    std::size_t h2_rank = 0;

    nlohmann::json to_json() const;
};
HomologyReport homology(const ChainComplex2& c);

/// The 2x2 matrix over ZQ28 whose rows form a free basis of ZQ28 + P.
ZGRMatrix phi_matrix();

/// The boundary matrix of the exotic complex, built from its displayed
/// entries and certified equal to phi_matrix() * d2.
ZGRMatrix exotic_boundary2();

VerificationReport verify_sigma_generates(GroupParams p);
VerificationReport verify_prop44(GroupParams p, const Int& a, const Int& b);
VerificationReport verify_phi_factorization();
VerificationReport verify_stably_free();
VerificationReport verify_exotic_complex();

} // namespace q4n
