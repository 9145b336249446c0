#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace q4n {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense rectangular matrix over arbitrary-precision integers, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(std::size_t cols,
                                   const std::vector<std::vector<Int>>& rows);
    static IntegerMatrix vstack(const IntegerMatrix& top, const IntegerMatrix& bottom);
    static IntegerMatrix hstack(const IntegerMatrix& left, const IntegerMatrix& right);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    std::vector<Int> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Int>& v);

    IntegerMatrix operator*(const IntegerMatrix& other) const;
    IntegerMatrix operator+(const IntegerMatrix& other) const;
    IntegerMatrix operator-(const IntegerMatrix& other) const;
    bool operator==(const IntegerMatrix& other) const = default;

    IntegerMatrix transpose() const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

std::vector<Int> mat_vec(const std::vector<Int>& v, const IntegerMatrix& a);

/// Row-style Hermite normal form: row echelon over Z, pivots positive,
/// entries above each pivot reduced into [0, pivot), zero rows removed.
/// The result is the unique canonical basis of the row span.
IntegerMatrix hnf(const IntegerMatrix& a);

/// HNF keeping zero rows, together with a unimodular U such that U * a = h.
/// Rows of U opposite the zero rows of h span the left kernel of a.
struct HnfTransform {
    IntegerMatrix h;                     // same row count as the input
    IntegerMatrix u;                     // unimodular, u * a = h
    std::vector<std::size_t> pivot_cols; // one per nonzero row of h
};
HnfTransform hnf_with_transform(const IntegerMatrix& a);

/// Thrown by snf() when the caller's cancel token fires.
class OperationCancelled : public std::runtime_error {
public:
    OperationCancelled() : std::runtime_error("operation cancelled") {}
};

/// Optional cooperative-cancellation hook; return true to abort.
using CancelToken = std::function<bool()>;

/// Smith normal form U * A * V = D with U, V unimodular, D diagonal with
/// d1 | d2 | ... and trailing zeros.  invariant_factors lists the nonzero
/// diagonal entries.  The identity U*A*V = D is re-verified before returning.
struct SnfResult {
    IntegerMatrix u, d, v;
    std::vector<Int> invariant_factors;
};
SnfResult snf(const IntegerMatrix& a, const CancelToken& cancel = {});

/// A subgroup of Z^m held as its canonical HNF row basis.  Canonicity makes
/// lattice equality a plain data comparison.
class IntegerLattice {
public:
    IntegerLattice() = default; // the zero lattice in Z^0

    static IntegerLattice zero(std::size_t ambient_dim);
    static IntegerLattice full(std::size_t ambient_dim);
    /// Row span of `gens` (ambient dimension = column count), canonicalized.
    static IntegerLattice from_generators(const IntegerMatrix& gens);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntegerMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

    bool operator==(const IntegerLattice& other) const = default;

    bool contains(const std::vector<Int>& v) const;
    bool contains(const IntegerLattice& other) const;

    /// Coefficients c with c * basis = v, when v lies in the lattice.
    std::optional<std::vector<Int>> coordinates(const std::vector<Int>& v) const;

    /// Canonical residue of v modulo the lattice (floor reduction at pivots).
    std::vector<Int> reduce(std::vector<Int> v) const;

private:
    IntegerLattice(std::size_t ambient, IntegerMatrix basis, std::vector<std::size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    std::size_t ambient_ = 0;
    IntegerMatrix basis_;              // HNF, full row rank
    std::vector<std::size_t> pivots_;  // pivot column per basis row
};

/// Left kernel {v : v * a = 0}; integer kernels are automatically saturated.
IntegerLattice kernel(const IntegerMatrix& a);

/// Row span of a.
IntegerLattice image(const IntegerMatrix& a);

bool membership(const std::vector<Int>& v, const IntegerLattice& l);

IntegerLattice lattice_sum(const IntegerLattice& l1, const IntegerLattice& l2);
IntegerLattice lattice_intersect(const IntegerLattice& l1, const IntegerLattice& l2);

/// Invariant factors of sup/sub: the nonzero SNF factors of sub's basis
/// written in sup's coordinates, then one zero per free rank.
/// Throws std::domain_error when sub is not contained in sup.
std::vector<Int> quotient_invariants(const IntegerLattice& sub, const IntegerLattice& sup);

/// Group order |Z^m / L| when L has full rank (product of HNF pivots), else 0.
Int lattice_index(const IntegerLattice& l);

/// Image of a lattice under the row map v -> v * a.
IntegerLattice lattice_apply(const IntegerLattice& l, const IntegerMatrix& a);

} // namespace q4n
