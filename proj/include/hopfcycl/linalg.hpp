#ifndef HOPFCYCL_LINALG_HPP
#define HOPFCYCL_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hopfcycl/module.hpp"
#include "hopfcycl/scalars.hpp"

namespace hopfcycl {

/**
 * Exact sparse matrix, column-major. Each column is a list of (row, value)
 * pairs sorted by row with no stored zeros. Matrices are treated as immutable;
 * every operation returns a fresh object.
 */
class SparseMatrix {
   public:
    using Entry = std::pair<std::uint32_t, Scalar>;
    using Column = std::vector<Entry>;

    SparseMatrix(const Ring& ring, std::size_t rows, std::size_t cols);

    static SparseMatrix zero(const Ring& ring, std::size_t rows, std::size_t cols) { return {ring, rows, cols}; }
    static SparseMatrix identity(const Ring& ring, std::size_t n);
    /// Columns may be unsorted and contain duplicates or zeros; they are normalized.
    static SparseMatrix from_columns(const Ring& ring, std::size_t rows, std::vector<Column> columns);
    static SparseMatrix from_dense(const Ring& ring, const std::vector<std::vector<long>>& rows);
    static SparseMatrix from_dense(const Ring& ring, const std::vector<std::vector<Scalar>>& rows);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    const Column& column(std::size_t j) const { return columns_.at(j); }
    std::size_t nnz() const;
    Scalar at(std::size_t i, std::size_t j) const;
    bool is_zero() const;

    SparseMatrix transpose() const;
    SparseMatrix scaled(const Scalar& c) const;
    SparseMatrix power(unsigned k) const;
    /// Rows [r0, r0 + nr) and columns [c0, c0 + nc).
    SparseMatrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

    std::vector<std::vector<Scalar>> to_dense() const;

   private:
    Ring ring_;
    std::size_t rows_;
    std::vector<Column> columns_;
};

/// [A | B]
SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);
/// [A ; B]
SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b);

/**
 * Accumulates a sparse column with a dense scratch array. Reuse one instance
 * across many columns of the same height to avoid reallocations.
 */
class ColumnAccumulator {
   public:
    ColumnAccumulator(const Ring& ring, std::size_t rows);
    void add(std::uint32_t row, const Scalar& value);
    /// Returns the accumulated column (sorted, zeros dropped) and resets.
    SparseMatrix::Column take();

   private:
    Ring ring_;
    std::vector<Scalar> dense_;
    std::vector<std::uint8_t> used_;
    std::vector<std::uint32_t> touched_;
};

/// Rank over a field (Q, F_p, Q(zeta_n)); NotAField otherwise.
std::size_t rank(const SparseMatrix& m);

/// Columns span ker M; NotAField for non-fields.
SparseMatrix kernel_basis(const SparseMatrix& m);

/**
 * Nonzero invariant factors d_1 | d_2 | ... (1s included) of a matrix over Z,
 * or over Z/m via the Z lift with m*I appended (factors equal to m dropped).
 */
std::vector<mpz_class> smith_normal_form(const SparseMatrix& m);

/**
 * Homology ker(d_out) / im(d_in) at the middle term of
 * C_{p+1} --d_in--> C_p --d_out--> C_{p-1}.
 * Throws NotAComplex when d_out * d_in != 0 (skipped when check is false).
 */
HomologyModule homology_at(const SparseMatrix& d_in, const SparseMatrix& d_out, bool check = true);

namespace detail {

struct IntegerReduction {
    std::size_t rank = 0;
    std::vector<mpz_class> invariants;  // nonzero factors, ascending chain
};

/// SNF invariants of an integer matrix (any ring whose entries lift to Z; lift() is used).
IntegerReduction integer_smith(const SparseMatrix& m);

}  // namespace detail

}  // namespace hopfcycl

#endif
