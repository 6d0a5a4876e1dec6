#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "invsys/field.hpp"

namespace invsys {

// Dense row-major matrix over a FieldSpec.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  // Rows of integer entries mapped into `field`.
  static Matrix from_integers(FieldSpec field, const std::vector<std::vector<long long>>& rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Matrix transpose() const;
  std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> entries_;
};

// Exact rank. Over QQ this is fraction-free (Bareiss) elimination on the
// integer matrix obtained by clearing row denominators.
std::size_t rank(const Matrix& m);

// Basis of the right null space in reduced row echelon form.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

// dim(rowspace(A) + rowspace(B)). Throws ShapeMismatch if column counts differ.
std::size_t row_space_dim_of_union(const Matrix& a, const Matrix& b);

// Sorted (column, value) pairs without zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

// Row space under construction. Rows are stored with a leading 1 and kept
// reduced against every earlier pivot, so insertion is cheap on the sparse
// structured matrices that contraction produces.
class EchelonBasis {
 public:
  explicit EchelonBasis(FieldSpec field) : field_(field) {}

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  // Adds v to the span. Returns true iff v was independent of it.
  bool insert(SparseVector v);
  // Remainder of v with every pivot column eliminated; zero (empty) iff v is
  // in the span. The remainder is canonical for the coset v + span.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  // Fully reduced rows ordered by pivot column.
  std::vector<SparseVector> rref() const;
  std::vector<std::size_t> pivot_columns() const;

 private:
  FieldSpec field_;
  std::vector<SparseVector> rows_;
  std::map<std::size_t, std::size_t> pivot_row_;  // pivot column -> index in rows_
};

// Right null space of the matrix with the given sparse rows, in reduced row
// echelon form.
std::vector<SparseVector> sparse_kernel_basis(FieldSpec field, const std::vector<SparseVector>& rows,
                                              std::size_t cols);

std::size_t sparse_rank(FieldSpec field, const std::vector<SparseVector>& rows);

// Rank of a dense residue matrix over F_p. Destroys its input.
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p);

// Largest prime below 2^31; the modulus used for fast rank certificates.
inline constexpr std::uint32_t kCertificatePrime = 2147483647u;

SparseVector to_sparse(const std::vector<Scalar>& dense);
std::vector<Scalar> to_dense(const SparseVector& v, std::size_t cols, const FieldSpec& field);

}  // namespace invsys
