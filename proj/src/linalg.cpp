#include "invsys/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace invsys {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::from_integers(FieldSpec field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeMismatch("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::from_integer(field, rows[r][c]);
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Scalar> Matrix::operator*(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw ShapeMismatch("matrix-vector product with wrong length");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

namespace {

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::size_t dense_rank_rational(const Matrix& m) {
  std::vector<std::vector<mpz_class>> ints(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).rational().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m(r, c).rational();
      ints[r][c] = q.get_num() * (lcm / q.get_den());
    }
  }
  return bareiss_rank(std::move(ints), m.cols());
}

SparseVector axpy_merge(const SparseVector& v, const Scalar& factor, const SparseVector& row) {
  // v - factor * row
  SparseVector out;
  out.reserve(v.size() + row.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < row.size()) {
    if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || row[j].first < v[i].first) {
      out.emplace_back(row[j].first, -(factor * row[j].second));
      ++j;
    } else {
      Scalar s = v[i].second;
      s.sub_mul(factor, row[j].second);
      if (!s.is_zero()) out.emplace_back(v[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  std::size_t r;
  if (m.field().is_rational()) {
    r = dense_rank_rational(m);
  } else {
    std::vector<std::vector<std::uint32_t>> rows(m.rows(), std::vector<std::uint32_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).residue();
    r = rank_mod_p(rows, m.field().characteristic());
  }
  assert(r <= std::min(m.rows(), m.cols()));
  if (r > std::min(m.rows(), m.cols())) throw Error("rank exceeds matrix dimensions");
  return r;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  std::vector<SparseVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector v;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) v.emplace_back(c, m(r, c));
    rows.push_back(std::move(v));
  }
  std::vector<std::vector<Scalar>> out;
  for (const auto& k : sparse_kernel_basis(m.field(), rows, m.cols()))
    out.push_back(to_dense(k, m.cols(), m.field()));
  return out;
}

std::size_t row_space_dim_of_union(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols())
    throw ShapeMismatch("row spaces with " + std::to_string(a.cols()) + " and " +
                        std::to_string(b.cols()) + " columns");
  if (a.rows() > 0 && b.rows() > 0 && a.field() != b.field())
    throw FieldMismatch("row spaces over different fields");
  const FieldSpec field = a.rows() > 0 ? a.field() : b.field();
  Matrix stacked(field, a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) stacked(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) stacked(a.rows() + r, c) = b(r, c);
  return rank(stacked);
}

// --- EchelonBasis ----------------------------------------------------------

SparseVector EchelonBasis::reduce(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = pivot_row_.find(v[pos].first);
    if (it == pivot_row_.end()) {
      ++pos;
      continue;
    }
    const Scalar factor = v[pos].second;
    v = axpy_merge(v, factor, rows_[it->second]);
    // Entries before pos are untouched and the pivot entry cancelled.
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  for (const auto& [c, s] : v)
    if (s.field() != field_) throw FieldMismatch("vector entry outside " + field_.name());
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Scalar lead_inv = v.front().second.inverse();
  for (auto& [c, s] : v) s *= lead_inv;
  pivot_row_.emplace(v.front().first, rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<std::size_t> EchelonBasis::pivot_columns() const {
  std::vector<std::size_t> out;
  for (const auto& [c, idx] : pivot_row_) out.push_back(c);
  return out;
}

std::vector<SparseVector> EchelonBasis::rref() const {
  std::map<std::size_t, SparseVector> reduced;  // pivot -> fully reduced row
  for (auto it = pivot_row_.rbegin(); it != pivot_row_.rend(); ++it) {
    SparseVector row = rows_[it->second];
    std::size_t pos = 1;
    while (pos < row.size()) {
      auto r = reduced.find(row[pos].first);
      if (r == reduced.end()) {
        ++pos;
        continue;
      }
      const Scalar factor = row[pos].second;
      row = axpy_merge(row, factor, r->second);
    }
    reduced.emplace(it->first, std::move(row));
  }
  std::vector<SparseVector> out;
  out.reserve(reduced.size());
  for (auto& [c, row] : reduced) out.push_back(std::move(row));
  return out;
}

std::vector<SparseVector> sparse_kernel_basis(FieldSpec field, const std::vector<SparseVector>& rows,
                                              std::size_t cols) {
  EchelonBasis eb(field);
  for (const auto& r : rows) {
    if (!r.empty() && r.back().first >= cols) throw ShapeMismatch("sparse row index out of range");
    eb.insert(r);
  }
  const auto reduced = eb.rref();
  std::vector<bool> is_pivot(cols, false);
  for (const auto& r : reduced) is_pivot[r.front().first] = true;

  // Free column j contributes e_j - sum_p row_p[j] e_p.
  std::map<std::size_t, SparseVector> by_free;
  for (std::size_t j = 0; j < cols; ++j)
    if (!is_pivot[j]) by_free[j];
  for (const auto& r : reduced) {
    const std::size_t p = r.front().first;
    for (std::size_t k = 1; k < r.size(); ++k) by_free[r[k].first].emplace_back(p, -r[k].second);
  }
  EchelonBasis kernel(field);
  for (auto& [j, v] : by_free) {
    v.emplace_back(j, Scalar::one(field));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.insert(std::move(v));
  }
  return kernel.rref();
}

std::size_t sparse_rank(FieldSpec field, const std::vector<SparseVector>& rows) {
  EchelonBasis eb(field);
  for (const auto& r : rows) eb.insert(r);
  return eb.rank();
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const std::uint32_t inv = modp::inv(rows[r][c], p);
    auto& prow = rows[r];
    for (std::size_t j = c; j < ncols; ++j) prow[j] = modp::mul(prow[j], inv, p);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      auto& row = rows[i];
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t j = c; j < ncols; ++j)
        if (prow[j] != 0) row[j] = static_cast<std::uint32_t>((row[j] + neg * prow[j]) % p);
    }
    ++r;
  }
  return r;
}

SparseVector to_sparse(const std::vector<Scalar>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) v.emplace_back(i, dense[i]);
  return v;
}

std::vector<Scalar> to_dense(const SparseVector& v, std::size_t cols, const FieldSpec& field) {
  std::vector<Scalar> out(cols, Scalar::zero(field));
  for (const auto& [c, s] : v) out.at(c) = s;
  return out;
}

}  // namespace invsys
