#include "tricanon/matrix.hpp"

#include <sstream>
#include <utility>

#include "tricanon/error.hpp"

namespace tricanon {

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

ExactMatrix::ExactMatrix(Field field, std::initializer_list<std::initializer_list<long long>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeMismatch("ragged matrix initializer");
    for (long long v : row) data_.push_back(field.from_int(v));
  }
}

ExactMatrix ExactMatrix::identity(Field field, std::size_t n) {
  ExactMatrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = field.one();
  return out;
}

ExactMatrix ExactMatrix::diagonal(std::span<const FieldElement> diag) {
  if (diag.empty()) throw ShapeMismatch("diagonal() needs at least one entry");
  ExactMatrix out(diag.front().field(), diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

bool ExactMatrix::is_zero() const noexcept {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw ShapeMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += b.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw ShapeMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= b.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const FieldElement& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shape mismatch");
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product over different fields");
  ExactMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const FieldElement& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(l, j).is_zero()) out(i, j) += x * b(l, j);
    }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix ExactMatrix::pad_identity(std::size_t extra) const {
  if (!is_square()) throw ShapeMismatch("pad_identity() needs a square matrix");
  ExactMatrix out = identity(field_, rows_ + extra);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const ExactMatrix& m) {
  ExactMatrix e = m;
  ExactMatrix u = ExactMatrix::identity(m.field(), m.rows());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && e(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < e.cols(); ++j) std::swap(e(sel, j), e(row, j));
      for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(sel, j), u(row, j));
    }
    const FieldElement scale = e(row, col).inverse();
    for (std::size_t j = 0; j < e.cols(); ++j) e(row, j) *= scale;
    for (std::size_t j = 0; j < u.cols(); ++j) u(row, j) *= scale;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || e(r, col).is_zero()) continue;
      const FieldElement factor = e(r, col);
      for (std::size_t j = 0; j < e.cols(); ++j)
        if (!e(row, j).is_zero()) e(r, j) -= factor * e(row, j);
      for (std::size_t j = 0; j < u.cols(); ++j)
        if (!u(row, j).is_zero()) u(r, j) -= factor * u(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(e), row, std::move(pivots), std::move(u)};
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("inverse of a non-square matrix");
  RrefResult r = rref(m);
  if (r.rank != m.rows()) throw SingularMatrix("matrix is singular: " + m.to_string());
  return std::move(r.transform);
}

FieldElement determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("determinant of a non-square matrix");
  ExactMatrix e = m;
  FieldElement det = m.field().one();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && e(sel, col).is_zero()) ++sel;
    if (sel == n) return m.field().zero();
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(e(sel, j), e(col, j));
      det = -det;
    }
    det *= e(col, col);
    const FieldElement inv = e(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (e(r, col).is_zero()) continue;
      const FieldElement factor = e(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) e(r, j) -= factor * e(col, j);
    }
  }
  return det;
}

bool is_nonsingular(const ExactMatrix& m) {
  return m.is_square() && rank(m) == m.rows();
}

SpanRank rank_of_span(std::span<const ExactMatrix> ms) {
  if (ms.empty()) return {0, {}, ExactMatrix(Field::rationals(), 0, 0)};
  const std::size_t rows = ms.front().rows(), cols = ms.front().cols();
  const Field field = ms.front().field();
  ExactMatrix stacked(field, rows * cols, ms.size());
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (ms[k].rows() != rows || ms[k].cols() != cols)
      throw ShapeMismatch("rank_of_span over matrices of different shapes");
    if (!(ms[k].field() == field)) throw FieldMismatch("rank_of_span over different fields");
    const auto entries = ms[k].entries();
    for (std::size_t e = 0; e < entries.size(); ++e) stacked(e, k) = entries[e];
  }
  RrefResult r = rref(stacked);
  return {r.rank, std::move(r.pivots), std::move(r.echelon)};
}

}  // namespace tricanon
