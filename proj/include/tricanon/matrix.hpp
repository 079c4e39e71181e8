#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tricanon/field.hpp"

namespace tricanon {

/// Dense row-major matrix over a Field. Empty shapes are allowed.
class ExactMatrix {
 public:
  ExactMatrix(Field field, std::size_t rows, std::size_t cols);
  /// Integer entries coerced into the field.
  ExactMatrix(Field field, std::initializer_list<std::initializer_list<long long>> rows);

  static ExactMatrix identity(Field field, std::size_t n);
  static ExactMatrix diagonal(std::span<const FieldElement> diag);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const noexcept;

  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const FieldElement> entries() const noexcept { return data_; }

  ExactMatrix transpose() const;

  ExactMatrix& operator+=(const ExactMatrix& b);
  ExactMatrix& operator-=(const ExactMatrix& b);
  ExactMatrix& operator*=(const FieldElement& c);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const FieldElement& c) { return a *= c; }
  friend ExactMatrix operator*(const FieldElement& c, ExactMatrix a) { return a *= c; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  /// Block diagonal diag(*this, I_extra).
  ExactMatrix pad_identity(std::size_t extra) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

struct RrefResult {
  ExactMatrix echelon;              // transform * input
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  ExactMatrix transform;            // nonsingular, rows x rows
};

/// Reduced row echelon form. Pivot: first nonzero entry, top to bottom, in
/// the leftmost unresolved column.
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Throws ShapeMismatch for non-square input and SingularMatrix when singular.
ExactMatrix inverse(const ExactMatrix& m);

FieldElement determinant(const ExactMatrix& m);

bool is_nonsingular(const ExactMatrix& m);

struct SpanRank {
  std::size_t rank;
  /// Lexicographically-first maximal independent subset (indices into the input).
  std::vector<std::size_t> basis;
  /// RREF of the matrix whose columns are the flattened inputs; column k
  /// holds the coordinates of input k in terms of `basis`.
  ExactMatrix coordinates;
};

/// Dimension of the linear span of same-shape matrices. Throws ShapeMismatch.
SpanRank rank_of_span(std::span<const ExactMatrix> ms);

}  // namespace tricanon
