#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tricanon/field.hpp"
#include "tricanon/matrix.hpp"

namespace tricanon {

struct Dims {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t q = 0;

  std::size_t volume() const noexcept { return m * n * q; }
  friend bool operator==(const Dims&, const Dims&) = default;
  std::string to_string() const;
};

/// m x n x q array a[i][j][k] of field elements.
class SpatialMatrix {
 public:
  SpatialMatrix(Field field, Dims dims);
  SpatialMatrix(Field field, std::size_t m, std::size_t n, std::size_t q)
      : SpatialMatrix(field, Dims{m, n, q}) {}

  /// Builds ||A_1 | ... | A_q|| from its mode-3 slices (each m x n).
  static SpatialMatrix from_slices(Field field, std::size_t m, std::size_t n,
                                   std::span<const ExactMatrix> slices);
  static SpatialMatrix from_slices(std::initializer_list<ExactMatrix> slices);

  const Field& field() const noexcept { return field_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t m() const noexcept { return dims_.m; }
  std::size_t n() const noexcept { return dims_.n; }
  std::size_t q() const noexcept { return dims_.q; }

  const FieldElement& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dims_.n + j) * dims_.q + k];
  }
  FieldElement& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * dims_.n + j) * dims_.q + k];
  }
  /// Row-major in (i, j, k).
  std::span<const FieldElement> entries() const noexcept { return data_; }

  bool is_zero() const noexcept;
  /// Leading m' x n' x q' corner.
  SpatialMatrix corner(Dims sub) const;

  friend bool operator==(const SpatialMatrix& a, const SpatialMatrix& b);

  std::string to_string() const;

 private:
  Field field_;
  Dims dims_;
  std::vector<FieldElement> data_;
};

/// Basis changes (R, S, T); acts by b[i'][j'][k'] = sum a[i][j][k] r[i][i'] s[j][j'] t[k][k'].
struct EquivCertificate {
  ExactMatrix R;
  ExactMatrix S;
  ExactMatrix T;

  static EquivCertificate identity(Field field, Dims dims);
  Dims dims() const noexcept { return {R.rows(), S.rows(), T.rows()}; }
  bool is_identity() const;
  friend bool operator==(const EquivCertificate&, const EquivCertificate&) = default;
};

struct ModeRanks {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t q = 0;

  Dims as_dims() const noexcept { return {m, n, q}; }
  friend bool operator==(const ModeRanks&, const ModeRanks&) = default;
};

/// A_k = [a_ijk]_ij, each m x n.
std::vector<ExactMatrix> slices_mode3(const SpatialMatrix& a);
/// A~_j = [a_ijk]_ik, each m x q.
std::vector<ExactMatrix> flatten_mode2(const SpatialMatrix& a);
/// A~~_i = [a_ijk]_jk, each n x q.
std::vector<ExactMatrix> flatten_mode1(const SpatialMatrix& a);

ModeRanks mode_ranks(const SpatialMatrix& a);
bool is_regular(const SpatialMatrix& a);

/// Substitution C_k' = sum_k A_k t_kk', then slice-wise R^T C_k' S.
/// Throws ShapeMismatch or SingularCertificate.
SpatialMatrix apply_equivalence(const SpatialMatrix& a, const EquivCertificate& c);

FieldElement eval_form(const SpatialMatrix& a, std::span<const FieldElement> u,
                       std::span<const FieldElement> v, std::span<const FieldElement> w);

/// Applying compose(c1, c2) equals applying c1 and then c2.
EquivCertificate compose(const EquivCertificate& c1, const EquivCertificate& c2);
EquivCertificate inverse(const EquivCertificate& c);
/// Extends each factor by an identity block up to `dims`.
EquivCertificate pad_certificate(const EquivCertificate& c, Dims dims);

}  // namespace tricanon
