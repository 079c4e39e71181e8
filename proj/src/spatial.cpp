#include "tricanon/spatial.hpp"

#include <sstream>

#include "tricanon/error.hpp"

namespace tricanon {

std::string Dims::to_string() const {
  return std::to_string(m) + "x" + std::to_string(n) + "x" + std::to_string(q);
}

SpatialMatrix::SpatialMatrix(Field field, Dims dims)
    : field_(field), dims_(dims), data_(dims.volume(), field.zero()) {}

SpatialMatrix SpatialMatrix::from_slices(Field field, std::size_t m, std::size_t n,
                                         std::span<const ExactMatrix> slices) {
  SpatialMatrix out(field, m, n, slices.size());
  for (std::size_t k = 0; k < slices.size(); ++k) {
    const ExactMatrix& s = slices[k];
    if (s.rows() != m || s.cols() != n) throw ShapeMismatch("slice shape mismatch");
    if (!(s.field() == field)) throw FieldMismatch("slice over a different field");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j, k) = s(i, j);
  }
  return out;
}

SpatialMatrix SpatialMatrix::from_slices(std::initializer_list<ExactMatrix> slices) {
  if (slices.size() == 0) throw ShapeMismatch("from_slices() needs at least one slice");
  const ExactMatrix& first = *slices.begin();
  return from_slices(first.field(), first.rows(), first.cols(),
                     std::span<const ExactMatrix>(slices.begin(), slices.size()));
}

bool SpatialMatrix::is_zero() const noexcept {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

SpatialMatrix SpatialMatrix::corner(Dims sub) const {
  if (sub.m > dims_.m || sub.n > dims_.n || sub.q > dims_.q)
    throw ShapeMismatch("corner " + sub.to_string() + " exceeds " + dims_.to_string());
  SpatialMatrix out(field_, sub);
  for (std::size_t i = 0; i < sub.m; ++i)
    for (std::size_t j = 0; j < sub.n; ++j)
      for (std::size_t k = 0; k < sub.q; ++k) out(i, j, k) = (*this)(i, j, k);
  return out;
}

bool operator==(const SpatialMatrix& a, const SpatialMatrix& b) {
  return a.field_ == b.field_ && a.dims_ == b.dims_ && a.data_ == b.data_;
}

std::string SpatialMatrix::to_string() const {
  std::ostringstream os;
  os << "||";
  for (std::size_t k = 0; k < dims_.q; ++k) {
    os << (k ? " | " : " ") << '[';
    for (std::size_t i = 0; i < dims_.m; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < dims_.n; ++j) os << (j ? " " : "") << (*this)(i, j, k).to_string();
    }
    os << ']';
  }
  os << " ||";
  return os.str();
}

EquivCertificate EquivCertificate::identity(Field field, Dims dims) {
  return {ExactMatrix::identity(field, dims.m), ExactMatrix::identity(field, dims.n),
          ExactMatrix::identity(field, dims.q)};
}

bool EquivCertificate::is_identity() const {
  return R == ExactMatrix::identity(R.field(), R.rows()) &&
         S == ExactMatrix::identity(S.field(), S.rows()) &&
         T == ExactMatrix::identity(T.field(), T.rows());
}

std::vector<ExactMatrix> slices_mode3(const SpatialMatrix& a) {
  std::vector<ExactMatrix> out(a.q(), ExactMatrix(a.field(), a.m(), a.n()));
  for (std::size_t i = 0; i < a.m(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      for (std::size_t k = 0; k < a.q(); ++k) out[k](i, j) = a(i, j, k);
  return out;
}

std::vector<ExactMatrix> flatten_mode2(const SpatialMatrix& a) {
  std::vector<ExactMatrix> out(a.n(), ExactMatrix(a.field(), a.m(), a.q()));
  for (std::size_t i = 0; i < a.m(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      for (std::size_t k = 0; k < a.q(); ++k) out[j](i, k) = a(i, j, k);
  return out;
}

std::vector<ExactMatrix> flatten_mode1(const SpatialMatrix& a) {
  std::vector<ExactMatrix> out(a.m(), ExactMatrix(a.field(), a.n(), a.q()));
  for (std::size_t i = 0; i < a.m(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      for (std::size_t k = 0; k < a.q(); ++k) out[i](j, k) = a(i, j, k);
  return out;
}

ModeRanks mode_ranks(const SpatialMatrix& a) {
  return {rank_of_span(flatten_mode1(a)).rank, rank_of_span(flatten_mode2(a)).rank,
          rank_of_span(slices_mode3(a)).rank};
}

bool is_regular(const SpatialMatrix& a) {
  return mode_ranks(a).as_dims() == a.dims();
}

namespace {

void check_factor(const ExactMatrix& f, std::size_t size, const Field& field, const char* name) {
  if (f.rows() != size || f.cols() != size)
    throw ShapeMismatch(std::string("certificate factor ") + name + " must be " +
                        std::to_string(size) + "x" + std::to_string(size));
  if (!(f.field() == field)) throw FieldMismatch(std::string("certificate factor ") + name);
  if (!is_nonsingular(f)) throw SingularCertificate(std::string("certificate factor ") + name +
                                                    " is singular");
}

}  // namespace

SpatialMatrix apply_equivalence(const SpatialMatrix& a, const EquivCertificate& c) {
  const auto [m, n, q] = a.dims();
  check_factor(c.R, m, a.field(), "R");
  check_factor(c.S, n, a.field(), "S");
  check_factor(c.T, q, a.field(), "T");

  // C_k' = sum_k A_k t_kk'
  SpatialMatrix subst(a.field(), a.dims());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < q; ++k) {
        const FieldElement& x = a(i, j, k);
        if (x.is_zero()) continue;
        for (std::size_t kk = 0; kk < q; ++kk)
          if (!c.T(k, kk).is_zero()) subst(i, j, kk) += x * c.T(k, kk);
      }
  // C_k' S
  SpatialMatrix right(a.field(), a.dims());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < q; ++k) {
        const FieldElement& x = subst(i, j, k);
        if (x.is_zero()) continue;
        for (std::size_t jj = 0; jj < n; ++jj)
          if (!c.S(j, jj).is_zero()) right(i, jj, k) += x * c.S(j, jj);
      }
  // R^T (C_k' S)
  SpatialMatrix out(a.field(), a.dims());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < q; ++k) {
        const FieldElement& x = right(i, j, k);
        if (x.is_zero()) continue;
        for (std::size_t ii = 0; ii < m; ++ii)
          if (!c.R(i, ii).is_zero()) out(ii, j, k) += x * c.R(i, ii);
      }
  return out;
}

FieldElement eval_form(const SpatialMatrix& a, std::span<const FieldElement> u,
                       std::span<const FieldElement> v, std::span<const FieldElement> w) {
  if (u.size() != a.m() || v.size() != a.n() || w.size() != a.q())
    throw ShapeMismatch("eval_form vector lengths do not match " + a.dims().to_string());
  FieldElement sum = a.field().zero();
  for (std::size_t i = 0; i < a.m(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      for (std::size_t k = 0; k < a.q(); ++k) sum += a(i, j, k) * u[i] * v[j] * w[k];
  return sum;
}

EquivCertificate compose(const EquivCertificate& c1, const EquivCertificate& c2) {
  if (!(c1.dims() == c2.dims()))
    throw ShapeMismatch("compose() of certificates for " + c1.dims().to_string() + " and " +
                        c2.dims().to_string());
  return {c1.R * c2.R, c1.S * c2.S, c1.T * c2.T};
}

EquivCertificate inverse(const EquivCertificate& c) {
  try {
    return {inverse(c.R), inverse(c.S), inverse(c.T)};
  } catch (const SingularMatrix& e) {
    throw SingularCertificate(e.what());
  }
}

EquivCertificate pad_certificate(const EquivCertificate& c, Dims dims) {
  const Dims have = c.dims();
  if (have.m > dims.m || have.n > dims.n || have.q > dims.q)
    throw ShapeMismatch("cannot pad " + have.to_string() + " certificate to " + dims.to_string());
  return {c.R.pad_identity(dims.m - have.m), c.S.pad_identity(dims.n - have.n),
          c.T.pad_identity(dims.q - have.q)};
}

}  // namespace tricanon
