#include "tricanon/regularizer.hpp"

#include "tricanon/error.hpp"

namespace tricanon {

namespace {

// Basis change X with sum_k F_k X[k][k'] = F_{basis[k']} for k' < rank and
// zero after that. The trailing columns are the standard kernel basis
// e_k - sum_l coords[l][k] e_{basis[l]} over the non-basis indices k.
ExactMatrix front_loading_basis(const Field& field, std::span<const ExactMatrix> family) {
  const std::size_t d = family.size();
  SpanRank span = rank_of_span(family);
  ExactMatrix x(field, d, d);
  std::vector<bool> in_basis(d, false);
  for (std::size_t l = 0; l < span.rank; ++l) {
    x(span.basis[l], l) = field.one();
    in_basis[span.basis[l]] = true;
  }
  std::size_t col = span.rank;
  for (std::size_t k = 0; k < d; ++k) {
    if (in_basis[k]) continue;
    x(k, col) = field.one();
    for (std::size_t l = 0; l < span.rank; ++l) x(span.basis[l], col) = -span.coordinates(l, k);
    ++col;
  }
  return x;
}

}  // namespace

RegularizeResult regularize(const SpatialMatrix& a) {
  const Field& field = a.field();
  const ModeRanks ranks = mode_ranks(a);
  EquivCertificate cert = EquivCertificate::identity(field, a.dims());
  if (ranks.as_dims() == a.dims()) return {a, cert, a, {}};

  ReductionLog log;
  SpatialMatrix current = a;

  const ExactMatrix t = front_loading_basis(field, slices_mode3(current));
  EquivCertificate step{ExactMatrix::identity(field, a.m()), ExactMatrix::identity(field, a.n()), t};
  current = apply_equivalence(current, step);
  cert = compose(cert, step);
  log.push_back({"regularize_mode3", 3, t});

  const ExactMatrix s = front_loading_basis(field, flatten_mode2(current));
  step = {ExactMatrix::identity(field, a.m()), s, ExactMatrix::identity(field, a.q())};
  current = apply_equivalence(current, step);
  cert = compose(cert, step);
  log.push_back({"regularize_mode2", 2, s});

  const ExactMatrix r = front_loading_basis(field, flatten_mode1(current));
  step = {r, ExactMatrix::identity(field, a.n()), ExactMatrix::identity(field, a.q())};
  current = apply_equivalence(current, step);
  cert = compose(cert, step);
  log.push_back({"regularize_mode1", 1, r});

  SpatialMatrix part = current.corner(ranks.as_dims());
  if (!(embed_regular(part, a.dims()) == current))
    throw InternalInvariantViolation("regularized form has entries outside the leading " +
                                     ranks.as_dims().to_string() + " corner");
  if (!is_regular(part))
    throw InternalInvariantViolation("regular part " + part.to_string() + " is not regular");
  return {std::move(current), std::move(cert), std::move(part), std::move(log)};
}

SpatialMatrix embed_regular(const SpatialMatrix& part, Dims dims) {
  const Dims have = part.dims();
  if (have.m > dims.m || have.n > dims.n || have.q > dims.q)
    throw ShapeMismatch("cannot embed " + have.to_string() + " into " + dims.to_string());
  SpatialMatrix out(part.field(), dims);
  for (std::size_t i = 0; i < have.m; ++i)
    for (std::size_t j = 0; j < have.n; ++j)
      for (std::size_t k = 0; k < have.q; ++k) out(i, j, k) = part(i, j, k);
  return out;
}

}  // namespace tricanon
