#include "tricanon/canonicalizer.hpp"

#include <array>
#include <utility>

#include "tricanon/error.hpp"

namespace tricanon {

namespace {

constexpr std::array<std::pair<FormTag, const char*>, 9> kTagNames{{
    {FormTag::Zero, "Zero"},
    {FormTag::A9, "A9"},
    {FormTag::A10, "A10"},
    {FormTag::A10a, "A10a"},
    {FormTag::A10b, "A10b"},
    {FormTag::A11, "A11"},
    {FormTag::A12, "A12"},
    {FormTag::A12a, "A12a"},
    {FormTag::A14z, "A14z"},
}};

ExactMatrix diag2(const FieldElement& a, const FieldElement& b) {
  const std::array<FieldElement, 2> d{a, b};
  return ExactMatrix::diagonal(d);
}

ExactMatrix mat2(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                 const FieldElement& d) {
  ExactMatrix out(a.field(), 2, 2);
  out(0, 0) = a;
  out(0, 1) = b;
  out(1, 0) = c;
  out(1, 1) = d;
  return out;
}

// Nonsingular matrix whose first columns are those of `cols` (full column
// rank), completed greedily with standard basis vectors.
ExactMatrix complete_columns(const ExactMatrix& cols) {
  const Field& f = cols.field();
  const std::size_t n = cols.rows();
  ExactMatrix out(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols.cols(); ++j) out(i, j) = cols(i, j);
  std::size_t filled = cols.cols();
  for (std::size_t e = 0; e < n && filled < n; ++e) {
    ExactMatrix trial = out;
    trial(e, filled) = f.one();
    ExactMatrix leading(f, n, filled + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= filled; ++j) leading(i, j) = trial(i, j);
    if (rank(leading) == filled + 1) {
      out = std::move(trial);
      ++filled;
    }
  }
  return out;
}

// Applies elementary steps to a working tensor and accumulates the
// certificate, so every rewrite is witnessed by an explicit (R, S, T).
class Reducer {
 public:
  explicit Reducer(const SpatialMatrix& a)
      : field_(a.field()), current_(a), cert_(EquivCertificate::identity(a.field(), a.dims())) {}

  const SpatialMatrix& current() const { return current_; }
  ExactMatrix slice(std::size_t k) const { return slices_mode3(current_)[k]; }
  const FieldElement& at(std::size_t i, std::size_t j, std::size_t k) const {
    return current_(i, j, k);
  }

  /// Every slice A_k becomes P A_k.
  void rows(std::string name, const ExactMatrix& p) { step(std::move(name), 1, p.transpose()); }
  /// Every slice A_k becomes A_k Q.
  void columns(std::string name, const ExactMatrix& q) { step(std::move(name), 2, q); }
  /// C_k' = sum_k A_k t_kk'.
  void substitute(std::string name, const ExactMatrix& t) { step(std::move(name), 3, t); }

  CanonResult finish(CanonicalLabel label) && {
    SpatialMatrix expected = canonical_tensor(field_, label);
    if (!(expected == current_))
      throw InternalInvariantViolation("reduction ended at " + current_.to_string() +
                                       " instead of " + label.to_string());
    ModeRanks ranks{current_.m(), current_.n(), current_.q()};
    return {std::move(label), std::move(current_), std::move(cert_), ranks, std::move(log_)};
  }

 private:
  void step(std::string name, int mode, const ExactMatrix& matrix) {
    EquivCertificate c = EquivCertificate::identity(field_, current_.dims());
    (mode == 1 ? c.R : mode == 2 ? c.S : c.T) = matrix;
    current_ = apply_equivalence(current_, c);
    cert_ = compose(cert_, c);
    log_.push_back({std::move(name), mode, matrix});
  }

  Field field_;
  SpatialMatrix current_;
  EquivCertificate cert_;
  ReductionLog log_;
};

// rank A >= rank B for the two slices.
void order_slices(Reducer& r) {
  if (rank(r.slice(0)) < rank(r.slice(1))) {
    const Field& f = r.current().field();
    r.substitute("order_slices_by_rank", mat2(f.zero(), f.one(), f.one(), f.zero()));
  }
}

CanonResult reduce_1x1x1(Reducer r) {
  const FieldElement a = r.at(0, 0, 0);
  ExactMatrix p(a.field(), 1, 1);
  p(0, 0) = a.inverse();
  r.rows("scale_to_one", p);
  return std::move(r).finish({FormTag::A9, std::nullopt});
}

CanonResult reduce_2x2x1(Reducer r) {
  r.rows("row_reduce_to_identity", inverse(r.slice(0)));
  return std::move(r).finish({FormTag::A10, std::nullopt});
}

CanonResult reduce_2x1x2(Reducer r) {
  // [a_i0k]_ik is nonsingular; rows act on it from the left.
  const Field& f = r.current().field();
  ExactMatrix m(f, 2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) m(i, k) = r.at(i, 0, k);
  r.rows("row_reduce_to_identity", inverse(m));
  return std::move(r).finish({FormTag::A10a, std::nullopt});
}

CanonResult reduce_1x2x2(Reducer r) {
  const Field& f = r.current().field();
  if (r.slice(0).is_zero())
    r.substitute("order_slices_nonzero_first", mat2(f.zero(), f.one(), f.one(), f.zero()));
  // ||1 0 | b1 b2||
  r.columns("first_slice_to_e1", inverse(complete_columns(r.slice(0).transpose()).transpose()));
  const FieldElement b2 = r.at(0, 1, 1);
  if (b2.is_zero()) throw InternalInvariantViolation("regular 1x2x2 tensor with b2 = 0");
  r.columns("scale_b2", diag2(f.one(), b2.inverse()));
  const FieldElement b1 = r.at(0, 0, 1);
  if (!b1.is_zero()) r.columns("eliminate_b1", mat2(f.one(), f.zero(), -b1, f.one()));
  return std::move(r).finish({FormTag::A10b, std::nullopt});
}

CanonResult reduce_4x2x2(Reducer r) {
  order_slices(r);
  const Field& f = r.current().field();
  ExactMatrix ab(f, 4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      ab(i, j) = r.at(i, j, 0);
      ab(i, j + 2) = r.at(i, j, 1);
    }
  r.rows("row_reduce_ab", inverse(ab));
  return std::move(r).finish({FormTag::A14z, std::nullopt});
}

CanonResult reduce_3x2x2(Reducer r) {
  order_slices(r);
  const Field& f = r.current().field();
  if (rank(r.slice(0)) != 2) throw InternalInvariantViolation("regular 3x2x2 tensor with rank A < 2");

  r.rows("first_slice_to_identity_block", inverse(complete_columns(r.slice(0))));
  // A = [I; 0]; the third row (c1, c2) of B is nonzero.
  const FieldElement c1 = r.at(2, 0, 1), c2 = r.at(2, 1, 1);
  if (c1.is_zero() && c2.is_zero())
    throw InternalInvariantViolation("regular 3x2x2 tensor with rank [A B] < 3");
  // W has (c1, c2) as its second row, so (c1, c2) W^-1 = (0, 1).
  const ExactMatrix w = c2.is_zero() ? mat2(f.zero(), f.one(), c1, c2) : mat2(f.one(), f.zero(), c1, c2);
  const ExactMatrix s = inverse(w);
  r.columns("third_row_of_b_to_e2", s);

  // Restore A = [I; 0] and clear the top of B's second column.
  ExactMatrix p = ExactMatrix::identity(f, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) p(i, j) = w(i, j);
  for (std::size_t i = 0; i < 2; ++i) {
    FieldElement acc = f.zero();
    for (std::size_t l = 0; l < 2; ++l) acc += w(i, l) * r.at(l, 1, 1);
    p(i, 2) = -acc;
  }
  r.rows("restore_first_slice", p);

  // Form (a17): B = [[b11, 0], [b21, 0], [0, 1]].
  const FieldElement b11 = r.at(0, 0, 1);
  if (!b11.is_zero()) {
    r.substitute("subtract_b11_a", mat2(f.one(), -b11, f.zero(), f.one()));
    ExactMatrix fix = ExactMatrix::identity(f, 3);
    fix(1, 2) = b11;
    r.rows("fix_b22_with_third_row", fix);
  }
  const FieldElement b21 = r.at(1, 0, 1);
  if (b21.is_zero()) return std::move(r).finish({FormTag::A12, std::nullopt});

  r.columns("scale_b21_column", diag2(b21.inverse(), f.one()));
  const std::array<FieldElement, 3> d{b21, f.one(), f.one()};
  r.rows("restore_a11", ExactMatrix::diagonal(d));
  return std::move(r).finish({FormTag::A12a, std::nullopt});
}

CanonResult reduce_2x2x2(Reducer r) {
  const Field& f = r.current().field();
  order_slices(r);
  if (!is_nonsingular(r.slice(0))) {
    r.substitute("replace_a_by_a_plus_b", mat2(f.one(), f.zero(), f.one(), f.one()));
    if (!is_nonsingular(r.slice(0)))
      throw InternalInvariantViolation("regular 2x2x2 tensor with A and A + B singular");
  }
  r.rows("first_slice_to_identity", inverse(r.slice(0)));

  // A = I; B is now reduced by similarity P^-1 B P.
  if (r.at(1, 0, 1).is_zero()) {
    const ExactMatrix b = r.slice(1);
    bool done = false;
    for (const FieldElement& eps : {f.one(), -f.one()}) {
      const ExactMatrix left = mat2(f.one(), f.zero(), -eps, f.one());
      const ExactMatrix right = mat2(f.one(), f.zero(), eps, f.one());
      if ((left * b * right)(1, 0).is_zero()) continue;
      r.rows("epsilon_conjugation_left", left);
      r.columns("epsilon_conjugation_right", right);
      done = true;
      break;
    }
    if (!done) throw InternalInvariantViolation("scalar second slice in a regular 2x2x2 tensor");
  }
  const FieldElement b21 = r.at(1, 0, 1);
  if (!b21.is_one()) {
    r.rows("scale_b21_row", diag2(b21, f.one()));
    r.columns("scale_b21_column", diag2(b21.inverse(), f.one()));
  }

  const FieldElement alpha = (r.at(0, 0, 1) + r.at(1, 1, 1)) / f.from_int(2);
  if (!alpha.is_zero()) r.substitute("trace_shift", mat2(f.one(), -alpha, f.zero(), f.one()));

  const FieldElement b11 = r.at(0, 0, 1);
  if (!b11.is_zero()) {
    r.rows("unipotent_conjugation_left", mat2(f.one(), -b11, f.zero(), f.one()));
    r.columns("unipotent_conjugation_right", mat2(f.one(), b11, f.zero(), f.one()));
  }

  // B = B(a).
  const FieldElement a = r.at(0, 1, 1);
  const SquareClass cls = square_class_rep(a);
  if (!a.is_zero() && !cls.z.is_one()) {
    // diag(1/z, 1) B(a) diag(z, 1) = z B(rep)
    r.rows("square_class_left", diag2(cls.z.inverse(), f.one()));
    r.columns("square_class_right", diag2(cls.z, f.one()));
    r.substitute("square_class_rescale", diag2(f.one(), cls.z.inverse()));
  }
  return std::move(r).finish({FormTag::A11, cls.rep});
}

}  // namespace

const char* tag_name(FormTag tag) noexcept {
  for (const auto& [t, name] : kTagNames)
    if (t == tag) return name;
  return "?";
}

std::optional<FormTag> tag_from_name(const std::string& name) noexcept {
  for (const auto& [t, n] : kTagNames)
    if (name == n) return t;
  return std::nullopt;
}

Dims form_dims(FormTag tag) noexcept {
  switch (tag) {
    case FormTag::Zero: return {0, 0, 0};
    case FormTag::A9: return {1, 1, 1};
    case FormTag::A10: return {2, 2, 1};
    case FormTag::A10a: return {2, 1, 2};
    case FormTag::A10b: return {1, 2, 2};
    case FormTag::A11: return {2, 2, 2};
    case FormTag::A12: return {3, 2, 2};
    case FormTag::A12a: return {3, 2, 2};
    case FormTag::A14z: return {4, 2, 2};
  }
  return {};
}

std::string CanonicalLabel::to_string() const {
  std::string out = tag_name(tag);
  if (param) out += "(a=" + param->to_string() + ")";
  return out;
}

SpatialMatrix identity_b_pair(const FieldElement& a) {
  const Field& f = a.field();
  SpatialMatrix out(f, 2, 2, 2);
  out(0, 0, 0) = f.one();
  out(1, 1, 0) = f.one();
  out(0, 1, 1) = a;
  out(1, 0, 1) = f.one();
  return out;
}

SpatialMatrix canonical_tensor(const Field& field, const CanonicalLabel& label) {
  SpatialMatrix out(field, form_dims(label.tag));
  const FieldElement one = field.one();
  switch (label.tag) {
    case FormTag::Zero:
      break;
    case FormTag::A9:
      out(0, 0, 0) = one;
      break;
    case FormTag::A10:
      out(0, 0, 0) = one;
      out(1, 1, 0) = one;
      break;
    case FormTag::A10a:
      out(0, 0, 0) = one;
      out(1, 0, 1) = one;
      break;
    case FormTag::A10b:
      out(0, 0, 0) = one;
      out(0, 1, 1) = one;
      break;
    case FormTag::A11:
      if (!label.param) throw InternalInvariantViolation("A11 label without a parameter");
      return identity_b_pair(*label.param);
    case FormTag::A12:
      out(0, 0, 0) = one;
      out(1, 1, 0) = one;
      out(2, 1, 1) = one;
      break;
    case FormTag::A12a:
      out(0, 0, 0) = one;
      out(1, 1, 0) = one;
      out(1, 0, 1) = one;
      out(2, 1, 1) = one;
      break;
    case FormTag::A14z:
      out(0, 0, 0) = one;
      out(1, 1, 0) = one;
      out(2, 0, 1) = one;
      out(3, 1, 1) = one;
      break;
  }
  return out;
}

CanonResult canonicalize_regular(const SpatialMatrix& a) {
  if (!is_regular(a)) throw NotRegular("tensor " + a.to_string() + " is not regular");
  if (a.n() > 2 || a.q() > 2)
    throw UnsupportedRanks("regular " + a.dims().to_string() +
                           " tensor has n or q above 2, the wild regime");
  Reducer r(a);
  const Dims d = a.dims();
  if (d == Dims{0, 0, 0}) return std::move(r).finish({FormTag::Zero, std::nullopt});
  if (d == Dims{1, 1, 1}) return reduce_1x1x1(std::move(r));
  if (d == Dims{2, 2, 1}) return reduce_2x2x1(std::move(r));
  if (d == Dims{2, 1, 2}) return reduce_2x1x2(std::move(r));
  if (d == Dims{1, 2, 2}) return reduce_1x2x2(std::move(r));
  if (d == Dims{2, 2, 2}) return reduce_2x2x2(std::move(r));
  if (d == Dims{3, 2, 2}) return reduce_3x2x2(std::move(r));
  if (d == Dims{4, 2, 2}) return reduce_4x2x2(std::move(r));
  throw UnsupportedShape("no canonical form for a regular " + d.to_string() + " tensor");
}

CanonResult canonicalize(const SpatialMatrix& a) {
  const ModeRanks ranks = mode_ranks(a);
  if (ranks.n > 2 || ranks.q > 2)
    throw UnsupportedRanks("mode ranks (" + std::to_string(ranks.m) + ", " +
                           std::to_string(ranks.n) + ", " + std::to_string(ranks.q) +
                           ") exceed 2 in mode 2 or 3: such classification problems are wild");
  RegularizeResult reg = regularize(a);
  CanonResult part = canonicalize_regular(reg.part);

  CanonResult out{std::move(part.label), embed_regular(part.canonical, a.dims()),
                  compose(reg.cert, pad_certificate(part.cert, a.dims())), ranks,
                  std::move(reg.log)};
  for (auto& s : part.log) out.log.push_back(std::move(s));
  if (!(apply_equivalence(a, out.cert) == out.canonical))
    throw InternalInvariantViolation("composed certificate does not reproduce the canonical form");
  return out;
}

bool are_equivalent(const SpatialMatrix& a, const SpatialMatrix& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatch("tensors over " + a.field().name() + " and " + b.field().name());
  if (!(a.dims() == b.dims())) return false;
  return canonicalize(a).label == canonicalize(b).label;
}

bool verify_certificate(const SpatialMatrix& a, const EquivCertificate& c, const SpatialMatrix& b) {
  if (!(c.dims() == a.dims()) || !(b.dims() == a.dims()))
    throw ShapeMismatch("certificate " + c.dims().to_string() + " between " +
                        a.dims().to_string() + " and " + b.dims().to_string());
  return apply_equivalence(a, c) == b;
}

}  // namespace tricanon
