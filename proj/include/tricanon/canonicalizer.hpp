#pragma once

#include <optional>
#include <string>

#include "tricanon/reduction_log.hpp"
#include "tricanon/regularizer.hpp"
#include "tricanon/spatial.hpp"

namespace tricanon {

/// Regular canonical forms for n, q <= 2.
enum class FormTag {
  Zero,  // 0x0x0
  A9,    // 1x1x1: ||1||
  A10,   // 2x2x1: ||I2||
  A10a,  // 2x1x2
  A10b,  // 1x2x2
  A11,   // 2x2x2: ||I2 | B(a)||, B(a) = [[0, a], [1, 0]]
  A12,   // 3x2x2
  A12a,  // 3x2x2
  A14z,  // 4x2x2
};

const char* tag_name(FormTag tag) noexcept;
std::optional<FormTag> tag_from_name(const std::string& name) noexcept;
Dims form_dims(FormTag tag) noexcept;

struct CanonicalLabel {
  FormTag tag = FormTag::Zero;
  /// A11 only; always its own square-class representative.
  std::optional<FieldElement> param;

  std::string to_string() const;
  friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;
};

/// The regular canonical tensor for `label`.
SpatialMatrix canonical_tensor(const Field& field, const CanonicalLabel& label);

/// ||I2 | B(a)||.
SpatialMatrix identity_b_pair(const FieldElement& a);

struct CanonResult {
  CanonicalLabel label;
  SpatialMatrix canonical;  // apply_equivalence(input, cert)
  EquivCertificate cert;
  ModeRanks ranks;
  ReductionLog log;
};

/// Canonical form of a regular tensor with n <= 2 and q <= 2. Throws
/// NotRegular, UnsupportedRanks (n or q above 2) or InternalInvariantViolation.
CanonResult canonicalize_regular(const SpatialMatrix& a);

/// Regularizes, canonicalizes the regular part and embeds it back at the
/// input size. Throws UnsupportedRanks when n' > 2 or q' > 2.
CanonResult canonicalize(const SpatialMatrix& a);

/// Throws FieldMismatch for tensors over different fields.
bool are_equivalent(const SpatialMatrix& a, const SpatialMatrix& b);

/// apply_equivalence(a, c) == b. Throws ShapeMismatch or SingularCertificate.
bool verify_certificate(const SpatialMatrix& a, const EquivCertificate& c, const SpatialMatrix& b);

/// min rank(alpha A + beta B) over (alpha, beta) != (0, 0).
std::size_t pencil_min_rank(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace tricanon
