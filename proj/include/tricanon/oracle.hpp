#pragma once

#include <cstdint>
#include <vector>

#include "tricanon/spatial.hpp"

namespace tricanon {

/// Transvections I + lambda E_uv (u != v) and scalings diag(1, .., lambda, .., 1)
/// with lambda != 0, 1: a generating set of GL(size, p). Prime fields only.
std::vector<ExactMatrix> gl_generators(std::size_t size, const Field& field);

/// Base-p code of a tensor over GF(p); entry (0,0,0) is the most significant
/// digit, so numeric order is lexicographic order of the entry list.
std::uint64_t encode_tensor(const SpatialMatrix& a);
SpatialMatrix decode_tensor(const Field& field, Dims dims, std::uint64_t code);

/// Action of the mode generators on tensor codes, computed with plain
/// residue arithmetic.
class GeneratorAction {
 public:
  GeneratorAction(const Field& field, Dims dims);

  std::uint64_t space_size() const noexcept { return space_size_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  /// Code of apply_equivalence(decode(code), generator g in its mode).
  std::uint64_t apply(std::size_t g, std::uint64_t code) const;
  /// The certificate carrying generator g (identities elsewhere).
  EquivCertificate certificate(std::size_t g) const;

 private:
  struct ModeGenerator {
    int mode;
    std::vector<std::int64_t> matrix;  // row-major, size x size
    ExactMatrix exact;
  };
  Field field_;
  Dims dims_;
  std::int64_t p_;
  std::uint64_t space_size_;
  std::vector<ModeGenerator> generators_;
};

/// Full equivalence class of `a` by breadth-first closure under the mode
/// generators, sorted by code.
std::vector<SpatialMatrix> orbit(const SpatialMatrix& a);

struct OrbitClass {
  std::uint64_t representative_code;  // smallest code in the orbit
  SpatialMatrix representative;
  std::uint64_t size;
};

struct Classification {
  Field field;
  Dims dims;
  std::vector<OrbitClass> classes;          // by ascending representative code
  std::vector<std::uint32_t> class_of_code;  // index into `classes`
  std::uint64_t total;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Partitions all p^(mnq) tensors into orbits. Throws BudgetExceeded when
/// the space is larger than `budget`. Worker threads feed edges into a shared
/// union-find; the result does not depend on `threads`.
Classification classify_all(const Field& field, Dims dims,
                            std::uint64_t budget = kDefaultEnumerationBudget,
                            unsigned threads = 1);

}  // namespace tricanon
