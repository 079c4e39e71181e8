#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tricanon/canonicalizer.hpp"
#include "tricanon/oracle.hpp"

namespace tricanon {

/// Comparison of the canonical map against an exhaustive orbit partition.
struct CrossCheck {
  std::vector<std::optional<CanonicalLabel>> class_labels;  // nullopt: unsupported ranks
  std::uint64_t tensors_checked = 0;
  std::size_t unsupported_classes = 0;
  bool constant_on_orbits = true;
  bool distinct_across_orbits = true;
  bool certificates_sound = true;
  std::vector<std::string> failures;  // first few diagnostics

  bool validated() const noexcept {
    return constant_on_orbits && distinct_across_orbits && certificates_sound;
  }
};

/// Canonicalizes every tensor of the classified space, verifies each
/// certificate and checks that canonical tensors agree exactly within each
/// orbit and differ between orbits.
CrossCheck cross_check_canonical_map(const Classification& classification);

}  // namespace tricanon
