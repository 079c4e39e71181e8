#pragma once

#include <string>
#include <vector>

#include "tricanon/matrix.hpp"

namespace tricanon {

/// One elementary equivalence step: `matrix` acts on index `mode`
/// (1 = R, 2 = S, 3 = T) with identities on the other two modes.
struct ReductionStep {
  std::string name;
  int mode;
  ExactMatrix matrix;
};

using ReductionLog = std::vector<ReductionStep>;

}  // namespace tricanon
