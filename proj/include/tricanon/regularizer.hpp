#pragma once

#include "tricanon/reduction_log.hpp"
#include "tricanon/spatial.hpp"

namespace tricanon {

struct RegularizeResult {
  SpatialMatrix regularized;  // apply_equivalence(input, cert)
  EquivCertificate cert;
  SpatialMatrix part;         // leading m' x n' x q' corner, regular
  ReductionLog log;
};

/// One basis change per mode, in the order 3, 2, 1: the lexicographically
/// first independent flattenings move to the front and the rest become zero.
/// Regular inputs are returned unchanged with the identity certificate.
RegularizeResult regularize(const SpatialMatrix& a);

/// Zero-padded tensor of size `dims` with `part` in the leading corner.
SpatialMatrix embed_regular(const SpatialMatrix& part, Dims dims);

}  // namespace tricanon
