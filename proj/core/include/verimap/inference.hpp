// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "verimap/model.hpp"

namespace verimap {

struct PosteriorResult {
  Assignment assignment;
  double probability = 0.0;
};

/// Total unconstrained mass on the constraint's satisfying assignments.
struct PartitionValue {
  double z = 0.0;  // raw value; may exceed 1 by <= kSimplexTol from rounding
  std::uint64_t satisfying_count = 0;
};

/// Product of the per-variable probabilities at x.
double joint_unconstrained(const Model& model, const Assignment& x);

PartitionValue partition_z(const Model& model);

/// Constrained posterior of x: 0 off the constraint's support, otherwise
/// joint/Z. Throws ZeroPartitionError when x satisfies the constraint but
/// Z = 0.
double posterior(const Model& model, const Assignment& x);
double posterior(const Model& model, const Assignment& x,
                 const PartitionValue& partition);

/// Per-variable argmax; ties break toward the smaller domain value.
PosteriorResult map_unconstrained(const Model& model);

/// Argmax of the posterior over satisfying assignments; ties break toward
/// the lexicographically smallest assignment. Throws ZeroPartitionError.
PosteriorResult map_constrained(const Model& model);

/// Posterior marginal of one variable. Throws ZeroPartitionError.
CategoricalDist marginal_constrained(const Model& model, std::size_t var);

}  // namespace verimap
