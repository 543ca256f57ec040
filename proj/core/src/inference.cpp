// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#include "verimap/inference.hpp"

#include <string>

#include "verimap/errors.hpp"

namespace verimap {

namespace {

[[noreturn]] void throw_zero_partition() {
  throw ZeroPartitionError(
      "constraint carries zero probability mass; the posterior is undefined");
}

}  // namespace

double joint_unconstrained(const Model& model, const Assignment& x) {
  if (x.values.size() != model.size())
    throw ArityError("assignment has " + std::to_string(x.values.size()) +
                     " values, model has " + std::to_string(model.size()) +
                     " variables");
  double p = 1.0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    auto idx = model.variable(i).domain.index_of(x.values[i]);
    if (!idx)
      throw DomainError("value " + std::to_string(x.values[i]) +
                        " is not in the domain of '" +
                        model.variable(i).name + "'");
    p *= model.dist(i).probs[*idx];
  }
  return p;
}

PartitionValue partition_z(const Model& model) {
  PartitionValue out;
  const Formula& constraint = model.constraint();
  for (const Assignment& a : assignments(model)) {
    if (!evaluate(constraint, a, model)) continue;
    out.z += joint_unconstrained(model, a);
    ++out.satisfying_count;
  }
  return out;
}

double posterior(const Model& model, const Assignment& x) {
  return posterior(model, x, partition_z(model));
}

double posterior(const Model& model, const Assignment& x,
                 const PartitionValue& partition) {
  if (!evaluate(model.constraint(), x, model)) return 0.0;
  if (partition.z <= 0.0) throw_zero_partition();
  return joint_unconstrained(model, x) / partition.z;
}

PosteriorResult map_unconstrained(const Model& model) {
  PosteriorResult out;
  out.probability = 1.0;
  out.assignment.values.reserve(model.size());
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto& domain = model.variable(i).domain;
    const auto& probs = model.dist(i).probs;
    std::size_t best = 0;
    for (std::size_t j = 1; j < probs.size(); ++j) {
      if (probs[j] > probs[best]) best = j;
    }
    out.assignment.values.push_back(domain.values[best]);
    out.probability *= probs[best];
  }
  return out;
}

PosteriorResult map_constrained(const Model& model) {
  const Formula& constraint = model.constraint();
  double z = 0.0;
  double best_joint = -1.0;
  Assignment best;
  for (const Assignment& a : assignments(model)) {
    if (!evaluate(constraint, a, model)) continue;
    double joint = joint_unconstrained(model, a);
    z += joint;
    if (joint > best_joint) {
      best_joint = joint;
      best = a;
    }
  }
  if (z <= 0.0) throw_zero_partition();
  return {std::move(best), best_joint / z};
}

CategoricalDist marginal_constrained(const Model& model, std::size_t var) {
  const auto& domain = model.variable(var).domain;  // validates var
  const Formula& constraint = model.constraint();
  CategoricalDist out;
  out.probs.assign(domain.size(), 0.0);
  double z = 0.0;
  for (const Assignment& a : assignments(model)) {
    if (!evaluate(constraint, a, model)) continue;
    double joint = joint_unconstrained(model, a);
    z += joint;
    out.probs[*domain.index_of(a.values[var])] += joint;
  }
  if (z <= 0.0) throw_zero_partition();
  for (double& p : out.probs) p /= z;
  return out;
}

}  // namespace verimap
