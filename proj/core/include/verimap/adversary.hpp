// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "verimap/inference.hpp"
#include "verimap/model.hpp"

namespace verimap {

/// Additive delta on one variable's conditional, in distribution space.
/// Entries sum to 0 within kSimplexTol and p + delta must stay within
/// [-1e-12, 1] per entry before clamping.
struct Perturbation {
  std::size_t var = 0;
  std::vector<double> delta;
};

/// Attack budget metric on the simplex: total variation (half the L1
/// difference) or maximum absolute entry difference.
enum class Norm { TV, LInf };

const char* to_string(Norm norm) noexcept;

enum class MapLevel { Constrained, Unconstrained };

/// Outcome of a minimal-flip search against one variable.
///
/// When feasible, `witness` is an in-simplex conditional that changes the
/// constrained MAP and sits within 1e-6 of `radius` from the original in the
/// requested norm; `radius` itself is the exact flip threshold (the boundary
/// may need an epsilon nudge when the tie-break favors the clean MAP). When
/// infeasible, radius is +infinity, witness is the unchanged conditional and
/// flipped_map the unchanged MAP.
struct AttackResult {
  std::size_t var = 0;
  double radius = 0.0;
  CategoricalDist witness;
  Assignment flipped_map;
  bool feasible = false;
};

/// Which output coordinates an attack corrupted, at both inference levels.
struct CascadeReport {
  Assignment clean_map, attacked_map;    // constrained
  Assignment clean_umap, attacked_umap;  // unconstrained
  std::size_t attacked_var = 0;
  std::set<std::size_t> flipped_constrained;
  std::set<std::size_t> flipped_unconstrained;
  std::set<std::size_t> collateral;  // flipped_constrained minus attacked_var
  double clean_map_probability = 0.0;
  double attacked_map_probability = 0.0;
  double clean_umap_probability = 0.0;
  double attacked_umap_probability = 0.0;
};

/// New model with dist[p.var] := clamp-and-renormalize(dist[p.var] + delta).
/// Throws SimplexViolationError if the shifted vector leaves the simplex by
/// more than the tolerances.
Model apply_perturbation(const Model& model, const Perturbation& p);

/// Whether the perturbation changes the MAP at the chosen level.
bool is_adversarial(const Model& model, const Perturbation& p, MapLevel level);

/// Least-norm change to dist[var] that flips the constrained MAP, found in
/// closed form over pure two-coordinate mass transfers (which are
/// norm-minimal for both TV and L-inf). With `target`, the change must make
/// `target` itself the new constrained MAP. Throws ZeroPartitionError.
AttackResult minimal_flip_radius(const Model& model, std::size_t var,
                                 Norm norm,
                                 const std::optional<Assignment>& target = {});

struct StabilityResult {
  double radius = 0.0;  // +infinity when no variable admits a flip
  std::size_t weakest_var = 0;
  AttackResult result;
};

/// Minimum flip radius over all variables; ties break toward the smallest
/// variable index.
StabilityResult stability_radius(const Model& model, Norm norm);

/// Compares clean vs attacked MAPs at both levels. The models must differ in
/// dist[attacked_var] at most; throws ModelMismatchError otherwise.
CascadeReport cascade_report(const Model& clean, const Model& attacked,
                             std::size_t attacked_var);

}  // namespace verimap
