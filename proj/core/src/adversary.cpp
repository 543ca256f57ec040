// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#include "verimap/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "verimap/errors.hpp"

namespace verimap {

namespace {

constexpr double kEntryTol = 1e-12;

// Product of every factor except var's; the per-candidate constant in the
// flip-threshold algebra.
double other_factors(const Model& model, const Assignment& a,
                     std::size_t var) {
  double r = 1.0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (i == var) continue;
    r *= model.dist(i).probs[*model.variable(i).domain.index_of(a.values[i])];
  }
  return r;
}

CategoricalDist transfer(const CategoricalDist& dist, std::size_t from,
                         std::size_t to, double amount) {
  CategoricalDist out = dist;
  out.probs[from] = std::max(0.0, out.probs[from] - amount);
  out.probs[to] += amount;
  return out;
}

// Witness verification: the threshold is where the challenger ties the
// incumbent, and the tie-break may keep the incumbent. A sub-1e-6 nudge past
// the boundary settles it without moving the witness off the radius.
std::optional<double> nudged(double t, double capacity) {
  double room = capacity - t;
  if (room <= 0.0) return std::nullopt;
  return t + std::min({1e-9, room / 2});
}

AttackResult untargeted_radius(const Model& model, std::size_t var,
                               const Assignment& xstar, AttackResult out) {
  const auto& domain = model.variable(var).domain;
  const auto& probs = model.dist(var).probs;
  const std::size_t a = *domain.index_of(xstar.values[var]);
  const double A = other_factors(model, xstar, var);

  struct Candidate {
    double t = 0.0;
    Assignment y;
    std::size_t b = 0;
  };
  std::vector<Candidate> candidates;
  for (const Assignment& y : enumerate_models(model.constraint(), model)) {
    if (y == xstar) continue;
    std::size_t b = *domain.index_of(y.values[var]);
    // Sharing the incumbent's coordinate means both joints scale together;
    // no change to this factor can reorder them.
    if (b == a) continue;
    double B = other_factors(model, y, var);
    if (B <= 0.0) continue;
    double t = std::max(0.0, (probs[a] * A - probs[b] * B) / (A + B));
    candidates.push_back({t, y, b});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& lhs, const Candidate& rhs) {
              if (lhs.t != rhs.t) return lhs.t < rhs.t;
              return lhs.y < rhs.y;
            });

  for (const Candidate& cand : candidates) {
    if (cand.t > probs[a]) continue;
    std::optional<double> attempts[] = {cand.t, nudged(cand.t, probs[a])};
    for (const auto& t_use : attempts) {
      if (!t_use) continue;
      CategoricalDist witness = transfer(model.dist(var), a, cand.b, *t_use);
      Model attacked = model.with_dist(var, witness);
      PosteriorResult flipped = map_constrained(attacked);
      if (flipped.assignment == xstar) continue;
      out.feasible = true;
      out.radius = cand.t;
      out.witness = std::move(witness);
      out.flipped_map = std::move(flipped.assignment);
      return out;
    }
  }
  return out;
}

AttackResult targeted_radius(const Model& model, std::size_t var,
                             const Assignment& xstar, const Assignment& target,
                             AttackResult out) {
  if (!model.contains(target))
    throw DomainError("target is not a valid assignment of the model");
  if (target == xstar)
    throw std::invalid_argument(
        "target is already the constrained MAP; no flip is needed");
  if (!evaluate(model.constraint(), target, model)) return out;

  const auto& domain = model.variable(var).domain;
  const auto& probs = model.dist(var).probs;
  const std::size_t b = *domain.index_of(target.values[var]);
  const double B = other_factors(model, target, var);
  if (B <= 0.0) return out;

  struct Rival {
    std::size_t coord = 0;
    double r = 0.0;
    bool wins_ties = false;  // precedes the target lexicographically
  };
  std::vector<Rival> rivals;
  for (const Assignment& w : enumerate_models(model.constraint(), model)) {
    if (w == target) continue;
    double rw = other_factors(model, w, var);
    if (rw <= 0.0) continue;
    rivals.push_back({*domain.index_of(w.values[var]), rw, w < target});
  }

  // Moving mass t from coordinate s to d keeps the target ahead of rival w
  // exactly while gap0 + slope * t >= 0, a linear condition per rival, so
  // each (s, d) pair admits the target on an interval [lo, hi] of t. The
  // radius is the smallest admitting lo over all pairs.
  struct Candidate {
    double t = 0.0;
    std::size_t s = 0, d = 0;
    double hi = 0.0;
  };
  std::vector<Candidate> candidates;
  for (std::size_t s = 0; s < probs.size(); ++s) {
    if (probs[s] <= 0.0) continue;
    for (std::size_t d = 0; d < probs.size(); ++d) {
      if (d == s) continue;
      double lo = 0.0;
      double hi = probs[s];
      bool dead = false;
      for (const Rival& w : rivals) {
        double slope = (b == d ? B : 0.0) - (b == s ? B : 0.0) -
                       (w.coord == d ? w.r : 0.0) + (w.coord == s ? w.r : 0.0);
        double gap0 = probs[b] * B - probs[w.coord] * w.r;
        if (slope > 0.0) {
          lo = std::max(lo, -gap0 / slope);
        } else if (slope < 0.0) {
          hi = std::min(hi, gap0 / -slope);
        } else if (gap0 < 0.0 || (gap0 == 0.0 && w.wins_ties)) {
          dead = true;
          break;
        }
      }
      if (!dead && lo <= hi) candidates.push_back({lo, s, d, hi});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& lhs, const Candidate& rhs) {
              if (lhs.t != rhs.t) return lhs.t < rhs.t;
              return std::tie(lhs.s, lhs.d) < std::tie(rhs.s, rhs.d);
            });

  for (const Candidate& cand : candidates) {
    std::optional<double> attempts[] = {cand.t, nudged(cand.t, cand.hi)};
    for (const auto& t_use : attempts) {
      if (!t_use) continue;
      CategoricalDist witness =
          transfer(model.dist(var), cand.s, cand.d, *t_use);
      Model attacked = model.with_dist(var, witness);
      if (map_constrained(attacked).assignment != target) continue;
      out.feasible = true;
      out.radius = cand.t;
      out.witness = std::move(witness);
      out.flipped_map = target;
      return out;
    }
  }
  return out;
}

}  // namespace

const char* to_string(Norm norm) noexcept {
  return norm == Norm::TV ? "tv" : "linf";
}

Model apply_perturbation(const Model& model, const Perturbation& p) {
  const CategoricalDist& dist = model.dist(p.var);
  const std::string& name = model.variable(p.var).name;
  if (p.delta.size() != dist.probs.size())
    throw ArityError("delta for '" + name + "' has " +
                     std::to_string(p.delta.size()) + " entries, dist has " +
                     std::to_string(dist.probs.size()));
  double delta_sum = 0.0;
  for (double d : p.delta) {
    if (!std::isfinite(d))
      throw SimplexViolationError("delta for '" + name +
                                  "' has a non-finite entry");
    delta_sum += d;
  }
  if (std::abs(delta_sum) > kSimplexTol)
    throw SimplexViolationError("delta for '" + name + "' sums to " +
                                std::to_string(delta_sum) + ", not 0");

  CategoricalDist out;
  out.probs.reserve(dist.probs.size());
  double total = 0.0;
  for (std::size_t i = 0; i < dist.probs.size(); ++i) {
    double q = dist.probs[i] + p.delta[i];
    if (q < -kEntryTol || q > 1.0 + kEntryTol)
      throw SimplexViolationError(
          "perturbed entry " + std::to_string(i) + " of '" + name +
          "' leaves the simplex (" + std::to_string(q) + ")");
    q = std::clamp(q, 0.0, 1.0);
    out.probs.push_back(q);
    total += q;
  }
  for (double& q : out.probs) q /= total;
  return model.with_dist(p.var, std::move(out));
}

bool is_adversarial(const Model& model, const Perturbation& p,
                    MapLevel level) {
  Model attacked = apply_perturbation(model, p);
  if (level == MapLevel::Unconstrained)
    return map_unconstrained(model).assignment !=
           map_unconstrained(attacked).assignment;
  return map_constrained(model).assignment !=
         map_constrained(attacked).assignment;
}

AttackResult minimal_flip_radius(const Model& model, std::size_t var,
                                 Norm norm,
                                 const std::optional<Assignment>& target) {
  // A pure two-coordinate transfer of mass t has TV = L-inf = t, and such
  // transfers are norm-minimal among all simplex perturbations achieving a
  // flip, so both norms yield the same radius.
  (void)norm;
  PosteriorResult clean = map_constrained(model);

  AttackResult out;
  out.var = var;
  out.radius = std::numeric_limits<double>::infinity();
  out.witness = model.dist(var);
  out.flipped_map = clean.assignment;
  out.feasible = false;

  if (target)
    return targeted_radius(model, var, clean.assignment, *target,
                           std::move(out));
  return untargeted_radius(model, var, clean.assignment, std::move(out));
}

StabilityResult stability_radius(const Model& model, Norm norm) {
  StabilityResult out;
  out.radius = std::numeric_limits<double>::infinity();
  out.weakest_var = 0;
  bool first = true;
  for (std::size_t var = 0; var < model.size(); ++var) {
    AttackResult attack = minimal_flip_radius(model, var, norm);
    if (first || (attack.feasible && attack.radius < out.radius)) {
      out.radius = attack.feasible
                       ? attack.radius
                       : std::numeric_limits<double>::infinity();
      out.weakest_var = var;
      out.result = std::move(attack);
      first = false;
    }
  }
  return out;
}

CascadeReport cascade_report(const Model& clean, const Model& attacked,
                             std::size_t attacked_var) {
  if (clean.size() != attacked.size())
    throw ModelMismatchError("models declare different variable counts");
  clean.variable(attacked_var);  // bounds check
  for (std::size_t i = 0; i < clean.size(); ++i) {
    if (!(clean.variable(i) == attacked.variable(i)))
      throw ModelMismatchError("variable declarations differ at '" +
                               clean.variable(i).name + "'");
    if (i != attacked_var && !(clean.dist(i) == attacked.dist(i)))
      throw ModelMismatchError("dists differ at unattacked variable '" +
                               clean.variable(i).name + "'");
  }
  if (!structurally_equal(clean.constraint(), attacked.constraint()))
    throw ModelMismatchError("constraints differ");

  PosteriorResult clean_map = map_constrained(clean);
  PosteriorResult attacked_map = map_constrained(attacked);
  PosteriorResult clean_umap = map_unconstrained(clean);
  PosteriorResult attacked_umap = map_unconstrained(attacked);

  CascadeReport report;
  report.attacked_var = attacked_var;
  report.clean_map_probability = clean_map.probability;
  report.attacked_map_probability = attacked_map.probability;
  report.clean_umap_probability = clean_umap.probability;
  report.attacked_umap_probability = attacked_umap.probability;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    if (clean_map.assignment.values[i] != attacked_map.assignment.values[i])
      report.flipped_constrained.insert(i);
    if (clean_umap.assignment.values[i] != attacked_umap.assignment.values[i])
      report.flipped_unconstrained.insert(i);
  }
  report.collateral = report.flipped_constrained;
  report.collateral.erase(attacked_var);
  report.clean_map = std::move(clean_map.assignment);
  report.attacked_map = std::move(attacked_map.assignment);
  report.clean_umap = std::move(clean_umap.assignment);
  report.attacked_umap = std::move(attacked_umap.assignment);
  return report;
}

}  // namespace verimap
