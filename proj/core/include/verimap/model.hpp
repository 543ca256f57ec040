// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "verimap/formula.hpp"

namespace verimap {

/// Tolerance on the sum of a categorical distribution's entries.
inline constexpr double kSimplexTol = 1e-9;

/// Ordered finite domain of integer values (non-empty, strictly increasing).
struct DomainSpec {
  std::vector<std::int64_t> values;

  static DomainSpec range(std::int64_t lo, std::int64_t hi);

  std::size_t size() const noexcept { return values.size(); }
  std::optional<std::size_t> index_of(std::int64_t value) const noexcept;
  bool contains(std::int64_t value) const noexcept {
    return index_of(value).has_value();
  }

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// Probability vector over a variable's domain: entries >= 0, summing to 1
/// within kSimplexTol.
struct CategoricalDist {
  std::vector<double> probs;

  friend bool operator==(const CategoricalDist&, const CategoricalDist&) =
      default;
};

struct VariableDecl {
  std::string name;
  DomainSpec domain;
  std::string evidence_label;  // provenance note only; never used in inference

  friend bool operator==(const VariableDecl&, const VariableDecl&) = default;
};

/// One value per model variable, in declaration order.
struct Assignment {
  std::vector<std::int64_t> values;

  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

/// Validated product model: per-variable categorical conditionals plus one
/// constraint formula. Immutable after construction and safe to share across
/// concurrent readers.
class Model {
 public:
  const std::vector<VariableDecl>& variables() const noexcept {
    return variables_;
  }
  const std::vector<CategoricalDist>& dists() const noexcept { return dists_; }
  const VariableDecl& variable(std::size_t var) const;
  const CategoricalDist& dist(std::size_t var) const;
  const Formula& constraint() const noexcept { return *constraint_; }
  std::shared_ptr<const Formula> constraint_ptr() const noexcept {
    return constraint_;
  }

  std::size_t size() const noexcept { return variables_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const noexcept;

  /// Whether every value of `a` lies in the corresponding domain.
  bool contains(const Assignment& a) const noexcept;

  /// Copy of this model with one conditional replaced (validated).
  Model with_dist(std::size_t var, CategoricalDist replacement) const;

 private:
  friend Model build_model(std::vector<VariableDecl> decls,
                           std::vector<CategoricalDist> dists,
                           FormulaPtr constraint);

  Model() = default;

  std::vector<VariableDecl> variables_;
  std::vector<CategoricalDist> dists_;
  std::shared_ptr<const Formula> constraint_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Validates all invariants and assembles a Model.
/// Throws DomainError, DistSumError, ArityError, UnknownVariableError,
/// DuplicateNameError.
Model build_model(std::vector<VariableDecl> decls,
                  std::vector<CategoricalDist> dists, FormulaPtr constraint);

/// Number of assignments in the domain product.
std::uint64_t assignment_count(const Model& model);

/// rank-th assignment in canonical (lexicographic) order.
Assignment assignment_at(const Model& model, std::uint64_t rank);

/// Lazily enumerates the full domain product in canonical order:
/// lexicographic by variable order, then domain order.
class AssignmentRange {
 public:
  explicit AssignmentRange(const Model& model);

  class iterator {
   public:
    using value_type = Assignment;

    const Assignment& operator*() const noexcept { return current_; }
    iterator& operator++();
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.done_ == b.done_ && (a.done_ || a.rank_ == b.rank_);
    }

   private:
    friend class AssignmentRange;
    iterator() : done_(true) {}
    explicit iterator(const Model* model);

    const Model* model_ = nullptr;
    Assignment current_;
    std::uint64_t rank_ = 0;
    bool done_ = false;
  };

  iterator begin() const { return iterator(model_); }
  iterator end() const { return iterator(); }

 private:
  const Model* model_;
};

AssignmentRange assignments(const Model& model);

}  // namespace verimap
