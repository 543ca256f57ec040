// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#include "verimap/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <utility>

#include "verimap/errors.hpp"

namespace verimap {

namespace {

bool valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void validate_domain(const VariableDecl& decl) {
  const auto& values = decl.domain.values;
  if (values.empty())
    throw DomainError("variable '" + decl.name + "' has an empty domain");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1])
      throw DomainError("domain of '" + decl.name +
                        "' is not strictly increasing");
  }
}

void validate_dist(const VariableDecl& decl, const CategoricalDist& dist) {
  if (dist.probs.size() != decl.domain.size())
    throw ArityError("dist for '" + decl.name + "' has " +
                     std::to_string(dist.probs.size()) +
                     " entries, domain has " +
                     std::to_string(decl.domain.size()));
  double sum = 0.0;
  for (double p : dist.probs) {
    if (!(p >= 0.0))  // also rejects NaN
      throw DomainError("dist for '" + decl.name +
                        "' has a negative or non-finite entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSimplexTol)
    throw DistSumError("dist for '" + decl.name + "' sums to " +
                       std::to_string(sum) + ", not 1");
}

}  // namespace

DomainSpec DomainSpec::range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo)
    throw DomainError("empty range " + std::to_string(lo) + ".." +
                      std::to_string(hi));
  DomainSpec spec;
  spec.values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t v = lo; v <= hi; ++v) spec.values.push_back(v);
  return spec;
}

std::optional<std::size_t> DomainSpec::index_of(
    std::int64_t value) const noexcept {
  auto it = std::lower_bound(values.begin(), values.end(), value);
  if (it == values.end() || *it != value) return std::nullopt;
  return static_cast<std::size_t>(it - values.begin());
}

const VariableDecl& Model::variable(std::size_t var) const {
  if (var >= variables_.size())
    throw DomainError("variable index " + std::to_string(var) +
                      " out of range");
  return variables_[var];
}

const CategoricalDist& Model::dist(std::size_t var) const {
  if (var >= dists_.size())
    throw DomainError("variable index " + std::to_string(var) +
                      " out of range");
  return dists_[var];
}

std::optional<std::size_t> Model::index_of(
    std::string_view name) const noexcept {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Model::contains(const Assignment& a) const noexcept {
  if (a.values.size() != variables_.size()) return false;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (!variables_[i].domain.contains(a.values[i])) return false;
  }
  return true;
}

Model Model::with_dist(std::size_t var, CategoricalDist replacement) const {
  validate_dist(variable(var), replacement);
  Model copy = *this;
  copy.dists_[var] = std::move(replacement);
  return copy;
}

Model build_model(std::vector<VariableDecl> decls,
                  std::vector<CategoricalDist> dists, FormulaPtr constraint) {
  if (decls.size() != dists.size())
    throw ArityError("got " + std::to_string(decls.size()) +
                     " variables but " + std::to_string(dists.size()) +
                     " dists");
  if (decls.empty()) throw DomainError("a model needs at least one variable");
  if (!constraint) throw DomainError("missing constraint");

  Model model;
  for (std::size_t i = 0; i < decls.size(); ++i) {
    if (!valid_identifier(decls[i].name))
      throw DomainError("invalid variable name '" + decls[i].name + "'");
    validate_domain(decls[i]);
    validate_dist(decls[i], dists[i]);
    if (!model.index_.emplace(decls[i].name, i).second)
      throw DuplicateNameError("duplicate variable '" + decls[i].name + "'");
  }
  for (const auto& name : referenced_variables(*constraint)) {
    if (!model.index_.count(name))
      throw UnknownVariableError("constraint mentions undeclared variable '" +
                                 name + "'");
  }

  model.variables_ = std::move(decls);
  model.dists_ = std::move(dists);
  model.constraint_ = std::shared_ptr<const Formula>(std::move(constraint));
  return model;
}

std::uint64_t assignment_count(const Model& model) {
  std::uint64_t count = 1;
  for (const auto& decl : model.variables()) {
    if (__builtin_mul_overflow(count, decl.domain.size(), &count))
      throw DomainError("assignment space exceeds 2^64");
  }
  return count;
}

Assignment assignment_at(const Model& model, std::uint64_t rank) {
  const auto& vars = model.variables();
  Assignment a;
  a.values.resize(vars.size());
  // mixed-radix decode, last variable fastest
  for (std::size_t i = vars.size(); i-- > 0;) {
    const auto& domain = vars[i].domain;
    a.values[i] = domain.values[rank % domain.size()];
    rank /= domain.size();
  }
  if (rank != 0)
    throw DomainError("assignment rank out of range");
  return a;
}

AssignmentRange::AssignmentRange(const Model& model) : model_(&model) {
  assignment_count(model);  // reject oversized spaces up front
}

AssignmentRange::iterator::iterator(const Model* model) : model_(model) {
  current_.values.reserve(model->size());
  for (const auto& decl : model->variables())
    current_.values.push_back(decl.domain.values.front());
}

AssignmentRange::iterator& AssignmentRange::iterator::operator++() {
  const auto& vars = model_->variables();
  // odometer increment over domain positions
  for (std::size_t i = vars.size(); i-- > 0;) {
    const auto& values = vars[i].domain.values;
    auto pos = *vars[i].domain.index_of(current_.values[i]);
    if (pos + 1 < values.size()) {
      current_.values[i] = values[pos + 1];
      ++rank_;
      return *this;
    }
    current_.values[i] = values.front();
  }
  done_ = true;
  return *this;
}

AssignmentRange assignments(const Model& model) {
  return AssignmentRange(model);
}

}  // namespace verimap
