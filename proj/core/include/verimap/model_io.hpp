// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "verimap/model.hpp"

namespace verimap {

/// File probability vectors are typically decimal-rounded; sums that deviate
/// from 1 by more than kSimplexTol but at most this much are renormalized.
inline constexpr double kFileSumTol = 1e-4;

/// Applies the file acceptance rule to a parsed probability vector: accept
/// as-is within kSimplexTol, renormalize within kFileSumTol, reject beyond.
CategoricalDist dist_from_file_probs(std::vector<double> probs);

/// Parses the model file format:
///   # comment
///   var <name> in <lo>..<hi>
///   dist <name> = [p, p, ...]
///   constraint <formula>
/// Statement order is enforced (vars, then dists, then one constraint).
/// Throws FileSyntaxError with line/column, or the underlying build/parse
/// error prefixed with its line.
Model load_model(std::string_view text);

/// Canonical text form: statements in declaration order, normalized
/// whitespace, probabilities in shortest round-trip form. Reloading it yields
/// a field-wise identical Model. Requires contiguous domains (the only kind
/// the file format can express).
std::string canonical_serialization(const Model& model);

/// Content hash of the canonical serialization ("fnv1a64:<16 hex digits>").
std::string model_digest(const Model& model);

/// Comma-separated probability list, as accepted by `--dist`.
std::vector<double> parse_prob_list(std::string_view text);

}  // namespace verimap
