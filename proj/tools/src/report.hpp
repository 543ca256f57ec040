// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "verimap/adversary.hpp"
#include "verimap/inference.hpp"
#include "verimap/model.hpp"

namespace verimap::cli {

using Json = nlohmann::ordered_json;

/// "x1=1 x2=4"
std::string format_assignment(const Model& model, const Assignment& a);

/// 6 significant digits, for the human-readable mode.
std::string format_prob(double p);

/// "[0.9, 0.1, 0, 0]" with 6-significant-digit entries.
std::string format_dist(const CategoricalDist& dist);

Json assignment_json(const Model& model, const Assignment& a);
Json posterior_json(const Model& model, const PosteriorResult& result);
Json attack_json(const Model& model, const AttackResult& result, Norm norm);
Json cascade_json(const Model& model, const CascadeReport& report);

/// Wraps a result payload in the versioned report envelope.
Json report_envelope(const Model& model,
                     const std::vector<std::string>& command, Json result);

Json error_json(std::string_view code, std::string_view message);

}  // namespace verimap::cli
