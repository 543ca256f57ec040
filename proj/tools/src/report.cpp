// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

#include <cstdio>

#include "verimap/model_io.hpp"
#include "verimap/version.hpp"

namespace verimap::cli {

std::string format_assignment(const Model& model, const Assignment& a) {
  std::string out;
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (i) out += ' ';
    out += model.variable(i).name + "=" + std::to_string(a.values[i]);
  }
  return out;
}

std::string format_prob(double p) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", p);
  return buf;
}

std::string format_dist(const CategoricalDist& dist) {
  std::string out = "[";
  for (std::size_t i = 0; i < dist.probs.size(); ++i) {
    if (i) out += ", ";
    out += format_prob(dist.probs[i]);
  }
  return out + "]";
}

Json assignment_json(const Model& model, const Assignment& a) {
  Json out = Json::object();
  for (std::size_t i = 0; i < model.size(); ++i)
    out[model.variable(i).name] = a.values[i];
  return out;
}

Json posterior_json(const Model& model, const PosteriorResult& result) {
  return {{"assignment", assignment_json(model, result.assignment)},
          {"probability", result.probability}};
}

namespace {

Json name_set_json(const Model& model, const std::set<std::size_t>& vars) {
  Json out = Json::array();
  for (std::size_t var : vars) out.push_back(model.variable(var).name);
  return out;
}

}  // namespace

Json attack_json(const Model& model, const AttackResult& result, Norm norm) {
  Json out;
  out["var"] = model.variable(result.var).name;
  out["norm"] = to_string(norm);
  out["feasible"] = result.feasible;
  out["radius"] = result.feasible ? Json(result.radius) : Json(nullptr);
  out["witness"] = result.witness.probs;
  out["flipped_map"] = assignment_json(model, result.flipped_map);
  return out;
}

Json cascade_json(const Model& model, const CascadeReport& report) {
  Json out;
  out["attacked_var"] = model.variable(report.attacked_var).name;
  out["constrained"] = {
      {"clean",
       {{"assignment", assignment_json(model, report.clean_map)},
        {"probability", report.clean_map_probability}}},
      {"attacked",
       {{"assignment", assignment_json(model, report.attacked_map)},
        {"probability", report.attacked_map_probability}}}};
  out["unconstrained"] = {
      {"clean",
       {{"assignment", assignment_json(model, report.clean_umap)},
        {"probability", report.clean_umap_probability}}},
      {"attacked",
       {{"assignment", assignment_json(model, report.attacked_umap)},
        {"probability", report.attacked_umap_probability}}}};
  out["flipped_constrained"] = name_set_json(model, report.flipped_constrained);
  out["flipped_unconstrained"] =
      name_set_json(model, report.flipped_unconstrained);
  out["collateral"] = name_set_json(model, report.collateral);
  return out;
}

Json report_envelope(const Model& model,
                     const std::vector<std::string>& command, Json result) {
  Json out;
  out["schema"] = kReportSchema;
  out["tool"] = kToolName;
  out["version"] = kVersion;
  out["command"] = command;
  out["model_digest"] = model_digest(model);
  out["result"] = std::move(result);
  return out;
}

Json error_json(std::string_view code, std::string_view message) {
  Json out;
  out["schema"] = kReportSchema;
  out["error"] = {{"code", std::string(code)},
                  {"message", std::string(message)}};
  return out;
}

}  // namespace verimap::cli
