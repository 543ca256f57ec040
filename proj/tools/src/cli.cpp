// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>

#include "report.hpp"
#include "verimap/adversary.hpp"
#include "verimap/errors.hpp"
#include "verimap/inference.hpp"
#include "verimap/model_io.hpp"
#include "verimap/parser.hpp"
#include "verimap/version.hpp"

namespace verimap::cli {

const std::string& example_model_text() {
  static const std::string text =
      "# Two digits in 1..4 whose sum is known to be 5.\n"
      "var x1 in 1..4\n"
      "var x2 in 1..4\n"
      "dist x1 = [0.9, 0.1, 0, 0]\n"
      "# 1/4 - eps/3 three times, then 1/4 + eps, with eps = 0.001,\n"
      "# rounded to 6 decimal places.\n"
      "dist x2 = [0.249667, 0.249667, 0.249667, 0.251]\n"
      "constraint x1 + x2 = 5\n";
  return text;
}

CategoricalDist example_attack_dist() {
  return CategoricalDist{{0.1, 0.9, 0.0, 0.0}};
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buf.str();
}

Norm norm_from_name(const std::string& name) {
  return name == "linf" ? Norm::LInf : Norm::TV;
}

std::size_t var_index(const Model& model, const std::string& name) {
  auto idx = model.index_of(name);
  if (!idx)
    throw UnknownVariableError("model declares no variable '" + name + "'");
  return *idx;
}

Assignment parse_assignment_arg(const std::string& text) {
  Assignment out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{})
      throw std::invalid_argument("bad assignment '" + text +
                                  "': expected comma-separated integers");
    out.values.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) return out;
    if (text[pos] != ',')
      throw std::invalid_argument("bad assignment '" + text +
                                  "': expected comma-separated integers");
    ++pos;
  }
}

struct Output {
  std::ostream& out;
  bool json = false;
  std::vector<std::string> command;

  void emit(const Model& model, Json result,
            const std::string& human) const {
    if (json)
      out << report_envelope(model, command, std::move(result)).dump(2)
          << '\n';
    else
      out << human;
  }
};

void run_solve(const Output& output, const std::string& file,
               bool unconstrained) {
  Model model = load_model(read_file(file));
  PosteriorResult result =
      unconstrained ? map_unconstrained(model) : map_constrained(model);
  Json json;
  json["level"] = unconstrained ? "unconstrained" : "constrained";
  json["assignment"] = assignment_json(model, result.assignment);
  json["probability"] = result.probability;
  if (!unconstrained) {
    PartitionValue partition = partition_z(model);
    json["z"] = std::min(partition.z, 1.0);
    json["satisfying_count"] = partition.satisfying_count;
  }
  std::string human = "MAP (";
  human += unconstrained ? "unconstrained" : "constrained";
  human += "): " + format_assignment(model, result.assignment) + ", p≈" +
           format_prob(result.probability) + "\n";
  output.emit(model, std::move(json), human);
}

void run_models(const Output& output, const std::string& file) {
  Model model = load_model(read_file(file));
  std::vector<Assignment> sat = enumerate_models(model.constraint(), model);
  Json json;
  json["count"] = sat.size();
  json["assignments"] = Json::array();
  for (const Assignment& a : sat)
    json["assignments"].push_back(assignment_json(model, a));
  std::string human = std::to_string(sat.size()) +
                      " satisfying assignment" + (sat.size() == 1 ? "" : "s") +
                      "\n";
  for (const Assignment& a : sat)
    human += format_assignment(model, a) + "\n";
  output.emit(model, std::move(json), human);
}

std::string attack_human(const Model& model, const AttackResult& result,
                         Norm norm) {
  const std::string& name = model.variable(result.var).name;
  if (!result.feasible)
    return "no perturbation of " + name + " flips the constrained MAP\n";
  std::string out = "minimal flip radius (" + std::string(to_string(norm)) +
                    ") on " + name + " ≈ " + format_prob(result.radius) +
                    "\n";
  out += "witness dist: " + format_dist(result.witness) + "\n";
  out += "flipped MAP: " + format_assignment(model, result.flipped_map) + "\n";
  return out;
}

void run_attack(const Output& output, const std::string& file,
                const std::string& var, const std::string& norm_name,
                const std::optional<std::string>& target_text) {
  Model model = load_model(read_file(file));
  Norm norm = norm_from_name(norm_name);
  std::optional<Assignment> target;
  if (target_text) target = parse_assignment_arg(*target_text);
  AttackResult result =
      minimal_flip_radius(model, var_index(model, var), norm, target);
  Json json = attack_json(model, result, norm);
  if (target) json["target"] = assignment_json(model, *target);
  output.emit(model, std::move(json), attack_human(model, result, norm));
}

void run_radius(const Output& output, const std::string& file,
                const std::string& norm_name) {
  Model model = load_model(read_file(file));
  Norm norm = norm_from_name(norm_name);
  StabilityResult result = stability_radius(model, norm);
  Json json;
  json["norm"] = to_string(norm);
  json["feasible"] = result.result.feasible;
  json["radius"] =
      result.result.feasible ? Json(result.radius) : Json(nullptr);
  json["weakest_var"] = model.variable(result.weakest_var).name;
  json["attack"] = attack_json(model, result.result, norm);
  std::string human;
  if (!result.result.feasible) {
    human = "no single-variable perturbation flips the constrained MAP\n";
  } else {
    human = "stability radius (" + std::string(to_string(norm)) + ") ≈ " +
            format_prob(result.radius) + " at " +
            model.variable(result.weakest_var).name + "\n";
    human += "witness dist: " + format_dist(result.result.witness) + "\n";
    human += "flipped MAP: " +
             format_assignment(model, result.result.flipped_map) + "\n";
  }
  output.emit(model, std::move(json), human);
}

std::string name_list(const Model& model, const std::set<std::size_t>& vars) {
  if (vars.empty()) return "none";
  std::string out;
  for (std::size_t var : vars) {
    if (!out.empty()) out += ' ';
    out += model.variable(var).name;
  }
  return out;
}

std::string cascade_human(const Model& model, const CascadeReport& report) {
  std::string out =
      "attacked variable: " + model.variable(report.attacked_var).name + "\n";
  out += "MAP (constrained):   " + format_assignment(model, report.clean_map) +
         " (p≈" + format_prob(report.clean_map_probability) + ") -> " +
         format_assignment(model, report.attacked_map) + " (p≈" +
         format_prob(report.attacked_map_probability) + ")\n";
  out += "MAP (unconstrained): " +
         format_assignment(model, report.clean_umap) + " (p≈" +
         format_prob(report.clean_umap_probability) + ") -> " +
         format_assignment(model, report.attacked_umap) + " (p≈" +
         format_prob(report.attacked_umap_probability) + ")\n";
  out += "flipped (constrained): " +
         name_list(model, report.flipped_constrained) + "\n";
  out += "flipped (unconstrained): " +
         name_list(model, report.flipped_unconstrained) + "\n";
  out += "collateral: " + name_list(model, report.collateral) + "\n";
  return out;
}

void run_cascade(const Output& output, const std::string& file,
                 const std::string& var, const std::string& dist_text) {
  Model clean = load_model(read_file(file));
  std::size_t attacked_var = var_index(clean, var);
  CategoricalDist dist = dist_from_file_probs(parse_prob_list(dist_text));
  Model attacked = clean.with_dist(attacked_var, std::move(dist));
  CascadeReport report = cascade_report(clean, attacked, attacked_var);
  output.emit(clean, cascade_json(clean, report),
              cascade_human(clean, report));
}

void run_example(const Output& output) {
  Model clean = load_model(example_model_text());
  Model attacked = clean.with_dist(0, example_attack_dist());
  PosteriorResult clean_u = map_unconstrained(clean);
  PosteriorResult clean_c = map_constrained(clean);
  PosteriorResult attacked_u = map_unconstrained(attacked);
  PosteriorResult attacked_c = map_constrained(attacked);
  CascadeReport report = cascade_report(clean, attacked, 0);

  Json json;
  json["clean"] = {{"unconstrained", posterior_json(clean, clean_u)},
                   {"constrained", posterior_json(clean, clean_c)}};
  json["attacked"] = {{"unconstrained", posterior_json(clean, attacked_u)},
                      {"constrained", posterior_json(clean, attacked_c)}};
  json["cascade"] = cascade_json(clean, report);

  std::string human;
  human += "clean:    MAP (unconstrained): " +
           format_assignment(clean, clean_u.assignment) + ", p≈" +
           format_prob(clean_u.probability) + "\n";
  human += "clean:    MAP (constrained):   " +
           format_assignment(clean, clean_c.assignment) + ", p≈" +
           format_prob(clean_c.probability) + "\n";
  human += "attacked: MAP (unconstrained): " +
           format_assignment(clean, attacked_u.assignment) + ", p≈" +
           format_prob(attacked_u.probability) + "\n";
  human += "attacked: MAP (constrained):   " +
           format_assignment(clean, attacked_c.assignment) + ", p≈" +
           format_prob(attacked_c.probability) + "\n";
  human += "flipped (constrained): " +
           name_list(clean, report.flipped_constrained) +
           "; flipped (unconstrained): " +
           name_list(clean, report.flipped_unconstrained) +
           "; collateral: " + name_list(clean, report.collateral) + "\n";
  output.emit(clean, std::move(json), human);
}

void emit_error(std::ostream& err, bool json, std::string_view code,
                std::string_view message) {
  if (json)
    err << error_json(code, message).dump(2) << '\n';
  else
    err << "error: " << message << '\n';
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  bool json = std::find(args.begin(), args.end(), "--json") != args.end();
  CLI::App app{"exact MAP inference and minimal-perturbation analysis for "
               "constrained categorical models",
               kToolName};
  try {
    app.require_subcommand(1);
    bool json_flag = false;
    app.add_flag("--json", json_flag, "emit the machine-readable report");
    app.set_version_flag("--version", std::string(kVersion));

    Output output{out, json, args};

    auto* solve = app.add_subcommand(
        "solve", "compute the MAP assignment of a model file");
    solve->fallthrough();
    std::string solve_file;
    bool unconstrained = false;
    solve->add_option("file", solve_file, "model file")->required();
    solve->add_flag("--unconstrained", unconstrained,
                    "ignore the constraint and maximize each factor");
    solve->callback([&] { run_solve(output, solve_file, unconstrained); });

    auto* models = app.add_subcommand(
        "models", "list the assignments satisfying the constraint");
    models->fallthrough();
    std::string models_file;
    models->add_option("file", models_file, "model file")->required();
    models->callback([&] { run_models(output, models_file); });

    auto* attack = app.add_subcommand(
        "attack", "minimal constrained-MAP flip radius for one variable");
    attack->fallthrough();
    std::string attack_file, attack_var, attack_norm = "tv";
    std::string attack_target;
    attack->add_option("file", attack_file, "model file")->required();
    attack->add_option("--var", attack_var, "variable to perturb")->required();
    attack->add_option("--norm", attack_norm, "attack norm")
        ->check(CLI::IsMember({"tv", "linf"}));
    auto* target_opt = attack->add_option(
        "--target", attack_target,
        "comma-separated assignment the flip must reach");
    attack->callback([&] {
      run_attack(output, attack_file, attack_var, attack_norm,
                 target_opt->count()
                     ? std::optional<std::string>(attack_target)
                     : std::nullopt);
    });

    auto* radius = app.add_subcommand(
        "radius", "stability radius: weakest variable and its flip");
    radius->fallthrough();
    std::string radius_file, radius_norm = "tv";
    radius->add_option("file", radius_file, "model file")->required();
    radius->add_option("--norm", radius_norm, "attack norm")
        ->check(CLI::IsMember({"tv", "linf"}));
    radius->callback([&] { run_radius(output, radius_file, radius_norm); });

    auto* cascade = app.add_subcommand(
        "cascade", "replace one dist and report flipped variables");
    cascade->fallthrough();
    std::string cascade_file, cascade_var, cascade_dist;
    cascade->add_option("file", cascade_file, "model file")->required();
    cascade->add_option("--var", cascade_var, "variable to attack")
        ->required();
    cascade->add_option("--dist", cascade_dist,
                        "comma-separated replacement probabilities")
        ->required();
    cascade->callback(
        [&] { run_cascade(output, cascade_file, cascade_var, cascade_dist); });

    auto* example = app.add_subcommand(
        "paper-example", "run the bundled two-digit example end to end");
    example->fallthrough();
    example->callback([&] { run_example(output); });

    std::reverse(args.begin(), args.end());
    app.parse(args);
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, json, "usage", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    emit_error(err, json, "usage", e.what());
    return 1;
  } catch (const ZeroPartitionError& e) {
    emit_error(err, json, to_string(e.code()), e.what());
    return 3;
  } catch (const Error& e) {
    emit_error(err, json, to_string(e.code()), e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(err, json, "internal", e.what());
    return 2;
  }
}

}  // namespace verimap::cli
