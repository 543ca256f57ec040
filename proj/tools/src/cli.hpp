// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "verimap/model.hpp"

namespace verimap::cli {

/// Model text of the bundled two-digit example (the `paper-example`
/// subcommand's fixture).
const std::string& example_model_text();

/// The adversarial replacement for the example's first conditional.
CategoricalDist example_attack_dist();

/// Entry point behind main(): args exclude the program name. Writes reports
/// to `out` and diagnostics to `err`. Returns 0 on success, 1 on usage
/// errors, 2 on model/parse errors, 3 on inference errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace verimap::cli
