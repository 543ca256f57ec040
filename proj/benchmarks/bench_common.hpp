// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "verimap/model.hpp"
#include "verimap/parser.hpp"

namespace verimap::bench {

// Deterministic k-variable model over 1..4 with a mid-range sum constraint,
// so the satisfying set stays large as k grows.
inline Model make_chain_model(std::size_t vars) {
  std::vector<VariableDecl> decls;
  std::vector<CategoricalDist> dists;
  std::string constraint_text;
  for (std::size_t i = 0; i < vars; ++i) {
    std::string name = "x" + std::to_string(i + 1);
    decls.push_back({name, DomainSpec::range(1, 4), {}});
    std::vector<double> probs(4);
    double total = 0.0;
    for (std::size_t j = 0; j < probs.size(); ++j) {
      probs[j] = 1.0 + static_cast<double>((i + j) % 3);
      total += probs[j];
    }
    for (double& p : probs) p /= total;
    dists.push_back({std::move(probs)});
    if (i) constraint_text += " + ";
    constraint_text += name;
  }
  constraint_text += " = " + std::to_string(vars * 5 / 2);
  return build_model(std::move(decls), std::move(dists),
                     parse(constraint_text));
}

}  // namespace verimap::bench
