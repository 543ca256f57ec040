// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "verimap/model.hpp"
#include "verimap/parser.hpp"

namespace verimap::testing {

// The bundled two-digit example: digits in 1..4, sum known to be 5, first
// conditional confidently right, second near-uniform with a slight pull
// toward 4. File-style text lives in the CLI; tests build it directly.
inline constexpr const char* kExampleText =
    "var x1 in 1..4\n"
    "var x2 in 1..4\n"
    "dist x1 = [0.9, 0.1, 0, 0]\n"
    "dist x2 = [0.249667, 0.249667, 0.249667, 0.251]\n"
    "constraint x1 + x2 = 5\n";

inline CategoricalDist normalized(std::vector<double> probs) {
  double sum = 0.0;
  for (double p : probs) sum += p;
  for (double& p : probs) p /= sum;
  return CategoricalDist{std::move(probs)};
}

inline Model example_clean() {
  return build_model(
      {{"x1", DomainSpec::range(1, 4), {}}, {"x2", DomainSpec::range(1, 4), {}}},
      {normalized({0.9, 0.1, 0.0, 0.0}),
       normalized({0.249667, 0.249667, 0.249667, 0.251})},
      parse("x1 + x2 = 5"));
}

inline Model example_attacked() {
  return example_clean().with_dist(0, CategoricalDist{{0.1, 0.9, 0.0, 0.0}});
}

}  // namespace verimap::testing
