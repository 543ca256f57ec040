// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "brute.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "verimap/errors.hpp"
#include "verimap/inference.hpp"
#include "verimap/model.hpp"
#include "verimap/parser.hpp"

using namespace verimap;
using namespace verimap::testing;

namespace {

doctest::Approx tight(double v) { return doctest::Approx(v).epsilon(1e-12); }

Model uniform_pair(const char* constraint) {
  return build_model(
      {{"a", DomainSpec::range(0, 1), {}}, {"b", DomainSpec::range(0, 1), {}}},
      {CategoricalDist{{0.5, 0.5}}, CategoricalDist{{0.5, 0.5}}},
      parse(constraint));
}

}  // namespace

TEST_CASE("joint_unconstrained multiplies the factor entries") {
  Model m = example_clean();
  CHECK(joint_unconstrained(m, Assignment{{1, 4}}) ==
        tight(0.22589977410022588));
  CHECK(joint_unconstrained(m, Assignment{{3, 1}}) == 0.0);
  CHECK_THROWS_AS(joint_unconstrained(m, Assignment{{1}}), ArityError);
  CHECK_THROWS_AS(joint_unconstrained(m, Assignment{{1, 7}}), DomainError);
}

TEST_CASE("partition value of the bundled example") {
  Model m = example_clean();
  PartitionValue part = partition_z(m);
  CHECK(part.z == tight(0.25086644913355083));
  CHECK(part.satisfying_count == 4);
}

TEST_CASE("posterior of the bundled example") {
  Model m = example_clean();
  CHECK(posterior(m, Assignment{{1, 4}}) == tight(0.900478222099625));
  CHECK(posterior(m, Assignment{{2, 3}}) == tight(0.09952177790037499));
  CHECK(posterior(m, Assignment{{3, 2}}) == 0.0);  // satisfying, zero mass
  CHECK(posterior(m, Assignment{{1, 1}}) == 0.0);  // off the support

  PartitionValue part = partition_z(m);
  CHECK(posterior(m, Assignment{{1, 4}}, part) ==
        posterior(m, Assignment{{1, 4}}));
}

TEST_CASE("constrained MAP of the bundled example") {
  Model m = example_clean();
  PosteriorResult map = map_constrained(m);
  CHECK(map.assignment == Assignment{{1, 4}});
  CHECK(map.probability == tight(0.900478222099625));
}

TEST_CASE("unconstrained MAP of the bundled example") {
  Model m = example_clean();
  PosteriorResult map = map_unconstrained(m);
  CHECK(map.assignment == Assignment{{1, 4}});
  CHECK(map.probability == tight(0.22589977410022588));
}

TEST_CASE("constrained marginals of the bundled example") {
  Model m = example_clean();
  CategoricalDist m1 = marginal_constrained(m, 0);
  CHECK(m1.probs[0] == tight(0.900478222099625));
  CHECK(m1.probs[1] == tight(0.09952177790037499));
  CHECK(m1.probs[2] == 0.0);
  CHECK(m1.probs[3] == 0.0);
  CategoricalDist m2 = marginal_constrained(m, 1);
  CHECK(m2.probs[0] == 0.0);
  CHECK(m2.probs[1] == 0.0);
  CHECK(m2.probs[2] == tight(0.09952177790037499));
  CHECK(m2.probs[3] == tight(0.900478222099625));
  CHECK_THROWS_AS(marginal_constrained(m, 2), DomainError);
}

TEST_CASE("the attacked example moves the constrained MAP only") {
  Model m = example_attacked();
  PartitionValue part = partition_z(m);
  CHECK(part.z == tight(0.2498000501999498));
  PosteriorResult cmap = map_constrained(m);
  CHECK(cmap.assignment == Assignment{{2, 3}});
  CHECK(cmap.probability == tight(0.8995197363654086));
  PosteriorResult umap = map_unconstrained(m);
  CHECK(umap.assignment == Assignment{{2, 4}});
  CHECK(umap.probability == tight(0.22589977410022588));
}

TEST_CASE("a tautological constraint collapses to the unconstrained case") {
  Model m = example_clean();
  Model free = build_model(
      {m.variable(0), m.variable(1)}, {m.dist(0), m.dist(1)}, parse("true"));
  PartitionValue part = partition_z(free);
  CHECK(part.satisfying_count == 16);
  CHECK(part.z == doctest::Approx(1.0).epsilon(1e-9));
  for (const Assignment& a : assignments(free)) {
    CHECK(posterior(free, a, part) ==
          doctest::Approx(joint_unconstrained(free, a)).epsilon(1e-9));
  }
  CHECK(map_constrained(free).assignment == map_unconstrained(free).assignment);
  for (std::size_t var = 0; var < free.size(); ++var) {
    CategoricalDist marg = marginal_constrained(free, var);
    for (std::size_t j = 0; j < marg.probs.size(); ++j) {
      CHECK(marg.probs[j] ==
            doctest::Approx(free.dist(var).probs[j]).epsilon(1e-9));
    }
  }
}

TEST_CASE("zero satisfying mass raises ZeroPartitionError") {
  Model dead_value = build_model({{"x", DomainSpec::range(0, 1), {}}},
                                 {CategoricalDist{{1.0, 0.0}}}, parse("x = 1"));
  CHECK(partition_z(dead_value).z == 0.0);
  CHECK(partition_z(dead_value).satisfying_count == 1);
  CHECK_THROWS_AS(map_constrained(dead_value), ZeroPartitionError);
  CHECK_THROWS_AS(marginal_constrained(dead_value, 0), ZeroPartitionError);
  CHECK_THROWS_AS(posterior(dead_value, Assignment{{1}}), ZeroPartitionError);
  CHECK(posterior(dead_value, Assignment{{0}}) == 0.0);

  Model unsat = uniform_pair("false");
  CHECK(partition_z(unsat).satisfying_count == 0);
  CHECK_THROWS_AS(map_constrained(unsat), ZeroPartitionError);

  Model contradiction = uniform_pair("a = 0 and a = 1");
  CHECK_THROWS_AS(map_constrained(contradiction), ZeroPartitionError);
}

TEST_CASE("constrained MAP ties break toward the lexicographically smallest") {
  CHECK(map_constrained(uniform_pair("true")).assignment == Assignment{{0, 0}});
  CHECK(map_constrained(uniform_pair("a + b = 1")).assignment ==
        Assignment{{0, 1}});
  CHECK(map_constrained(uniform_pair("a = 1 or b = 1")).assignment ==
        Assignment{{0, 1}});
}

TEST_CASE("unconstrained MAP ties break toward the smaller domain value") {
  Model m = build_model(
      {{"x", DomainSpec::range(1, 3), {}}, {"y", DomainSpec::range(1, 2), {}}},
      {CategoricalDist{{0.25, 0.5, 0.25}}, CategoricalDist{{0.5, 0.5}}},
      parse("true"));
  CHECK(map_unconstrained(m).assignment == Assignment{{2, 1}});
  CHECK(map_unconstrained(m).probability == tight(0.25));
}

TEST_CASE("a uniquely satisfying constraint is certain") {
  Model m = example_clean();
  Model pinned = build_model({m.variable(0), m.variable(1)},
                             {m.dist(0), m.dist(1)},
                             parse("x1 = 2 and x2 = 3"));
  PosteriorResult map = map_constrained(pinned);
  CHECK(map.assignment == Assignment{{2, 3}});
  CHECK(map.probability == 1.0);
  CategoricalDist marg = marginal_constrained(pinned, 0);
  CHECK(marg.probs == std::vector<double>{0.0, 1.0, 0.0, 0.0});
}

TEST_CASE("random models agree with brute-force inference") {
  Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    Model m = random_model(rng);
    BruteMap want = brute_constrained_map(m);
    REQUIRE(want.defined);

    PartitionValue part = partition_z(m);
    CHECK(part.z == tight(want.z));
    CHECK(part.satisfying_count == want.count);

    PosteriorResult map = map_constrained(m);
    CHECK(map.assignment == want.assignment);
    CHECK(map.probability == tight(want.joint / want.z));

    BruteMap uwant = brute_unconstrained_map(m);
    PosteriorResult umap = map_unconstrained(m);
    CHECK(umap.assignment == uwant.assignment);
    CHECK(umap.probability == tight(uwant.joint));
  }
}

TEST_CASE("random-model posterior properties") {
  Rng rng(42);
  for (int i = 0; i < 40; ++i) {
    Model m = random_model(rng);
    PartitionValue part = partition_z(m);
    PosteriorResult map = map_constrained(m);

    double total = 0.0;
    for (const Assignment& a : brute_enumerate(m)) {
      double p = posterior(m, a, part);
      CHECK(p >= 0.0);
      CHECK(p <= map.probability + 1e-12);
      total += p;
      if (!evaluate(m.constraint(), a, m)) CHECK(p == 0.0);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));

    // Conditioning on the constraint can only concentrate the MAP's mass.
    CHECK(map.probability >=
          joint_unconstrained(m, map.assignment) - 1e-12);

    PosteriorResult umap = map_unconstrained(m);
    if (evaluate(m.constraint(), umap.assignment, m)) {
      CHECK(map.assignment == umap.assignment);
    }
  }
}

TEST_CASE("random-model marginals match brute-force accumulation") {
  Rng rng(43);
  for (int i = 0; i < 40; ++i) {
    Model m = random_model(rng);
    PartitionValue part = partition_z(m);
    for (std::size_t var = 0; var < m.size(); ++var) {
      CategoricalDist marg = marginal_constrained(m, var);
      REQUIRE(marg.probs.size() == m.variable(var).domain.size());

      std::vector<double> want(marg.probs.size(), 0.0);
      for (const Assignment& a : brute_enumerate(m)) {
        if (!evaluate(m.constraint(), a, m)) continue;
        std::size_t idx = *m.variable(var).domain.index_of(a.values[var]);
        want[idx] += brute_joint(m, a);
      }
      double total = 0.0;
      for (std::size_t j = 0; j < want.size(); ++j) {
        CHECK(marg.probs[j] == doctest::Approx(want[j] / part.z).epsilon(1e-9));
        total += marg.probs[j];
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}
