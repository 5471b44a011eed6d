/*
Copyright 2026 The plankforge Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include "doctest.h"

#include <cmath>

#include "plankforge/errors.hpp"
#include "plankforge/region_cover.hpp"

using namespace plankforge;

namespace {

Vec vec(std::initializer_list<double> xs) {
  Vec v(xs.size());
  int k = 0;
  for (double x : xs) v[k++] = x;
  return v;
}

RegionConfig region_config(int dim, double c) {
  RegionConfig cfg;
  cfg.c = c;
  cfg.greedy.dimension = dim;
  cfg.greedy.cloudSize = 20000;
  cfg.greedy.verifyCloudSize = 20000;
  return cfg;
}

}  // namespace

TEST_CASE("limsup diagnostic partial-sum checks") {
  std::vector<double> harmonic, square;
  for (int i = 1; i <= 10000; ++i) {
    harmonic.push_back(1.0 / i);
    square.push_back(1.0 / (double(i) * i));
  }
  const auto h = limsup_diagnostic(harmonic);
  CHECK(std::isinf(h[0]));
  long double hn = 0;
  for (int i = 1; i <= 10000; ++i) hn += 1.0L / i;
  CHECK(h.back() == doctest::Approx(double(hn / std::log(10000.0L))).epsilon(1e-12));
  CHECK(h.back() == doctest::Approx(1.06).epsilon(0.01));

  const auto s = limsup_diagnostic(square);
  CHECK(s.back() == doctest::Approx(0.089).epsilon(0.01));
  CHECK(s.back() < s[s.size() / 2]);

  const auto c = limsup_diagnostic(std::vector<double>(100, 0.5));
  for (std::size_t i = 1; i < c.size(); ++i) {
    CHECK(c[i] == doctest::Approx(0.5 * (i + 1) / std::log(2.0)));
  }
}

TEST_CASE("first harmonic block from 18") {
  const BlockPartition part = split_blocks(harmonic_stream(18), 0.5, 1);
  REQUIRE(part.blocks.size() == 1);
  // Independent scan in extended precision.
  long double sum = 0;
  std::size_t n = 17;
  do {
    ++n;
    sum += 1.0L / n;
  } while (sum < 0.5L * std::log(static_cast<long double>(n)));
  CHECK(part.blocks[0].end == n - 17);
  CHECK(std::abs(double(n) - 324.0) <= 0.2 * 324.0);
  CHECK(part.blocks[0].sum >= 0.5 * std::log(1 / part.blocks[0].last));
}

TEST_CASE("constant widths give equal blocks") {
  const BlockPartition part = split_blocks(constant_stream(0.01), 0.5, 4);
  REQUIRE(part.blocks.size() == 4);
  const auto expected = static_cast<std::size_t>(std::ceil(0.5 * std::log(100.0) / 0.01));
  CHECK(expected == 231);
  for (const Block& b : part.blocks) CHECK(b.end - b.begin == expected);
}

TEST_CASE("block invariants and closure") {
  const BlockPartition one = split_blocks(list_stream({0.5}), 0.1, 1);
  REQUIRE(one.blocks.size() == 1);
  CHECK(one.blocks[0].end - one.blocks[0].begin == 1);

  const BlockPartition part = split_blocks(harmonic_stream(40), 0.3, 3);
  std::size_t expectBegin = 0;
  for (const Block& b : part.blocks) {
    CHECK(b.begin == expectBegin);
    CHECK(b.end > b.begin);
    double sum = 0;
    for (std::size_t i = b.begin; i < b.end; ++i) sum += part.widths[i];
    CHECK(sum == doctest::Approx(b.sum));
    CHECK(b.sum >= 0.3 * std::log(1 / b.last));
    CHECK(b.last == part.widths[b.end - 1]);
    expectBegin = b.end;
  }

  CHECK_THROWS_AS(split_blocks(list_stream({0.01, 0.01}), 0.5), ExhaustedError);
  CHECK_THROWS_AS(split_blocks(constant_stream(0.01), 1.5), InputError);
  CHECK_THROWS_AS(split_blocks(list_stream({0.01, 0.02}), 0.5), InputError);
}

TEST_CASE("filter_wide") {
  const std::vector<double> w{0.9, 0.4, 0.05};
  const WideSplit split = filter_wide(w, 0.0556);
  CHECK(split.wide == std::vector<double>{0.9, 0.4});
  CHECK(split.narrow == std::vector<double>{0.05});
  const std::vector<double> narrow{0.01, 0.005};
  CHECK(filter_wide(narrow, 0.0556).wide.empty());
}

TEST_CASE("ball plans cover the region") {
  const RegionPlan line = plan_region(Box(vec({0}), vec({1})), 0.5);
  CHECK(line.ballDiameter == doctest::Approx(0.5 / 6));
  CHECK(line.ballCenters.size() == 12);

  const RegionPlan point = plan_region(Box(vec({0.3, 0.3}), vec({0.3, 0.3})), 0.5);
  CHECK(point.ballCenters.size() == 1);

  for (const Box& box : {Box(vec({0, 0}), vec({0.3, 0.1})), Box(vec({-0.1, 0, 0}), vec({0, 0.05, 0.07}))}) {
    const RegionPlan plan = plan_region(box, 0.5);
    const int d = box.dim();
    const double r = plan.ballDiameter / 2;
    const int per = 50;
    std::vector<int> idx(d, 0);
    bool done = false;
    while (!done) {
      Vec x(d);
      for (int k = 0; k < d; ++k) {
        x[k] = box.low()[k] + (box.high()[k] - box.low()[k]) * idx[k] / (per - 1);
      }
      double best = INFINITY;
      for (const Vec& c : plan.ballCenters) best = std::min(best, (x - c).norm());
      if (best > r * (1 + 1e-12)) FAIL("grid point outside every plan ball");
      int k = 0;
      while (k < d && ++idx[k] == per) idx[k++] = 0;
      done = k == d;
    }
  }
}

TEST_CASE("one-dimensional region covering") {
  const RegionConfig cfg = region_config(1, 0.5);
  const RegionResult r =
      cover_region(constant_stream(0.02), random_normals(1, 1), Box(vec({0}), vec({1})), cfg);
  CHECK(r.plan.ballCenters.size() == 12);
  CHECK(r.partition.blocks.size() == 12);
  CHECK(r.verification.pass);
  CHECK(r.verification.uncoveredCount == 0);
  for (bool ok : r.widenedHypothesis) CHECK(ok);
  for (const Block& b : r.partition.blocks) CHECK(b.sum >= 0.5 * std::log(1 / b.last));
  CHECK(r.covering.provenance == provenance::kRegion);
  for (std::size_t i = 0; i < r.covering.placed.size(); ++i) {
    CHECK(r.covering.placed[i].width == 0.02);
  }
}

TEST_CASE("widened block hypothesis holds whenever widths are narrow") {
  for (double c : {0.1, 0.5, 1.0}) {
    for (int d = 1; d <= 4; ++d) {
      const double threshold = c / (3 * d);
      const auto start = static_cast<std::size_t>(std::ceil(1 / threshold));
      std::vector<BlockPartition> parts{split_blocks(constant_stream(threshold), c, 2),
                                        split_blocks(constant_stream(threshold / 7), c, 2)};
      // A harmonic block from index s closes near s^(1/(1-c)).
      if (c <= 0.5) parts.push_back(split_blocks(harmonic_stream(start), c, 1));
      for (const BlockPartition& part : parts) {
        for (const Block& b : part.blocks) {
          std::vector<double> widened;
          for (std::size_t i = b.begin; i < b.end; ++i) widened.push_back(part.widths[i] / threshold);
          CHECK(greedy_hypothesis_holds(widened, d));
        }
      }
    }
  }
}

TEST_CASE("single-point region uses one ball and one block") {
  const RegionConfig cfg = region_config(2, 0.5);
  const RegionResult r = cover_region(constant_stream(0.01), random_normals(2, 3),
                                      Box(vec({0.2, -0.1}), vec({0.2, -0.1})), cfg);
  CHECK(r.plan.ballCenters.size() == 1);
  CHECK(r.partition.blocks.size() == 1);
  CHECK(r.verification.pass);
}

TEST_CASE("wide slabs alone cover the region") {
  const RegionConfig cfg = region_config(1, 0.5);
  const RegionResult r =
      cover_region(constant_stream(0.5), random_normals(1, 1), Box(vec({0}), vec({1})), cfg);
  CHECK(r.wide.size() == 12);
  CHECK(r.partition.blocks.empty());
  CHECK(r.verification.pass);
  for (const auto& a : r.plan.assignment) CHECK(a.source == BallAssignment::Source::Wide);
}

TEST_CASE("too few slabs reports how many balls were covered") {
  const RegionConfig cfg = region_config(1, 0.5);
  try {
    cover_region(constant_stream(0.02, 500), random_normals(1, 1), Box(vec({0}), vec({1})), cfg);
    FAIL("expected exhaustion");
  } catch (const ExhaustedError& e) {
    CHECK(e.achieved() == 500 / 98);
    CHECK(e.required() == 12);
  }
}

TEST_CASE("normal sources") {
  const NormalSource a = random_normals(3, 5), b = random_normals(3, 5);
  CHECK(a(7).coords() == b(7).coords());
  const NormalSource list = list_normals({Direction::axis(2, 1)});
  CHECK(list(0).coords()[1] == 1);
  CHECK_THROWS_AS(list(1), InputError);
}
