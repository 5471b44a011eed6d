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

#include <algorithm>
#include <cmath>

#include "plankforge/errors.hpp"
#include "plankforge/greedy_cover.hpp"
#include "plankforge/region_cover.hpp"

using namespace plankforge;

namespace {

PointCloud line_cloud(std::vector<double> xs) {
  PointCloud cloud{Ball::unit_diameter(1), 0, Eigen::MatrixXd(1, xs.size()),
                   std::vector<char>(xs.size(), 1)};
  for (std::size_t i = 0; i < xs.size(); ++i) cloud.points(0, i) = xs[i];
  return cloud;
}

// Union of closed intervals covers [lo, hi], up to the slab tolerance.
bool intervals_cover(std::vector<std::pair<double, double>> iv, double lo, double hi) {
  std::sort(iv.begin(), iv.end());
  double reach = lo;
  for (const auto& [a, b] : iv) {
    if (a > reach + 1e-12) break;
    reach = std::max(reach, b);
  }
  return reach >= hi - 1e-12;
}

// w_i = w0 * i^-p until the single-ball hypothesis holds.
std::vector<double> widths_until_hypothesis(int dim, double w0, double p) {
  std::vector<double> w;
  for (int i = 1;; ++i) {
    w.push_back(w0 * std::pow(i, -p));
    if (greedy_hypothesis_holds(w, dim)) return w;
  }
}

}  // namespace

TEST_CASE("candidate offsets tile the projection") {
  const Ball ball = Ball::unit_diameter(2);
  const Direction e1 = Direction::axis(2, 0);
  CHECK(candidate_offsets(0.5, ball, e1) == std::vector<double>{-0.5, -0.25, 0, 0.25});
  CHECK(candidate_offsets(2, ball, e1) == std::vector<double>{-0.5});
  CHECK(candidate_offsets(0.3, ball, e1).size() == 7);
  CHECK_THROWS_AS(candidate_offsets(0, ball, e1), InputError);
  CHECK_THROWS_AS(candidate_offsets(-1, ball, e1), InputError);

  for (double w : {0.03, 0.1, 0.3, 0.45, 0.7, 1.3}) {
    const auto offs = candidate_offsets(w, ball, e1);
    CHECK(offs.size() == static_cast<std::size_t>(std::ceil(2 / w)));
    std::vector<std::pair<double, double>> iv;
    for (double o : offs) iv.emplace_back(o, o + w / 2);
    CHECK(intervals_cover(iv, -0.5, 0.5));
  }
}

TEST_CASE("greedy_step on a hand-checked line cloud") {
  const PointCloud cloud = line_cloud({-0.4, -0.2, 0, 0.2, 0.4});
  const GreedyChoice choice = greedy_step(cloud, Direction::axis(1, 0), 1.0);
  CHECK(choice.candidateCount == 2);
  CHECK(choice.covered.size() == 3);
  CHECK(choice.candidate == 0);
  CHECK(choice.halfLower == -0.5);
  const Slab full = choice.expanded(Direction::axis(1, 0), 1.0);
  CHECK(full.lower == -0.75);
  CHECK(full.width == 1.0);
}

TEST_CASE("greedy_step with no alive points") {
  PointCloud cloud = line_cloud({-0.1, 0.3});
  cloud.alive.assign(2, 0);
  const GreedyChoice choice = greedy_step(cloud, Direction::axis(1, 0), 0.5);
  CHECK(choice.candidate == 0);
  CHECK(choice.covered.empty());
}

TEST_CASE("greedy_step pigeonhole on sampled clouds") {
  for (int dim = 1; dim <= 3; ++dim) {
    PointCloud cloud = sample_cloud(Ball::unit_diameter(dim), 100, 17 + dim);
    for (std::uint64_t i = 0; i < 20; ++i) {
      const Direction n = random_direction(dim, 4, i);
      const double w = 0.5;
      const GreedyChoice c = greedy_step(cloud, n, w);
      CHECK(c.candidateCount == 4);
      CHECK(c.covered.size() >= 25);
      // Every reported point is inside the half-width translate.
      const Slab half(n, c.halfLower, w / 2);
      for (auto idx : c.covered) CHECK(slab_contains(half, cloud.points.col(idx)));
    }
  }
}

TEST_CASE("hypothesis arithmetic") {
  const std::vector<double> nine(9, 0.5), eight(8, 0.5);
  CHECK(greedy_hypothesis_holds(nine, 1));
  CHECK_FALSE(greedy_hypothesis_holds(eight, 1));
  CHECK(greedy_hypothesis_rhs(nine, 1) == doctest::Approx(3 * std::log(4.0)));
  CHECK(greedy_hypothesis_rhs(nine, 2) == doctest::Approx(6 * std::log(4.0)));
}

TEST_CASE("a width-one slab covers the ball by itself") {
  const std::vector<double> widths{1.0};
  const std::vector<Direction> normals{Direction::normalized(Vec::Ones(2))};
  GreedyConfig cfg;
  cfg.dimension = 2;
  cfg.cloudSize = 1000;
  cfg.verifyCloudSize = 20000;
  const GreedyResult r = cover_ball(widths, normals, cfg);
  CHECK(r.verification.pass);
  CHECK(r.verification.uncoveredCount == 0);
  CHECK(r.covering.placed.size() == 1);
  CHECK(r.covering.placed[0].lower == -0.5);
}

TEST_CASE("one-dimensional covering checked by interval arithmetic") {
  const std::vector<double> widths(9, 0.5);
  const std::vector<Direction> normals(9, Direction::axis(1, 0));
  GreedyConfig cfg;
  cfg.dimension = 1;
  cfg.verifyCloudSize = 50000;
  const GreedyResult r = cover_ball(widths, normals, cfg);
  CHECK(r.hypothesisHolds);
  CHECK(r.verification.pass);
  CHECK(r.verification.uncoveredCount == 0);
  std::vector<std::pair<double, double>> iv;
  for (const auto& s : r.covering.placed) iv.emplace_back(s.lower, s.upper());
  CHECK(intervals_cover(iv, -0.375, 0.375));
  const auto& target = std::get<Ball>(r.covering.target);
  CHECK(target.radius() == doctest::Approx(0.375));
  CHECK(r.covering.provenance == provenance::kGreedyBall);
}

TEST_CASE("two-dimensional greedy run satisfies the trace invariants") {
  const std::vector<double> widths = widths_until_hypothesis(2, 0.5, 0.5);
  const NormalSource src = random_normals(2, 1);
  std::vector<Direction> normals;
  for (std::size_t i = 0; i < widths.size(); ++i) normals.push_back(src(i));
  GreedyConfig cfg;
  cfg.dimension = 2;
  cfg.seed = 1;
  cfg.cloudSize = 50000;
  const GreedyResult r = cover_ball(widths, normals, cfg);
  CHECK(r.hypothesisHolds);
  CHECK(r.verification.pass);

  const GreedyTrace& trace = r.covering.trace;
  REQUIRE(trace.size() == widths.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto k = static_cast<std::size_t>(std::ceil(2 / widths[i]));
    CHECK(trace[i].candidateCount == k);
    if (trace[i].aliveBefore > 0) CHECK(trace[i].covered >= (trace[i].aliveBefore + k - 1) / k);
    if (i + 1 < trace.size()) {
      CHECK(trace[i + 1].aliveBefore == trace[i].aliveBefore - trace[i].covered);
    }
  }
  for (std::size_t i = 0; i < widths.size(); ++i) {
    CHECK(r.covering.placed[i].width == widths[i]);
    CHECK(r.covering.placed[i].normal.coords() == normals[i].coords());
  }
  const ResidualFraction rf = residual_fraction(trace);
  CHECK(rf.withinBound);
  CHECK(rf.empirical <= rf.bound);

  // Expansion soundness: the half translate sits inside its doubled slab.
  const PointCloud cloud = sample_cloud(Ball::unit_diameter(2), 20000, 99);
  for (std::size_t i = 0; i < 50; ++i) {
    const Slab& full = r.covering.placed[i];
    const Slab half = rescale_width(full, 0.5);
    for (std::size_t p = 0; p < cloud.size(); ++p) {
      if (slab_contains(half, cloud.points.col(p)) && !slab_contains(full, cloud.points.col(p))) {
        FAIL("expanded slab lost a point");
      }
    }
  }

  const GreedyResult again = cover_ball(widths, normals, cfg);
  REQUIRE(again.covering.placed.size() == r.covering.placed.size());
  for (std::size_t i = 0; i < widths.size(); ++i) {
    CHECK(again.covering.placed[i].lower == r.covering.placed[i].lower);
  }
}

TEST_CASE("violated hypothesis still runs and warns") {
  const std::vector<double> widths(3, 0.2);
  const std::vector<Direction> normals(3, Direction::axis(2, 0));
  GreedyConfig cfg;
  cfg.dimension = 2;
  cfg.cloudSize = 2000;
  cfg.verifyCloudSize = 2000;
  const GreedyResult r = cover_ball(widths, normals, cfg);
  CHECK_FALSE(r.hypothesisHolds);
  CHECK_FALSE(r.covering.warnings.empty());
  CHECK_FALSE(r.verification.pass);
}

TEST_CASE("cover_ball input validation") {
  GreedyConfig cfg;
  cfg.dimension = 2;
  const std::vector<Direction> two(2, Direction::axis(2, 0));
  CHECK_THROWS_AS(cover_ball(std::vector<double>{0.3, 0.4}, two, cfg), InputError);
  CHECK_THROWS_AS(cover_ball(std::vector<double>{0.3}, two, cfg), InputError);
  const std::vector<Direction> wrong(1, Direction::axis(3, 0));
  CHECK_THROWS_AS(cover_ball(std::vector<double>{0.3}, wrong, cfg), InputError);
  cfg.cloudSize = 999;
  CHECK_THROWS_AS(cover_ball(std::vector<double>{0.3, 0.2}, two, cfg), InputError);
}

TEST_CASE("residual fraction arithmetic") {
  CHECK(residual_fraction({}).empirical == 1.0);
  CHECK(residual_fraction({}).bound == 1.0);

  const GreedyTrace one{{0, 100, 25, 4}};
  const ResidualFraction a = residual_fraction(one);
  CHECK(a.empirical == doctest::Approx(0.75));
  CHECK(a.bound == doctest::Approx(0.75));
  CHECK(a.withinBound);

  const GreedyTrace two{{0, 100, 50, 2}, {0, 50, 25, 2}};
  const ResidualFraction b = residual_fraction(two);
  CHECK(b.empirical <= 0.25);
  CHECK(b.bound == doctest::Approx(0.25));
  CHECK(b.withinBound);

  const GreedyTrace bad{{0, 100, 10, 4}};
  CHECK_FALSE(residual_fraction(bad).withinBound);
}
