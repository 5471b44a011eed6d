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
#include "plankforge/greedy_cover.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plankforge/errors.hpp"
#include "plankforge/rng.hpp"

namespace plankforge {

std::uint64_t GreedyConfig::verify_seed() const { return derive_seed(seed, 0x7665726966ull); }

std::vector<double> candidate_offsets(double w, const Ball& ball,
                                      const Direction& normal) {
  if (!(w > 0) || !std::isfinite(w)) throw InputError("slab width must be positive");
  const double rho = ball.radius();
  const double start = normal.dot(ball.center()) - rho;
  const auto count = static_cast<std::size_t>(std::ceil(4 * rho / w));
  std::vector<double> offsets(std::max<std::size_t>(count, 1));
  for (std::size_t j = 0; j < offsets.size(); ++j) {
    offsets[j] = start + static_cast<double>(j) * (w / 2);
  }
  return offsets;
}

Slab GreedyChoice::expanded(const Direction& normal, double w) const {
  return rescale_width(Slab(normal, halfLower, w / 2), 2.0);
}

GreedyChoice greedy_step(const PointCloud& cloud, const Direction& normal, double w) {
  const auto* ball = std::get_if<Ball>(&cloud.body);
  if (ball == nullptr) throw InputError("greedy_step needs a ball-shaped cloud");
  if (normal.dim() != cloud.dim()) throw InputError("normal and cloud dimensions differ");

  const std::vector<double> offsets = candidate_offsets(w, *ball, normal);
  const double half = w / 2;
  std::vector<Slab> candidates;
  candidates.reserve(offsets.size());
  for (double b : offsets) candidates.emplace_back(normal, b, half);

  const auto k = static_cast<long>(offsets.size());
  std::vector<std::size_t> counts(offsets.size(), 0);
  Vec x(cloud.dim());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (!cloud.alive[i]) continue;
    x = cloud.points.col(static_cast<Eigen::Index>(i));
    // Only the bin of the projection and its neighbours can contain x.
    const double p = normal.dot(x);
    const long bin = std::clamp(static_cast<long>(std::floor((p - offsets[0]) / half)),
                                0L, k - 1);
    for (long j = std::max(0L, bin - 1); j <= std::min(k - 1, bin + 1); ++j) {
      if (slab_contains(candidates[j], x)) ++counts[j];
    }
  }

  GreedyChoice choice;
  choice.candidateCount = offsets.size();
  // max_element returns the first maximum, i.e. the smallest offset on ties.
  choice.candidate = static_cast<std::size_t>(
      std::max_element(counts.begin(), counts.end()) - counts.begin());
  choice.halfLower = offsets[choice.candidate];
  if (counts[choice.candidate] == 0) return choice;

  const Slab& chosen = candidates[choice.candidate];
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (!cloud.alive[i]) continue;
    x = cloud.points.col(static_cast<Eigen::Index>(i));
    if (slab_contains(chosen, x)) choice.covered.push_back(i);
  }
  return choice;
}

double greedy_hypothesis_rhs(std::span<const double> widths, int dimension) {
  if (widths.empty()) return 0;
  return 3.0 * dimension * std::log(2.0 / widths.back());
}

bool greedy_hypothesis_holds(std::span<const double> widths, int dimension) {
  if (widths.empty()) return false;
  double sum = 0;
  for (double w : widths) sum += w;
  return sum >= greedy_hypothesis_rhs(widths, dimension);
}

namespace {

void validate(std::span<const double> widths, std::span<const Direction> normals,
              const GreedyConfig& cfg) {
  if (cfg.dimension < 1) throw InputError("dimension must be >= 1");
  if (cfg.cloudSize < 1000) throw InputError("cloud size must be >= 1000");
  if (cfg.verifyCloudSize < 1) throw InputError("verification cloud size must be >= 1");
  if (widths.empty()) throw InputError("at least one slab is required");
  if (widths.size() != normals.size()) {
    throw InputError("number of widths and normals differ");
  }
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if (!(widths[i] > 0) || !std::isfinite(widths[i])) {
      throw InputError("slab widths must be positive");
    }
    if (i > 0 && widths[i] > widths[i - 1]) {
      throw InputError("slab widths must be nonincreasing");
    }
    if (normals[i].dim() != cfg.dimension) {
      throw InputError("normal dimension does not match --dim");
    }
  }
}

Covering run_greedy(std::span<const double> widths,
                    std::span<const Direction> normals, int d,
                    std::size_t cloudSize, std::uint64_t seed) {
  const Ball ball = Ball::unit_diameter(d);
  PointCloud cloud = sample_cloud(ball, cloudSize, seed);
  std::size_t alive = cloud.alive_count();

  Covering cov{ball, Ball(Vec::Zero(d), 0.5 - widths.back() / 4), {}, {}, {},
               provenance::kGreedyBall, {}};
  cov.placed.reserve(widths.size());
  cov.trace.reserve(widths.size());
  for (std::size_t i = 0; i < widths.size(); ++i) {
    const GreedyChoice choice = greedy_step(cloud, normals[i], widths[i]);
    Slab placed = choice.expanded(normals[i], widths[i]);
    cov.trace.push_back({placed.lower, alive, choice.covered.size(), choice.candidateCount});
    for (std::size_t idx : choice.covered) cloud.alive[idx] = 0;
    alive -= choice.covered.size();
    cov.placed.push_back(std::move(placed));
  }
  return cov;
}

}  // namespace

GreedyResult cover_ball(std::span<const double> widths,
                        std::span<const Direction> normals,
                        const GreedyConfig& cfg) {
  validate(widths, normals, cfg);
  const int d = cfg.dimension;
  GreedyResult result;
  result.hypothesisHolds = greedy_hypothesis_holds(widths, d);

  if (widths.front() >= 1.0) {
    // One slab as wide as the ball covers it outright.
    const Ball ball = Ball::unit_diameter(d);
    const double w = widths.front();
    Slab only(normals.front(), normals.front().dot(ball.center()) - w / 2, w);
    result.covering = Covering{ball, ball, {std::move(only)}, {}, {},
                               provenance::kGreedyBall, {}};
    result.verification = verify_covering(result.covering, ball, VerifyMode::Cloud,
                                          cfg.verifyCloudSize, cfg.verify_seed());
    return result;
  }

  std::size_t cloudSize = cfg.cloudSize;
  for (;;) {
    result.covering = run_greedy(widths, normals, d, cloudSize, cfg.seed);
    result.verification =
        verify_covering(result.covering, result.covering.target, VerifyMode::Cloud,
                        cfg.verifyCloudSize, cfg.verify_seed());
    if (result.verification.pass || !result.hypothesisHolds || result.attempts > 1) break;
    ++result.attempts;
    cloudSize *= 4;
  }

  if (!result.hypothesisHolds) {
    double sum = 0;
    for (double w : widths) sum += w;
    std::ostringstream msg;
    msg << "hypothesis violated: sum of widths " << sum << " < 3d log(2/w_n) = "
        << greedy_hypothesis_rhs(widths, d) << "; result is best-effort";
    result.covering.warnings.push_back(msg.str());
  } else if (!result.verification.pass) {
    std::ostringstream msg;
    msg << result.verification.uncoveredCount << " of " << result.verification.checked
        << " verification points uncovered after retry at cloud size " << cloudSize
        << "; increase the cloud size";
    throw VerificationError(msg.str(), result.verification.uncovered);
  }
  return result;
}

ResidualFraction residual_fraction(const GreedyTrace& trace) {
  ResidualFraction r;
  if (trace.empty()) return r;
  std::size_t alive = trace.front().aliveBefore;
  for (const auto& step : trace) {
    const std::size_t before = step.aliveBefore;
    const std::size_t after = before - std::min(before, step.covered);
    const std::size_t k = step.candidateCount;
    r.bound *= 1.0 - 1.0 / static_cast<double>(k);
    if (after * k > before * (k - 1)) r.withinBound = false;
    alive = after;
  }
  const std::size_t initial = trace.front().aliveBefore;
  r.empirical = initial == 0 ? 0.0
                             : static_cast<double>(alive) / static_cast<double>(initial);
  return r;
}

}  // namespace plankforge
