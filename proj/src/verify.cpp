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
#include "plankforge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plankforge/errors.hpp"
#include "plankforge/parallel.hpp"
#include "plankforge/rng.hpp"

namespace plankforge {

namespace {

void bounding_box(const Body& body, Vec& lo, Vec& hi) {
  if (const auto* box = std::get_if<Box>(&body)) {
    lo = box->low();
    hi = box->high();
    return;
  }
  const Ball& ball = std::get<Ball>(body);
  lo = ball.center().array() - ball.radius();
  hi = ball.center().array() + ball.radius();
}

bool uncovered_by_all(const std::vector<Slab>& slabs, const Vec& x) {
  return first_containing(slabs, x) < 0;
}

double nearest_slab_excess(const std::vector<Slab>& slabs, const Vec& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : slabs) best = std::min(best, slab_excess(s, x));
  return best;
}

}  // namespace

std::vector<Vec> verification_points(const Body& body, VerifyMode mode,
                                     std::size_t count, std::uint64_t seed) {
  if (count < 1) throw InputError("verification count must be >= 1");
  std::vector<Vec> pts;
  if (mode == VerifyMode::Cloud) {
    PointCloud cloud = sample_cloud(body, count, seed);
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pts.emplace_back(cloud.points.col(i));
    return pts;
  }
  const int d = body_dim(body);
  Vec lo, hi;
  bounding_box(body, lo, hi);
  std::vector<std::size_t> per(d);
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) {
    per[k] = (hi[k] > lo[k] && count > 1) ? count : 1;
    total *= per[k];
  }
  std::vector<std::size_t> idx(d, 0);
  Vec x(d);
  for (std::size_t n = 0; n < total; ++n) {
    for (int k = 0; k < d; ++k) {
      if (per[k] == 1) {
        x[k] = lo[k] == hi[k] ? lo[k] : (lo[k] + hi[k]) / 2;
      } else if (idx[k] + 1 == per[k]) {
        x[k] = hi[k];
      } else {
        x[k] = lo[k] + (hi[k] - lo[k]) * static_cast<double>(idx[k]) /
                           static_cast<double>(per[k] - 1);
      }
    }
    if (body_contains(body, x)) pts.push_back(x);
    for (int k = 0; k < d; ++k) {
      if (++idx[k] < per[k]) break;
      idx[k] = 0;
    }
  }
  return pts;
}

VerificationReport verify_slabs(const std::vector<Slab>& slabs, const Body& body,
                                VerifyMode mode, std::size_t count,
                                std::uint64_t seed, std::size_t witnessCap) {
  const int d = body_dim(body);
  for (const auto& s : slabs) {
    if (s.dim() != d) throw InputError("covering and body dimensions differ");
  }
  const std::vector<Vec> pts = verification_points(body, mode, count, seed);
  std::vector<char> missed(pts.size(), 0);
  parallel_for(pts.size(), [&](std::size_t i) {
    missed[i] = uncovered_by_all(slabs, pts[i]) ? 1 : 0;
  });

  VerificationReport report;
  report.checked = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!missed[i]) continue;
    ++report.uncoveredCount;
    if (report.uncovered.size() < witnessCap) report.uncovered.push_back(pts[i]);
  }
  for (const auto& s : slabs) report.totalWidth += s.width;
  report.bodyDiameter = body_diameter(body);
  report.necessityMargin = report.totalWidth - report.bodyDiameter;
  report.pass = report.uncoveredCount == 0;
  return report;
}

VerificationReport verify_covering(const Covering& cov, const Body& body,
                                   VerifyMode mode, std::size_t count,
                                   std::uint64_t seed, std::size_t witnessCap) {
  if (cov.dim() != body_dim(body)) {
    throw InputError("covering and body dimensions differ");
  }
  return verify_slabs(cov.placed, body, mode, count, seed, witnessCap);
}

NecessityReport bang_necessity(const std::vector<Slab>& slabs, const Ball& body) {
  NecessityReport r;
  for (const auto& s : slabs) r.totalWidth += s.width;
  r.diameter = body.diameter();
  r.status = r.totalWidth < r.diameter ? Necessity::Impossible
                                       : Necessity::Inconclusive;
  return r;
}

NecessityReport bang_necessity(const Covering& cov, const Ball& body) {
  return bang_necessity(cov.placed, body);
}

std::string to_string(Necessity n) {
  return n == Necessity::Impossible ? "impossible" : "inconclusive";
}

std::optional<Vec> find_uncovered_point(const std::vector<Slab>& slabs,
                                        const Ball& ball, std::size_t budget,
                                        std::uint64_t seed) {
  if (budget < 1) throw InputError("witness search budget must be >= 1");
  for (const auto& s : slabs) {
    if (s.dim() != ball.dim()) throw InputError("slab and ball dimensions differ");
  }
  if (slabs.empty()) return ball.center();

  const std::uint64_t scanSeed = derive_seed(seed, 1);
  const std::size_t scan = std::max<std::size_t>(1, budget / 2);
  Vec best = ball.center();
  double bestScore = -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  for (; used < scan; ++used) {
    Vec x = sample_point(ball, scanSeed, used);
    const double score = nearest_slab_excess(slabs, x);
    if (score > 0 && uncovered_by_all(slabs, x)) return x;
    if (score > bestScore) {
      bestScore = score;
      best = std::move(x);
    }
  }

  // Refinement: random moves around the incumbent with a shrinking radius.
  KeyedStream rng(derive_seed(seed, 2), 0);
  double step = ball.radius() / 4;
  std::size_t failures = 0;
  const int d = ball.dim();
  Vec trial(d);
  for (; used < budget; ++used) {
    for (int k = 0; k < d; ++k) trial[k] = best[k] + step * rng.uniform(-1.0, 1.0);
    if (!ball.contains(trial)) {
      ++failures;
    } else {
      const double score = nearest_slab_excess(slabs, trial);
      if (score > 0 && uncovered_by_all(slabs, trial)) return trial;
      if (score > bestScore) {
        bestScore = score;
        best = trial;
        failures = 0;
        continue;
      }
      ++failures;
    }
    if (failures >= 64) {
      step /= 2;
      failures = 0;
      if (step < 1e-9 * ball.radius()) step = ball.radius() / 4;
    }
  }
  return std::nullopt;
}

}  // namespace plankforge
