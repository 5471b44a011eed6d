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
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "plankforge/covering.hpp"
#include "plankforge/geom.hpp"
#include "plankforge/verify.hpp"

namespace plankforge {

struct GreedyConfig {
  int dimension = 1;
  std::size_t cloudSize = 200000;
  std::uint64_t seed = 1;
  std::size_t verifyCloudSize = 100000;

  // Verification samples are drawn from a stream distinct from construction.
  std::uint64_t verify_seed() const;
};

// Lower offsets of the half-width (w/2) translates that tile the projection
// of `ball` onto `normal`: <v,c> - rho + k*w/2 for k = 0..ceil(4*rho/w)-1.
// For a unit-diameter ball the count is ceil(2/w).
std::vector<double> candidate_offsets(double w, const Ball& ball,
                                      const Direction& normal);

struct GreedyChoice {
  std::size_t candidate = 0;       // index into candidate_offsets
  double halfLower = 0;            // lower offset of the chosen w/2 translate
  std::size_t candidateCount = 0;
  std::vector<std::size_t> covered;  // alive cloud indices it covers

  // The width-w slab obtained by doubling the chosen translate.
  Slab expanded(const Direction& normal, double w) const;
};

// Picks the candidate half-width translate covering the most alive points;
// ties go to the smallest offset. The cloud's body must be a ball.
GreedyChoice greedy_step(const PointCloud& cloud, const Direction& normal, double w);

// Left-hand and right-hand side of w_1 + ... + w_n >= 3 d log(2 / w_n).
bool greedy_hypothesis_holds(std::span<const double> widths, int dimension);
double greedy_hypothesis_rhs(std::span<const double> widths, int dimension);

struct GreedyResult {
  Covering covering;
  VerificationReport verification;
  int attempts = 1;
  bool hypothesisHolds = false;
};

// Greedy exhaustion of the unit-diameter ball centred at the origin,
// followed by doubling every translate. The covering claims the concentric
// ball of radius 1/2 - w_n/4, which is checked on an independent cloud.
// Throws VerificationError when the hypothesis holds but the check still
// fails after one retry at four times the cloud size.
GreedyResult cover_ball(std::span<const double> widths,
                        std::span<const Direction> normals,
                        const GreedyConfig& cfg);

struct ResidualFraction {
  double empirical = 1.0;  // alive_n / alive_0
  double bound = 1.0;      // prod (1 - 1/candidateCount_i)
  // Exact step-wise check m_i * k_i <= m_{i-1} * (k_i - 1) in integers.
  bool withinBound = true;
};

ResidualFraction residual_fraction(const GreedyTrace& trace);

}  // namespace plankforge
