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
#include <string>
#include <vector>

#include "plankforge/geom.hpp"

namespace plankforge {

// One step of the greedy exhaustion.
struct GreedyStepRecord {
  double offset = 0;              // lower offset of the placed full-width slab
  std::size_t aliveBefore = 0;    // alive sample points before the step
  std::size_t covered = 0;        // alive points inside the half-width translate
  std::size_t candidateCount = 0; // size of the pigeonhole family
};

using GreedyTrace = std::vector<GreedyStepRecord>;

// Per-step certificate of the sequential simplex covering.
struct PlacementCertificate {
  std::vector<double> ratios;  // alpha_j / beta_j for every ray; all <= 1
  double advance = 0;          // increase of ||p(1)|| caused by this step
};

namespace provenance {
inline constexpr const char* kGreedyBall = "greedy-ball";
inline constexpr const char* kRegion = "region-blocks";
inline constexpr const char* kSimplex = "sequential-simplex";
inline constexpr const char* kWideFallback = "bounded-width";
}  // namespace provenance

// Ordered placement of translates together with the body the construction
// worked in and the body it claims to cover.
struct Covering {
  Body body{Ball::unit_diameter(1)};
  Body target{Ball::unit_diameter(1)};
  std::vector<Slab> placed;
  GreedyTrace trace;
  std::vector<PlacementCertificate> certificates;
  std::string provenance;
  std::vector<std::string> warnings;

  int dim() const { return body_dim(body); }
  double total_width() const;
};

// First slab containing x, or -1.
long first_containing(const std::vector<Slab>& slabs, const Vec& x);

}  // namespace plankforge
