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
#include <optional>
#include <string>
#include <vector>

#include "plankforge/covering.hpp"
#include "plankforge/geom.hpp"

namespace plankforge {

enum class VerifyMode { Cloud, Grid };

struct VerificationReport {
  std::size_t checked = 0;
  std::size_t uncoveredCount = 0;
  // Witnesses in index order, capped; each fails every slab's membership test.
  std::vector<Vec> uncovered;
  double totalWidth = 0;
  double bodyDiameter = 0;
  double necessityMargin = 0;  // totalWidth - bodyDiameter
  bool pass = false;

  std::string status() const { return pass ? "pass" : "fail"; }
};

inline constexpr std::size_t kDefaultGridPerAxis = 50;
inline constexpr std::size_t kDefaultWitnessCap = 16;

// Grid mode: `count` points per axis (endpoints included) over the body's
// bounding box, keeping those inside the body. Cloud mode: `count` uniform
// samples keyed by seed.
std::vector<Vec> verification_points(const Body& body, VerifyMode mode,
                                     std::size_t count, std::uint64_t seed);

VerificationReport verify_slabs(const std::vector<Slab>& slabs, const Body& body,
                                VerifyMode mode, std::size_t count,
                                std::uint64_t seed,
                                std::size_t witnessCap = kDefaultWitnessCap);

VerificationReport verify_covering(const Covering& cov, const Body& body,
                                   VerifyMode mode, std::size_t count,
                                   std::uint64_t seed,
                                   std::size_t witnessCap = kDefaultWitnessCap);

enum class Necessity { Impossible, Inconclusive };

struct NecessityReport {
  Necessity status = Necessity::Inconclusive;
  double totalWidth = 0;
  double diameter = 0;
};

// Total width below the ball's diameter rules out any translative covering.
NecessityReport bang_necessity(const std::vector<Slab>& slabs, const Ball& body);
NecessityReport bang_necessity(const Covering& cov, const Ball& body);

std::string to_string(Necessity n);

inline constexpr std::size_t kDefaultWitnessBudget = 100000;

// Searches the ball for a point outside every slab: a random scan with half
// the budget, then local refinement of the point with the largest distance
// to its nearest slab. Returned points are re-checked exactly.
std::optional<Vec> find_uncovered_point(const std::vector<Slab>& slabs,
                                        const Ball& ball,
                                        std::size_t budget = kDefaultWitnessBudget,
                                        std::uint64_t seed = 0);

}  // namespace plankforge
