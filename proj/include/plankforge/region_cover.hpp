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
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "plankforge/covering.hpp"
#include "plankforge/geom.hpp"
#include "plankforge/greedy_cover.hpp"
#include "plankforge/verify.hpp"

namespace plankforge {

// Pull-based width sequence; std::nullopt marks the end of a finite stream.
using WidthStream = std::function<std::optional<double>()>;

WidthStream list_stream(std::vector<double> widths);
// 1/start, 1/(start+1), ...; `count` terms, or unbounded when count is 0.
WidthStream harmonic_stream(std::size_t start, std::size_t count = 0);
WidthStream constant_stream(double w, std::size_t count = 0);

// Normal of the i-th slab of the input sequence.
using NormalSource = std::function<Direction(std::size_t index)>;

NormalSource random_normals(int dim, std::uint64_t seed);
NormalSource list_normals(std::vector<Direction> normals);

// (w_1 + ... + w_n) / log(1/w_n) for every prefix; +infinity when w_n >= 1.
std::vector<double> limsup_diagnostic(std::span<const double> widths);

struct Block {
  std::size_t begin = 0;  // first input index of the block
  std::size_t end = 0;    // one past the last input index
  double sum = 0;         // sum of the block's widths
  double last = 0;        // the block's last (smallest) width
};

struct BlockPartition {
  double c = 0;
  std::vector<Block> blocks;
  std::vector<double> widths;  // consumed widths, in input order
};

// Closes a block at the first n where the running block sum reaches
// c log(1/w_n). Stops after maxBlocks closed blocks. Throws ExhaustedError
// when the stream ends inside a block.
BlockPartition split_blocks(const WidthStream& widths, double c,
                            std::size_t maxBlocks = std::numeric_limits<std::size_t>::max());

struct WideSplit {
  std::vector<double> wide;    // widths > threshold
  std::vector<double> narrow;  // the rest, order preserved
};

WideSplit filter_wide(std::span<const double> widths, double threshold);

// Which slabs cover a plan ball: a single wide slab, or a block.
struct BallAssignment {
  enum class Source { Wide, Block };
  Source source = Source::Block;
  std::size_t index = 0;
};

struct RegionPlan {
  Box region{Vec::Zero(1), Vec::Zero(1)};
  double ballDiameter = 0;     // c / (6d)
  std::vector<Vec> ballCenters;
  std::vector<BallAssignment> assignment;
};

// Cubic lattice of balls of diameter c/(6d) with spacing at most
// ballDiameter / sqrt(d), so every lattice cell sits inside its ball.
RegionPlan plan_region(const Box& region, double c);

struct RegionConfig {
  double c = 0.5;
  GreedyConfig greedy;          // greedy.dimension is the ambient dimension
  std::size_t gridPerAxis = kDefaultGridPerAxis;
};

struct RegionResult {
  RegionPlan plan;
  BlockPartition partition;
  std::vector<double> wide;       // widths routed to the bounded-width path
  Covering covering;
  VerificationReport verification;
  // Per block: the widened block satisfies the single-ball hypothesis.
  std::vector<bool> widenedHypothesis;
};

// Covers a bounded region. Wide slabs (> c/(3d)) each cover one plan ball
// directly; every remaining ball gets one block, widened by 3d/c, covered by
// cover_ball in the unit-diameter frame, then scaled by c/(3d) and moved to
// the ball centre. Throws ExhaustedError when the stream runs out first.
RegionResult cover_region(const WidthStream& widths, const NormalSource& normals,
                          const Box& region, const RegionConfig& cfg);

// One slab per ball: slab i is centred on centers[i]. Every width must be
// at least the ball diameter.
Covering cover_with_wide_slabs(std::span<const double> widths,
                               std::span<const Direction> normals,
                               std::span<const Vec> centers, double ballDiameter,
                               const Body& body);

}  // namespace plankforge
