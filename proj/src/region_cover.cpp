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
#include "plankforge/region_cover.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "plankforge/errors.hpp"
#include "plankforge/rng.hpp"

namespace plankforge {

WidthStream list_stream(std::vector<double> widths) {
  auto data = std::make_shared<std::vector<double>>(std::move(widths));
  auto pos = std::make_shared<std::size_t>(0);
  return [data, pos]() -> std::optional<double> {
    if (*pos >= data->size()) return std::nullopt;
    return (*data)[(*pos)++];
  };
}

WidthStream harmonic_stream(std::size_t start, std::size_t count) {
  if (start < 1) throw InputError("harmonic stream must start at index >= 1");
  auto next = std::make_shared<std::size_t>(start);
  return [next, start, count]() -> std::optional<double> {
    if (count != 0 && *next - start >= count) return std::nullopt;
    return 1.0 / static_cast<double>((*next)++);
  };
}

WidthStream constant_stream(double w, std::size_t count) {
  auto emitted = std::make_shared<std::size_t>(0);
  return [w, count, emitted]() -> std::optional<double> {
    if (count != 0 && *emitted >= count) return std::nullopt;
    ++*emitted;
    return w;
  };
}

NormalSource random_normals(int dim, std::uint64_t seed) {
  return [dim, seed](std::size_t i) { return random_direction(dim, seed, i); };
}

NormalSource list_normals(std::vector<Direction> normals) {
  auto data = std::make_shared<std::vector<Direction>>(std::move(normals));
  return [data](std::size_t i) {
    if (i >= data->size()) throw InputError("not enough normals for the slab sequence");
    return (*data)[i];
  };
}

std::vector<double> limsup_diagnostic(std::span<const double> widths) {
  std::vector<double> ratios;
  ratios.reserve(widths.size());
  double sum = 0;
  for (double w : widths) {
    sum += w;
    ratios.push_back(w >= 1.0 ? std::numeric_limits<double>::infinity()
                              : sum / std::log(1.0 / w));
  }
  return ratios;
}

BlockPartition split_blocks(const WidthStream& widths, double c, std::size_t maxBlocks) {
  if (!(c > 0 && c <= 1)) throw InputError("c must lie in (0, 1]");
  BlockPartition part;
  part.c = c;
  Block open;
  double prev = std::numeric_limits<double>::infinity();
  while (part.blocks.size() < maxBlocks) {
    const std::optional<double> w = widths();
    if (!w) {
      if (open.end == open.begin) break;
      const double need = c * std::log(1.0 / open.last);
      std::ostringstream msg;
      msg << "width stream exhausted inside block " << part.blocks.size() + 1
          << ": block sum " << open.sum << " < c log(1/w) = " << need;
      throw ExhaustedError(msg.str(), part.blocks.size(), part.blocks.size() + 1,
                           need - open.sum);
    }
    if (!(*w > 0) || *w > prev) throw InputError("widths must be positive and nonincreasing");
    prev = *w;
    part.widths.push_back(*w);
    open.sum += *w;
    open.last = *w;
    open.end = part.widths.size();
    if (open.sum >= c * std::log(1.0 / *w)) {
      part.blocks.push_back(open);
      open = Block{open.end, open.end, 0, 0};
    }
  }
  return part;
}

WideSplit filter_wide(std::span<const double> widths, double threshold) {
  if (!(threshold > 0)) throw InputError("threshold must be positive");
  WideSplit split;
  for (double w : widths) (w > threshold ? split.wide : split.narrow).push_back(w);
  return split;
}

RegionPlan plan_region(const Box& region, double c) {
  if (!(c > 0 && c <= 1)) throw InputError("c must lie in (0, 1]");
  const int d = region.dim();
  RegionPlan plan{region, c / (6.0 * d), {}, {}};
  const double spacing = plan.ballDiameter / std::sqrt(static_cast<double>(d));

  std::vector<std::size_t> per(d);
  std::vector<double> cell(d);
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) {
    const double len = region.high()[k] - region.low()[k];
    // Slack so that an exact multiple of the spacing is not rounded up.
    per[k] = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(len / spacing * (1 - 1e-12))));
    cell[k] = len / static_cast<double>(per[k]);
    total *= per[k];
  }
  std::vector<std::size_t> idx(d, 0);
  plan.ballCenters.reserve(total);
  for (std::size_t n = 0; n < total; ++n) {
    Vec center(d);
    for (int k = 0; k < d; ++k) {
      center[k] = region.low()[k] + (static_cast<double>(idx[k]) + 0.5) * cell[k];
    }
    plan.ballCenters.push_back(std::move(center));
    for (int k = 0; k < d; ++k) {
      if (++idx[k] < per[k]) break;
      idx[k] = 0;
    }
  }
  return plan;
}

Covering cover_with_wide_slabs(std::span<const double> widths,
                               std::span<const Direction> normals,
                               std::span<const Vec> centers, double ballDiameter,
                               const Body& body) {
  if (widths.size() != centers.size() || normals.size() != centers.size()) {
    throw InputError("need exactly one wide slab per ball");
  }
  Covering cov{body, body, {}, {}, {}, provenance::kWideFallback, {}};
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (widths[i] < ballDiameter) {
      throw InputError("slab narrower than the ball it should cover");
    }
    cov.placed.emplace_back(normals[i], normals[i].dot(centers[i]) - widths[i] / 2,
                            widths[i]);
  }
  return cov;
}

namespace {

// Wraps a stream with one value of look-ahead.
class PeekStream {
 public:
  explicit PeekStream(WidthStream s) : source_(std::move(s)) {}

  std::optional<double> peek() {
    if (!buffered_) {
      head_ = source_();
      buffered_ = true;
    }
    return head_;
  }

  std::optional<double> next() {
    auto v = peek();
    buffered_ = false;
    return v;
  }

 private:
  WidthStream source_;
  std::optional<double> head_;
  bool buffered_ = false;
};

}  // namespace

RegionResult cover_region(const WidthStream& widths, const NormalSource& normals,
                          const Box& region, const RegionConfig& cfg) {
  const int d = region.dim();
  if (cfg.greedy.dimension != d) throw InputError("region and configured dimension differ");
  if (!(cfg.c > 0 && cfg.c <= 1)) throw InputError("c must lie in (0, 1]");

  RegionResult result{plan_region(region, cfg.c), {}, {}, {}, {}, {}};
  RegionPlan& plan = result.plan;
  const std::size_t balls = plan.ballCenters.size();
  const double threshold = cfg.c / (3.0 * d);

  auto stream = std::make_shared<PeekStream>(widths);
  while (result.wide.size() < balls) {
    const auto w = stream->peek();
    if (!w || *w <= threshold) break;
    if (!result.wide.empty() && *w > result.wide.back()) {
      throw InputError("widths must be nonincreasing");
    }
    result.wide.push_back(*stream->next());
  }
  const std::size_t wideCount = result.wide.size();
  for (std::size_t b = 0; b < wideCount; ++b) {
    plan.assignment.push_back({BallAssignment::Source::Wide, b});
  }

  const std::size_t remaining = balls - wideCount;
  if (remaining > 0) {
    WidthStream narrow = [stream, threshold]() -> std::optional<double> {
      const auto w = stream->next();
      if (w && *w > threshold) throw InputError("widths must be nonincreasing");
      return w;
    };
    try {
      result.partition = split_blocks(narrow, cfg.c, remaining);
    } catch (const ExhaustedError& e) {
      const std::size_t covered = wideCount + e.achieved();
      std::ostringstream msg;
      msg << "not enough slabs: " << covered << " of " << balls
          << " balls can be covered (" << e.what() << ")";
      throw ExhaustedError(msg.str(), covered, balls, e.deficit());
    }
    if (result.partition.blocks.size() < remaining) {
      const std::size_t covered = wideCount + result.partition.blocks.size();
      std::ostringstream msg;
      msg << "not enough slabs: " << covered << " of " << balls
          << " balls can be covered";
      throw ExhaustedError(msg.str(), covered, balls, 0.0);
    }
    for (std::size_t j = 0; j < remaining; ++j) {
      plan.assignment.push_back({BallAssignment::Source::Block, j});
    }
  }

  Covering merged{region, region, {}, {}, {}, provenance::kRegion, {}};
  {
    std::vector<Direction> wideNormals;
    for (std::size_t i = 0; i < wideCount; ++i) wideNormals.push_back(normals(i));
    Covering wide = cover_with_wide_slabs(
        result.wide, wideNormals,
        std::span<const Vec>(plan.ballCenters.data(), wideCount), plan.ballDiameter,
        region);
    merged.placed = std::move(wide.placed);
  }

  const double widen = 3.0 * d / cfg.c;
  const double shrink = cfg.c / (3.0 * d);
  for (std::size_t j = 0; j < remaining; ++j) {
    const Block& block = result.partition.blocks[j];
    std::vector<double> original(result.partition.widths.begin() + block.begin,
                                 result.partition.widths.begin() + block.end);
    std::vector<double> widened;
    std::vector<Direction> blockNormals;
    for (std::size_t i = block.begin; i < block.end; ++i) {
      widened.push_back(widen * result.partition.widths[i]);
      blockNormals.push_back(normals(wideCount + i));
    }
    result.widenedHypothesis.push_back(greedy_hypothesis_holds(widened, d));

    GreedyConfig gcfg = cfg.greedy;
    gcfg.seed = derive_seed(cfg.greedy.seed, j);
    GreedyResult unit = cover_ball(widened, blockNormals, gcfg);
    const Vec& center = plan.ballCenters[wideCount + j];
    for (std::size_t i = 0; i < unit.covering.placed.size(); ++i) {
      merged.placed.push_back(
          affine_image(unit.covering.placed[i], shrink, center, original[i]));
    }
    for (const auto& w : unit.covering.warnings) {
      merged.warnings.push_back("block " + std::to_string(j + 1) + ": " + w);
    }
  }

  result.covering = std::move(merged);
  result.verification = verify_covering(result.covering, region, VerifyMode::Grid,
                                        cfg.gridPerAxis, 0);
  return result;
}

}  // namespace plankforge
