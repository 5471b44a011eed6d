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
#include "plankforge/poly_control.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plankforge/errors.hpp"
#include "plankforge/moment_curve.hpp"
#include "plankforge/region_cover.hpp"
#include "plankforge/simplex_cover.hpp"

namespace plankforge {

DivergenceReport divergence_test(std::span<const double> xs, int degree) {
  if (degree < 1) throw InputError("degree must be >= 1");
  DivergenceReport report;
  double sum = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0)) throw InputError("sample points must be positive");
    if (i > 0 && xs[i] < xs[i - 1]) throw InputError("sample points must be sorted");
    sum += std::pow(xs[i], -degree);
    report.partialSums.push_back(sum);
  }
  // Terms decaying faster than 1/n (slope < -1 on a log-log scale) suggest a
  // convergent series. Only a hint: a finite prefix proves nothing.
  if (xs.size() >= 4) {
    const std::size_t mid = xs.size() / 2;
    const std::size_t last = xs.size();
    const double termMid = std::pow(xs[mid - 1], -degree);
    const double termLast = std::pow(xs[last - 1], -degree);
    report.tailSlope = std::log(termLast / termMid) /
                       std::log(static_cast<double>(last) / static_cast<double>(mid));
    report.convergentLooking = report.tailSlope < -1.05;
  }
  return report;
}

Slab control_slab(double x, double y, int degree) {
  const Vec v = moment_vector(x, degree);
  const double norm = v.norm();
  return Slab(Direction::normalized(v), (y - 1) / norm, 2 / norm);
}

namespace {

void validate(std::span<const double> xs, int degree, double radius) {
  if (degree < 1) throw InputError("degree must be >= 1");
  if (!(radius > 0) || !std::isfinite(radius)) throw InputError("radius must be positive");
  if (xs.empty()) throw InputError("at least one sample point is required");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0) || !std::isfinite(xs[i])) {
      throw InputError("sample points must be positive and finite");
    }
    if (i > 0 && xs[i] < xs[i - 1]) throw InputError("sample points must be nondecreasing");
  }
}

// Sequential simplex covering of the samples >= 3, carried out in the frame
// a' = a / (2R) where the target ball has unit diameter.
bool simplex_route(std::span<const double> tail, std::size_t offset, int degree,
                   double radius, const ControlConfig& cfg, ControlTable& table,
                   ExhaustedError* shortfall) {
  const MomentSystem ms = slabs_from_xs(tail, degree);
  const Basis basis = basis_u(degree);
  if (!check_condition_i(ms, basis).holds || !check_condition_ii(ms, basis, cfg.gamma).holds) {
    throw CertificateError("moment-curve conditions fail for the given samples");
  }
  const double frame = 2 * radius;
  std::vector<Slab> scaled;
  for (const auto& s : ms.slabs) scaled.emplace_back(s.normal, 0.0, s.width / frame);

  const ScaledBasis sb = scale_basis(basis, 1.0);
  const CoverConstant cc = cover_constant(sb.basis, cfg.gamma, sb.scale);
  SimplexCover sc = [&] {
    try {
      return cover_simplex(scaled, sb.basis, cfg.gamma, cc.c);
    } catch (const ExhaustedError& e) {
      // Further samples at the last x advance ||p(1)|| by a fixed amount.
      const Slab& lastSlab = scaled.back();
      const double step = lastSlab.width / lastSlab.normal.dot(sb.basis.us[0]) *
                          sb.basis.us[0].norm();
      const auto more = static_cast<std::size_t>(std::ceil(e.deficit() / step));
      const double mass = static_cast<double>(more) * std::pow(tail.back(), -degree);
      std::ostringstream msg;
      msg << "samples exhausted before the covering closed: about " << more
          << " more samples at x = " << tail.back() << " are needed (sum of 1/x^"
          << degree << " short by " << mass << ")";
      *shortfall = ExhaustedError(msg.str(), tail.size(), tail.size() + more, mass);
      throw;
    }
  }();

  const InscribedBall inner = chebyshev_center(sc.state.vertices());
  const std::size_t used = sc.state.placed.size();
  std::vector<Slab> placed;
  for (std::size_t k = 0; k < used; ++k) {
    const Slab& s = sc.state.placed[k];
    const double lower = frame * (s.lower - s.normal.dot(inner.center));
    const double width = ms.widths[k];
    placed.emplace_back(s.normal, lower, width);
    const double norm = ms.vectors[k].norm();
    table.pairs[offset + k].y = (lower + width / 2) * norm;
  }
  table.certCenter = Vec::Zero(degree + 1);
  table.certRadius = frame * inner.radius;
  table.slabsUsed = used;
  table.route = provenance::kSimplex;
  const Ball cert(table.certCenter, table.certRadius);
  table.covering = Covering{cert, cert, std::move(placed), {}, sc.state.certificates,
                            provenance::kSimplex, {}};
  return true;
}

// Slabs wider than a lattice cell's circumscribed ball, one per cell of the
// cube [-R, R]^{d+1}.
bool wide_route(std::span<const double> head, int degree, double radius,
                ControlTable& table) {
  const int dim = degree + 1;
  const MomentSystem ms = slabs_from_xs(head, degree);
  const double ballDiameter = ms.widths.back();
  const double spacing = ballDiameter / std::sqrt(static_cast<double>(dim));
  const auto per = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(2 * radius / spacing * (1 - 1e-12))));
  const double cells = std::pow(static_cast<double>(per), dim);
  if (cells > static_cast<double>(head.size())) return false;
  const auto count = static_cast<std::size_t>(cells);

  const double cell = 2 * radius / static_cast<double>(per);
  std::vector<Vec> centers;
  std::vector<std::size_t> idx(dim, 0);
  for (std::size_t n = 0; n < count; ++n) {
    Vec c(dim);
    for (int k = 0; k < dim; ++k) c[k] = -radius + (static_cast<double>(idx[k]) + 0.5) * cell;
    centers.push_back(std::move(c));
    for (int k = 0; k < dim; ++k) {
      if (++idx[k] < per) break;
      idx[k] = 0;
    }
  }
  std::vector<Direction> normals;
  for (std::size_t i = 0; i < count; ++i) normals.push_back(ms.slabs[i].normal);
  const Ball cert(Vec::Zero(dim), radius);
  Covering cov = cover_with_wide_slabs(
      std::span<const double>(ms.widths.data(), count), normals, centers, ballDiameter,
      cert);
  for (std::size_t i = 0; i < count; ++i) {
    table.pairs[i].y = ms.vectors[i].dot(centers[i]);
  }
  table.certCenter = Vec::Zero(dim);
  table.certRadius = radius;
  table.slabsUsed = count;
  table.route = provenance::kWideFallback;
  table.covering = std::move(cov);
  return true;
}

}  // namespace

ControlTable build_control(std::span<const double> xs, int degree, double coeffRadius,
                           const ControlConfig& cfg) {
  validate(xs, degree, coeffRadius);
  ControlTable table;
  table.degree = degree;
  for (double x : xs) table.pairs.push_back({x, 0.0});

  const auto split = static_cast<std::size_t>(
      std::lower_bound(xs.begin(), xs.end(), 3.0) - xs.begin());
  const std::span<const double> head = xs.first(split);
  const std::span<const double> tail = xs.subspan(split);

  ExhaustedError shortfall("no samples >= 3", 0, 1, 0.0);
  if (!tail.empty()) {
    try {
      if (simplex_route(tail, split, degree, coeffRadius, cfg, table, &shortfall)) {
        return table;
      }
    } catch (const ExhaustedError&) {
      // Fall through to the bounded-width route, then report the shortfall.
    }
  }
  if (!head.empty() && wide_route(head, degree, coeffRadius, table)) return table;
  if (tail.empty()) {
    throw ExhaustedError("too few samples below 3 for a bounded-width covering and none >= 3",
                         0, 1, 0.0);
  }
  throw shortfall;
}

ControlResidual control_check(const ControlTable& table, const Vec& coeffs) {
  if (coeffs.size() != table.degree + 1) throw InputError("coefficient vector has wrong length");
  ControlResidual best{0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < table.pairs.size(); ++i) {
    const double p = moment_vector(table.pairs[i].x, table.degree).dot(coeffs);
    const double r = std::abs(p - table.pairs[i].y);
    if (r < best.residual) best = {i, r};
  }
  return best;
}

}  // namespace plankforge
