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
#include "plankforge/geom.hpp"

#include <cmath>
#include <string>

#include "plankforge/errors.hpp"
#include "plankforge/parallel.hpp"
#include "plankforge/rng.hpp"

namespace plankforge {

namespace {

void require_dim(int expected, const Vec& x, const char* what) {
  if (x.size() != expected) {
    throw InputError(std::string(what) + ": dimension mismatch (expected " +
                     std::to_string(expected) + ", got " +
                     std::to_string(x.size()) + ")");
  }
}

}  // namespace

Direction Direction::from_unit(Vec v) {
  if (v.size() < 1) throw InputError("direction must have dimension >= 1");
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > 1e-9) {
    throw InputError("direction is not a unit vector");
  }
  return Direction(std::move(v));
}

Direction Direction::normalized(const Vec& v) {
  if (v.size() < 1) throw InputError("direction must have dimension >= 1");
  const double n = v.norm();
  if (!std::isfinite(n) || n == 0.0) {
    throw InputError("cannot normalize a zero or non-finite vector");
  }
  return Direction(v / n);
}

Direction Direction::axis(int dim, int k) {
  Vec v = Vec::Zero(dim);
  v[k] = 1.0;
  return Direction(std::move(v));
}

double Direction::dot(const Vec& x) const {
  require_dim(dim(), x, "dot");
  return coords_.dot(x);
}

Slab::Slab(Direction n, double lo, double w)
    : normal(std::move(n)), lower(lo), width(w) {
  if (!(width > 0) || !std::isfinite(width)) {
    throw InputError("slab width must be positive and finite");
  }
  if (!std::isfinite(lower)) throw InputError("slab offset must be finite");
}

double Slab::tolerance() const {
  return 1e-12 * (1.0 + std::abs(lower) + width);
}

bool slab_contains(const Slab& s, const Vec& x) {
  const double p = s.normal.dot(x);
  const double eps = s.tolerance();
  return s.lower - eps <= p && p <= s.upper() + eps;
}

double slab_excess(const Slab& s, const Vec& x) {
  const double p = s.normal.dot(x);
  return std::max(s.lower - p, p - s.upper());
}

Slab rescale_width(const Slab& s, double factor) {
  if (!(factor > 0) || !std::isfinite(factor)) {
    throw InputError("rescale factor must be positive");
  }
  const double w = s.width * factor;
  return Slab(s.normal, s.midplane() - w / 2, w);
}

Slab translate(const Slab& s, const Vec& t) {
  return Slab(s.normal, s.lower + s.normal.dot(t), s.width);
}

Slab affine_image(const Slab& s, double scale, const Vec& shift, double width) {
  if (!(scale > 0)) throw InputError("affine scale must be positive");
  return Slab(s.normal, scale * s.lower + s.normal.dot(shift), width);
}

Ball::Ball(Vec center, double radius) : center_(std::move(center)), radius_(radius) {
  if (center_.size() < 1) throw InputError("ball dimension must be >= 1");
  if (!(radius_ > 0) || !std::isfinite(radius_)) {
    throw InputError("radius must be positive");
  }
}

Ball Ball::unit_diameter(int dim) { return Ball(Vec::Zero(dim), 0.5); }

bool Ball::contains(const Vec& x) const {
  require_dim(dim(), x, "ball membership");
  return (x - center_).squaredNorm() <= radius_ * radius_;
}

Box::Box(Vec low, Vec high) : low_(std::move(low)), high_(std::move(high)) {
  if (low_.size() < 1 || low_.size() != high_.size()) {
    throw InputError("box bounds must have equal dimension >= 1");
  }
  for (Eigen::Index k = 0; k < low_.size(); ++k) {
    if (!(low_[k] <= high_[k]) || !std::isfinite(low_[k]) ||
        !std::isfinite(high_[k])) {
      throw InputError("box requires low <= high on every axis");
    }
  }
}

bool Box::contains(const Vec& x) const {
  require_dim(dim(), x, "box membership");
  return (x.array() >= low_.array()).all() && (x.array() <= high_.array()).all();
}

int body_dim(const Body& body) {
  return std::visit([](const auto& b) { return b.dim(); }, body);
}

bool body_contains(const Body& body, const Vec& x) {
  return std::visit([&](const auto& b) { return b.contains(x); }, body);
}

double body_diameter(const Body& body) {
  return std::visit([](const auto& b) { return b.diameter(); }, body);
}

std::size_t PointCloud::alive_count() const {
  std::size_t n = 0;
  for (char a : alive) n += a ? 1 : 0;
  return n;
}

Vec sample_point(const Body& body, std::uint64_t seed, std::uint64_t index) {
  KeyedStream rng(seed, index);
  if (const auto* box = std::get_if<Box>(&body)) {
    Vec x(box->dim());
    for (int k = 0; k < box->dim(); ++k) {
      x[k] = box->low()[k] + (box->high()[k] - box->low()[k]) * rng.uniform();
    }
    return x;
  }
  const Ball& ball = std::get<Ball>(body);
  Vec x(ball.dim());
  for (;;) {
    for (int k = 0; k < ball.dim(); ++k) {
      x[k] = ball.center()[k] + ball.radius() * rng.uniform(-1.0, 1.0);
    }
    if (ball.contains(x)) return x;
  }
}

PointCloud sample_cloud(const Body& body, std::size_t count, std::uint64_t seed) {
  if (count < 1) throw InputError("sample count must be >= 1");
  PointCloud cloud{body, seed, Eigen::MatrixXd(body_dim(body), count),
                   std::vector<char>(count, 1)};
  parallel_for(count, [&](std::size_t i) {
    cloud.points.col(static_cast<Eigen::Index>(i)) = sample_point(body, seed, i);
  });
  return cloud;
}

Direction random_direction(int dim, std::uint64_t seed, std::uint64_t index) {
  if (dim < 1) throw InputError("direction dimension must be >= 1");
  KeyedStream rng(seed, index);
  Vec v(dim);
  for (;;) {
    for (int k = 0; k < dim; ++k) v[k] = rng.uniform(-1.0, 1.0);
    const double n2 = v.squaredNorm();
    if (n2 <= 1.0 && n2 > 1e-6) return Direction::normalized(v);
  }
}

}  // namespace plankforge
