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
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace plankforge {

using Vec = Eigen::VectorXd;

// Unit vector. The norm is checked (or produced) at construction.
class Direction {
 public:
  // Accepts a vector whose norm is already 1 within 1e-9.
  static Direction from_unit(Vec v);
  // Normalizes an arbitrary nonzero vector.
  static Direction normalized(const Vec& v);
  static Direction axis(int dim, int k);

  const Vec& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double dot(const Vec& x) const;

 private:
  explicit Direction(Vec v) : coords_(std::move(v)) {}
  Vec coords_;
};

// The closed set {x : lower <= <normal, x> <= lower + width}.
struct Slab {
  Slab(Direction normal, double lower, double width);

  Direction normal;
  double lower;
  double width;

  double upper() const { return lower + width; }
  double midplane() const { return lower + width / 2; }
  int dim() const { return normal.dim(); }
  double tolerance() const;
};

bool slab_contains(const Slab& s, const Vec& x);

// Signed distance from x to the slab: <= 0 inside, > 0 outside.
double slab_excess(const Slab& s, const Vec& x);

// Scales the width about the fixed midplane.
Slab rescale_width(const Slab& s, double factor);

// The slab translated by t (same normal and width).
Slab translate(const Slab& s, const Vec& t);

// Image of s under y = scale * x + shift. The resulting width is set to
// `width` so that callers can keep the input width bit-exact.
Slab affine_image(const Slab& s, double scale, const Vec& shift, double width);

class Ball {
 public:
  Ball(Vec center, double radius);
  static Ball unit_diameter(int dim);

  const Vec& center() const { return center_; }
  double radius() const { return radius_; }
  double diameter() const { return 2 * radius_; }
  int dim() const { return static_cast<int>(center_.size()); }
  bool contains(const Vec& x) const;

 private:
  Vec center_;
  double radius_;
};

// Axis-aligned box. low <= high per axis; a zero-extent axis is allowed so a
// single point can be used as a region.
class Box {
 public:
  Box(Vec low, Vec high);

  const Vec& low() const { return low_; }
  const Vec& high() const { return high_; }
  int dim() const { return static_cast<int>(low_.size()); }
  double diameter() const { return (high_ - low_).norm(); }
  bool contains(const Vec& x) const;

 private:
  Vec low_;
  Vec high_;
};

using Body = std::variant<Ball, Box>;

int body_dim(const Body& body);
bool body_contains(const Body& body, const Vec& x);
double body_diameter(const Body& body);

// Uniform sample of a body. Points are columns of `points`; alive marks the
// points not yet covered by a construction.
struct PointCloud {
  Body body;
  std::uint64_t seed = 0;
  Eigen::MatrixXd points;
  std::vector<char> alive;

  std::size_t size() const { return static_cast<std::size_t>(points.cols()); }
  std::size_t alive_count() const;
  int dim() const { return static_cast<int>(points.rows()); }
};

// The index-th sample of the stream keyed by seed. Ball samples use
// rejection from the bounding box, re-checked with the exact membership test.
Vec sample_point(const Body& body, std::uint64_t seed, std::uint64_t index);

PointCloud sample_cloud(const Body& body, std::size_t count, std::uint64_t seed);

// Uniformly distributed unit vector, keyed by (seed, index).
Direction random_direction(int dim, std::uint64_t seed, std::uint64_t index);

}  // namespace plankforge
