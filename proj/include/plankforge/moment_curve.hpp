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
#include <span>
#include <vector>

#include "plankforge/geom.hpp"

namespace plankforge {

// (1, x, x^2, ..., x^d)
Vec moment_vector(double x, int degree);

// Rays spanning the cone used by the sequential simplex covering.
struct Basis {
  std::vector<Vec> us;

  int dim() const { return us.empty() ? 0 : static_cast<int>(us.front().size()); }
  std::size_t size() const { return us.size(); }
  Eigen::MatrixXd matrix() const;  // columns are the rays
  Basis scaled(double s) const;
};

// u_j = e_{d+1-j} + e_{d+1} for j <= d and u_{d+1} = e_{d+1} (1-based).
Basis basis_u(int degree);

// Slabs {a : y_i - 1 <= <x_i, a> <= y_i + 1} in coefficient space, with the
// offset left at zero for the covering stage to choose.
struct MomentSystem {
  int degree = 1;
  std::vector<double> xs;
  std::vector<Vec> vectors;     // moment vectors x_i
  std::vector<double> widths;   // 2 / ||x_i||
  std::vector<Slab> slabs;      // unit normal x_i/||x_i||, width w_i, lower 0
};

MomentSystem slabs_from_xs(std::span<const double> xs, int degree);

struct ConditionViolation {
  std::size_t i = 0;  // 0-based sample index (pair (i, i+1) for condition i)
  std::size_t j = 0;  // 0-based ray index
  double margin = 0;
};

struct ConditionReport {
  bool holds = true;
  // Smallest margin seen: relative for the ratio condition, absolute slack
  // <x_i,u_j> - gamma ||x_i|| ||u_j|| for the angle condition.
  double worstMargin = 0;
  std::vector<ConditionViolation> violations;
};

inline constexpr double kConditionTolerance = 1e-12;

// <x_{i+1},u_1>/<x_i,u_1> <= <x_{i+1},u_j>/<x_i,u_j> for consecutive i, all j.
// Throws InputError when an inner product is not positive.
ConditionReport check_condition_i(const MomentSystem& ms, const Basis& basis);

// <x_i,u_j> >= gamma ||x_i|| ||u_j|| for all i, j.
ConditionReport check_condition_ii(const MomentSystem& ms, const Basis& basis,
                                   double gamma = 1.0 / 3.0);

}  // namespace plankforge
