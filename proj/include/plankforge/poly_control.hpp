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
#include <string>
#include <vector>

#include "plankforge/covering.hpp"
#include "plankforge/geom.hpp"

namespace plankforge {

struct ControlPair {
  double x = 0;
  double y = 0;
};

// Pairs (x_i, y_i) and the coefficient-space ball on which every polynomial
// a_0 + a_1 x + ... + a_d x^d passes within 1 of some (x_i, y_i).
struct ControlTable {
  int degree = 1;
  std::vector<ControlPair> pairs;
  Vec certCenter;
  double certRadius = 0;
  std::size_t slabsUsed = 0;   // pairs that carry the certificate
  std::string route;           // construction used (provenance tag)
  Covering covering;           // placed slabs in the coefficient frame
};

struct DivergenceReport {
  std::vector<double> partialSums;  // sum_{i<=n} 1 / x_i^d
  double tailSlope = 0;             // log-log slope of the terms over the last half
  bool convergentLooking = false;   // advisory only
};

DivergenceReport divergence_test(std::span<const double> xs, int degree);

struct ControlConfig {
  double gamma = 1.0 / 3.0;
};

// Builds y_i so that every polynomial whose coefficient vector lies in the
// ball of radius >= coeffRadius about the origin is controlled.
// Samples x_i >= 3 go through the sequential simplex covering; if they do not
// suffice, samples below 3 (slabs wider than 1/3^d) are tried as a
// bounded-width covering. Throws ExhaustedError (deficit: sum of 1/x^d
// still needed at the last sample) when neither closes.
ControlTable build_control(std::span<const double> xs, int degree, double coeffRadius,
                           const ControlConfig& cfg = {});

struct ControlResidual {
  std::size_t index = 0;
  double residual = 0;
};

// min_i |p(x_i) - y_i| and its first minimizer.
ControlResidual control_check(const ControlTable& table, const Vec& coeffs);

// Slab {a : |<(1,x,..,x^d), a> - y| <= 1} in coefficient space.
Slab control_slab(double x, double y, int degree);

}  // namespace plankforge
