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

#include "plankforge/covering.hpp"
#include "plankforge/geom.hpp"
#include "plankforge/moment_curve.hpp"

namespace plankforge {

struct InscribedBall {
  Vec center;
  double radius = 0;
};

// Largest ball inside the simplex with the given n+1 vertices in R^n.
// Facet normals come from cofactor expansion; the radius from a small LP.
// Throws InputError for a degenerate simplex.
InscribedBall chebyshev_center(std::span<const Vec> vertices);

// The simplex conv{0, u_1, ..., u_{n}} of a basis, as a vertex list.
std::vector<Vec> base_simplex(const Basis& basis);

struct ScaledBasis {
  Basis basis;
  double scale = 1;
};

// Scales the basis so conv{0, s u_j} contains a ball of the target diameter.
ScaledBasis scale_basis(const Basis& basis, double targetDiameter);

// Current covered simplex with vertices 0 and p(j) = t_j u_j.
struct SimplexState {
  Basis basis;
  std::vector<double> t;
  std::size_t step = 0;  // slabs placed so far
  std::vector<Slab> placed;
  std::vector<PlacementCertificate> certificates;
  bool degenerate = false;  // some t_j collapsed to zero

  Vec vertex(std::size_t j) const { return t[j] * basis.us[j]; }
  // Normal of the boundary hyperplane opposite the origin.
  const Direction& front_normal() const { return placed.back().normal; }
  std::vector<Vec> vertices() const;  // 0, p(1), ..., p(n)
};

// First translate: one boundary hyperplane through the origin.
SimplexState place_first(const Slab& slab, const Basis& basis);

inline constexpr double kCertificateTolerance = 1e-12;

// Next translate: its lower hyperplane passes through p(1). Each ray's
// crossing alpha_j must not exceed the current t_j (ordering certificate);
// throws CertificateError otherwise.
SimplexState place_next(SimplexState state, const Slab& slab);

struct CoverConstant {
  double gamma = 1.0 / 3.0;
  double c = 0;           // required ||p(1)|| at termination
  double basisScale = 1;
};

// c = max_j ||u_j|| / gamma for the (already scaled) basis.
CoverConstant cover_constant(const Basis& scaled, double gamma, double basisScale = 1);

struct SimplexCover {
  Covering covering;
  SimplexState state;
};

// Places slabs in order until ||p(1)|| >= cTarget, then asserts
// ||p(j)|| >= gamma ||p(1)|| and t_j >= 1 (the final simplex contains the
// base simplex of `basis`). Throws ExhaustedError if the slabs run out.
SimplexCover cover_simplex(std::span<const Slab> slabs, const Basis& basis,
                           double gamma, double cTarget);

// Uniform sample of a simplex given by its vertices, keyed by (seed, index).
Vec sample_simplex(std::span<const Vec> vertices, std::uint64_t seed, std::uint64_t index);

}  // namespace plankforge
