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
#include "plankforge/simplex_cover.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plankforge/errors.hpp"
#include "plankforge/lp.hpp"
#include "plankforge/rng.hpp"

namespace plankforge {

namespace {

// Normal to the hyperplane through `points` (n points in R^n), by cofactor
// expansion of the edge matrix. Not normalized.
Vec cofactor_normal(const std::vector<Vec>& points) {
  const auto n = static_cast<Eigen::Index>(points.front().size());
  if (n == 1) return Vec::Ones(1);
  Eigen::MatrixXd edges(n - 1, n);
  for (Eigen::Index i = 1; i < n; ++i) edges.row(i - 1) = (points[i] - points[0]).transpose();
  Vec normal(n);
  Eigen::MatrixXd minor(n - 1, n - 1);
  for (Eigen::Index col = 0; col < n; ++col) {
    minor.leftCols(col) = edges.leftCols(col);
    minor.rightCols(n - 1 - col) = edges.rightCols(n - 1 - col);
    normal[col] = ((col % 2 == 0) ? 1.0 : -1.0) * minor.determinant();
  }
  return normal;
}

double factorial(Eigen::Index n) {
  double f = 1;
  for (Eigen::Index k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

}  // namespace

InscribedBall chebyshev_center(std::span<const Vec> vertices) {
  if (vertices.empty()) throw InputError("simplex needs vertices");
  const auto n = static_cast<Eigen::Index>(vertices.front().size());
  if (n < 1 || static_cast<Eigen::Index>(vertices.size()) != n + 1) {
    throw InputError("simplex in R^n needs exactly n+1 vertices");
  }
  for (const auto& v : vertices) {
    if (v.size() != n) throw InputError("simplex vertices differ in dimension");
  }

  Eigen::MatrixXd edges(n, n);
  double scale = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    edges.col(i) = vertices[i + 1] - vertices[0];
  }
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      scale = std::max(scale, (vertices[a] - vertices[b]).norm());
    }
  }
  const double volume = std::abs(edges.determinant()) / factorial(n);
  if (!(scale > 0) || volume < 1e-14 * std::pow(scale, static_cast<double>(n))) {
    throw InputError("degenerate simplex");
  }

  Vec centroid = Vec::Zero(n);
  for (const auto& v : vertices) centroid += v;
  centroid /= static_cast<double>(n + 1);

  // Facet k is opposite vertex k: <normal, x> <= offset, outward normal.
  Eigen::MatrixXd normals(n + 1, n);
  Vec offsets(n + 1);
  for (Eigen::Index k = 0; k <= n; ++k) {
    std::vector<Vec> facet;
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (i != k) facet.push_back(vertices[i]);
    }
    Vec normal = cofactor_normal(facet);
    if (normal.dot(vertices[k] - facet.front()) > 0) normal = -normal;
    normal.normalize();
    normals.row(k) = normal.transpose();
    offsets[k] = normal.dot(facet.front());
  }

  // max r  s.t.  <n_f, x> + r <= b_f, with x = centroid + xp - xm.
  Eigen::MatrixXd A(n + 1, 2 * n + 1);
  A.leftCols(n) = normals;
  A.middleCols(n, n) = -normals;
  A.col(2 * n).setOnes();
  Vec b = offsets - normals * centroid;
  b = b.cwiseMax(0.0);
  Vec c = Vec::Zero(2 * n + 1);
  c[2 * n] = 1.0;
  const LpSolution sol = solve_lp_max(A, b, c);

  InscribedBall ball;
  ball.center = centroid + sol.z.head(n) - sol.z.segment(n, n);
  ball.radius = sol.z[2 * n];
  return ball;
}

std::vector<Vec> base_simplex(const Basis& basis) {
  std::vector<Vec> vs;
  vs.push_back(Vec::Zero(basis.dim()));
  for (const auto& u : basis.us) vs.push_back(u);
  return vs;
}

ScaledBasis scale_basis(const Basis& basis, double targetDiameter) {
  if (!(targetDiameter > 0) || !std::isfinite(targetDiameter)) {
    throw InputError("target diameter must be positive");
  }
  const InscribedBall ball = chebyshev_center(base_simplex(basis));
  const double s = targetDiameter / (2 * ball.radius);
  return {basis.scaled(s), s};
}

std::vector<Vec> SimplexState::vertices() const {
  std::vector<Vec> vs;
  vs.push_back(Vec::Zero(basis.dim()));
  for (std::size_t j = 0; j < t.size(); ++j) vs.push_back(vertex(j));
  return vs;
}

namespace {

std::vector<double> ray_projections(const Direction& normal, const Basis& basis) {
  if (normal.dim() != basis.dim()) throw InputError("slab and basis dimensions differ");
  std::vector<double> proj;
  for (const auto& u : basis.us) {
    const double p = normal.dot(u);
    if (!(p > 0)) throw InputError("slab normal has nonpositive inner product with a ray");
    proj.push_back(p);
  }
  return proj;
}

}  // namespace

SimplexState place_first(const Slab& slab, const Basis& basis) {
  const std::vector<double> proj = ray_projections(slab.normal, basis);
  SimplexState state;
  state.basis = basis;
  state.step = 1;
  for (double p : proj) {
    state.t.push_back(slab.width / p);
    if (!(state.t.back() > 0)) state.degenerate = true;
  }
  state.placed.emplace_back(slab.normal, 0.0, slab.width);
  PlacementCertificate cert;
  cert.ratios.assign(proj.size(), 0.0);
  cert.advance = state.t[0] * basis.us[0].norm();
  state.certificates.push_back(std::move(cert));
  return state;
}

SimplexState place_next(SimplexState state, const Slab& slab) {
  if (state.placed.empty()) return place_first(slab, state.basis);
  const std::vector<double> proj = ray_projections(slab.normal, state.basis);
  const double lower = slab.normal.dot(state.vertex(0));

  PlacementCertificate cert;
  std::vector<double> next(proj.size());
  for (std::size_t j = 0; j < proj.size(); ++j) {
    const double alpha = lower / proj[j];
    const double beta = state.t[j];
    cert.ratios.push_back(alpha / beta);
    if (alpha > beta * (1 + kCertificateTolerance)) {
      std::ostringstream msg;
      msg << "ordering condition violated at step " << state.step + 1 << ", ray "
          << j + 1 << ": alpha/beta = " << alpha / beta;
      throw CertificateError(msg.str());
    }
    next[j] = alpha + slab.width / proj[j];
  }
  cert.advance = (next[0] - state.t[0]) * state.basis.us[0].norm();
  state.t = std::move(next);
  state.placed.emplace_back(slab.normal, lower, slab.width);
  state.certificates.push_back(std::move(cert));
  ++state.step;
  return state;
}

CoverConstant cover_constant(const Basis& scaled, double gamma, double basisScale) {
  if (!(gamma > 0 && gamma <= 1)) throw InputError("gamma must lie in (0, 1]");
  double longest = 0;
  for (const auto& u : scaled.us) longest = std::max(longest, u.norm());
  return {gamma, longest / gamma, basisScale};
}

SimplexCover cover_simplex(std::span<const Slab> slabs, const Basis& basis,
                           double gamma, double cTarget) {
  if (slabs.empty()) throw ExhaustedError("no slabs to place", 0, 1, cTarget);
  SimplexState state = place_first(slabs.front(), basis);
  std::size_t next = 1;
  auto reach = [&] { return state.vertex(0).norm(); };
  while (reach() < cTarget) {
    if (next >= slabs.size()) {
      std::ostringstream msg;
      msg << "slabs exhausted after " << state.step << " placements: ||p(1)|| = "
          << reach() << " < " << cTarget;
      throw ExhaustedError(msg.str(), state.step, state.step + 1, cTarget - reach());
    }
    state = place_next(std::move(state), slabs[next++]);
  }

  const double front = reach();
  for (std::size_t j = 0; j < state.t.size(); ++j) {
    if (state.vertex(j).norm() < gamma * front) {
      throw CertificateError("vertex bound ||p(j)|| >= gamma ||p(1)|| failed for ray " +
                             std::to_string(j + 1));
    }
    if (state.t[j] < 1.0) {
      throw CertificateError("final simplex does not contain the base simplex (ray " +
                             std::to_string(j + 1) + ")");
    }
  }

  const InscribedBall inner = chebyshev_center(base_simplex(basis));
  const Ball target(inner.center, inner.radius);
  SimplexCover out{Covering{target, target, state.placed, {}, state.certificates,
                            provenance::kSimplex, {}},
                   std::move(state)};
  return out;
}

Vec sample_simplex(std::span<const Vec> vertices, std::uint64_t seed, std::uint64_t index) {
  KeyedStream rng(seed, index);
  std::vector<double> weights(vertices.size());
  double total = 0;
  for (auto& w : weights) {
    w = rng.exponential();
    total += w;
  }
  Vec x = Vec::Zero(vertices.front().size());
  for (std::size_t k = 0; k < vertices.size(); ++k) x += (weights[k] / total) * vertices[k];
  return x;
}

}  // namespace plankforge
