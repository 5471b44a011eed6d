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
#include "plankforge/lp.hpp"

#include <limits>
#include <vector>

#include "plankforge/errors.hpp"

namespace plankforge {

LpSolution solve_lp_max(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                        const Eigen::VectorXd& c) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  if (b.size() != m || c.size() != n) throw InputError("LP dimensions disagree");
  if ((b.array() < 0).any()) throw InputError("LP needs b >= 0 for the origin start");

  // Tableau: [A | I | b] with the objective row -c underneath.
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  t.topLeftCorner(m, n) = A;
  t.block(0, n, m, m).setIdentity();
  t.topRightCorner(m, 1) = b;
  t.bottomLeftCorner(1, n) = -c.transpose();
  std::vector<Eigen::Index> basic(m);
  for (Eigen::Index i = 0; i < m; ++i) basic[i] = n + i;

  constexpr double eps = 1e-12;
  for (int iter = 0; iter < 10000; ++iter) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      if (t(m, j) < -eps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= eps) continue;
      const double ratio = t(i, n + m) / t(i, enter);
      if (ratio < best - eps || (ratio <= best + eps && leave >= 0 && basic[i] < basic[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) throw Error("linear program is unbounded");

    t.row(leave) /= t(leave, enter);
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i != leave && t(i, enter) != 0.0) t.row(i) -= t(i, enter) * t.row(leave);
    }
    basic[leave] = enter;
  }

  LpSolution sol;
  sol.z = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basic[i] < n) sol.z[basic[i]] = t(i, n + m);
  }
  sol.objective = c.dot(sol.z);
  return sol;
}

}  // namespace plankforge
