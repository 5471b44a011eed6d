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
#include "plankforge/moment_curve.hpp"

#include <cmath>
#include <limits>

#include "plankforge/errors.hpp"

namespace plankforge {

Vec moment_vector(double x, int degree) {
  if (degree < 1) throw InputError("degree must be >= 1");
  Vec v(degree + 1);
  double p = 1.0;
  for (int k = 0; k <= degree; ++k) {
    v[k] = p;
    p *= x;
  }
  return v;
}

Eigen::MatrixXd Basis::matrix() const {
  Eigen::MatrixXd m(dim(), static_cast<Eigen::Index>(us.size()));
  for (std::size_t j = 0; j < us.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = us[j];
  return m;
}

Basis Basis::scaled(double s) const {
  Basis b;
  for (const auto& u : us) b.us.push_back(s * u);
  return b;
}

Basis basis_u(int degree) {
  if (degree < 1) throw InputError("degree must be >= 1");
  const int n = degree + 1;
  Basis b;
  for (int j = 1; j <= degree; ++j) {
    Vec u = Vec::Zero(n);
    u[n - j - 1] = 1.0;  // e_{d+1-j}, converted to 0-based
    u[n - 1] = 1.0;      // e_{d+1}
    b.us.push_back(std::move(u));
  }
  Vec last = Vec::Zero(n);
  last[n - 1] = 1.0;
  b.us.push_back(std::move(last));
  return b;
}

MomentSystem slabs_from_xs(std::span<const double> xs, int degree) {
  if (degree < 1) throw InputError("degree must be >= 1");
  MomentSystem ms;
  ms.degree = degree;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i])) throw InputError("sample points must be finite");
    if (i > 0 && xs[i] < xs[i - 1]) throw InputError("sample points must be sorted");
    Vec v = moment_vector(xs[i], degree);
    const double norm = v.norm();
    ms.xs.push_back(xs[i]);
    ms.widths.push_back(2.0 / norm);
    ms.slabs.emplace_back(Direction::normalized(v), 0.0, 2.0 / norm);
    ms.vectors.push_back(std::move(v));
  }
  return ms;
}

ConditionReport check_condition_i(const MomentSystem& ms, const Basis& basis) {
  ConditionReport report;
  report.worstMargin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < ms.vectors.size(); ++i) {
    const Vec& cur = ms.vectors[i];
    const Vec& nxt = ms.vectors[i + 1];
    auto ratio = [&](std::size_t j) {
      const double a = cur.dot(basis.us[j]);
      const double b = nxt.dot(basis.us[j]);
      if (!(a > 0) || !(b > 0)) {
        throw InputError("inner product with a basis ray is not positive");
      }
      return b / a;
    };
    const double first = ratio(0);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double margin = (ratio(j) - first) / first;
      report.worstMargin = std::min(report.worstMargin, margin);
      if (margin < -kConditionTolerance) {
        report.holds = false;
        report.violations.push_back({i, j, margin});
      }
    }
  }
  if (!std::isfinite(report.worstMargin)) report.worstMargin = 0;
  return report;
}

ConditionReport check_condition_ii(const MomentSystem& ms, const Basis& basis,
                                   double gamma) {
  if (!(gamma > 0 && gamma < 1)) throw InputError("gamma must lie in (0, 1)");
  ConditionReport report;
  report.worstMargin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ms.vectors.size(); ++i) {
    const Vec& x = ms.vectors[i];
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double bound = gamma * x.norm() * basis.us[j].norm();
      const double slack = x.dot(basis.us[j]) - bound;
      report.worstMargin = std::min(report.worstMargin, slack);
      if (slack < -kConditionTolerance * bound) {
        report.holds = false;
        report.violations.push_back({i, j, slack});
      }
    }
  }
  if (!std::isfinite(report.worstMargin)) report.worstMargin = 0;
  return report;
}

}  // namespace plankforge
