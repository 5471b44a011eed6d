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

#include <Eigen/Dense>

namespace plankforge {

struct LpSolution {
  Eigen::VectorXd z;
  double objective = 0;
};

// Dense tableau simplex for  max c'z  s.t.  A z <= b, z >= 0  with b >= 0,
// so the origin is a feasible start. Bland's rule; throws on unboundedness.
LpSolution solve_lp_max(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                        const Eigen::VectorXd& c);

}  // namespace plankforge
