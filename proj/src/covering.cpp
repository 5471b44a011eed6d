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
#include "plankforge/covering.hpp"

namespace plankforge {

double Covering::total_width() const {
  double sum = 0;
  for (const auto& s : placed) sum += s.width;
  return sum;
}

long first_containing(const std::vector<Slab>& slabs, const Vec& x) {
  for (std::size_t i = 0; i < slabs.size(); ++i) {
    if (slab_contains(slabs[i], x)) return static_cast<long>(i);
  }
  return -1;
}

}  // namespace plankforge
