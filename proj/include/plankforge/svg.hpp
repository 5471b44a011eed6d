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

#include <string>
#include <vector>

#include "plankforge/geom.hpp"

namespace plankforge {

// Planar picture of slabs as stripes clipped to `view`, plus circles for the
// target balls. One <polygon class="slab"> per slab (empty points when the
// stripe misses the view) and one <circle class="ball"> per ball.
std::string render_svg(const std::vector<Slab>& slabs, const std::vector<Ball>& balls,
                       const Box& view, double pixels = 800);

}  // namespace plankforge
