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
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "plankforge/covering.hpp"
#include "plankforge/geom.hpp"
#include "plankforge/moment_curve.hpp"
#include "plankforge/poly_control.hpp"
#include "plankforge/region_cover.hpp"
#include "plankforge/verify.hpp"

namespace plankforge {

using json = nlohmann::json;

inline constexpr const char* kSchema = "plankforge/1";

json to_json(const Vec& v);
json to_json(const Slab& s);
json to_json(const Body& b);
json to_json(const Covering& c);
json to_json(const VerificationReport& r);
json to_json(const RegionResult& r);
json to_json(const MomentSystem& ms);
json to_json(const ControlTable& t);
json to_json(const DivergenceReport& r);

// Each parser throws InputError on a schema mismatch.
Vec vec_from_json(const json& j);
Slab slab_from_json(const json& j);
Body body_from_json(const json& j);
Covering covering_from_json(const json& j);
ControlTable control_table_from_json(const json& j);

// Stable text form: two-space indent, trailing newline.
std::string dump(const json& j);
void write_text(const std::filesystem::path& path, const std::string& text);
json read_json(const std::filesystem::path& path);

// One number per line; blank lines and lines starting with '#' are skipped.
std::vector<double> read_values_csv(const std::filesystem::path& path);
// Comma-separated coordinates per line.
std::vector<Vec> read_vectors_csv(const std::filesystem::path& path);
std::string pairs_csv(const ControlTable& t);

// Round-trip-safe decimal.
std::string format_double(double v);

// Width generators: "harmonic:start:count", "const:w:count",
// "power:w0:p:count" (w0 * i^-p for i = 1..count), or a CSV path.
// A count of 0 in harmonic/const means unbounded (streams only).
std::vector<double> parse_widths(const std::string& spec);
WidthStream parse_width_stream(const std::string& spec, std::size_t maxTerms);

// Sample-point generators: "const:x:k", "ramp:x0:rate:count"
// (x0 * (1 + i*rate), i = 1..count), "geom:x0:ratio:count" (x0 * ratio^i),
// or a CSV path.
std::vector<double> parse_xs(const std::string& spec);

// "random:seed" or a CSV file with one normal per line.
NormalSource parse_normals(const std::string& spec, int dim);

// "ball:r" or "ball:r@c1,c2,..", "box:lo,hi" (all axes) or
// "box:lo1,hi1;lo2,hi2;..".
Body parse_body(const std::string& spec, int dim);

}  // namespace plankforge
