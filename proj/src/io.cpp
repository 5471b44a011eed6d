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
#include "plankforge/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "plankforge/errors.hpp"

namespace plankforge {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& context) {
  const std::string t = trim(text);
  double v = 0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw InputError(context + ": cannot parse number '" + t + "'");
  }
  return v;
}

std::size_t parse_count(const std::string& text, const std::string& context) {
  const std::string t = trim(text);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw InputError(context + ": cannot parse count '" + t + "'");
  }
  return v;
}

void require_kind(const json& j, const char* kind) {
  if (!j.is_object() || j.value("schema", "") != kSchema || j.value("kind", "") != kind) {
    throw InputError(std::string("expected a ") + kind + " document with schema " + kSchema);
  }
}

template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json to_json(const Vec& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

json to_json(const Slab& s) {
  return {{"normal", to_json(s.normal.coords())}, {"lower", s.lower}, {"width", s.width}};
}

json to_json(const Body& b) {
  if (const auto* ball = std::get_if<Ball>(&b)) {
    return {{"type", "ball"}, {"center", to_json(ball->center())}, {"radius", ball->radius()}};
  }
  const Box& box = std::get<Box>(b);
  return {{"type", "box"}, {"low", to_json(box.low())}, {"high", to_json(box.high())}};
}

json to_json(const Covering& c) {
  json slabs = json::array();
  for (const auto& s : c.placed) slabs.push_back(to_json(s));
  json trace = json::array();
  for (const auto& t : c.trace) {
    trace.push_back({{"offset", t.offset},
                     {"aliveBefore", t.aliveBefore},
                     {"covered", t.covered},
                     {"candidateCount", t.candidateCount}});
  }
  json certs = json::array();
  for (const auto& cert : c.certificates) {
    certs.push_back({{"ratios", cert.ratios}, {"advance", cert.advance}});
  }
  return {{"schema", kSchema},
          {"kind", "covering"},
          {"provenance", c.provenance},
          {"dimension", c.dim()},
          {"body", to_json(c.body)},
          {"target", to_json(c.target)},
          {"totalWidth", c.total_width()},
          {"slabs", std::move(slabs)},
          {"trace", std::move(trace)},
          {"certificates", std::move(certs)},
          {"warnings", c.warnings}};
}

json to_json(const VerificationReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.uncovered) witnesses.push_back(to_json(w));
  return {{"schema", kSchema},
          {"kind", "verification"},
          {"status", r.status()},
          {"checked", r.checked},
          {"uncoveredCount", r.uncoveredCount},
          {"witnesses", std::move(witnesses)},
          {"totalWidth", r.totalWidth},
          {"bodyDiameter", r.bodyDiameter},
          {"necessityMargin", r.necessityMargin}};
}

json to_json(const RegionResult& r) {
  json balls = json::array();
  for (std::size_t i = 0; i < r.plan.ballCenters.size(); ++i) {
    json ball = {{"center", to_json(r.plan.ballCenters[i])}};
    if (i < r.plan.assignment.size()) {
      const auto& a = r.plan.assignment[i];
      ball["source"] = a.source == BallAssignment::Source::Wide ? "wide" : "block";
      ball["index"] = a.index;
    }
    balls.push_back(std::move(ball));
  }
  json blocks = json::array();
  for (std::size_t j = 0; j < r.partition.blocks.size(); ++j) {
    const Block& b = r.partition.blocks[j];
    json block = {{"begin", b.begin}, {"end", b.end}, {"sum", b.sum}, {"last", b.last}};
    if (j < r.widenedHypothesis.size()) block["widenedHypothesis"] = bool(r.widenedHypothesis[j]);
    blocks.push_back(std::move(block));
  }
  return {{"schema", kSchema},
          {"kind", "region-plan"},
          {"region", to_json(Body(r.plan.region))},
          {"c", r.partition.c},
          {"ballDiameter", r.plan.ballDiameter},
          {"wideWidths", r.wide},
          {"balls", std::move(balls)},
          {"blocks", std::move(blocks)}};
}

json to_json(const MomentSystem& ms) {
  json normals = json::array();
  for (const auto& s : ms.slabs) normals.push_back(to_json(s.normal.coords()));
  return {{"schema", kSchema}, {"kind", "moment-system"}, {"degree", ms.degree},
          {"xs", ms.xs},       {"widths", ms.widths},     {"normals", std::move(normals)}};
}

json to_json(const ControlTable& t) {
  json pairs = json::array();
  for (const auto& p : t.pairs) pairs.push_back({{"x", p.x}, {"y", p.y}});
  return {{"schema", kSchema},
          {"kind", "control-table"},
          {"degree", t.degree},
          {"route", t.route},
          {"slabsUsed", t.slabsUsed},
          {"pairs", std::move(pairs)},
          {"certBall", {{"center", to_json(t.certCenter)}, {"radius", t.certRadius}}}};
}

json to_json(const DivergenceReport& r) {
  return {{"partialSums", r.partialSums},
          {"tailSlope", r.tailSlope},
          {"convergentLooking", r.convergentLooking}};
}

Vec vec_from_json(const json& j) {
  return guarded("vector", [&] {
    if (!j.is_array() || j.empty()) throw InputError("expected a nonempty number array");
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j.at(i).get<double>();
    return v;
  });
}

Slab slab_from_json(const json& j) {
  return guarded("slab", [&] {
    return Slab(Direction::from_unit(vec_from_json(j.at("normal"))), j.at("lower").get<double>(),
                j.at("width").get<double>());
  });
}

Body body_from_json(const json& j) {
  return guarded("body", [&]() -> Body {
    const std::string type = j.at("type").get<std::string>();
    if (type == "ball") return Ball(vec_from_json(j.at("center")), j.at("radius").get<double>());
    if (type == "box") return Box(vec_from_json(j.at("low")), vec_from_json(j.at("high")));
    throw InputError("unknown body type '" + type + "'");
  });
}

Covering covering_from_json(const json& j) {
  require_kind(j, "covering");
  return guarded("covering", [&] {
    Covering c{body_from_json(j.at("body")), body_from_json(j.at("target")), {}, {}, {},
               j.at("provenance").get<std::string>(), {}};
    const int d = j.at("dimension").get<int>();
    if (d != c.dim() || body_dim(c.target) != d) throw InputError("covering dimension mismatch");
    for (const auto& s : j.at("slabs")) {
      c.placed.push_back(slab_from_json(s));
      if (c.placed.back().dim() != d) throw InputError("slab dimension mismatch");
    }
    if (j.contains("trace")) {
      for (const auto& t : j.at("trace")) {
        c.trace.push_back({t.at("offset").get<double>(), t.at("aliveBefore").get<std::size_t>(),
                           t.at("covered").get<std::size_t>(),
                           t.at("candidateCount").get<std::size_t>()});
      }
    }
    if (j.contains("certificates")) {
      for (const auto& cert : j.at("certificates")) {
        c.certificates.push_back(
            {cert.at("ratios").get<std::vector<double>>(), cert.at("advance").get<double>()});
      }
    }
    if (j.contains("warnings")) c.warnings = j.at("warnings").get<std::vector<std::string>>();
    return c;
  });
}

ControlTable control_table_from_json(const json& j) {
  require_kind(j, "control-table");
  return guarded("control table", [&] {
    ControlTable t;
    t.degree = j.at("degree").get<int>();
    for (const auto& p : j.at("pairs")) t.pairs.push_back({p.at("x").get<double>(), p.at("y").get<double>()});
    t.certCenter = vec_from_json(j.at("certBall").at("center"));
    t.certRadius = j.at("certBall").at("radius").get<double>();
    t.slabsUsed = j.value("slabsUsed", t.pairs.size());
    t.route = j.value("route", "");
    if (t.certCenter.size() != t.degree + 1) throw InputError("certified centre has wrong length");
    return t;
  });
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": invalid JSON: " + e.what());
  }
}

namespace {

std::vector<std::string> data_lines(const std::filesystem::path& path,
                                    std::vector<std::size_t>& lineNumbers) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::vector<std::string> lines;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    lines.push_back(t);
    lineNumbers.push_back(n);
  }
  return lines;
}

}  // namespace

std::vector<double> read_values_csv(const std::filesystem::path& path) {
  std::vector<std::size_t> numbers;
  const auto lines = data_lines(path, numbers);
  std::vector<double> values;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    values.push_back(parse_double(lines[i], path.string() + ":" + std::to_string(numbers[i])));
  }
  return values;
}

std::vector<Vec> read_vectors_csv(const std::filesystem::path& path) {
  std::vector<std::size_t> numbers;
  const auto lines = data_lines(path, numbers);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    Vec v(static_cast<Eigen::Index>(cells.size()));
    for (std::size_t k = 0; k < cells.size(); ++k) {
      v[static_cast<Eigen::Index>(k)] =
          parse_double(cells[k], path.string() + ":" + std::to_string(numbers[i]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::string pairs_csv(const ControlTable& t) {
  std::string out = "x,y\n";
  for (const auto& p : t.pairs) out += format_double(p.x) + "," + format_double(p.y) + "\n";
  return out;
}

namespace {

bool is_generator(const std::string& spec, const std::string& name) {
  return spec.rfind(name + ":", 0) == 0;
}

}  // namespace

WidthStream parse_width_stream(const std::string& spec, std::size_t maxTerms) {
  const auto parts = split(spec, ':');
  WidthStream base;
  std::size_t count = 0;
  if (is_generator(spec, "harmonic")) {
    if (parts.size() < 2 || parts.size() > 3) throw InputError("expected harmonic:start[:count]");
    const std::size_t start = parse_count(parts[1], "harmonic start");
    count = parts.size() == 3 ? parse_count(parts[2], "harmonic count") : 0;
    if (start < 1) throw InputError("harmonic start must be >= 1");
    base = harmonic_stream(start, count);
  } else if (is_generator(spec, "const")) {
    if (parts.size() < 2 || parts.size() > 3) throw InputError("expected const:w[:count]");
    const double w = parse_double(parts[1], "const width");
    if (!(w > 0)) throw InputError("width must be positive");
    count = parts.size() == 3 ? parse_count(parts[2], "const count") : 0;
    base = constant_stream(w, count);
  } else {
    base = list_stream(parse_widths(spec));
    count = 1;  // finite
  }
  if (count != 0 || maxTerms == 0) return base;
  auto emitted = std::make_shared<std::size_t>(0);
  return [base, emitted, maxTerms]() -> std::optional<double> {
    if (*emitted >= maxTerms) return std::nullopt;
    ++*emitted;
    return base();
  };
}

std::vector<double> parse_widths(const std::string& spec) {
  const auto parts = split(spec, ':');
  std::vector<double> out;
  if (is_generator(spec, "harmonic")) {
    if (parts.size() != 3) throw InputError("expected harmonic:start:count");
    const std::size_t start = parse_count(parts[1], "harmonic start");
    const std::size_t count = parse_count(parts[2], "harmonic count");
    if (start < 1 || count < 1) throw InputError("harmonic start and count must be >= 1");
    for (std::size_t i = 0; i < count; ++i) out.push_back(1.0 / static_cast<double>(start + i));
  } else if (is_generator(spec, "const")) {
    if (parts.size() != 3) throw InputError("expected const:w:count");
    const double w = parse_double(parts[1], "const width");
    const std::size_t count = parse_count(parts[2], "const count");
    if (!(w > 0) || count < 1) throw InputError("const width and count must be positive");
    out.assign(count, w);
  } else if (is_generator(spec, "power")) {
    if (parts.size() != 4) throw InputError("expected power:w0:p:count");
    const double w0 = parse_double(parts[1], "power w0");
    const double p = parse_double(parts[2], "power exponent");
    const std::size_t count = parse_count(parts[3], "power count");
    if (!(w0 > 0) || p < 0 || count < 1) throw InputError("power needs w0 > 0, p >= 0, count >= 1");
    for (std::size_t i = 1; i <= count; ++i) out.push_back(w0 * std::pow(static_cast<double>(i), -p));
  } else {
    out = read_values_csv(spec);
    if (out.empty()) throw InputError(spec + ": no widths");
  }
  return out;
}

std::vector<double> parse_xs(const std::string& spec) {
  const auto parts = split(spec, ':');
  std::vector<double> out;
  if (is_generator(spec, "const")) {
    if (parts.size() != 3) throw InputError("expected const:x:k");
    const double x = parse_double(parts[1], "const x");
    const std::size_t k = parse_count(parts[2], "const count");
    if (k < 1) throw InputError("count must be >= 1");
    out.assign(k, x);
  } else if (is_generator(spec, "ramp")) {
    if (parts.size() != 4) throw InputError("expected ramp:x0:rate:count");
    const double x0 = parse_double(parts[1], "ramp x0");
    const double rate = parse_double(parts[2], "ramp rate");
    const std::size_t count = parse_count(parts[3], "ramp count");
    for (std::size_t i = 1; i <= count; ++i) out.push_back(x0 * (1 + static_cast<double>(i) * rate));
  } else if (is_generator(spec, "geom")) {
    if (parts.size() != 4) throw InputError("expected geom:x0:ratio:count");
    const double x0 = parse_double(parts[1], "geom x0");
    const double ratio = parse_double(parts[2], "geom ratio");
    const std::size_t count = parse_count(parts[3], "geom count");
    for (std::size_t i = 1; i <= count; ++i) out.push_back(x0 * std::pow(ratio, static_cast<double>(i)));
  } else {
    out = read_values_csv(spec);
  }
  if (out.empty()) throw InputError(spec + ": no sample points");
  return out;
}

NormalSource parse_normals(const std::string& spec, int dim) {
  if (is_generator(spec, "random")) {
    const auto parts = split(spec, ':');
    if (parts.size() != 2) throw InputError("expected random:seed");
    return random_normals(dim, parse_count(parts[1], "normal seed"));
  }
  std::vector<Direction> normals;
  for (const auto& v : read_vectors_csv(spec)) {
    if (v.size() != dim) throw InputError(spec + ": normal dimension does not match --dim");
    normals.push_back(Direction::normalized(v));
  }
  return list_normals(std::move(normals));
}

Body parse_body(const std::string& spec, int dim) {
  if (is_generator(spec, "ball")) {
    const std::string rest = spec.substr(5);
    const auto at = rest.find('@');
    const double r = parse_double(rest.substr(0, at), "ball radius");
    Vec center = Vec::Zero(dim);
    if (at != std::string::npos) {
      const auto cells = split(rest.substr(at + 1), ',');
      if (static_cast<int>(cells.size()) != dim) throw InputError("ball centre dimension mismatch");
      for (int k = 0; k < dim; ++k) center[k] = parse_double(cells[k], "ball centre");
    }
    return Ball(center, r);
  }
  if (is_generator(spec, "box")) {
    const auto axes = split(spec.substr(4), ';');
    if (axes.size() != 1 && static_cast<int>(axes.size()) != dim) {
      throw InputError("box needs one lo,hi pair or one per axis");
    }
    Vec lo(dim), hi(dim);
    for (int k = 0; k < dim; ++k) {
      const auto cells = split(axes[axes.size() == 1 ? 0 : k], ',');
      if (cells.size() != 2) throw InputError("box axis must be lo,hi");
      lo[k] = parse_double(cells[0], "box low");
      hi[k] = parse_double(cells[1], "box high");
    }
    return Box(lo, hi);
  }
  throw InputError("unknown body spec '" + spec + "'");
}

}  // namespace plankforge
