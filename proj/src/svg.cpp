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
#include "plankforge/svg.hpp"

#include <array>
#include <sstream>

#include "plankforge/errors.hpp"
#include "plankforge/io.hpp"

namespace plankforge {

namespace {

using Polygon = std::vector<std::array<double, 2>>;

// Keeps the part of `poly` with a*x + b*y <= c (Sutherland-Hodgman step).
Polygon clip(const Polygon& poly, double a, double b, double c) {
  Polygon out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    const double fp = a * p[0] + b * p[1] - c;
    const double fq = a * q[0] + b * q[1] - c;
    if (fp <= 0) out.push_back(p);
    if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
      const double s = fp / (fp - fq);
      out.push_back({p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])});
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<Slab>& slabs, const std::vector<Ball>& balls,
                       const Box& view, double pixels) {
  if (view.dim() != 2) throw InputError("SVG output needs a planar view");
  const double x0 = view.low()[0], y0 = view.low()[1];
  const double span = std::max(view.high()[0] - x0, view.high()[1] - y0);
  if (!(span > 0)) throw InputError("SVG view must have positive extent");
  const double k = pixels / span;
  auto px = [&](double x) { return (x - x0) * k; };
  auto py = [&](double y) { return pixels - (y - y0) * k; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels << "\" height=\""
      << pixels << "\" viewBox=\"0 0 " << pixels << " " << pixels << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const Polygon frame{{x0, y0}, {x0 + span, y0}, {x0 + span, y0 + span}, {x0, y0 + span}};
  for (const auto& s : slabs) {
    if (s.dim() != 2) throw InputError("SVG output needs planar slabs");
    const double a = s.normal.coords()[0], b = s.normal.coords()[1];
    Polygon poly = clip(frame, a, b, s.upper());
    if (!poly.empty()) poly = clip(poly, -a, -b, -s.lower);
    svg << "<polygon class=\"slab\" fill=\"steelblue\" fill-opacity=\"0.25\" points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      svg << (i ? " " : "") << format_double(px(poly[i][0])) << ","
          << format_double(py(poly[i][1]));
    }
    svg << "\"/>\n";
  }
  for (const auto& ball : balls) {
    svg << "<circle class=\"ball\" cx=\"" << format_double(px(ball.center()[0])) << "\" cy=\""
        << format_double(py(ball.center()[1])) << "\" r=\"" << format_double(ball.radius() * k)
        << "\" fill=\"none\" stroke=\"crimson\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace plankforge
