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
#include "commands.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "plankforge/errors.hpp"
#include "plankforge/greedy_cover.hpp"
#include "plankforge/io.hpp"
#include "plankforge/poly_control.hpp"
#include "plankforge/region_cover.hpp"
#include "plankforge/svg.hpp"
#include "plankforge/verify.hpp"

namespace plankforge::cli {

namespace fs = std::filesystem;

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

// Everything needed to replay a run: the subcommand, its arguments minus the
// output directory, and the resolved parameters for reference.
void write_manifest(const fs::path& dir, const std::string& command,
                    const std::vector<std::string>& args, json parameters, json seeds) {
  json manifest = {{"schema", kSchema},
                   {"kind", "manifest"},
                   {"command", command},
                   {"args", args},
                   {"parameters", std::move(parameters)},
                   {"seeds", std::move(seeds)},
                   {"version", kVersion},
                   {"timestamp", utc_timestamp()}};
  write_text(dir / "manifest.json", dump(manifest));
}

fs::path prepare_out(const std::string& out) {
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory " + out);
  return dir;
}

// Arguments with "--out <dir>" removed, for the manifest.
std::vector<std::string> replayable(const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    if (args[i].rfind("--out=", 0) == 0) continue;
    kept.push_back(args[i]);
  }
  return kept;
}

Box square_view(const Box& region, double margin) {
  Vec lo = region.low().array() - margin;
  Vec hi = region.high().array() + margin;
  return Box(lo, hi);
}

struct BallOptions {
  int dim = 0;
  std::string widths;
  std::string normals = "random:1";
  std::size_t cloudSize = 200000;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  std::string out = ".";
  std::string svg;
};

int cover_ball_cmd(const BallOptions& o, const std::vector<std::string>& args,
                   std::ostream& out) {
  if (o.dim < 1) throw InputError("--dim must be >= 1");
  const std::vector<double> widths = parse_widths(o.widths);
  const NormalSource normals = parse_normals(o.normals, o.dim);
  std::vector<Direction> dirs;
  for (std::size_t i = 0; i < widths.size(); ++i) dirs.push_back(normals(i));

  GreedyConfig cfg;
  cfg.dimension = o.dim;
  cfg.cloudSize = o.cloudSize;
  cfg.verifyCloudSize = o.samples;
  cfg.seed = o.seed;

  const fs::path dir = prepare_out(o.out);
  write_manifest(dir, "cover-ball", replayable(args),
                 {{"dim", o.dim}, {"widths", o.widths}, {"normals", o.normals},
                  {"cloudSize", o.cloudSize}, {"samples", o.samples}},
                 {{"construction", o.seed}, {"verification", cfg.verify_seed()}});

  GreedyResult result;
  try {
    result = cover_ball(widths, dirs, cfg);
  } catch (const VerificationError& e) {
    VerificationReport report;
    report.uncovered = e.witnesses();
    report.uncoveredCount = e.witnesses().size();
    write_text(dir / "report.json", dump(to_json(report)));
    out << "fail: " << e.what() << "\n";
    return kVerifiedFail;
  }
  write_text(dir / "cover.json", dump(to_json(result.covering)));
  write_text(dir / "report.json", dump(to_json(result.verification)));
  if (!o.svg.empty()) {
    if (o.dim != 2) throw InputError("--svg needs --dim 2");
    const Ball& target = std::get<Ball>(result.covering.target);
    write_text(o.svg, render_svg(result.covering.placed, {target},
                                 square_view(Box(Vec::Constant(2, -0.5), Vec::Constant(2, 0.5)), 0.05)));
  }
  for (const auto& w : result.covering.warnings) out << "warning: " << w << "\n";
  out << result.verification.status() << ": " << result.covering.placed.size()
      << " slabs, " << result.verification.uncoveredCount << " of "
      << result.verification.checked << " verification points uncovered\n";
  return result.verification.pass ? kPass : kVerifiedFail;
}

struct RegionOptions {
  int dim = 0;
  std::vector<std::string> region;
  double c = 0.5;
  std::string widths;
  std::size_t maxSlabs = 10000000;
  std::string normals = "random:1";
  std::size_t cloudSize = 200000;
  std::size_t samples = 100000;
  std::size_t grid = kDefaultGridPerAxis;
  std::uint64_t seed = 1;
  std::string out = ".";
  std::string svg;
};

Box parse_region(const std::vector<std::string>& specs, int dim) {
  if (specs.empty()) throw InputError("--region is required");
  if (specs.size() != 1 && static_cast<int>(specs.size()) != dim) {
    throw InputError("give --region once (all axes) or once per axis");
  }
  std::string joined = "box:";
  for (std::size_t k = 0; k < specs.size(); ++k) joined += (k ? ";" : "") + specs[k];
  return std::get<Box>(parse_body(joined, dim));
}

int cover_region_cmd(const RegionOptions& o, const std::vector<std::string>& args,
                     std::ostream& out) {
  if (o.dim < 1) throw InputError("--dim must be >= 1");
  if (!(o.c > 0 && o.c <= 1)) throw InputError("--c must lie in (0, 1]");
  const Box region = parse_region(o.region, o.dim);
  const WidthStream widths = parse_width_stream(o.widths, o.maxSlabs);
  const NormalSource normals = parse_normals(o.normals, o.dim);

  RegionConfig cfg;
  cfg.c = o.c;
  cfg.greedy.dimension = o.dim;
  cfg.greedy.cloudSize = o.cloudSize;
  cfg.greedy.verifyCloudSize = o.samples;
  cfg.greedy.seed = o.seed;
  cfg.gridPerAxis = o.grid;

  const fs::path dir = prepare_out(o.out);
  write_manifest(dir, "cover-region", replayable(args),
                 {{"dim", o.dim}, {"region", to_json(Body(region))}, {"c", o.c},
                  {"widths", o.widths}, {"maxSlabs", o.maxSlabs}, {"normals", o.normals},
                  {"cloudSize", o.cloudSize}, {"samples", o.samples}, {"grid", o.grid}},
                 {{"construction", o.seed}});

  RegionResult result;
  try {
    result = cover_region(widths, normals, region, cfg);
  } catch (const ExhaustedError& e) {
    json deficit = {{"schema", kSchema}, {"kind", "deficit"},  {"message", e.what()},
                    {"ballsCovered", e.achieved()}, {"ballsNeeded", e.required()},
                    {"widthDeficit", e.deficit()}};
    write_text(dir / "report.json", dump(deficit));
    out << "insufficient slabs: " << e.what() << "\n";
    return kExhausted;
  }
  write_text(dir / "plan.json", dump(to_json(result)));
  write_text(dir / "cover.json", dump(to_json(result.covering)));
  write_text(dir / "report.json", dump(to_json(result.verification)));
  if (!o.svg.empty()) {
    if (o.dim != 2) throw InputError("--svg needs --dim 2");
    std::vector<Ball> balls;
    for (const auto& c : result.plan.ballCenters) balls.emplace_back(c, result.plan.ballDiameter / 2);
    write_text(o.svg, render_svg(result.covering.placed, balls,
                                 square_view(region, result.plan.ballDiameter)));
  }
  for (const auto& w : result.covering.warnings) out << "warning: " << w << "\n";
  out << result.verification.status() << ": " << result.plan.ballCenters.size() << " balls, "
      << result.covering.placed.size() << " slabs, " << result.verification.uncoveredCount
      << " of " << result.verification.checked << " grid points uncovered\n";
  return result.verification.pass ? kPass : kVerifiedFail;
}

struct ControlOptions {
  int degree = 0;
  std::string xs;
  double radius = 1.0;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  double gamma = 1.0 / 3.0;
  std::string out = ".";
  std::string csv;
};

int control_cmd(const ControlOptions& o, const std::vector<std::string>& args,
                std::ostream& out) {
  if (o.degree < 1) throw InputError("--degree must be >= 1");
  if (o.trials < 1) throw InputError("--trials must be >= 1");
  const std::vector<double> xs = parse_xs(o.xs);

  const fs::path dir = prepare_out(o.out);
  write_manifest(dir, "control", replayable(args),
                 {{"degree", o.degree}, {"xs", o.xs}, {"radius", o.radius},
                  {"trials", o.trials}, {"gamma", o.gamma}},
                 {{"verification", o.seed}});

  ControlTable table;
  try {
    ControlConfig cfg;
    cfg.gamma = o.gamma;
    table = build_control(xs, o.degree, o.radius, cfg);
  } catch (const ExhaustedError& e) {
    json deficit = {{"schema", kSchema}, {"kind", "deficit"}, {"message", e.what()},
                    {"samplesAvailable", e.achieved()}, {"samplesRequired", e.required()},
                    {"massDeficit", e.deficit()}};
    write_text(dir / "verification.json", dump(deficit));
    out << "insufficient samples: " << e.what() << "\n";
    return kExhausted;
  }

  const Ball cert(table.certCenter, table.certRadius);
  double worst = 0;
  std::size_t worstTrial = 0;
  for (std::size_t i = 0; i < o.trials; ++i) {
    const ControlResidual r = control_check(table, sample_point(cert, o.seed, i));
    if (r.residual > worst) {
      worst = r.residual;
      worstTrial = i;
    }
  }
  const bool pass = worst <= 1.0 + 1e-9;
  json summary = {{"schema", kSchema},  {"kind", "control-verification"},
                  {"status", pass ? "pass" : "fail"}, {"trials", o.trials},
                  {"maxResidual", worst}, {"worstTrial", worstTrial},
                  {"certRadius", table.certRadius}, {"slabsUsed", table.slabsUsed}};
  write_text(dir / "control.json", dump(to_json(table)));
  write_text(dir / "verification.json", dump(summary));
  if (!o.csv.empty()) write_text(o.csv, pairs_csv(table));
  out << (pass ? "pass" : "fail") << ": " << table.slabsUsed << " of " << table.pairs.size()
      << " samples used, certified radius " << table.certRadius << ", max residual "
      << worst << " over " << o.trials << " trials\n";
  return pass ? kPass : kVerifiedFail;
}

struct VerifyOptions {
  std::string cover;
  std::string body;
  std::string mode;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultWitnessBudget;
  std::string out;
};

int verify_cmd(const VerifyOptions& o, std::ostream& out) {
  const Covering cov = covering_from_json(read_json(o.cover));
  const Body body = o.body.empty() ? cov.target : parse_body(o.body, cov.dim());
  VerifyMode mode = std::holds_alternative<Ball>(body) ? VerifyMode::Cloud : VerifyMode::Grid;
  if (o.mode == "grid") mode = VerifyMode::Grid;
  else if (o.mode == "cloud") mode = VerifyMode::Cloud;
  else if (!o.mode.empty()) throw InputError("--mode must be cloud or grid");
  const std::size_t count = mode == VerifyMode::Grid && o.mode.empty() && o.samples == 100000
                                ? kDefaultGridPerAxis
                                : o.samples;

  VerificationReport report = verify_covering(cov, body, mode, count, o.seed);
  json doc = to_json(report);
  if (const auto* ball = std::get_if<Ball>(&body)) {
    const NecessityReport nec = bang_necessity(cov, *ball);
    doc["necessity"] = to_string(nec.status);
    if (report.pass && nec.status == Necessity::Impossible) {
      if (auto w = find_uncovered_point(cov.placed, *ball, o.budget, o.seed)) {
        report.uncovered.push_back(*w);
        report.uncoveredCount = 1;
        report.pass = false;
        doc = to_json(report);
        doc["necessity"] = to_string(nec.status);
      }
    }
  }
  if (!o.out.empty()) write_text(prepare_out(o.out) / "report.json", dump(doc));
  out << report.status() << ": " << report.uncoveredCount << " of " << report.checked
      << " points uncovered";
  if (!report.uncovered.empty()) {
    out << "; witness (";
    for (Eigen::Index k = 0; k < report.uncovered.front().size(); ++k) {
      out << (k ? ", " : "") << format_double(report.uncovered.front()[k]);
    }
    out << ")";
  }
  out << "\n";
  return report.pass ? kPass : kVerifiedFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"plankforge: translative plank coverings and polynomial-controlling sequences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  BallOptions ballOpts;
  auto* ball = app.add_subcommand("cover-ball", "Greedy covering of a unit-diameter ball");
  ball->add_option("--dim", ballOpts.dim, "Ambient dimension")->required();
  ball->add_option("--widths", ballOpts.widths,
                   "Width CSV or generator (harmonic:start:count, const:w:count, power:w0:p:count)")
      ->required();
  ball->add_option("--normals", ballOpts.normals, "Normals CSV or random:seed");
  ball->add_option("--cloud-size", ballOpts.cloudSize, "Construction sample size");
  ball->add_option("--samples", ballOpts.samples, "Verification sample size");
  ball->add_option("--seed", ballOpts.seed, "Construction seed");
  ball->add_option("--out", ballOpts.out, "Output directory");
  ball->add_option("--svg", ballOpts.svg, "SVG output path (dim 2)");

  RegionOptions regionOpts;
  auto* region = app.add_subcommand("cover-region", "Covering of a bounded box by blocks of slabs");
  region->add_option("--dim", regionOpts.dim, "Ambient dimension")->required();
  region->add_option("--region", regionOpts.region, "lo,hi for all axes, or once per axis")
      ->required();
  region->add_option("--c", regionOpts.c, "Block constant in (0, 1]");
  region->add_option("--widths", regionOpts.widths,
                     "Width CSV or generator (harmonic:start[:count], const:w[:count], power:w0:p:count)")
      ->required();
  region->add_option("--max-slabs", regionOpts.maxSlabs, "Cap on terms drawn from an unbounded generator");
  region->add_option("--normals", regionOpts.normals, "Normals CSV or random:seed");
  region->add_option("--cloud-size", regionOpts.cloudSize, "Construction sample size per block");
  region->add_option("--samples", regionOpts.samples, "Verification sample size per block");
  region->add_option("--grid", regionOpts.grid, "Grid points per axis for region verification");
  region->add_option("--seed", regionOpts.seed, "Construction seed");
  region->add_option("--out", regionOpts.out, "Output directory");
  region->add_option("--svg", regionOpts.svg, "SVG output path (dim 2)");

  ControlOptions controlOpts;
  auto* control = app.add_subcommand("control", "Build a polynomial-controlling table");
  control->add_option("--degree", controlOpts.degree, "Polynomial degree d >= 1")->required();
  control->add_option("--xs", controlOpts.xs,
                      "Sample CSV or generator (const:x:k, ramp:x0:rate:count, geom:x0:ratio:count)")
      ->required();
  control->add_option("--radius", controlOpts.radius, "Coefficient-space radius R");
  control->add_option("--trials", controlOpts.trials, "Random coefficient vectors to check");
  control->add_option("--seed", controlOpts.seed, "Verification seed");
  control->add_option("--gamma", controlOpts.gamma, "Angle constant for the ray conditions");
  control->add_option("--out", controlOpts.out, "Output directory");
  control->add_option("--csv", controlOpts.csv, "Also write (x, y) pairs as CSV");

  VerifyOptions verifyOpts;
  auto* verify = app.add_subcommand("verify", "Re-check a cover.json independently");
  verify->add_option("--cover", verifyOpts.cover, "Covering JSON")->required();
  verify->add_option("--body", verifyOpts.body, "ball:r[@c..] or box:lo,hi[;..]; default: claimed target");
  verify->add_option("--mode", verifyOpts.mode, "cloud or grid");
  verify->add_option("--samples", verifyOpts.samples, "Sample count (grid: points per axis)");
  verify->add_option("--seed", verifyOpts.seed, "Verification seed");
  verify->add_option("--budget", verifyOpts.budget, "Witness search budget");
  verify->add_option("--out", verifyOpts.out, "Directory for report.json");

  std::string manifestPath, replayOut = ".";
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("--manifest", manifestPath, "manifest.json")->required();
  replay->add_option("--out", replayOut, "Output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*ball) return cover_ball_cmd(ballOpts, args, out);
    if (*region) return cover_region_cmd(regionOpts, args, out);
    if (*control) return control_cmd(controlOpts, args, out);
    if (*verify) return verify_cmd(verifyOpts, out);
    if (*replay) {
      const json m = read_json(manifestPath);
      if (m.value("schema", "") != kSchema || m.value("kind", "") != "manifest") {
        throw InputError("not a plankforge manifest");
      }
      std::vector<std::string> again{m.at("command").get<std::string>()};
      for (const auto& a : m.at("args")) again.push_back(a.get<std::string>());
      again.push_back("--out");
      again.push_back(replayOut);
      return run(again, out, err);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ExhaustedError& e) {
    err << "error: " << e.what() << "\n";
    return kExhausted;
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace plankforge::cli
