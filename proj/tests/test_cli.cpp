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
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "plankforge/io.hpp"

using namespace plankforge;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "plankforge_cli_test" / name;
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("cover-ball") {
  const fs::path dir = fresh("ball");
  const Run r = run({"cover-ball", "--dim", "1", "--widths", "const:0.5:9", "--samples", "50000",
                     "--seed", "1", "--out", dir.string()});
  CHECK(r.code == cli::kPass);
  for (const char* f : {"cover.json", "report.json", "manifest.json"}) CHECK(fs::exists(dir / f));
  const json report = read_json(dir / "report.json");
  CHECK(report["status"] == "pass");
  CHECK(report["checked"] == 50000);
  const json manifest = read_json(dir / "manifest.json");
  CHECK(manifest["command"] == "cover-ball");
  CHECK(manifest["schema"] == kSchema);

  CHECK(run({"cover-ball", "--dim", "2", "--widths", "const:1:1", "--out", fresh("one").string()}).code ==
        cli::kPass);
  CHECK(run({"cover-ball", "--widths", "const:1:1"}).code == cli::kUsageError);
  CHECK(run({"cover-ball", "--dim", "2", "--widths", "/nonexistent.csv"}).code == cli::kUsageError);
  CHECK(run({"cover-ball", "--dim", "2", "--widths", "const:1:1", "--normals", "random"}).code ==
        cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kPass);
}

TEST_CASE("malformed width CSV") {
  const fs::path dir = fresh("csv");
  fs::create_directories(dir);
  std::ofstream(dir / "w.csv") << "0.5\nnope\n";
  const Run r = run({"cover-ball", "--dim", "1", "--widths", (dir / "w.csv").string(), "--out", dir.string()});
  CHECK(r.code == cli::kUsageError);
  CHECK(r.err.find("nope") != std::string::npos);
}

TEST_CASE("cover-ball SVG has one stripe per slab") {
  const fs::path dir = fresh("svg");
  const Run r = run({"cover-ball", "--dim", "2", "--widths", "const:0.45:12", "--cloud-size", "2000",
                     "--samples", "2000", "--out", dir.string(), "--svg", (dir / "c.svg").string()});
  CHECK((r.code == cli::kPass || r.code == cli::kVerifiedFail));
  const std::string svg = slurp(dir / "c.svg");
  std::size_t stripes = 0;
  for (auto p = svg.find("class=\"slab\""); p != std::string::npos; p = svg.find("class=\"slab\"", p + 1)) ++stripes;
  CHECK(stripes == 12);
  CHECK(svg.find("class=\"ball\"") != std::string::npos);
}

TEST_CASE("cover-region") {
  const fs::path dir = fresh("region");
  const Run r = run({"cover-region", "--dim", "1", "--region", "0,1", "--c", "0.5", "--widths", "const:0.02",
                     "--cloud-size", "20000", "--samples", "20000", "--out", dir.string()});
  CHECK(r.code == cli::kPass);
  const json plan = read_json(dir / "plan.json");
  CHECK(plan["kind"] == "region-plan");
  CHECK(read_json(dir / "report.json")["status"] == "pass");

  const fs::path pt = fresh("point");
  CHECK(run({"cover-region", "--dim", "2", "--region", "0.3,0.3", "--widths", "const:0.01", "--cloud-size",
             "20000", "--samples", "20000", "--out", pt.string()})
            .code == cli::kPass);
  CHECK(read_json(pt / "plan.json")["balls"].size() == 1);

  CHECK(run({"cover-region", "--dim", "1", "--region", "0,1", "--c", "1.5", "--widths", "const:0.02"}).code ==
        cli::kUsageError);
  const fs::path few = fresh("few");
  CHECK(run({"cover-region", "--dim", "1", "--region", "0,1", "--widths", "const:0.02:300", "--out",
             few.string()})
            .code == cli::kExhausted);
  CHECK(read_json(few / "report.json")["kind"] == "deficit");
}

TEST_CASE("control") {
  const fs::path dir = fresh("control");
  const Run r = run({"control", "--degree", "1", "--xs", "const:3:400", "--radius", "1", "--trials", "10000",
                     "--out", dir.string(), "--csv", (dir / "pairs.csv").string()});
  CHECK(r.code == cli::kPass);
  const json v = read_json(dir / "verification.json");
  CHECK(v["maxResidual"].get<double>() <= 1 + 1e-9);
  CHECK(read_json(dir / "control.json")["certBall"]["radius"].get<double>() >= 1);
  CHECK(fs::exists(dir / "pairs.csv"));

  CHECK(run({"control", "--degree", "0", "--xs", "const:3:4"}).code == cli::kUsageError);

  const fs::path shortDir = fresh("control_short");
  CHECK(run({"control", "--degree", "2", "--xs", "const:3:5", "--radius", "0.25", "--out", shortDir.string()})
            .code == cli::kExhausted);
  const auto need = read_json(shortDir / "verification.json")["samplesRequired"].get<std::size_t>();
  const fs::path enough = fresh("control_enough");
  CHECK(run({"control", "--degree", "2", "--xs", "const:3:" + std::to_string(need), "--radius", "0.25",
             "--trials", "10000", "--out", enough.string()})
            .code == cli::kPass);
}

TEST_CASE("verify") {
  const fs::path dir = fresh("verify");
  fs::create_directories(dir);
  Covering cov;
  cov.body = Ball::unit_diameter(2);
  cov.target = cov.body;
  cov.placed = {Slab(Direction::axis(2, 0), -0.5, 0.5), Slab(Direction::axis(2, 0), 0, 0.5)};
  write_text(dir / "full.json", dump(to_json(cov)));
  CHECK(run({"verify", "--cover", (dir / "full.json").string()}).code == cli::kPass);

  cov.placed.pop_back();
  write_text(dir / "cut.json", dump(to_json(cov)));
  const Run cut = run({"verify", "--cover", (dir / "cut.json").string(), "--out", dir.string()});
  CHECK(cut.code == cli::kVerifiedFail);
  CHECK(cut.out.find("witness") != std::string::npos);
  const json report = read_json(dir / "report.json");
  CHECK(report["necessity"] == "impossible");
  CHECK_FALSE(report["witnesses"].empty());

  std::ofstream(dir / "broken.json") << "{\"schema\": \"plankforge/1\", \"slabs\": [";
  CHECK(run({"verify", "--cover", (dir / "broken.json").string()}).code == cli::kUsageError);
  std::ofstream(dir / "other.json") << "{\"schema\": \"other\"}";
  CHECK(run({"verify", "--cover", (dir / "other.json").string()}).code == cli::kUsageError);
  CHECK(run({"verify", "--cover", (dir / "full.json").string(), "--body", "ball:0.5@0"}).code ==
        cli::kUsageError);
  CHECK(run({"verify", "--cover", (dir / "full.json").string(), "--body", "box:-0.3,0.3"}).code ==
        cli::kPass);
}

TEST_CASE("manifest replay reproduces outputs byte for byte") {
  const fs::path a = fresh("replay_a"), b = fresh("replay_b");
  REQUIRE(run({"cover-ball", "--dim", "2", "--widths", "power:0.5:0.5:859", "--cloud-size", "20000",
               "--samples", "20000", "--seed", "3", "--out", a.string()})
              .code == cli::kPass);
  REQUIRE(run({"replay", "--manifest", (a / "manifest.json").string(), "--out", b.string()}).code == cli::kPass);
  CHECK(slurp(a / "cover.json") == slurp(b / "cover.json"));
  CHECK(slurp(a / "report.json") == slurp(b / "report.json"));
  CHECK(run({"replay", "--manifest", (a / "cover.json").string()}).code == cli::kUsageError);
}
