#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "floqlat/cli/app.hpp"
#include "floqlat/cli/commands.hpp"
#include "floqlat/cli/config.hpp"
#include "floqlat/cli/table.hpp"
#include "json.hpp"

using namespace floqlat::cli;
namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "floqlat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "floqlat_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse_jt") {
  CHECK(parse_jt("1.5pi") == doctest::Approx(1.5 * pi));
  CHECK(parse_jt("pi") == doctest::Approx(pi));
  CHECK(parse_jt("-0.5pi") == doctest::Approx(-0.5 * pi));
  CHECK(parse_jt("0.5*pi") == doctest::Approx(0.5 * pi));
  CHECK(parse_jt("4.712") == doctest::Approx(4.712));
  CHECK_THROWS_AS(parse_jt("abc"), ValidationError);
  CHECK_THROWS_AS(parse_jt("1.5p"), ValidationError);
  CHECK_THROWS_AS(parse_jt(""), ValidationError);
  try {
    parse_jt("x", "--jt-min");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("--jt-min") != std::string::npos);
  }
}

TEST_CASE("emit formats") {
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.5 * pi) == "4.71238898038");
  CHECK(format_number(1e-20) == "1e-20");
  Table empty;
  empty.columns = {"a", "b"};
  std::ostringstream csv;
  write_csv(empty, csv);
  CHECK(csv.str() == "a,b\n");
  Table t;
  t.columns = {"x", "n", "s"};
  t.rows.push_back({-0.0, 3LL, std::string("left")});
  std::ostringstream c2, js;
  write_csv(t, c2);
  CHECK(c2.str() == "x,n,s\n0,3,left\n");
  write_json(t, nlohmann::ordered_json{{"jt", 1.5 * pi}, {"T", 1.0}}, js);
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["schema"] == 1);
  CHECK(doc["data"][0][0] == 0.0);
  CHECK(js.str().find("\"jt\": 4.71238898038469") != std::string::npos);
  CHECK(js.str().find("\"T\": 1.0") != std::string::npos);
  CHECK(js.str().find("-0") == std::string::npos);
}

TEST_CASE("pbc-spectrum CSV row count") {
  const auto path = scratch() / "f.csv";
  const auto r = run({"pbc-spectrum", "--model", "floquet", "--jt", "1.5pi", "--grid", "64",
                      "--format", "csv", "-o", path.string()});
  REQUIRE(r.code == 0);
  const auto text = slurp(path);
  CHECK(text.find('\r') == std::string::npos);
  const auto ls = lines(text);
  CHECK(ls.front() == "k_plus,k_minus,band,value");
  CHECK(ls.size() == 1 + 64 * 64 * 2);
  const auto s = run({"pbc-spectrum", "--model", "static", "--grid", "4"});
  CHECK(s.code == 0);
  CHECK(lines(s.out).size() == 1 + 16 * 4);
}

TEST_CASE("compare JSON report") {
  const auto path = scratch() / "r.json";
  const auto r = run({"compare", "--jt", "1.5pi", "--open", "x-minus", "--sites", "6", "--format",
                      "json", "-o", path.string()});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(slurp(path));
  CHECK(doc["schema"] == 1);
  CHECK(doc["meta"]["units"] == "1/T");
  CHECK(doc["meta"]["T"] == 1.0);
  CHECK(doc["meta"]["jt"].get<double>() == doctest::Approx(1.5 * pi).epsilon(1e-15));
  CHECK(doc["pbc"]["verdict"] == "pass");
  CHECK(doc["pbc"]["max_abs_dev"].get<double>() <= 1e-10);
  const double strip = doc["strip"]["max_abs_dev"].get<double>();
  CHECK(std::isfinite(strip));
  CHECK(strip > 0.0);
  CHECK(doc["data"].size() == 2);
  const auto xp = run({"compare", "--open", "x-plus", "--grid", "16"});
  REQUIRE(xp.code == 0);
  CHECK(lines(xp.out).at(2).find(",fail") != std::string::npos);
}

TEST_CASE("phase-scan minimum gap sits nearest JT = pi") {
  const auto r = run({"phase-scan", "--jt-min", "0.1pi", "--jt-max", "1.9pi", "--steps", "37",
                      "--grid", "8"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 38);
  CHECK(ls[0] == "jt,jt_over_pi,bulk_gap,gapless,floquet_edges,static_edges");
  double best = 1e9, best_jt = 0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    std::istringstream row(ls[i]);
    std::string jt, over, gap;
    std::getline(row, jt, ',');
    std::getline(row, over, ',');
    std::getline(row, gap, ',');
    if (std::stod(gap) < best) {
      best = std::stod(gap);
      best_jt = std::stod(over);
    }
  }
  CHECK(best_jt == doctest::Approx(1.0));
  CHECK(best < 1e-12);
}

TEST_CASE("edge-wavefunction and nogo-check") {
  const auto e = run({"edge-wavefunction", "--format", "json"});
  REQUIRE(e.code == 0);
  const auto doc = nlohmann::json::parse(e.out);
  CHECK(doc["census"]["floquet"]["left"] == 1);
  CHECK(doc["census"]["static"]["right"] == 1);
  CHECK(doc["data"].size() == 7 * (2 + 4));
  const auto g = run({"edge-wavefunction", "--jt", "pi", "--format", "json"});
  REQUIRE(g.code == 0);
  CHECK(nlohmann::json::parse(g.out)["census"]["floquet"] == "gapless");
  const auto n = run({"nogo-check"});
  REQUIRE(n.code == 0);
  const auto ls = lines(n.out);
  CHECK(ls.size() == 2002);
  for (std::size_t i = 1; i < ls.size(); ++i) CHECK(ls[i].find(",3,0,") != std::string::npos);
}

TEST_CASE("strip-spectrum") {
  const auto r = run({"strip-spectrum", "--model", "static", "--sites", "3", "--grid", "5",
                      "--open", "x-plus"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 1 + 5 * 12);
  const auto f = run({"strip-spectrum", "--sites", "3", "--grid", "5"});
  CHECK(lines(f.out).size() == 1 + 5 * 6);
}

TEST_CASE("determinism") {
  const auto a = scratch() / "a.json";
  const auto b = scratch() / "b.json";
  const std::vector<std::string> base{"compare", "--jt", "1.3pi", "--grid", "12", "--format", "json"};
  auto args_a = base, args_b = base;
  args_a.insert(args_a.end(), {"-o", a.string()});
  args_b.insert(args_b.end(), {"-o", b.string()});
  REQUIRE(run(args_a).code == 0);
  REQUIRE(run(args_b).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run({"edge-wavefunction"}).out == run({"edge-wavefunction"}).out);
}

TEST_CASE("validation errors exit 2 and name the flag") {
  auto expect = [](std::vector<std::string> args, const std::string& flag) {
    const auto r = run(std::move(args));
    CHECK(r.code == 2);
    CHECK_MESSAGE(r.err.find(flag) != std::string::npos, r.err);
  };
  expect({"pbc-spectrum", "--jt", "2pi"}, "--jt");
  expect({"pbc-spectrum", "--jt", "0"}, "--jt");
  expect({"pbc-spectrum", "--jt", "nonsense"}, "--jt");
  expect({"pbc-spectrum", "--grid", "1"}, "--grid");
  expect({"strip-spectrum", "--sites", "1"}, "--sites");
  expect({"pbc-spectrum", "--period", "-1"}, "--period");
  expect({"pbc-spectrum", "--format", "xml"}, "--format");
  expect({"pbc-spectrum", "--variant", "C"}, "--variant");
  expect({"strip-spectrum", "--open", "sideways"}, "--open");
  expect({"pbc-spectrum", "--model", "both"}, "--model");
  expect({"phase-scan", "--jt-min", "1.5pi", "--jt-max", "0.5pi"}, "--jt-min");
  expect({"phase-scan", "--steps", "1"}, "--steps");
  const auto unknown = run({"pbc-spectrum", "--bogus"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("I/O failure exits 1") {
  const auto r = run({"nogo-check", "--steps", "3", "-o", "/nonexistent-dir/x.csv"});
  CHECK(r.code == 1);
}

TEST_CASE("output directory override") {
  const auto dir = scratch() / "override";
  fs::create_directories(dir);
  ::setenv(kOutputDirEnv, dir.string().c_str(), 1);
  const auto r = run({"nogo-check", "--steps", "3", "-o", "n.csv"});
  ::unsetenv(kOutputDirEnv);
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "n.csv"));
  CHECK(lines(slurp(dir / "n.csv")).size() == 4);
}
