#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vvof/cases.hpp"
#include "vvof/cli.hpp"

using namespace vvof;
namespace fs = std::filesystem;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out cli(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int code = cli_main(args, o, e);
  return {code, o.str(), e.str()};
}

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / "vvof_test_cli";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("list prints every case id") {
  const Out r = cli({"list"});
  CHECK(r.code == kExitOk);
  std::string want;
  for (const auto& id : list_cases()) want += id + "\n";
  CHECK(r.out == want);
}

TEST_CASE("usage errors exit 1") {
  CHECK(cli({}).code == kExitConfig);
  CHECK(cli({"frobnicate"}).code == kExitConfig);
  CHECK(cli({"case"}).code == kExitConfig);
  CHECK(cli({"case", "nope"}).code == kExitConfig);
  CHECK(cli({"case", "zalesak", "--grid", "x"}).code == kExitConfig);
  CHECK(cli({"case", "zalesak", "--dt", "-1"}).code == kExitConfig);
  CHECK(cli({"run", "/nonexistent/case.json"}).code == kExitConfig);
  CHECK(cli({"convergence", "zalesak"}).code == kExitConfig);
}

TEST_CASE("config errors exit 1 and name the JSON path") {
  const fs::path p = scratch() / "bad.json";
  std::ofstream(p) << R"({"case": "zalesak", "outputs": {"every": 3}})";
  const Out r = cli({"run", p.string()});
  CHECK(r.code == kExitConfig);
  CHECK(r.err.find("$.outputs.every") != std::string::npos);
}

TEST_CASE("case with overrides writes into --out") {
  const fs::path d = scratch() / "case";
  fs::remove_all(d);
  const Out r = cli({"case", "zalesak", "--grid", "32", "--dt", "0.001", "--t-final", "0.01", "--out", d.string()});
  CHECK(r.code == kExitOk);
  CHECK(fs::exists(d / "zalesak_final.vtk"));
  CHECK(fs::exists(d / "zalesak_diagnostics.csv"));
  CHECK(r.out.find("steps 10") != std::string::npos);
}

TEST_CASE("runtime abort exits 2") {
  const Out r = cli({"case", "zalesak", "--grid", "32", "--dt", "0.1", "--t-final", "0.5", "--out",
                     (scratch() / "abort").string()});
  CHECK(r.code == kExitRuntime);
  CHECK(r.err.find("CFL") != std::string::npos);
}

TEST_CASE("run honours VVOF_OUT") {
  const fs::path root = scratch() / "env";
  fs::remove_all(root);
  const fs::path p = scratch() / "ok.json";
  std::ofstream(p) << R"({"case": "zalesak", "grid": 32, "t_final": 0.005})";
  ::setenv("VVOF_OUT", root.string().c_str(), 1);
  CHECK(default_output_dir() == root.string());
  const Out r = cli({"run", p.string()});
  ::unsetenv("VVOF_OUT");
  CHECK(r.code == kExitOk);
  CHECK(fs::exists(root / "zalesak" / "zalesak_diagnostics.csv"));
  CHECK(default_output_dir() == "vvof_out");
}

TEST_CASE("convergence writes a table") {
  const fs::path d = scratch() / "conv";
  fs::remove_all(d);
  const Out r = cli({"convergence", "zalesak", "--grids", "16,32", "--t-final", "0.05", "--out", d.string()});
  CHECK(r.code == kExitOk);
  std::ifstream in(d / "convergence.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,dt,l1,order");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 2);
}
