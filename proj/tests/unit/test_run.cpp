#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "vvof/cases.hpp"
#include "vvof/metrics.hpp"
#include "vvof/run.hpp"
#include "vvof/snapshot.hpp"

using namespace vvof;
namespace fs = std::filesystem;

TEST_CASE("rotation run conserves volume and writes its files") {
  CaseConfig cfg = with_grid(builtin_case("zalesak"), {32});
  cfg.t_final = 40 * cfg.dt;
  cfg.outputs.dir = (fs::temp_directory_path() / "vvof_test_run").string();
  cfg.outputs.snapshot_times = {20 * cfg.dt};
  fs::remove_all(cfg.outputs.dir);
  const RunResult r = run_case(cfg);
  CHECK(r.reason == EndReason::Completed);
  CHECK(r.steps == 40);
  REQUIRE(r.diag.rows.size() == 41);
  CHECK(r.diag.rows.front().t == 0.0);
  CHECK(r.diag.rows.back().t == doctest::Approx(cfg.t_final));
  for (const auto& row : r.diag.rows) CHECK(std::fabs(row.volume_norm - 1.0) < 1e-12);
  CHECK(r.files.size() == 4);
  for (const auto& f : r.files) CHECK(fs::exists(f));
  CHECK(fs::exists(fs::path(cfg.outputs.dir) / "zalesak_000020.vtk"));
  const Snapshot s = read_snapshot((fs::path(cfg.outputs.dir) / "zalesak_final.vtk").string());
  const ScalarField& c = s.fields.at("C");
  bool same = true;
  for (std::size_t q = 0; q < c.size(); ++q) same = same && c[q] == r.final_field[q];
  CHECK(same);
  CHECK(read_diagnostics_csv((fs::path(cfg.outputs.dir) / "zalesak_diagnostics.csv").string()).rows.size() == 41);
}

TEST_CASE("CFL violation aborts before advecting") {
  CaseConfig cfg = with_grid(builtin_case("zalesak"), {32});
  cfg.dt = 0.1;
  cfg.t_final = 0.5;
  const RunResult r = run_case(cfg);
  CHECK(r.aborted());
  CHECK(r.abort_step == 0);
  CHECK(r.steps == 0);
  CHECK(r.message.find("CFL") != std::string::npos);
  bool same = true;
  for (std::size_t q = 0; q < r.initial.size(); ++q) same = same && r.initial[q] == r.final_field[q];
  CHECK(same);
}

TEST_CASE("hooks can stop a run") {
  CaseConfig cfg = with_grid(builtin_case("zalesak"), {32});
  int calls = 0;
  RunHooks h;
  h.on_step = [&](const StepView& v) {
    ++calls;
    CHECK(v.step == calls);
    return v.step < 5;
  };
  const RunResult r = run_case(cfg, h);
  CHECK(r.reason == EndReason::Stopped);
  CHECK(r.steps == 5);
  CHECK(calls == 5);
}

TEST_CASE("curvature flow shrinks a disc and reports kappa_bar") {
  CaseConfig cfg = with_grid(builtin_case("pointed-star"), {64});
  cfg.t_final = 10 * cfg.dt;
  const RunResult r = run_case(cfg);
  REQUIRE(r.reason == EndReason::Completed);
  CHECK(r.diag.rows.back().energy < r.diag.rows.front().energy);
}

TEST_CASE("the RP run tracks a shrinking radius") {
  CaseConfig cfg = with_grid(builtin_case("rp-collapse"), {24});
  const RunResult r = run_case(cfg);
  CHECK((r.reason == EndReason::Completed || r.reason == EndReason::RpCollapse));
  CHECK(r.diag.rows.back().rp_radius < 0.5 * r.diag.rows.front().rp_radius);
  CHECK(r.diag.rows.back().volume_norm > 1.0);
}
