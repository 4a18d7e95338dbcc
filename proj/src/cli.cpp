#include "vvof/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "vvof/cases.hpp"
#include "vvof/config.hpp"
#include "vvof/metrics.hpp"
#include "vvof/run.hpp"

namespace vvof {

std::string default_output_dir() {
  const char* env = std::getenv("VVOF_OUT");
  return env && *env ? env : "vvof_out";
}

namespace {

std::vector<int> parse_counts(const std::string& s) {
  std::vector<int> counts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      counts.push_back(n);
    } catch (const std::exception&) {
      throw ConfigError("--grid/--grids: '" + tok + "' is not an integer");
    }
  }
  if (counts.empty()) throw ConfigError("--grid/--grids: empty list");
  return counts;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int report(const RunResult& r, std::ostream& out, std::ostream& err) {
  const DiagRecord& last = r.diag.rows.back();
  out << "steps " << r.steps << ", t " << num(last.t) << ", end " << to_string(r.reason) << '\n';
  out << "volume_norm " << num(last.volume_norm) << ", energy " << num(last.energy) << ", wisps " << last.wisps
      << '\n';
  for (const auto& f : r.files) out << "wrote " << f << '\n';
  if (r.aborted()) {
    err << "error: run aborted: " << r.message << '\n';
    return kExitRuntime;
  }
  if (!r.message.empty()) out << r.message << '\n';
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variational volume-of-fluid solver and benchmark runner", "vvof"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List built-in case ids");

  std::string config_path, run_out;
  auto* run = app.add_subcommand("run", "Run a JSON case description");
  run->add_option("config", config_path, "Config file")->required();
  run->add_option("--out", run_out, "Output directory");

  std::string case_id, grid, case_out;
  double dt = 0.0, t_final = -1.0;
  bool desk = false;
  auto* cs = app.add_subcommand("case", "Run a built-in case");
  cs->add_option("id", case_id, "Case id")->required();
  cs->add_option("--grid", grid, "Cells per axis: N or N,N[,N]");
  cs->add_option("--dt", dt, "Time step");
  cs->add_option("--t-final", t_final, "End time");
  cs->add_option("--out", case_out, "Output directory");
  cs->add_flag("--desk", desk, "Use the reduced-resolution variant");

  std::string conv_id, grids, conv_out;
  double conv_t_final = -1.0;
  auto* conv = app.add_subcommand("convergence", "L1 error and order over a refinement series");
  conv->add_option("id", conv_id, "Case id")->required();
  conv->add_option("--grids", grids, "Comma-separated doubling series, e.g. 32,64,128")->required();
  conv->add_option("--t-final", conv_t_final, "End time");
  conv->add_option("--out", conv_out, "Output directory");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (list->parsed()) {
      for (const auto& id : list_cases()) out << id << '\n';
      return kExitOk;
    }
    if (run->parsed()) {
      CaseConfig cfg = parse_config(config_path);
      if (!run_out.empty()) {
        cfg.outputs.dir = run_out;
      } else if (cfg.outputs.dir.empty()) {
        cfg.outputs.dir = (std::filesystem::path(default_output_dir()) / cfg.name).string();
      }
      return report(run_case(cfg), out, err);
    }
    if (cs->parsed()) {
      CaseConfig cfg = builtin_case(case_id, desk);
      if (!grid.empty()) cfg = with_grid(cfg, parse_counts(grid));
      if (dt > 0.0) cfg.dt = dt;
      if (cs->count("--dt") && !(dt > 0.0)) throw ConfigError("--dt must be positive");
      if (t_final >= 0.0) cfg.t_final = t_final;
      cfg.outputs.dir = case_out.empty() ? (std::filesystem::path(default_output_dir()) / cfg.name).string()
                                         : case_out;
      return report(run_case(cfg), out, err);
    }
    if (conv->parsed()) {
      const auto ns = parse_counts(grids);
      const CaseConfig base = builtin_case(conv_id);
      std::vector<std::pair<int, double>> errors;
      std::vector<double> dts;
      for (int n : ns) {
        CaseConfig cfg = with_grid(base, {n});
        if (conv_t_final >= 0.0) cfg.t_final = conv_t_final;
        cfg.outputs.dir.clear();
        const RunResult r = run_case(cfg);
        if (r.aborted()) {
          err << "error: run at N = " << n << " aborted: " << r.message << '\n';
          return kExitRuntime;
        }
        errors.emplace_back(n, l1_error(r.final_field, r.initial));
        dts.push_back(cfg.dt);
      }
      std::vector<double> orders = convergence_order(errors);
      const std::string dir = conv_out.empty()
                                  ? (std::filesystem::path(default_output_dir()) / (conv_id + "_convergence")).string()
                                  : conv_out;
      std::filesystem::create_directories(dir);
      const std::string csv = (std::filesystem::path(dir) / "convergence.csv").string();
      std::ofstream f(csv);
      if (!f) throw std::runtime_error("cannot open '" + csv + "' for writing");
      f << "n,dt,l1,order\n";
      out << "N        dt            L1            order\n";
      for (std::size_t q = 0; q < errors.size(); ++q) {
        char line[128];
        const std::string ord = q == 0 ? "-" : num(orders[q - 1]);
        std::snprintf(line, sizeof line, "%-8d %-13.6g %-13.6g %s\n", errors[q].first, dts[q], errors[q].second,
                      ord.c_str());
        out << line;
        char row[128];
        std::snprintf(row, sizeof row, "%d,%.17g,%.17g,%s\n", errors[q].first, dts[q], errors[q].second,
                      q == 0 ? "" : num(orders[q - 1]).c_str());
        f << row;
      }
      out << "wrote " << csv << '\n';
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitConfig;
}

}  // namespace vvof
