// Command-line front end: machine-readable JSON/CSV output for the bound,
// the surfaces, critical points, the extreme-point sweep, and the full
// verification suite. Exit codes: 0 success, 1 verification failure,
// 2 argument error, 3 I/O error.

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zalcman/zalcman.h"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitArgument = 2;
constexpr int kExitIo = 3;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json make_envelope(const std::string& command, ordered_json params_echo,
                           ordered_json payload) {
  ordered_json env;
  env["schema_version"] = "1";
  env["command"] = command;
  env["params_echo"] = std::move(params_echo);
  env["payload"] = std::move(payload);
  env["generated_at"] = utc_timestamp();
  return env;
}

// csv rendering of a flat payload: one header line, one value row
void print_csv(const ordered_json& payload) {
  std::string head, row;
  bool first = true;
  for (auto it = payload.begin(); it != payload.end(); ++it) {
    if (!it.value().is_primitive()) continue;
    if (!first) {
      head += ',';
      row += ',';
    }
    first = false;
    head += it.key();
    if (it.value().is_number_float())
      row += fmt17(it.value().get<double>());
    else if (it.value().is_string())
      row += it.value().get<std::string>();
    else
      row += it.value().dump();
  }
  std::cout << head << "\n" << row << "\n";
}

void emit(const ordered_json& env, const std::string& format) {
  if (format == "csv")
    print_csv(env["payload"]);
  else
    std::cout << env.dump(2) << "\n";
}

int fail_status(zal_status status) {
  std::cerr << "error: " << zal_last_error() << " (" << zal_status_name(status)
            << ")\n";
  return kExitArgument;
}

ordered_json thresholds_json(const zal_thresholds& t) {
  ordered_json j;
  j["lambda_small_max"] = t.lambda_small_max;
  j["lambda_large_min"] = t.lambda_large_min;
  j["aux_a"] = t.aux_a;
  j["aux_b_nminus"] = t.aux_b_nminus;
  j["aux_b_nplus"] = t.aux_b_nplus;
  j["aux_b"] = t.aux_b;
  j["t_6n2"] = t.t_6n2;
  j["t_5n1"] = t.t_5n1;
  j["t_4n2"] = t.t_4n2;
  j["t_8n"] = t.t_8n;
  j["t_small_mirror"] = t.t_small_mirror;
  return j;
}

int cmd_bound(int n, double lambda, const std::string& format) {
  double bound = 0.0;
  zal_regime regime{};
  zal_thresholds th{};
  if (zal_status s = zal_theorem_bound(n, lambda, &bound); s != ZAL_OK)
    return fail_status(s);
  if (zal_status s = zal_classify(n, lambda, &regime); s != ZAL_OK)
    return fail_status(s);
  if (zal_status s = zal_compute_thresholds(n, &th); s != ZAL_OK)
    return fail_status(s);

  ordered_json payload;
  payload["regime"] = zal_regime_name(regime);
  payload["bound"] = bound;
  payload["thresholds"] = thresholds_json(th);
  emit(make_envelope("bound", {{"n", n}, {"lambda", lambda}}, payload), format);
  return kExitOk;
}

int cmd_surface(int n, double lambda, const std::string& which, int grid,
                const std::string& out_path, const std::string& format) {
  std::string csv = "u,v,value\n";
  double best = -1e308, worst = 1e308;
  double best_u = 0, best_v = 0, worst_u = 0, worst_v = 0;
  const bool use_f = which == "F";
  for (int i = 0; i < grid; ++i) {
    const double u = std::lerp(-1.0, 1.0, double(i) / (grid - 1));
    for (int j = 0; j < grid; ++j) {
      const double v = std::lerp(-1.0, 1.0, double(j) / (grid - 1));
      double value = 0.0;
      const zal_status s = use_f ? zal_eval_surface_f(n, lambda, u, v, &value)
                                 : zal_eval_surface_g(n, lambda, u, v, &value);
      if (s != ZAL_OK) return fail_status(s);
      csv += fmt17(u) + "," + fmt17(v) + "," + fmt17(value) + "\n";
      if (value > best) {
        best = value;
        best_u = u;
        best_v = v;
      }
      if (value < worst) {
        worst = value;
        worst_u = u;
        worst_v = v;
      }
    }
  }

  if (out_path.empty()) {
    std::cout << csv;
    return kExitOk;
  }
  std::ofstream ofs(out_path);
  if (!ofs || !(ofs << csv) || !ofs.flush()) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitIo;
  }
  ordered_json payload;
  payload["which"] = which;
  payload["rows"] = grid * grid;
  payload["out"] = out_path;
  payload["min"] = ordered_json{{"u", worst_u}, {"v", worst_v}, {"value", worst}};
  payload["max"] = ordered_json{{"u", best_u}, {"v", best_v}, {"value", best}};
  emit(make_envelope("surface",
                     {{"n", n}, {"lambda", lambda}, {"which", which}, {"grid", grid}},
                     payload),
       format);
  return kExitOk;
}

int cmd_critical(int n, double lambda, const std::string& format) {
  zal_critical_point points[3];
  int count = 0;
  char note[160] = {0};
  if (zal_status s = zal_critical_points(n, lambda, points, 3, &count, note,
                                         sizeof note);
      s != ZAL_OK)
    return fail_status(s);

  if (format == "csv") {
    std::cout << "u,v,f_value,gradient_residual,kind\n";
    for (int i = 0; i < count; ++i)
      std::cout << fmt17(points[i].u) << "," << fmt17(points[i].v) << ","
                << fmt17(points[i].f_value) << ","
                << fmt17(points[i].gradient_residual) << ","
                << (points[i].is_interior_pair ? "interior_pair" : "origin") << "\n";
    return kExitOk;
  }

  ordered_json list = ordered_json::array();
  for (int i = 0; i < count; ++i) {
    list.push_back(ordered_json{{"u", points[i].u},
                                {"v", points[i].v},
                                {"f_value", points[i].f_value},
                                {"gradient_residual", points[i].gradient_residual},
                                {"kind", points[i].is_interior_pair ? "interior_pair"
                                                                    : "origin"}});
  }
  ordered_json payload;
  payload["count"] = count;
  payload["points"] = std::move(list);
  payload["regime_note"] = note;
  emit(make_envelope("critical", {{"n", n}, {"lambda", lambda}}, payload), format);
  return kExitOk;
}

int cmd_sweep(int n, double lambda, int grid, const std::string& format) {
  zal_sweep_result sw{};
  if (zal_status s = zal_sweep_extreme_points(n, lambda, grid, &sw); s != ZAL_OK)
    return fail_status(s);
  double bound = 0.0;
  if (zal_status s = zal_theorem_bound(n, lambda, &bound); s != ZAL_OK)
    return fail_status(s);

  ordered_json payload;
  payload["sweep_max"] = sw.max_value;
  payload["argmax_s"] = sw.s;
  payload["argmax_t"] = sw.t;
  payload["bound"] = bound;
  payload["gap"] = bound - sw.max_value;
  emit(make_envelope("sweep", {{"n", n}, {"lambda", lambda}, {"grid", grid}}, payload),
       format);
  return kExitOk;
}

int cmd_verify(int n_min, int n_max, int lambda_samples, int grid, uint64_t seed,
               const std::string& out_path, const std::string& format) {
  zal_verify_config cfg{};
  zal_verify_config_default(&cfg);
  cfg.n_min = n_min;
  cfg.n_max = n_max;
  cfg.lambda_samples = lambda_samples;
  cfg.grid = grid;
  cfg.seed = seed;

  zal_verify_report* rep = nullptr;
  if (zal_status s = zal_verify_run(&cfg, &rep); s != ZAL_OK) return fail_status(s);

  const int record_count = zal_report_record_count(rep);
  const int failures = zal_report_failure_count(rep);

  ordered_json records = ordered_json::array();
  std::map<std::string, int> counts;
  for (int i = 0; i < record_count; ++i) {
    zal_check_record r{};
    zal_report_record(rep, i, &r);
    ordered_json jr;
    jr["check_id"] = r.check_id;
    jr["n"] = r.n;
    if (std::isnan(r.lambda))
      jr["lambda"] = nullptr;
    else
      jr["lambda"] = r.lambda;
    jr["passed"] = r.passed != 0;
    jr["margin"] = r.margin;
    ordered_json details;
    const int dc = zal_report_detail_count(rep, i);
    for (int d = 0; d < dc; ++d) {
      const char* key = nullptr;
      double value = 0.0;
      zal_report_detail(rep, i, d, &key, &value);
      if (std::isfinite(value))
        details[key] = value;
      else
        details[key] = fmt17(value);
    }
    jr["details"] = std::move(details);
    records.push_back(std::move(jr));
    ++counts[r.check_id];
  }

  ordered_json flags = ordered_json::array();
  for (int i = 0; i < zal_report_flag_count(rep); ++i)
    flags.push_back(zal_report_flag(rep, i));

  ordered_json summary;
  summary["records"] = record_count;
  summary["failures"] = failures;
  ordered_json by_id;
  for (const auto& [id, k] : counts) by_id[id] = k;
  summary["by_check_id"] = std::move(by_id);

  ordered_json payload;
  payload["summary"] = std::move(summary);
  payload["flags"] = std::move(flags);
  payload["config"] = ordered_json{{"n_min", n_min},
                                   {"n_max", n_max},
                                   {"lambda_samples", lambda_samples},
                                   {"grid", grid},
                                   {"seed", seed}};
  payload["records"] = std::move(records);

  if (!out_path.empty()) {
    std::ofstream ofs(out_path);
    if (!ofs || !(ofs << zal_report_text(rep)) || !ofs.flush()) {
      std::cerr << "error: cannot write " << out_path << "\n";
      zal_report_free(rep);
      return kExitIo;
    }
    std::ofstream jfs(out_path + ".json");
    if (!jfs || !(jfs << payload.dump(2) << "\n") || !jfs.flush()) {
      std::cerr << "error: cannot write " << out_path << ".json\n";
      zal_report_free(rep);
      return kExitIo;
    }
  }
  zal_report_free(rep);

  emit(make_envelope("verify",
                     {{"n_min", n_min},
                      {"n_max", n_max},
                      {"lambda_samples", lambda_samples},
                      {"grid", grid},
                      {"seed", seed}},
                     payload),
       format);
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Zalcman functional bounds on close-to-convex functions"};
  app.require_subcommand(1);

  int n = 3, grid = 0, n_min = 3, n_max = 10, lambda_samples = 15;
  double lambda = 1.0;
  std::string format = "json", which = "F", out_path;
  uint64_t seed = 20260808ULL;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", seed, "seed for any sampled checks");
  };

  CLI::App* bound = app.add_subcommand("bound", "three-branch bound and regime");
  bound->add_option("--n", n, "coefficient index, n >= 3")->required();
  bound->add_option("--lambda", lambda, "functional weight, lambda > 0")->required();
  add_format(bound);

  CLI::App* surface = app.add_subcommand("surface", "sample F or G on a lattice");
  surface->add_option("--n", n)->required();
  surface->add_option("--lambda", lambda)->required();
  surface->add_option("--which", which, "F or G")->check(CLI::IsMember({"F", "G"}));
  surface->add_option("--grid", grid, "points per axis, >= 2")->required();
  surface->add_option("--out", out_path, "CSV path (stdout when omitted)");
  add_format(surface);

  CLI::App* critical = app.add_subcommand("critical", "closed-form critical points");
  critical->add_option("--n", n)->required();
  critical->add_option("--lambda", lambda)->required();
  add_format(critical);

  CLI::App* sweep = app.add_subcommand("sweep", "extreme-point maximization");
  sweep->add_option("--n", n)->required();
  sweep->add_option("--lambda", lambda)->required();
  sweep->add_option("--grid", grid, "lattice points per axis, >= 8");
  add_format(sweep);

  CLI::App* verify = app.add_subcommand("verify", "run the full check suite");
  verify->add_option("--n-min", n_min)->required();
  verify->add_option("--n-max", n_max)->required();
  verify->add_option("--lambda-samples", lambda_samples, "samples per regime");
  verify->add_option("--grid", grid, "oracle/sweep resolution");
  verify->add_option("--out", out_path, "report path (JSON mirror at <out>.json)");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgument;
  }

  if (bound->parsed()) return cmd_bound(n, lambda, format);
  if (surface->parsed()) {
    if (grid < 2) {
      std::cerr << "error: surface grid must be >= 2\n";
      return kExitArgument;
    }
    return cmd_surface(n, lambda, which, grid, out_path, format);
  }
  if (critical->parsed()) return cmd_critical(n, lambda, format);
  if (sweep->parsed()) {
    if (grid == 0) grid = 512;
    if (grid < 8) {
      std::cerr << "error: sweep grid must be >= 8\n";
      return kExitArgument;
    }
    return cmd_sweep(n, lambda, grid, format);
  }
  if (verify->parsed()) {
    if (grid == 0) grid = 512;
    if (n_min < 3 || n_min > n_max) {
      std::cerr << "error: need 3 <= n-min <= n-max\n";
      return kExitArgument;
    }
    if (lambda_samples < 0) {
      std::cerr << "error: lambda-samples must be >= 0\n";
      return kExitArgument;
    }
    if (grid < 8) {
      std::cerr << "error: verify grid must be >= 8\n";
      return kExitArgument;
    }
    return cmd_verify(n_min, n_max, lambda_samples, grid, seed, out_path, format);
  }
  return kExitArgument;
}
