// Integration checks for the command-line tool. Takes the CLI path as argv[1],
// runs it as a subprocess and inspects exit codes and output.
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

int g_failures = 0;

#define CHECK_MSG(cond, msg)                                               \
  do {                                                                     \
    if (!(cond)) {                                                         \
      ++g_failures;                                                        \
      std::cerr << "FAIL " << __LINE__ << ": " << msg << "\n";             \
    }                                                                      \
  } while (0)

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count_lines(const std::string& s) {
  int k = 0;
  for (char c : s)
    if (c == '\n') ++k;
  return k;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-cli>\n";
    return 2;
  }
  const std::string cli = std::string("'") + argv[1] + "'";

  {  // bound: value, regime, thresholds, envelope shape
    const RunResult r = run(cli + " bound --n 3 --lambda 1 2>/dev/null");
    CHECK_MSG(r.exit_code == 0, "bound exit code " << r.exit_code);
    const auto env = nlohmann::json::parse(r.out);
    CHECK_MSG(env["schema_version"] == "1", "schema_version");
    CHECK_MSG(env["command"] == "bound", "command echo");
    CHECK_MSG(env["params_echo"]["n"] == 3, "params echo n");
    const double bound = env["payload"]["bound"].get<double>();
    CHECK_MSG(std::fabs(bound - 5.0980762113533157) < 1e-12, "bound value " << bound);
    CHECK_MSG(env["payload"]["regime"] == "MiddleLambda", "regime name");
    CHECK_MSG(std::fabs(env["payload"]["thresholds"]["lambda_small_max"].get<double>() -
                        6.0 / 7.0) < 1e-15,
              "thresholds present");
    CHECK_MSG(!env["generated_at"].get<std::string>().empty(), "timestamp");
    // round trip: parse(serialize(parse(x))) is identical
    const auto reparsed = nlohmann::json::parse(env.dump());
    CHECK_MSG(reparsed == env, "envelope round trip");
  }

  {  // bound in csv format
    const RunResult r = run(cli + " bound --n 4 --lambda 1 --format csv 2>/dev/null");
    CHECK_MSG(r.exit_code == 0, "csv bound exit");
    CHECK_MSG(r.out.find("regime,bound") != std::string::npos, "csv header: " << r.out);
    CHECK_MSG(r.out.find("LargeLambda,9") != std::string::npos, "csv row: " << r.out);
  }

  {  // precondition violations exit 2 and cite the constraint
    const RunResult r = run(cli + " bound --n 2 --lambda 1 2>&1");
    CHECK_MSG(r.exit_code == 2, "n=2 exit code " << r.exit_code);
    CHECK_MSG(r.out.find("n must be >= 3") != std::string::npos, "n=2 message");
    CHECK_MSG(run(cli + " bound --n 3 --lambda nope 2>/dev/null").exit_code == 2,
              "unparseable lambda");
    CHECK_MSG(run(cli + " nonsense 2>/dev/null").exit_code == 2, "unknown command");
  }

  {  // surface to stdout: header + grid^2 rows, the (0,0) row carries 4(n-1)
    const RunResult r = run(cli + " surface --n 3 --lambda 1 --which F --grid 3 2>/dev/null");
    CHECK_MSG(r.exit_code == 0, "surface exit");
    CHECK_MSG(count_lines(r.out) == 10, "surface rows " << count_lines(r.out));
    CHECK_MSG(r.out.find("u,v,value") == 0, "surface header");
    CHECK_MSG(r.out.find("0,0,8") != std::string::npos, "origin row: " << r.out);
  }

  {  // surface to a file, envelope summarizes extrema
    const std::string path = "/tmp/zalcman_surface_test.csv";
    const RunResult r = run(cli + " surface --n 3 --lambda 0.5 --which G --grid 101 --out " +
                            path + " 2>/dev/null");
    CHECK_MSG(r.exit_code == 0, "surface file exit");
    const auto env = nlohmann::json::parse(r.out);
    CHECK_MSG(env["payload"]["rows"] == 101 * 101, "row count");
    CHECK_MSG(std::fabs(env["payload"]["max"]["value"].get<double>()) < 1e-12,
              "G max is 0");
    CHECK_MSG(std::fabs(env["payload"]["max"]["u"].get<double>()) < 1e-12, "max at u=0");
    std::ifstream ifs(path);
    CHECK_MSG(ifs.good(), "file written");
    std::string header;
    std::getline(ifs, header);
    CHECK_MSG(header == "u,v,value", "file header");
    std::remove(path.c_str());
  }

  {  // degenerate grid and unwritable path
    CHECK_MSG(run(cli + " surface --n 3 --lambda 1 --which F --grid 1 2>/dev/null").exit_code == 2,
              "grid 1 rejected");
    CHECK_MSG(run(cli + " surface --n 3 --lambda 1 --which F --grid 3 --out /nonexistent-dir/x.csv 2>/dev/null")
                      .exit_code == 3,
              "unwritable path exit 3");
  }

  {  // critical: three points in the middle window, one outside
    const RunResult mid = run(cli + " critical --n 3 --lambda 1 2>/dev/null");
    CHECK_MSG(mid.exit_code == 0, "critical exit");
    const auto env = nlohmann::json::parse(mid.out);
    CHECK_MSG(env["payload"]["count"] == 3, "three points");
    const auto& pts = env["payload"]["points"];
    CHECK_MSG(pts[0]["kind"] == "origin", "origin first");
    CHECK_MSG(std::fabs(std::fabs(pts[1]["u"].get<double>()) - 0.2588190) < 1e-5,
              "pair u");
    CHECK_MSG(std::fabs(std::fabs(pts[1]["v"].get<double>()) - 0.7071068) < 1e-5,
              "pair v");
    CHECK_MSG(std::fabs(pts[1]["f_value"].get<double>() - 8.3923048) < 1e-5, "pair F");

    const auto one = nlohmann::json::parse(
        run(cli + " critical --n 3 --lambda 1.25 2>/dev/null").out);
    CHECK_MSG(one["payload"]["count"] == 1, "origin only above the flip");
    const auto outside = nlohmann::json::parse(
        run(cli + " critical --n 3 --lambda 3 2>/dev/null").out);
    CHECK_MSG(outside["payload"]["count"] == 1, "origin only outside the window");
    CHECK_MSG(outside["payload"]["regime_note"].get<std::string>().find("window") !=
                  std::string::npos,
              "window note");
  }

  {  // sweep payload
    const RunResult r = run(cli + " sweep --n 3 --lambda 2 --grid 512 2>/dev/null");
    CHECK_MSG(r.exit_code == 0, "sweep exit");
    const auto env = nlohmann::json::parse(r.out);
    CHECK_MSG(std::fabs(env["payload"]["sweep_max"].get<double>() - 13.0) < 1e-9,
              "sweep max");
    CHECK_MSG(std::fabs(env["payload"]["argmax_s"].get<double>() - 3.14159265) < 1e-6,
              "argmax s");
    CHECK_MSG(std::fabs(env["payload"]["argmax_t"].get<double>()) < 1e-6, "argmax t");
    CHECK_MSG(std::fabs(env["payload"]["bound"].get<double>() - 13.0) < 1e-12, "bound");
    CHECK_MSG(std::fabs(env["payload"]["gap"].get<double>()) < 1e-9, "gap");
    CHECK_MSG(run(cli + " sweep --n 3 --lambda 2 --grid 4 2>/dev/null").exit_code == 2,
              "tiny sweep grid rejected");
    // middle regime: the sweep closes in on the bound
    const auto mid = nlohmann::json::parse(
        run(cli + " sweep --n 3 --lambda 1 --grid 1024 2>/dev/null").out);
    CHECK_MSG(std::fabs(mid["payload"]["gap"].get<double>()) < 1e-3, "middle gap");
    // small regime: stays below 2n-1
    const auto small = nlohmann::json::parse(
        run(cli + " sweep --n 3 --lambda 0.5 --grid 512 2>/dev/null").out);
    CHECK_MSG(small["payload"]["sweep_max"].get<double>() <= 5.0 + 1e-6, "small cap");
  }

  {  // critical in csv format emits one row per point
    const RunResult r = run(cli + " critical --n 3 --lambda 1 --format csv 2>/dev/null");
    CHECK_MSG(r.exit_code == 0, "critical csv exit");
    CHECK_MSG(r.out.find("u,v,f_value,gradient_residual,kind") == 0, "critical csv header");
    CHECK_MSG(count_lines(r.out) == 4, "critical csv rows");
    CHECK_MSG(r.out.find("origin") != std::string::npos &&
                  r.out.find("interior_pair") != std::string::npos,
              "critical csv kinds");
  }

  {  // minimal verify run: exit 0, flag present, report files written
    const std::string path = "/tmp/zalcman_report_test.txt";
    const RunResult r = run(cli + " verify --n-min 3 --n-max 3 --lambda-samples 1 --grid 128 --out " +
                            path + " 2>/dev/null");
    CHECK_MSG(r.exit_code == 0, "verify exit " << r.exit_code);
    const auto env = nlohmann::json::parse(r.out);
    CHECK_MSG(env["payload"]["summary"]["failures"] == 0, "no failures");
    CHECK_MSG(env["payload"]["flags"].size() == 1, "flag count");
    CHECK_MSG(env["payload"]["flags"][0].get<std::string>().find(
                  "corollary_n4_range_discrepancy") == 0,
              "flag name");
    CHECK_MSG(env["payload"]["records"].size() ==
                  env["payload"]["summary"]["records"].get<std::size_t>(),
              "record mirror");
    std::ifstream ifs(path);
    std::stringstream ss;
    ss << ifs.rdbuf();
    CHECK_MSG(ss.str().find("check_id=chain n=3") == 0, "text report");
    std::ifstream jfs(path + ".json");
    CHECK_MSG(jfs.good(), "json mirror exists");
    const auto mirror = nlohmann::json::parse(jfs);
    CHECK_MSG(mirror["records"].size() == env["payload"]["records"].size(),
              "mirror record count");
    std::remove(path.c_str());
    std::remove((path + ".json").c_str());
  }

  {  // verify argument errors
    CHECK_MSG(run(cli + " verify --n-min 5 --n-max 3 2>/dev/null").exit_code == 2,
              "bad range");
    CHECK_MSG(run(cli + " verify --n-min 2 --n-max 3 2>/dev/null").exit_code == 2,
              "n-min below 3");
  }

  if (g_failures == 0) {
    std::cout << "test_cli: all checks passed\n";
    return 0;
  }
  std::cerr << "test_cli: " << g_failures << " failures\n";
  return 1;
}
