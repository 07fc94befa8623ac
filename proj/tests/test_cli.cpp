#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

const std::string kCli = ROTSURF_CLI_PATH;
const std::string kSpecs = ROTSURF_SPEC_DIR;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "rotsurf_cli_tests";
  fs::create_directories(dir);
  return dir;
}

RunResult run(const std::string& args, const std::string& env = "") {
  const fs::path out = work_dir() / "last_output.txt";
  const std::string cmd =
      env + (env.empty() ? "" : " ") + kCli + " " + args + " > " +
      out.string() + " 2>&1";
  const int rc = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out);
  std::ostringstream os;
  os << in.rdbuf();
  res.output = os.str();
  return res;
}

std::string spec(const std::string& name) { return kSpecs + "/" + name; }

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = work_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slow_curve_json() {
  std::string rows;
  for (int i = 0; i < 24; ++i) {
    const double s = 0.05 * (i - 6);
    if (i) rows += ", ";
    std::ostringstream row;
    row << "[" << s << ", " << 2.0 * s << ", 0.0, 1.0, 0.0]";
    rows += row.str();
  }
  return std::string("{\"family\": \"custom_analytic\", \"kind\": "
                     "\"elliptic\", \"s_domain\": [0.0, 0.5], \"samples\": [") +
         rows + "]}";
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("check-curve accepts the shipped specs") {
  const RunResult r = run("check-curve --spec " + spec("elliptic_circle.json"));
  CHECK_EQ(r.exit_code, 0);
  CHECK_NE(r.output.find("\"pass\": true"), std::string::npos);
  CHECK_NE(r.output.find("\"family\": \"elliptic_thm2_i\""),
           std::string::npos);
}

TEST_CASE("check-curve flags a non-unit-speed curve with exit 1") {
  const std::string path = write_file("slow_curve.json", slow_curve_json());
  const RunResult r = run("check-curve --spec " + path);
  CHECK_EQ(r.exit_code, 1);
  CHECK_NE(r.output.find("\"pass\": false"), std::string::npos);
}

TEST_CASE("input errors exit with code 1") {
  CHECK_EQ(run("check-curve --spec /nonexistent.json").exit_code, 1);
  const std::string bad = write_file("bad.json", "{not json");
  CHECK_EQ(run("invariants --spec " + bad).exit_code, 1);
  CHECK_EQ(run("verify --theorem T99").exit_code, 1);
  CHECK_EQ(run("sweep").exit_code, 1);  // missing required --spec
}

TEST_CASE("invariants reports rows for every sample") {
  const RunResult r =
      run("invariants --spec " + spec("hyperbolic_branch.json") +
          " --s-count 7");
  CHECK_EQ(r.exit_code, 0);
  CHECK_NE(r.output.find("\"rows\""), std::string::npos);
  CHECK_NE(r.output.find("\"epsilon\": -1"), std::string::npos);
}

TEST_CASE("sweep emits the documented CSV header and row count") {
  const RunResult r = run("sweep --spec " + spec("parabolic_log.json") +
                          " --s-count 6 --t-count 3");
  CHECK_EQ(r.exit_code, 0);
  CHECK_EQ(r.output.rfind(
               "t,s,L,M,N,K,H_norm_sq,dG_12,dG_13,dG_14,dG_23,dG_24,dG_34\n",
               0),
           0);
  CHECK_EQ(count_lines(r.output), 1 + 6 * 3);
}

TEST_CASE("sweep output is identical across thread counts") {
  const std::string args = "sweep --spec " + spec("elliptic_spiral.json") +
                           " --s-count 11 --t-count 5";
  const RunResult one = run(args, "ROTSURF_THREADS=1");
  const RunResult many = run(args, "ROTSURF_THREADS=4");
  CHECK_EQ(one.exit_code, 0);
  CHECK_EQ(many.exit_code, 0);
  CHECK_EQ(one.output, many.output);
}

TEST_CASE("sweep json format") {
  const RunResult r = run("sweep --spec " + spec("parabolic_log.json") +
                          " --s-count 2 --t-count 2 --format json");
  CHECK_EQ(r.exit_code, 0);
  CHECK_EQ(r.output.front(), '[');
  CHECK_NE(r.output.find("\"H_norm_sq\""), std::string::npos);
}

TEST_CASE("classify names the verdict") {
  const RunResult first =
      run("classify --spec " + spec("elliptic_circle.json"));
  CHECK_EQ(first.exit_code, 0);
  CHECK_NE(first.output.find("\"verdict\": \"first_kind\""),
           std::string::npos);

  const RunResult second =
      run("classify --spec " + spec("hyperbolic_spiral.json"));
  CHECK_EQ(second.exit_code, 0);
  CHECK_NE(second.output.find("\"verdict\": \"second_kind\""),
           std::string::npos);

  const RunResult oracle = run("classify --spec " +
                               spec("parabolic_log.json") + " --oracle");
  CHECK_EQ(oracle.exit_code, 0);
  CHECK_NE(oracle.output.find("\"verdict\": \"harmonic\""),
           std::string::npos);
  CHECK_NE(oracle.output.find("\"oracle_path\": true"), std::string::npos);
}

TEST_CASE("verify passes shipped statements and honors --format json") {
  const RunResult text = run("verify --theorem T2");
  CHECK_EQ(text.exit_code, 0);
  CHECK_EQ(text.output.rfind("[PASS] T2", 0), 0);

  const RunResult js = run("verify --theorem T5 --format json");
  CHECK_EQ(js.exit_code, 0);
  CHECK_EQ(js.output.front(), '{');
  CHECK_NE(js.output.find("\"theorem\": \"T5\""), std::string::npos);
  CHECK_NE(js.output.find("\"pass\": true"), std::string::npos);
}

TEST_CASE("verify all statements from the command line") {
  const RunResult r = run("verify --theorem all");
  CHECK_EQ(r.exit_code, 0);
  for (const char* id : {"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8",
                         "C1", "C2"}) {
    CHECK_NE(r.output.find(std::string("[PASS] ") + id), std::string::npos);
  }
}

TEST_CASE("oracle-compare exits 2 when the tolerance is impossible") {
  const std::string args = "oracle-compare --spec " +
                           spec("elliptic_circle.json") +
                           " --s-count 3 --t-count 2";
  const RunResult ok = run(args);
  CHECK_EQ(ok.exit_code, 0);
  CHECK_NE(ok.output.find("\"pass\": true"), std::string::npos);

  const RunResult strict = run(args + " --tol 1e-15");
  CHECK_EQ(strict.exit_code, 2);
  CHECK_NE(strict.output.find("\"pass\": false"), std::string::npos);
}

TEST_CASE("reruns are byte-identical") {
  const fs::path a = work_dir() / "classify_a.json";
  const fs::path b = work_dir() / "classify_b.json";
  const std::string args = "classify --spec " + spec("elliptic_spiral.json");
  CHECK_EQ(run(args + " --out " + a.string()).exit_code, 0);
  CHECK_EQ(run(args + " --out " + b.string()).exit_code, 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK_EQ(sa.str(), sb.str());
  CHECK_NE(sa.str().find("\"verdict\": \"second_kind\""), std::string::npos);
}
