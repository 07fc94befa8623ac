#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "rotsurf/classifier.hpp"
#include "rotsurf/errors.hpp"
#include "rotsurf/gauss_map.hpp"
#include "rotsurf/serialization.hpp"
#include "rotsurf/theorem_checks.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rotsurf;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerificationFailure = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InvalidInputError("cannot write '" + out_path + "'");
  out << text;
}

unsigned thread_budget() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("ROTSURF_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256)
      n = static_cast<unsigned>(v);
    else
      throw InvalidInputError("ROTSURF_THREADS must be an integer in [1,256]");
  }
  return n;
}

// Index-parallel map with deterministic gather: worker w handles the
// contiguous block of indices [w*chunk, ...); results land by index.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, const Fn& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = static_cast<std::size_t>(w) * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

SurfaceSpec load_surface(const std::string& path) {
  return surface_spec_from_string(read_input(path));
}

// ---- check-curve ----------------------------------------------------------

// Accepts either a bare curve spec or a surface spec (whose curve is used).
CurveSpec parse_curve_or_surface(const std::string& text) {
  const nlohmann::json probe = nlohmann::json::parse(text, nullptr, false);
  if (probe.is_object() && probe.contains("curve"))
    return surface_spec_from_string(text).curve;
  return curve_spec_from_string(text);
}

int run_check_curve(const std::string& spec_path, int s_count, double tol,
                    const std::string& out_path) {
  const CurveSpec curve = parse_curve_or_surface(read_input(spec_path));
  const std::vector<double> grid = uniform_grid(curve.s_domain, s_count);
  const UnitSpeedReport us = check_unit_speed(curve, grid, tol);
  bool positive = true, nondegenerate = true;
  std::optional<double> eps;
  for (double s : grid) {
    const AdmissibilityFlags flags = admissibility(curve, s);
    positive = positive && flags.positive_radius;
    nondegenerate = nondegenerate && flags.nondegenerate_normal;
    if (flags.epsilon && !eps) eps = flags.epsilon;
  }
  const bool pass = us.pass && positive && nondegenerate;
  ordered_json out;
  out["family"] = family_token(curve.family);
  out["kind"] = kind_token(curve.kind());
  out["unit_speed"] = {{"max_residual", us.max_residual},
                       {"worst_s", us.worst_s},
                       {"tol", us.tol},
                       {"pass", us.pass}};
  ordered_json adm;
  adm["positive_radius"] = positive;
  adm["nondegenerate_normal"] = nondegenerate;
  if (eps)
    adm["epsilon"] = *eps;
  else
    adm["epsilon"] = nullptr;
  out["admissibility"] = std::move(adm);
  out["pass"] = pass;
  write_output(dump_deterministic(out), out_path);
  return pass ? kExitOk : kExitInputError;
}

// ---- invariants -----------------------------------------------------------

int run_invariants(const std::string& spec_path, int s_count,
                   const std::string& out_path) {
  const SurfaceSpec spec = load_surface(spec_path);
  const std::vector<double> grid = uniform_grid(spec.curve.s_domain, s_count);
  ordered_json rows = ordered_json::array();
  for (double s : grid) {
    const InvariantSample inv = scalar_invariants(spec, s);
    const LaplacianCoeffs lc = laplacian_coeffs(spec, s);
    ordered_json row;
    row["s"] = inv.s;
    row["a"] = inv.jet.a;
    row["b"] = inv.jet.b;
    row["c"] = inv.jet.c;
    if (spec.kind == SurfaceKind::Parabolic)
      row["d"] = nullptr;
    else
      row["d"] = inv.jet.d;
    if (spec.kind == SurfaceKind::Hyperbolic)
      row["epsilon"] = inv.jet.epsilon;
    else
      row["epsilon"] = nullptr;
    row["H"] = {inv.H[0], inv.H[1]};
    row["K"] = inv.K;
    row["L"] = lc.L;
    row["M"] = lc.M;
    row["N"] = lc.N;
    rows.push_back(std::move(row));
  }
  ordered_json out;
  out["kind"] = kind_token(spec.kind);
  out["s_count"] = s_count;
  out["rows"] = std::move(rows);
  write_output(dump_deterministic(out), out_path);
  return kExitOk;
}

// ---- sweep ------------------------------------------------------------

struct SweepRow {
  double t, s, L, M, N, K, H2;
  Bivector6 dG;
};

int run_sweep(const std::string& spec_path, int s_count, int t_count,
              const std::string& format, const std::string& out_path) {
  const SurfaceSpec spec = load_surface(spec_path);
  const std::vector<double> sg = uniform_grid(spec.curve.s_domain, s_count);
  const std::vector<double> tg = uniform_grid(spec.t_domain, t_count);
  const std::size_t n = sg.size() * tg.size();
  std::vector<SweepRow> rows(n);
  parallel_for(n, thread_budget(), [&](std::size_t i) {
    const double t = tg[i / sg.size()];
    const double s = sg[i % sg.size()];
    const GaussMapSample gm = laplacian_gauss_map(spec, t, s);
    const InvariantSample inv = scalar_invariants(spec, s);
    const FramePoint f = frame(spec, t, s);
    const Vector4 H =
        inv.H[0] * f.e3 + inv.H[1] * f.e4;
    rows[i] = SweepRow{t,         inv.s,     gm.coeffs.L, gm.coeffs.M,
                       gm.coeffs.N, inv.K,   inner(H, H), gm.deltaG};
  });
  std::string text;
  if (format == "csv") {
    text += "t,s,L,M,N,K,H_norm_sq,dG_12,dG_13,dG_14,dG_23,dG_24,dG_34\n";
    for (const SweepRow& r : rows) {
      const double cols[7] = {r.t, r.s, r.L, r.M, r.N, r.K, r.H2};
      for (double c : cols) {
        text += format_double(c);
        text += ",";
      }
      for (std::size_t k = 0; k < 6; ++k) {
        text += format_double(r.dG[k]);
        if (k + 1 < 6) text += ",";
      }
      text += "\n";
    }
  } else {
    ordered_json arr = ordered_json::array();
    for (const SweepRow& r : rows) {
      ordered_json row;
      row["t"] = r.t;
      row["s"] = r.s;
      row["L"] = r.L;
      row["M"] = r.M;
      row["N"] = r.N;
      row["K"] = r.K;
      row["H_norm_sq"] = r.H2;
      row["deltaG"] = std::vector<double>(r.dG.c.begin(), r.dG.c.end());
      arr.push_back(std::move(row));
    }
    text = dump_deterministic(arr);
  }
  write_output(text, out_path);
  return kExitOk;
}

// ---- classify ---------------------------------------------------------

int run_classify(const std::string& spec_path, int s_count, double margin,
                 std::optional<double> t_fixed, bool use_oracle, double h,
                 std::optional<double> tol, const std::string& out_path) {
  const SurfaceSpec spec = load_surface(spec_path);
  ClassifyOptions opts;
  opts.use_oracle = use_oracle;
  opts.oracle_h = h;
  if (tol) opts.residual_threshold = *tol;
  const std::vector<double> grid =
      uniform_grid(spec.curve.s_domain, s_count, margin);
  const double t = t_fixed ? *t_fixed : spec.t_domain.midpoint();
  const ClassificationResult res = classify(spec, grid, t, opts);
  write_output(dump_deterministic(to_json(res, opts)), out_path);
  return kExitOk;
}

// ---- verify -----------------------------------------------------------

int run_verify(const std::string& theorem, const std::string& spec_path,
               int s_count, const std::string& format,
               const std::string& out_path) {
  std::vector<TheoremId> ids;
  if (theorem == "all") {
    ids = all_theorem_ids();
  } else {
    const auto id = theorem_id_from_string(theorem);
    if (!id)
      throw InvalidInputError(
          "unknown theorem id '" + theorem +
          "' (expected T1..T8, C1, C2, or 'all')");
    ids.push_back(*id);
  }
  TheoremOptions opts;
  opts.s_count = s_count;
  if (!spec_path.empty()) {
    if (ids.size() != 1)
      throw InvalidInputError("--spec requires a single theorem id");
    opts.instance = load_surface(spec_path);
  }
  bool all_ok = true;
  ordered_json reports = ordered_json::array();
  std::string text;
  for (TheoremId id : ids) {
    const TheoremReport rep = verify_theorem(id, opts);
    all_ok = all_ok && rep.all_pass();
    reports.push_back(to_json(rep));
    text += (rep.all_pass() ? "[PASS] " : "[FAIL] ") + to_string(id) + "  " +
            rep.description + "\n";
    for (const CheckLine& l : rep.lines) {
      text += std::string("  ") + (l.pass ? "[pass] " : "[FAIL] ") + l.name +
              "  measured=" + format_double(l.measured) +
              " tol=" + format_double(l.tol);
      if (!l.note.empty()) text += "  (" + l.note + ")";
      text += "\n";
    }
  }
  if (format == "json") {
    const ordered_json& payload = reports;
    write_output(dump_deterministic(ids.size() == 1 ? payload[0] : payload),
                 out_path);
  } else {
    write_output(text, out_path);
  }
  return all_ok ? kExitOk : kExitVerificationFailure;
}

// ---- oracle-compare ---------------------------------------------------

int run_oracle_compare(const std::string& spec_path, int s_count, int t_count,
                       double h, double tol, const std::string& out_path) {
  const SurfaceSpec spec = load_surface(spec_path);
  const std::vector<double> sg =
      uniform_grid(spec.curve.s_domain, s_count, 0.1);
  const std::vector<double> tg = uniform_grid(spec.t_domain, t_count, 0.1);
  double scale = 0.0;
  struct Point {
    double t, s;
    Bivector6 closed, oracle;
    double abs_err;
  };
  std::vector<Point> pts;
  for (double t : tg) {
    for (double s : sg) {
      Point p;
      p.t = t;
      p.s = jet_anchor(spec.curve, s);
      p.closed = laplacian_gauss_map(spec, t, s).deltaG;
      p.oracle = laplacian_oracle(spec, t, s, h);
      p.abs_err = coordinate_norm_inf(p.oracle - p.closed);
      scale = std::max(scale, coordinate_norm_inf(p.closed));
      pts.push_back(p);
    }
  }
  double max_abs = 0.0;
  for (const Point& p : pts) max_abs = std::max(max_abs, p.abs_err);
  const bool relative = scale > 1e-6;
  const double max_rel = relative ? max_abs / scale : 0.0;
  const bool pass = relative ? max_rel <= tol : max_abs <= 1e-5;
  ordered_json out;
  out["kind"] = kind_token(spec.kind);
  out["h"] = h;
  out["tol"] = tol;
  out["comparison"] = relative ? "relative" : "absolute";
  out["scale"] = scale;
  out["max_abs_err"] = max_abs;
  if (relative)
    out["max_rel_err"] = max_rel;
  else
    out["max_rel_err"] = nullptr;
  out["pass"] = pass;
  ordered_json arr = ordered_json::array();
  for (const Point& p : pts) {
    ordered_json row;
    row["t"] = p.t;
    row["s"] = p.s;
    row["closed"] = std::vector<double>(p.closed.c.begin(), p.closed.c.end());
    row["oracle"] = std::vector<double>(p.oracle.c.begin(), p.oracle.c.end());
    row["abs_err"] = p.abs_err;
    arr.push_back(std::move(row));
  }
  out["points"] = std::move(arr);
  write_output(dump_deterministic(out), out_path);
  return pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rotational surfaces in the flat (2,2) space: frames, curvature, "
      "Gauss map Laplacian, and 1-type classification"};
  app.require_subcommand(1);
  // --h is a finite-difference step below, so help is long-form only.
  app.set_help_flag("--help", "print help and exit");

  // Bound variables are per-subcommand: CLI11 applies default_val at setup
  // time, so sharing one variable across subcommands clobbers defaults.
  std::string spec_path, out_path, theorem;

  auto* check = app.add_subcommand(
      "check-curve", "unit-speed and admissibility report for a curve spec");
  int check_scount = 101;
  double check_tol = 1e-8;
  check->add_option("--spec", spec_path, "curve spec JSON (path or '-')")
      ->required();
  check->add_option("--s-count", check_scount, "grid points")
      ->default_val(101);
  check->add_option("--tol", check_tol, "unit-speed tolerance")
      ->default_val(1e-8);
  check->add_option("--out", out_path, "output path (default stdout)");

  auto* inv = app.add_subcommand(
      "invariants", "scalar invariants and Laplacian coefficients over s");
  int inv_scount = 25;
  inv->add_option("--spec", spec_path, "surface spec JSON (path or '-')")
      ->required();
  inv->add_option("--s-count", inv_scount, "grid points")->default_val(25);
  inv->add_option("--out", out_path, "output path (default stdout)");

  auto* sweep = app.add_subcommand(
      "sweep", "evaluate the Laplacian over a (t, s) grid");
  sweep->footer(
      "CSV columns (t-major row order, 17-significant-digit floats):\n"
      "  t, s            grid point\n"
      "  L, M, N         Laplacian coefficients on e1^e2, e2^e3, e2^e4\n"
      "  K               Gaussian curvature\n"
      "  H_norm_sq       <H, H> of the mean curvature vector\n"
      "  dG_12 .. dG_34  ambient Laplacian on e12, e13, e14, e23, e24, e34\n"
      "See docs/sweep_csv_schema.md for the full contract.");
  int sweep_scount = 50, sweep_tcount = 20;
  std::string sweep_format = "csv";
  sweep->add_option("--spec", spec_path, "surface spec JSON (path or '-')")
      ->required();
  sweep->add_option("--s-count", sweep_scount, "s grid points")
      ->default_val(50);
  sweep->add_option("--t-count", sweep_tcount, "t grid points")
      ->default_val(20);
  sweep->add_option("--format", sweep_format, "csv or json")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", out_path, "output path (default stdout)");

  auto* cls = app.add_subcommand(
      "classify", "classify the Gauss map by its Laplacian");
  cls->set_help_flag("--help", "print help and exit");
  int cls_scount = 25;
  double cls_margin = 0.05, cls_h = 1e-3;
  std::optional<double> cls_t, cls_tol;
  bool use_oracle = false;
  cls->add_option("--spec", spec_path, "surface spec JSON (path or '-')")
      ->required();
  cls->add_option("--s-count", cls_scount, "sample count")->default_val(25);
  cls->add_option("--margin", cls_margin, "grid margin fraction")
      ->default_val(0.05);
  cls->add_option("--t", cls_t, "fixed t (default: domain midpoint)");
  cls->add_flag("--oracle", use_oracle,
                "measure the Laplacian by finite differences");
  cls->add_option("--h", cls_h, "oracle step")->default_val(1e-3);
  cls->add_option("--tol", cls_tol, "override the fit residual threshold");
  cls->add_option("--out", out_path, "output path (default stdout)");

  auto* ver = app.add_subcommand("verify", "run the statement checks");
  int ver_scount = 25;
  std::string ver_format = "text";
  ver->add_option("--theorem", theorem, "T1..T8, C1, C2, or 'all'")
      ->required();
  ver->add_option("--spec", spec_path,
                  "optional surface instance (single theorem only)");
  ver->add_option("--s-count", ver_scount, "sample count")->default_val(25);
  ver->add_option("--format", ver_format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--out", out_path, "output path (default stdout)");

  auto* cmp = app.add_subcommand(
      "oracle-compare",
      "closed-form Laplacian against the finite-difference definition");
  cmp->set_help_flag("--help", "print help and exit");
  int cmp_scount = 5, cmp_tcount = 4;
  double cmp_h = 1e-3, cmp_tol = 1e-4;
  cmp->add_option("--spec", spec_path, "surface spec JSON (path or '-')")
      ->required();
  cmp->add_option("--s-count", cmp_scount, "s grid points")->default_val(5);
  cmp->add_option("--t-count", cmp_tcount, "t grid points")->default_val(4);
  cmp->add_option("--h", cmp_h, "finite-difference step")->default_val(1e-3);
  cmp->add_option("--tol", cmp_tol, "relative tolerance")->default_val(1e-4);
  cmp->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (check->parsed())
      return run_check_curve(spec_path, check_scount, check_tol, out_path);
    if (inv->parsed()) return run_invariants(spec_path, inv_scount, out_path);
    if (sweep->parsed())
      return run_sweep(spec_path, sweep_scount, sweep_tcount, sweep_format,
                       out_path);
    if (cls->parsed())
      return run_classify(spec_path, cls_scount, cls_margin, cls_t,
                          use_oracle, cls_h, cls_tol, out_path);
    if (ver->parsed())
      return run_verify(theorem, spec_path, ver_scount, ver_format, out_path);
    if (cmp->parsed())
      return run_oracle_compare(spec_path, cmp_scount, cmp_tcount, cmp_h,
                                cmp_tol, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
