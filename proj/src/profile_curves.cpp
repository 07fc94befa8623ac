#include "rotsurf/profile_curves.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rotsurf/errors.hpp"
#include "rotsurf/quadrature.hpp"

namespace rotsurf {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kDegenerateTol = 1e-9;

[[noreturn]] void fail_input(const std::string& msg) {
  throw InvalidInputError(msg);
}

double require_param(const CurveSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) fail_input("missing parameter '" + key + "'");
  return it->second;
}

double param_or(const CurveSpec& spec, const std::string& key, double dflt) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? dflt : it->second;
}

void check_known_keys(const CurveSpec& spec,
                      std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : spec.params) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail_input("unknown parameter '" + key + "'");
  }
}

void check_positive_on_domain(double slope, double offset, Interval dom,
                              const std::string& what) {
  const double at_lo = slope * dom.lo + offset;
  const double at_hi = slope * dom.hi + offset;
  if (!(at_lo > 0.0) || !(at_hi > 0.0)) {
    std::ostringstream os;
    os << what << " must stay positive on the s-domain (values " << at_lo
       << " and " << at_hi << " at the endpoints)";
    throw AdmissibilityError(os.str());
  }
}

void check_domain(const Interval& dom) {
  if (!std::isfinite(dom.lo) || !std::isfinite(dom.hi) || !(dom.lo < dom.hi))
    fail_input("s_domain must be a finite interval with lo < hi");
}

// ---- closed-form family jets ------------------------------------------

CurveJet jet_elliptic_circle(const CurveSpec& spec, double s) {
  const double d1 = require_param(spec, "delta1");
  const double d2 = param_or(spec, "delta2", 0.0);
  const double d3 = require_param(spec, "delta3");
  const double t1 = param_or(spec, "delta4_1", 0.0);
  const double t2 = param_or(spec, "delta4_2", 0.0);
  const double ang = -d1 * s + d2;
  const double cs = std::cos(ang), sn = std::sin(ang);
  CurveJet j;
  j.x = {-sn / d1 + t1, cs / d1 + t2, d3, 0.0};
  j.d1 = {cs, sn, 0.0, 0.0};
  j.d2 = {d1 * sn, -d1 * cs, 0.0, 0.0};
  j.d3 = {-d1 * d1 * cs, -d1 * d1 * sn, 0.0, 0.0};
  return j;
}

CurveJet jet_elliptic_spiral(const CurveSpec& spec, double s) {
  const double l1 = require_param(spec, "lambda1");
  const double l2 = require_param(spec, "lambda2");
  const double l3 = param_or(spec, "lambda3", 0.0);
  const double l4 = param_or(spec, "lambda4", 0.0);
  const double A = std::sqrt(1.0 + l1 * l1);
  const double u = l1 * s + l2;
  const double ang = -(l3 / (l1 * A)) * std::log(u) + l4;
  const double dang = -l3 / (A * u);
  const double ddang = l3 * l1 / (A * u * u);
  const double cs = std::cos(ang), sn = std::sin(ang);
  const auto x1p = [&](double tau) {
    const double ut = l1 * tau + l2;
    return A * std::cos(-(l3 / (l1 * A)) * std::log(ut) + l4);
  };
  const auto x2p = [&](double tau) {
    const double ut = l1 * tau + l2;
    return A * std::sin(-(l3 / (l1 * A)) * std::log(ut) + l4);
  };
  CurveJet j;
  j.x = {integrate(x1p, spec.s_domain.lo, s),
         integrate(x2p, spec.s_domain.lo, s), u, 0.0};
  j.d1 = {A * cs, A * sn, l1, 0.0};
  j.d2 = {-A * sn * dang, A * cs * dang, 0.0, 0.0};
  j.d3 = {-A * cs * dang * dang - A * sn * ddang,
          -A * sn * dang * dang + A * cs * ddang, 0.0, 0.0};
  return j;
}

CurveJet jet_hyperbolic_branch(const CurveSpec& spec, double s) {
  const double d1 = require_param(spec, "delta1");
  const double d2 = require_param(spec, "delta2");
  const double d3 = param_or(spec, "delta3", 0.0);
  const double t2 = param_or(spec, "delta4_2", 0.0);
  const double t4 = param_or(spec, "delta4_4", 0.0);
  const double th = -d2 * s + d3;
  const double ch = std::cosh(th), sh = std::sinh(th);
  CurveJet j;
  j.x = {d1, -sh / d2 + t2, 0.0, -ch / d2 + t4};
  j.d1 = {0.0, ch, 0.0, sh};
  j.d2 = {0.0, -d2 * sh, 0.0, -d2 * ch};
  j.d3 = {0.0, d2 * d2 * ch, 0.0, d2 * d2 * sh};
  return j;
}

CurveJet jet_hyperbolic_spiral(const CurveSpec& spec, double s) {
  const double l1 = require_param(spec, "lambda1");
  const double l2 = require_param(spec, "lambda2");
  const double l3 = param_or(spec, "lambda3", 0.0);
  const double l4 = param_or(spec, "lambda4", 0.0);
  const double B = std::sqrt(l1 * l1 - 1.0);
  const double u = l1 * s + l2;
  const double ang = (l3 / (l1 * B)) * std::log(u) + l4;
  const double dang = l3 / (B * u);
  const double ddang = -l3 * l1 / (B * u * u);
  const double ch = std::cosh(ang), sh = std::sinh(ang);
  const auto x2p = [&](double tau) {
    const double ut = l1 * tau + l2;
    return B * std::sinh((l3 / (l1 * B)) * std::log(ut) + l4);
  };
  const auto x4p = [&](double tau) {
    const double ut = l1 * tau + l2;
    return B * std::cosh((l3 / (l1 * B)) * std::log(ut) + l4);
  };
  CurveJet j;
  j.x = {u, integrate(x2p, spec.s_domain.lo, s), 0.0,
         integrate(x4p, spec.s_domain.lo, s)};
  j.d1 = {l1, B * sh, 0.0, B * ch};
  j.d2 = {0.0, B * ch * dang, 0.0, B * sh * dang};
  j.d3 = {0.0, B * sh * dang * dang + B * ch * ddang, 0.0,
          B * ch * dang * dang + B * sh * ddang};
  return j;
}

CurveJet jet_parabolic_log(const CurveSpec& spec, double s) {
  const double m1 = require_param(spec, "mu1");
  const double m2 = require_param(spec, "mu2");
  const double m4 = param_or(spec, "mu4", 0.0);
  const double m5 = param_or(spec, "mu5", 0.0);
  const double eps = param_or(spec, "eps", 1.0);
  const double u = m1 * s + m2;
  const double lg = std::log(u);
  // Null-split components: p = u, x1 slope logarithmic, q by the unit-speed
  // relation (x1')^2 - 2 p' q' = 1.
  const double x1 = (eps / m1) * (u * lg) + (m4 - eps) * s + m5;
  const double x1p = eps * lg + m4;
  const double x1pp = eps * m1 / u;
  const double x1ppp = -eps * m1 * m1 / (u * u);
  const auto qp = [&](double tau) {
    const double v = eps * std::log(m1 * tau + m2) + m4;
    return (v * v - 1.0) / (2.0 * m1);
  };
  const double q = integrate(qp, spec.s_domain.lo, s);
  const double q1 = (x1p * x1p - 1.0) / (2.0 * m1);
  const double q2 = x1p * x1pp / m1;
  const double q3 = (x1pp * x1pp + x1p * x1ppp) / m1;
  CurveJet j;
  // standard coordinates: x2 = (p - q)/sqrt2, x3 = (p + q)/sqrt2
  j.x = {x1, (u - q) / kSqrt2, (u + q) / kSqrt2, 0.0};
  j.d1 = {x1p, (m1 - q1) / kSqrt2, (m1 + q1) / kSqrt2, 0.0};
  j.d2 = {x1pp, -q2 / kSqrt2, q2 / kSqrt2, 0.0};
  j.d3 = {x1ppp, -q3 / kSqrt2, q3 / kSqrt2, 0.0};
  return j;
}

// ---- sampled tables -----------------------------------------------------

std::size_t snap_index(const CurveTable& tab, double s) {
  const long long n = static_cast<long long>(tab.x.size());
  long long j = std::llround((s - tab.s0) / tab.spacing);
  j = std::clamp(j, 3LL, n - 4LL);
  return static_cast<std::size_t>(j);
}

CurveJet jet_from_table(const CurveTable& tab, double s) {
  const std::size_t j = snap_index(tab, s);
  const auto& x = tab.x;
  const double h = tab.spacing;
  CurveJet out;
  out.x = x[j];
  out.d1 = (-1.0 * x[j + 2] + 8.0 * x[j + 1] - 8.0 * x[j - 1] + x[j - 2]) /
           (12.0 * h);
  out.d2 = (-1.0 * x[j + 2] + 16.0 * x[j + 1] - 30.0 * x[j] +
            16.0 * x[j - 1] - x[j - 2]) /
           (12.0 * h * h);
  out.d3 = (x[j - 3] - 8.0 * x[j - 2] + 13.0 * x[j - 1] - 13.0 * x[j + 1] +
            8.0 * x[j + 2] - x[j + 3]) /
           (8.0 * h * h * h);
  return out;
}

void validate_table(const CurveSpec& spec) {
  if (!spec.table) fail_input("custom curve requires a sample table");
  const CurveTable& tab = *spec.table;
  if (!(tab.spacing > 0.0) || !std::isfinite(tab.spacing))
    fail_input("sample spacing must be positive and finite");
  if (tab.x.size() < 8)
    fail_input("sample table needs at least 8 nodes");
  for (const Vector4& v : tab.x)
    for (double c : v.v)
      if (!std::isfinite(c)) fail_input("sample table contains nonfinite values");
  const double h = tab.spacing;
  const double first_usable = tab.s0 + 3.0 * h;
  const double last_usable =
      tab.s0 + (static_cast<double>(tab.x.size()) - 4.0) * h;
  if (first_usable > spec.s_domain.lo + 1e-12 ||
      last_usable < spec.s_domain.hi - 1e-12)
    fail_input(
        "sample table must extend at least three nodes past each end of "
        "s_domain");
  // The profile must lie in the coordinate hyperplane of its kind.
  const std::size_t flat_axis = tab.kind == SurfaceKind::Hyperbolic ? 2 : 3;
  double scale = 0.0, off = 0.0;
  for (const Vector4& v : tab.x) {
    scale = std::max(scale, coordinate_norm_inf(v));
    off = std::max(off, std::abs(v[flat_axis]));
  }
  if (off > 1e-10 * std::max(1.0, scale)) {
    std::ostringstream os;
    os << "profile samples must have coordinate " << (flat_axis + 1)
       << " equal to zero for this kind (max |value| " << off << ")";
    fail_input(os.str());
  }
}

}  // namespace

std::vector<double> uniform_grid(Interval domain, int count,
                                 double margin_fraction) {
  if (count < 1) fail_input("grid needs at least one point");
  const double len = domain.length();
  const double lo = domain.lo + margin_fraction * len;
  const double hi = domain.hi - margin_fraction * len;
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    g.push_back(0.5 * (lo + hi));
    return g;
  }
  for (int i = 0; i < count; ++i)
    g.push_back(lo + (hi - lo) * static_cast<double>(i) /
                         static_cast<double>(count - 1));
  return g;
}

SurfaceKind kind_of(CurveFamily family) {
  switch (family) {
    case CurveFamily::EllipticCircle:
    case CurveFamily::EllipticSpiral:
      return SurfaceKind::Elliptic;
    case CurveFamily::HyperbolicBranch:
    case CurveFamily::HyperbolicSpiral:
      return SurfaceKind::Hyperbolic;
    case CurveFamily::ParabolicLog:
      return SurfaceKind::Parabolic;
    case CurveFamily::Custom:
      break;
  }
  fail_input("custom curves carry their own kind");
}

SurfaceKind CurveSpec::kind() const {
  if (family == CurveFamily::Custom) {
    if (!table) fail_input("custom curve requires a sample table");
    return table->kind;
  }
  return kind_of(family);
}

void CurveSpec::validate() const {
  check_domain(s_domain);
  if (family != CurveFamily::Custom && table)
    fail_input("sample tables are only allowed on custom curves");
  switch (family) {
    case CurveFamily::EllipticCircle: {
      check_known_keys(*this,
                       {"delta1", "delta2", "delta3", "delta4_1", "delta4_2"});
      if (require_param(*this, "delta1") == 0.0)
        fail_input("delta1 must be nonzero");
      if (!(require_param(*this, "delta3") > 0.0))
        fail_input("delta3 must be positive");
      break;
    }
    case CurveFamily::EllipticSpiral: {
      check_known_keys(*this, {"lambda1", "lambda2", "lambda3", "lambda4"});
      const double l1 = require_param(*this, "lambda1");
      const double l2 = require_param(*this, "lambda2");
      if (l1 == 0.0) fail_input("lambda1 must be nonzero");
      check_positive_on_domain(l1, l2, s_domain, "the radius lambda1*s+lambda2");
      break;
    }
    case CurveFamily::HyperbolicBranch: {
      check_known_keys(*this,
                       {"delta1", "delta2", "delta3", "delta4_2", "delta4_4"});
      if (!(require_param(*this, "delta1") > 0.0))
        fail_input("delta1 must be positive");
      if (require_param(*this, "delta2") == 0.0)
        fail_input("delta2 must be nonzero");
      break;
    }
    case CurveFamily::HyperbolicSpiral: {
      check_known_keys(*this, {"lambda1", "lambda2", "lambda3", "lambda4"});
      const double l1 = require_param(*this, "lambda1");
      const double l2 = require_param(*this, "lambda2");
      if (!(l1 * l1 > 1.0)) fail_input("lambda1^2 must exceed 1");
      check_positive_on_domain(l1, l2, s_domain, "the radius lambda1*s+lambda2");
      break;
    }
    case CurveFamily::ParabolicLog: {
      check_known_keys(*this, {"mu1", "mu2", "mu4", "mu5", "eps"});
      const double m1 = require_param(*this, "mu1");
      const double m2 = require_param(*this, "mu2");
      if (m1 == 0.0) fail_input("mu1 must be nonzero");
      const double eps = param_or(*this, "eps", 1.0);
      if (eps != 1.0 && eps != -1.0) fail_input("eps must be +1 or -1");
      check_positive_on_domain(m1, m2, s_domain, "the null radius mu1*s+mu2");
      break;
    }
    case CurveFamily::Custom: {
      if (!params.empty())
        fail_input("custom curves take samples, not parameters");
      validate_table(*this);
      break;
    }
  }
}

CurveJet evaluate_jet(const CurveSpec& spec, double s) {
  if (!spec.s_domain.contains(s, 1e-9 * std::max(1.0, std::abs(s)))) {
    std::ostringstream os;
    os << "s = " << s << " outside the domain [" << spec.s_domain.lo << ", "
       << spec.s_domain.hi << "]";
    throw DomainError(os.str());
  }
  switch (spec.family) {
    case CurveFamily::EllipticCircle:
      return jet_elliptic_circle(spec, s);
    case CurveFamily::EllipticSpiral:
      return jet_elliptic_spiral(spec, s);
    case CurveFamily::HyperbolicBranch:
      return jet_hyperbolic_branch(spec, s);
    case CurveFamily::HyperbolicSpiral:
      return jet_hyperbolic_spiral(spec, s);
    case CurveFamily::ParabolicLog:
      return jet_parabolic_log(spec, s);
    case CurveFamily::Custom:
      return jet_from_table(*spec.table, s);
  }
  fail_input("unknown curve family");
}

double jet_anchor(const CurveSpec& spec, double s) {
  if (spec.family != CurveFamily::Custom) return s;
  const CurveTable& tab = *spec.table;
  return tab.s0 + static_cast<double>(snap_index(tab, s)) * tab.spacing;
}

NullSplitJet null_split(const CurveJet& jet) {
  NullSplitJet out;
  const Vector4* ds[4] = {&jet.x, &jet.d1, &jet.d2, &jet.d3};
  for (int k = 0; k < 4; ++k) {
    const Vector4& v = *ds[k];
    out.x1[k] = v[0];
    out.p[k] = (v[1] + v[2]) / kSqrt2;
    out.q[k] = (v[2] - v[1]) / kSqrt2;
    out.x4[k] = v[3];
  }
  return out;
}

UnitSpeedReport check_unit_speed(const CurveSpec& spec,
                                 const std::vector<double>& grid, double tol) {
  UnitSpeedReport rep;
  rep.tol = tol;
  for (double s : grid) {
    const CurveJet j = evaluate_jet(spec, s);
    const double r = std::abs(inner(j.d1, j.d1) - 1.0);
    if (r >= rep.max_residual) {
      rep.max_residual = r;
      rep.worst_s = jet_anchor(spec, s);
    }
  }
  rep.pass = rep.max_residual <= tol;
  return rep;
}

AdmissibilityFlags admissibility(const CurveSpec& spec, double s) {
  AdmissibilityFlags flags;
  const CurveJet j = evaluate_jet(spec, s);
  switch (spec.kind()) {
    case SurfaceKind::Elliptic: {
      flags.positive_radius = j.x[2] > 1e-12;
      flags.nondegenerate_normal =
          j.d1[0] * j.d1[0] + j.d1[1] * j.d1[1] > kDegenerateTol;
      break;
    }
    case SurfaceKind::Hyperbolic: {
      const double w = j.d1[0] * j.d1[0] - 1.0;
      flags.positive_radius = j.x[0] > 1e-12;
      flags.nondegenerate_normal = std::abs(w) > kDegenerateTol;
      if (flags.nondegenerate_normal) flags.epsilon = w > 0.0 ? 1.0 : -1.0;
      break;
    }
    case SurfaceKind::Parabolic: {
      const NullSplitJet nj = null_split(j);
      flags.positive_radius = nj.p[0] > 1e-12;
      flags.nondegenerate_normal = std::abs(nj.p[1]) > kDegenerateTol;
      break;
    }
  }
  return flags;
}

CurveSpec sampled_profile(SurfaceKind kind, Interval s_domain, double spacing,
                          const std::function<Vector4(double)>& position) {
  if (!(spacing > 0.0)) fail_input("sample spacing must be positive");
  check_domain(s_domain);
  const double pad = 4.0 * spacing;
  const double start = s_domain.lo - pad;
  const auto count = static_cast<std::size_t>(
      std::ceil((s_domain.hi + pad - start) / spacing)) + 1;
  CurveTable tab;
  tab.kind = kind;
  tab.s0 = start;
  tab.spacing = spacing;
  tab.x.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    tab.x.push_back(position(start + static_cast<double>(i) * spacing));
  CurveSpec spec;
  spec.family = CurveFamily::Custom;
  spec.s_domain = s_domain;
  spec.table = std::move(tab);
  spec.validate();
  return spec;
}

}  // namespace rotsurf
