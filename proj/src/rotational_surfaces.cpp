#include "rotsurf/rotational_surfaces.hpp"

#include <cmath>
#include <sstream>

#include "rotsurf/errors.hpp"

namespace rotsurf {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kDegenerateTol = 1e-9;

Vector4 from_null(double v1, double vp, double vq, double v4) {
  return Vector4{v1, (vp - vq) / kSqrt2, (vp + vq) / kSqrt2, v4};
}

[[noreturn]] void degenerate(const std::string& what, double s) {
  std::ostringstream os;
  os << what << " at s = " << s;
  throw AdmissibilityError(os.str());
}

double hyperbolic_w(const CurveJet& j, double s) {
  const double w = j.d1[0] * j.d1[0] - 1.0;
  if (std::abs(w) <= kDegenerateTol)
    degenerate("profile speed is lightlike in the orbit plane", s);
  return w;
}

double parabolic_dp(const NullSplitJet& nj, double s) {
  if (std::abs(nj.p[1]) <= kDegenerateTol)
    degenerate("null radius has vanishing derivative", s);
  return nj.p[1];
}

void check_t(const SurfaceSpec& spec, double t) {
  if (!spec.t_domain.contains(t, 1e-9 * std::max(1.0, std::abs(t)))) {
    std::ostringstream os;
    os << "t = " << t << " outside the domain [" << spec.t_domain.lo << ", "
       << spec.t_domain.hi << "]";
    throw DomainError(os.str());
  }
}

void check_fd_alignment(const SurfaceSpec& spec, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw StepError("step must be positive");
  if (spec.curve.family != CurveFamily::Custom) return;
  const double sp = spec.curve.table->spacing;
  const double ratio = h / (2.0 * sp);
  if (std::abs(ratio - std::round(ratio)) > 1e-9 || ratio < 0.5)
    throw StepError(
        "finite-difference steps on sampled curves must be even multiples of "
        "the node spacing");
}

}  // namespace

void SurfaceSpec::validate() const {
  curve.validate();
  if (curve.kind() != kind)
    throw InvalidInputError("surface kind does not match the curve's kind");
  if (!std::isfinite(t_domain.lo) || !std::isfinite(t_domain.hi) ||
      !(t_domain.lo < t_domain.hi))
    throw InvalidInputError("t_domain must be a finite interval with lo < hi");
  // Dense admissibility sweep; for hyperbolic surfaces the causal type of
  // the profile speed must not change across the domain.
  const std::vector<double> grid = uniform_grid(curve.s_domain, 201);
  double first_eps = 0.0;
  for (double s : grid) {
    const AdmissibilityFlags flags = admissibility(curve, s);
    if (!flags.positive_radius)
      degenerate("rotation radius must stay positive", s);
    if (!flags.nondegenerate_normal)
      degenerate("normal frame degenerates", s);
    if (kind == SurfaceKind::Hyperbolic) {
      if (first_eps == 0.0)
        first_eps = *flags.epsilon;
      else if (*flags.epsilon != first_eps)
        degenerate("profile speed crosses the light cone", s);
    }
  }
}

Vector4 embed(const SurfaceSpec& spec, double t, double s) {
  check_t(spec, t);
  const CurveJet j = evaluate_jet(spec.curve, s);
  switch (spec.kind) {
    case SurfaceKind::Elliptic:
      return Vector4{j.x[0], j.x[1], j.x[2] * std::cos(t),
                     j.x[2] * std::sin(t)};
    case SurfaceKind::Hyperbolic:
      return Vector4{j.x[0] * std::cosh(t), j.x[1], j.x[0] * std::sinh(t),
                     j.x[3]};
    case SurfaceKind::Parabolic: {
      const NullSplitJet nj = null_split(j);
      return from_null(nj.x1[0], nj.p[0], -t * t * nj.p[0] + nj.q[0],
                       kSqrt2 * t * nj.p[0]);
    }
  }
  throw InvalidInputError("unknown surface kind");
}

FramePoint frame(const SurfaceSpec& spec, double t, double s) {
  check_t(spec, t);
  const CurveJet j = evaluate_jet(spec.curve, s);
  FramePoint f;
  switch (spec.kind) {
    case SurfaceKind::Elliptic: {
      const double ct = std::cos(t), st = std::sin(t);
      const double r = j.d1[2];
      const double W = std::sqrt(1.0 + r * r);
      f.e1 = {j.d1[0], j.d1[1], r * ct, r * st};
      f.e2 = {0.0, 0.0, -st, ct};
      f.e3 = Vector4{-j.d1[1], j.d1[0], 0.0, 0.0} / W;
      f.e4 = Vector4{r * j.d1[0], r * j.d1[1], (1.0 + r * r) * ct,
                     (1.0 + r * r) * st} /
             W;
      f.signs = {1.0, -1.0, 1.0, -1.0};
      return f;
    }
    case SurfaceKind::Hyperbolic: {
      const double ct = std::cosh(t), st = std::sinh(t);
      const double w = hyperbolic_w(j, s);
      const double eps = w > 0.0 ? 1.0 : -1.0;
      const double W = std::sqrt(eps * w);
      f.e1 = {j.d1[0] * ct, j.d1[1], j.d1[0] * st, j.d1[3]};
      f.e2 = {st, 0.0, ct, 0.0};
      f.e3 = Vector4{0.0, j.d1[3], 0.0, j.d1[1]} / W;
      f.e4 = Vector4{-w * ct, -j.d1[0] * j.d1[1], -w * st,
                     -j.d1[0] * j.d1[3]} /
             W;
      f.signs = {1.0, -1.0, eps, -eps};
      return f;
    }
    case SurfaceKind::Parabolic: {
      const NullSplitJet nj = null_split(j);
      const double dp = parabolic_dp(nj, s);
      f.e1 = from_null(nj.x1[1], dp, -t * t * dp + nj.q[1], kSqrt2 * t * dp);
      f.e2 = from_null(0.0, 0.0, -kSqrt2 * t, 1.0);
      f.e3 = from_null(1.0, 0.0, nj.x1[1] / dp, 0.0);
      f.e4 = from_null(nj.x1[1], dp, 1.0 / dp + nj.q[1] - t * t * dp,
                       kSqrt2 * t * dp);
      f.signs = {1.0, -1.0, 1.0, -1.0};
      return f;
    }
  }
  throw InvalidInputError("unknown surface kind");
}

InvariantJet invariant_jet(const SurfaceSpec& spec, double s) {
  const CurveJet j = evaluate_jet(spec.curve, s);
  InvariantJet out;
  switch (spec.kind) {
    case SurfaceKind::Elliptic: {
      const double r1 = j.d1[2], r2 = j.d2[2], r3 = j.d3[2];
      const double x3 = j.x[2];
      const double W = std::sqrt(1.0 + r1 * r1);
      out.a = r1 / W;
      out.b = W / x3;
      out.c = r2 / W;
      out.d = (j.d2[0] * j.d1[1] - j.d2[1] * j.d1[0]) / W;
      out.da = r2 / (W * W * W);
      out.db = r1 * r2 / (W * x3) - W * r1 / (x3 * x3);
      out.dc = r3 / W - r1 * r2 * r2 / (W * W * W);
      out.dd = (j.d3[0] * j.d1[1] - j.d3[1] * j.d1[0]) / W -
               out.d * r1 * r2 / (W * W);
      out.epsilon = 1.0;
      return out;
    }
    case SurfaceKind::Hyperbolic: {
      const double x1 = j.x[0];
      const double r1 = j.d1[0], r2 = j.d2[0], r3 = j.d3[0];
      const double w = hyperbolic_w(j, s);
      const double eps = w > 0.0 ? 1.0 : -1.0;
      const double W = std::sqrt(eps * w);
      const double W3 = W * W * W;
      out.a = r1 / W;
      out.b = W / x1;
      out.c = r2 / W;
      out.d = (j.d2[1] * j.d1[3] - j.d2[3] * j.d1[1]) / W;
      out.da = r2 / W - eps * r1 * r1 * r2 / W3;
      out.db = eps * r1 * r2 / (W * x1) - W * r1 / (x1 * x1);
      out.dc = r3 / W - eps * r1 * r2 * r2 / W3;
      out.dd = (j.d3[1] * j.d1[3] - j.d3[3] * j.d1[1]) / W -
               out.d * eps * r1 * r2 / (W * W);
      out.epsilon = eps;
      return out;
    }
    case SurfaceKind::Parabolic: {
      const NullSplitJet nj = null_split(j);
      const double p = nj.p[0];
      const double dp = parabolic_dp(nj, s);
      out.a = dp / p;
      out.b = nj.p[2] / dp;
      out.c = nj.x1[2] - out.b * nj.x1[1];
      out.d = 0.0;
      out.da = nj.p[2] / p - (dp / p) * (dp / p);
      out.db = nj.p[3] / dp - (nj.p[2] / dp) * (nj.p[2] / dp);
      out.dc = nj.x1[3] - out.db * nj.x1[1] - out.b * nj.x1[2];
      out.dd = 0.0;
      out.epsilon = 1.0;
      return out;
    }
  }
  throw InvalidInputError("unknown surface kind");
}

InvariantSample scalar_invariants(const SurfaceSpec& spec, double s) {
  InvariantSample out;
  out.s = jet_anchor(spec.curve, s);
  out.jet = invariant_jet(spec, s);
  const InvariantJet& q = out.jet;
  switch (spec.kind) {
    case SurfaceKind::Elliptic:
      out.H = {-0.5 * q.d, 0.5 * (q.c + q.b)};
      out.K = q.c * q.b;
      return out;
    case SurfaceKind::Hyperbolic:
      out.H = {0.5 * q.epsilon * q.d, -0.5 * (q.epsilon * q.c + q.b)};
      out.K = q.c * q.b;
      return out;
    case SurfaceKind::Parabolic:
      out.H = {0.5 * q.c, 0.5 * (q.a + q.b)};
      out.K = q.a * q.b;
      return out;
  }
  throw InvalidInputError("unknown surface kind");
}

SecondFundamental second_fundamental(const SurfaceSpec& spec, double s) {
  const InvariantJet q = invariant_jet(spec, s);
  SecondFundamental sf{};
  switch (spec.kind) {
    case SurfaceKind::Elliptic:
      sf.h[0][0][0] = -q.d;
      sf.h[1][0][0] = q.c;
      sf.h[1][1][1] = -q.b;
      return sf;
    case SurfaceKind::Hyperbolic:
      sf.h[0][0][0] = q.epsilon * q.d;
      sf.h[1][0][0] = -q.epsilon * q.c;
      sf.h[1][1][1] = q.b;
      return sf;
    case SurfaceKind::Parabolic:
      sf.h[0][0][0] = q.c;
      sf.h[1][0][0] = q.b;
      sf.h[1][1][1] = -q.a;
      return sf;
  }
  throw InvalidInputError("unknown surface kind");
}

Vector4 mean_curvature_via_trace(const SurfaceSpec& spec, double t, double s) {
  const SecondFundamental sf = second_fundamental(spec, s);
  const FramePoint f = frame(spec, t, s);
  const Vector4 normals[2] = {f.e3, f.e4};
  Vector4 H{};
  for (int r = 0; r < 2; ++r) {
    const double trace =
        f.signs[0] * sf.h[r][0][0] + f.signs[1] * sf.h[r][1][1];
    H += (0.5 * trace) * normals[r];
  }
  return H;
}

double gaussian_curvature_via_form(const SurfaceSpec& spec, double s) {
  const SecondFundamental sf = second_fundamental(spec, s);
  const InvariantJet q = invariant_jet(spec, s);
  const double sign3 = spec.kind == SurfaceKind::Hyperbolic ? q.epsilon : 1.0;
  const double signs[2] = {sign3, -sign3};
  double K = 0.0;
  for (int r = 0; r < 2; ++r)
    K += signs[r] *
         (sf.h[r][0][0] * sf.h[r][1][1] - sf.h[r][0][1] * sf.h[r][1][0]);
  return K;
}

double rotation_speed(const SurfaceSpec& spec, double s) {
  const CurveJet j = evaluate_jet(spec.curve, s);
  double radius = 0.0;
  switch (spec.kind) {
    case SurfaceKind::Elliptic:
      radius = j.x[2];
      break;
    case SurfaceKind::Hyperbolic:
      radius = j.x[0];
      break;
    case SurfaceKind::Parabolic:
      radius = kSqrt2 * null_split(j).p[0];
      break;
  }
  if (!(radius > 1e-12))
    degenerate("rotation radius must stay positive", s);
  return radius;
}

ConnectionTable connection_table(const SurfaceSpec& spec, double t, double s) {
  const InvariantJet q = invariant_jet(spec, s);
  const FramePoint f = frame(spec, t, s);
  ConnectionTable T;
  switch (spec.kind) {
    case SurfaceKind::Elliptic: {
      T.de[0][0] = -q.d * f.e3 + q.c * f.e4;
      T.de[0][1] = Vector4{};
      T.de[0][2] = q.d * f.e1 - q.a * q.d * f.e4;
      T.de[0][3] = q.c * f.e1 - q.a * q.d * f.e3;
      T.de[1][0] = q.a * q.b * f.e2;
      T.de[1][1] = q.a * q.b * f.e1 - q.b * f.e4;
      T.de[1][2] = Vector4{};
      T.de[1][3] = q.b * f.e2;
      return T;
    }
    case SurfaceKind::Hyperbolic: {
      const double e = q.epsilon;
      T.de[0][0] = e * q.d * f.e3 - e * q.c * f.e4;
      T.de[0][1] = Vector4{};
      T.de[0][2] = -q.d * f.e1 - e * q.a * q.d * f.e4;
      T.de[0][3] = -q.c * f.e1 - e * q.a * q.d * f.e3;
      T.de[1][0] = q.a * q.b * f.e2;
      T.de[1][1] = q.a * q.b * f.e1 + q.b * f.e4;
      T.de[1][2] = Vector4{};
      T.de[1][3] = -e * q.b * f.e2;
      return T;
    }
    case SurfaceKind::Parabolic: {
      T.de[0][0] = q.c * f.e3 + q.b * f.e4;
      T.de[0][1] = Vector4{};
      T.de[0][2] = -q.c * f.e1 + q.c * f.e4;
      T.de[0][3] = q.b * f.e1 + q.c * f.e3;
      T.de[1][0] = q.a * f.e2;
      T.de[1][1] = q.a * f.e1 - q.a * f.e4;
      T.de[1][2] = Vector4{};
      T.de[1][3] = q.a * f.e2;
      return T;
    }
  }
  throw InvalidInputError("unknown surface kind");
}

ConnectionTable connection_table_fd(const SurfaceSpec& spec, double t,
                                    double s, double h) {
  check_fd_alignment(spec, h);
  if (!spec.curve.s_domain.contains(s - h) ||
      !spec.curve.s_domain.contains(s + h) ||
      !spec.t_domain.contains(t - h) || !spec.t_domain.contains(t + h))
    throw StepError("finite-difference stencil leaves the domain");
  const FramePoint sp = frame(spec, t, s + h);
  const FramePoint sm = frame(spec, t, s - h);
  const FramePoint tp = frame(spec, t + h, s);
  const FramePoint tm = frame(spec, t - h, s);
  const FramePoint f0 = frame(spec, t, s);
  const Vector4 phi_t = (embed(spec, t + h, s) - embed(spec, t - h, s)) /
                        (2.0 * h);
  const double sigma = -inner(phi_t, f0.e2);
  if (!(sigma > 0.0)) degenerate("orbit speed must be positive", s);
  const Vector4* sps[4] = {&sp.e1, &sp.e2, &sp.e3, &sp.e4};
  const Vector4* sms[4] = {&sm.e1, &sm.e2, &sm.e3, &sm.e4};
  const Vector4* tps[4] = {&tp.e1, &tp.e2, &tp.e3, &tp.e4};
  const Vector4* tms[4] = {&tm.e1, &tm.e2, &tm.e3, &tm.e4};
  ConnectionTable T;
  for (int A = 0; A < 4; ++A) {
    T.de[0][A] = (*sps[A] - *sms[A]) / (2.0 * h);
    T.de[1][A] = (*tps[A] - *tms[A]) / (2.0 * h * sigma);
  }
  return T;
}

}  // namespace rotsurf
