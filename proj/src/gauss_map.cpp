#include "rotsurf/gauss_map.hpp"

#include <cmath>

#include "rotsurf/errors.hpp"

namespace rotsurf {
namespace {

// One pass of the defining sum at step h: second derivatives of G along the
// unit tangents, corrected by the tangential connection, with the metric
// signs (+1, -1) of (e1, e2).
Bivector6 laplacian_definition_pass(const SurfaceSpec& spec, double t,
                                    double s, double h) {
  const auto G = [&](double tt, double ss) {
    const FramePoint f = frame(spec, tt, ss);
    return wedge(f.e1, f.e2);
  };
  const Bivector6 G0 = G(t, s);
  const Bivector6 Gsp = G(t, s + h), Gsm = G(t, s - h);
  const Bivector6 Gtp = G(t + h, s), Gtm = G(t - h, s);
  const Bivector6 G_ss = (Gsp - 2.0 * G0 + Gsm) * (1.0 / (h * h));
  const Bivector6 G_tt = (Gtp - 2.0 * G0 + Gtm) * (1.0 / (h * h));
  const Bivector6 G_s = (Gsp - Gsm) * (1.0 / (2.0 * h));
  const Bivector6 G_t = (Gtp - Gtm) * (1.0 / (2.0 * h));

  const FramePoint f0 = frame(spec, t, s);
  const Vector4 phi_t =
      (embed(spec, t + h, s) - embed(spec, t - h, s)) / (2.0 * h);
  const double sigma = -inner(phi_t, f0.e2);

  const FramePoint fsp = frame(spec, t, s + h), fsm = frame(spec, t, s - h);
  const FramePoint ftp = frame(spec, t + h, s), ftm = frame(spec, t - h, s);
  const Vector4 accel1 = (fsp.e1 - fsm.e1) / (2.0 * h);
  const Vector4 accel2 = (ftp.e2 - ftm.e2) / (2.0 * h * sigma);

  const auto dG_along = [&](const Vector4& v) {
    const double alpha = f0.signs[0] * inner(v, f0.e1);
    const double beta = f0.signs[1] * inner(v, f0.e2);
    return alpha * G_s + beta * (G_t * (1.0 / sigma));
  };

  const Bivector6 term1 = G_ss - dG_along(accel1);
  const Bivector6 term2 = G_tt * (1.0 / (sigma * sigma)) - dG_along(accel2);
  return -1.0 * (f0.signs[0] * term1 + f0.signs[1] * term2);
}

}  // namespace

Bivector6 gauss_map(const SurfaceSpec& spec, double t, double s) {
  const FramePoint f = frame(spec, t, s);
  return wedge(f.e1, f.e2);
}

LaplacianCoeffs laplacian_coeffs(const SurfaceSpec& spec, double s) {
  const InvariantJet q = invariant_jet(spec, s);
  LaplacianCoeffs out;
  switch (spec.kind) {
    case SurfaceKind::Elliptic:
      out.L = q.d * q.d - q.b * q.b - q.c * q.c;
      out.M = q.dd + q.a * q.d * (q.b + q.c);
      out.N = q.db + q.dc + q.a * q.d * q.d;
      return out;
    case SurfaceKind::Hyperbolic: {
      const double e = q.epsilon;
      out.L = e * (q.d * q.d - q.c * q.c - q.b * q.b);
      out.M = e * (q.dd + e * q.a * q.d * (q.c + e * q.b));
      out.N = -e * (q.dc + e * q.db + e * q.a * q.d * q.d);
      return out;
    }
    case SurfaceKind::Parabolic:
      out.L = q.c * q.c - q.a * q.a - q.b * q.b;
      out.M = q.dc + q.c * (q.a + q.b);
      out.N = q.c * q.c + q.da + q.db;
      return out;
  }
  throw InvalidInputError("unknown surface kind");
}

GaussMapSample laplacian_gauss_map(const SurfaceSpec& spec, double t,
                                   double s) {
  const FramePoint f = frame(spec, t, s);
  GaussMapSample out;
  out.G = wedge(f.e1, f.e2);
  out.coeffs = laplacian_coeffs(spec, s);
  out.deltaG = out.coeffs.L * out.G + out.coeffs.M * wedge(f.e2, f.e3) +
               out.coeffs.N * wedge(f.e2, f.e4);
  return out;
}

Bivector6 laplacian_oracle(const SurfaceSpec& spec, double t, double s,
                           double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw StepError("step must be positive");
  const double slack_s = 1e-9 * std::max(1.0, std::abs(s));
  const double slack_t = 1e-9 * std::max(1.0, std::abs(t));
  if (!spec.curve.s_domain.contains(s - 2.0 * h, slack_s) ||
      !spec.curve.s_domain.contains(s + 2.0 * h, slack_s) ||
      !spec.t_domain.contains(t - 2.0 * h, slack_t) ||
      !spec.t_domain.contains(t + 2.0 * h, slack_t))
    throw StepError("oracle stencil needs a margin of 2h inside both domains");
  if (spec.curve.family == CurveFamily::Custom) {
    const double sp = spec.curve.table->spacing;
    const double ratio = h / (2.0 * sp);
    if (std::abs(ratio - std::round(ratio)) > 1e-9 || ratio < 0.5)
      throw StepError(
          "oracle steps on sampled curves must be even multiples of the node "
          "spacing");
  }
  const Bivector6 coarse = laplacian_definition_pass(spec, t, s, h);
  const Bivector6 fine = laplacian_definition_pass(spec, t, s, 0.5 * h);
  return (4.0 * fine - coarse) * (1.0 / 3.0);
}

}  // namespace rotsurf
