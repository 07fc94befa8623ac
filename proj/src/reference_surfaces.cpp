#include "rotsurf/reference_surfaces.hpp"

#include <cmath>

#include "rotsurf/quadrature.hpp"

namespace rotsurf {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;

SurfaceSpec finish(SurfaceKind kind, CurveSpec curve, Interval t_domain) {
  SurfaceSpec spec;
  spec.kind = kind;
  spec.curve = std::move(curve);
  spec.t_domain = t_domain;
  spec.validate();
  return spec;
}

}  // namespace

SurfaceSpec elliptic_circle_surface(double delta1, double delta2,
                                    double delta3, Interval s_domain,
                                    Interval t_domain) {
  CurveSpec c;
  c.family = CurveFamily::EllipticCircle;
  c.params = {{"delta1", delta1}, {"delta2", delta2}, {"delta3", delta3}};
  c.s_domain = s_domain;
  return finish(SurfaceKind::Elliptic, std::move(c), t_domain);
}

SurfaceSpec elliptic_spiral_surface(double lambda1, double lambda2,
                                    double lambda3, double lambda4,
                                    Interval s_domain, Interval t_domain) {
  CurveSpec c;
  c.family = CurveFamily::EllipticSpiral;
  c.params = {{"lambda1", lambda1},
              {"lambda2", lambda2},
              {"lambda3", lambda3},
              {"lambda4", lambda4}};
  c.s_domain = s_domain;
  return finish(SurfaceKind::Elliptic, std::move(c), t_domain);
}

SurfaceSpec hyperbolic_branch_surface(double delta1, double delta2,
                                      double delta3, Interval s_domain,
                                      Interval t_domain) {
  CurveSpec c;
  c.family = CurveFamily::HyperbolicBranch;
  c.params = {{"delta1", delta1}, {"delta2", delta2}, {"delta3", delta3}};
  c.s_domain = s_domain;
  return finish(SurfaceKind::Hyperbolic, std::move(c), t_domain);
}

SurfaceSpec hyperbolic_spiral_surface(double lambda1, double lambda2,
                                      double lambda3, double lambda4,
                                      Interval s_domain, Interval t_domain) {
  CurveSpec c;
  c.family = CurveFamily::HyperbolicSpiral;
  c.params = {{"lambda1", lambda1},
              {"lambda2", lambda2},
              {"lambda3", lambda3},
              {"lambda4", lambda4}};
  c.s_domain = s_domain;
  return finish(SurfaceKind::Hyperbolic, std::move(c), t_domain);
}

SurfaceSpec parabolic_log_surface(double mu1, double mu2, double mu4,
                                  double eps, Interval s_domain,
                                  Interval t_domain) {
  CurveSpec c;
  c.family = CurveFamily::ParabolicLog;
  c.params = {{"mu1", mu1}, {"mu2", mu2}, {"mu4", mu4}, {"eps", eps}};
  c.s_domain = s_domain;
  return finish(SurfaceKind::Parabolic, std::move(c), t_domain);
}

SurfaceSpec minimal_elliptic_surface(Interval t_domain) {
  const Interval dom{-0.6, 0.6};
  const auto pos = [](double s) {
    return Vector4{std::asin(s), 0.0, std::sqrt(1.0 - s * s), 0.0};
  };
  return finish(SurfaceKind::Elliptic,
                sampled_profile(SurfaceKind::Elliptic, dom, 5e-3, pos),
                t_domain);
}

SurfaceSpec minimal_hyperbolic_surface(Interval t_domain) {
  const Interval dom{-1.0, 1.0};
  const auto pos = [](double s) {
    return Vector4{std::sqrt(s * s + 1.0), std::asinh(s), 0.0, 0.0};
  };
  return finish(SurfaceKind::Hyperbolic,
                sampled_profile(SurfaceKind::Hyperbolic, dom, 5e-3, pos),
                t_domain);
}

SurfaceSpec spiral_counterexample_surface(Interval t_domain) {
  const Interval dom{0.0, 1.0};
  // Unit speed with x3 = s^2 + 1: the planar speed is W = sqrt(1 + 4 s^2)
  // and its direction turns at unit rate.
  const auto speed = [](double tau) { return std::sqrt(1.0 + 4.0 * tau * tau); };
  const auto pos = [speed](double s) {
    const double x1 = integrate(
        [speed](double tau) { return speed(tau) * std::cos(tau); }, 0.0, s);
    const double x2 = integrate(
        [speed](double tau) { return speed(tau) * std::sin(tau); }, 0.0, s);
    return Vector4{x1, x2, s * s + 1.0, 0.0};
  };
  return finish(SurfaceKind::Elliptic,
                sampled_profile(SurfaceKind::Elliptic, dom, 2e-3, pos),
                t_domain);
}

SurfaceSpec perturbed_parabolic_surface(double mu1, double mu2, double mu4,
                                        double eps, double gamma,
                                        Interval t_domain) {
  const Interval dom{0.0, 2.0};
  const auto slope = [=](double s) {
    return eps * std::log(mu1 * s + mu2) + mu4 + gamma * s * s;
  };
  const auto pos = [=](double s) {
    const double u = mu1 * s + mu2;
    const double x1 = (eps / mu1) * u * std::log(u) + (mu4 - eps) * s +
                      gamma * s * s * s / 3.0;
    const double p = u;
    const double q = integrate(
        [=](double tau) {
          const double v = slope(tau);
          return (v * v - 1.0) / (2.0 * mu1);
        },
        0.0, s);
    return Vector4{x1, (p - q) / kSqrt2, (p + q) / kSqrt2, 0.0};
  };
  return finish(SurfaceKind::Parabolic,
                sampled_profile(SurfaceKind::Parabolic, dom, 5e-3, pos),
                t_domain);
}

}  // namespace rotsurf
