#pragma once

#include <array>
#include <optional>

#include "rotsurf/profile_curves.hpp"
#include "rotsurf/pseudo_algebra.hpp"

namespace rotsurf {

// A rotational surface: a profile curve swept by the one-parameter group of
// its kind. t is the group parameter, s the profile arclength.
struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::Elliptic;
  CurveSpec curve;
  Interval t_domain{0.0, 1.0};

  // Validates the curve, the kind agreement, and (hyperbolic) that the
  // profile speed stays on one side of the light cone over the s-domain.
  void validate() const;
};

// Adapted orthonormal frame at one point: e1, e2 tangent, e3, e4 normal.
struct FramePoint {
  Vector4 e1, e2, e3, e4;
  std::array<double, 4> signs{};  // <e_i, e_i>
};

// The scalar invariants of the profile/surface pair at parameter s, together
// with their s-derivatives. d and its derivative are identically zero for
// parabolic surfaces; epsilon is +-1 for hyperbolic and +1 otherwise.
struct InvariantJet {
  double a = 0, b = 0, c = 0, d = 0;
  double da = 0, db = 0, dc = 0, dd = 0;
  double epsilon = 1.0;
};

// Derived pointwise quantities reported by the CLI.
struct InvariantSample {
  double s = 0;
  InvariantJet jet;
  std::array<double, 2> H{};  // mean curvature components along (e3, e4)
  double K = 0;               // Gaussian curvature
};

// Coefficients of the second fundamental form: h[r][i][k] is the component
// along the normal e_{3+r} evaluated on tangents (e_{1+i}, e_{1+k}).
struct SecondFundamental {
  std::array<std::array<std::array<double, 2>, 2>, 2> h{};
};

// Ambient derivatives of the four frame fields along the unit tangents:
// de[i][A] is the derivative of e_{A+1} in the direction e_{i+1}.
struct ConnectionTable {
  std::array<std::array<Vector4, 4>, 2> de{};
};

Vector4 embed(const SurfaceSpec& spec, double t, double s);
FramePoint frame(const SurfaceSpec& spec, double t, double s);

InvariantJet invariant_jet(const SurfaceSpec& spec, double s);
InvariantSample scalar_invariants(const SurfaceSpec& spec, double s);
SecondFundamental second_fundamental(const SurfaceSpec& spec, double s);

// Mean curvature vector by tracing the second fundamental form against the
// tangent metric signs (ambient coordinates).
Vector4 mean_curvature_via_trace(const SurfaceSpec& spec, double t, double s);

// Gaussian curvature as the signed determinant contraction of the second
// fundamental form.
double gaussian_curvature_via_form(const SurfaceSpec& spec, double s);

// Speed of the group orbit: phi_t = sigma(s) * e2 with sigma > 0.
double rotation_speed(const SurfaceSpec& spec, double s);

// Frame derivatives from the closed-form connection coefficients.
ConnectionTable connection_table(const SurfaceSpec& spec, double t, double s);

// The same table measured by central differences of the frame fields; uses
// only embed() and frame().
ConnectionTable connection_table_fd(const SurfaceSpec& spec, double t,
                                    double s, double h);

}  // namespace rotsurf
