#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotsurf/pseudo_algebra.hpp"

namespace rotsurf {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double s, double slack = 1e-12) const {
    return s >= lo - slack && s <= hi + slack;
  }
};

// Evenly spaced points over the interval, shrunk on both sides by
// margin_fraction of its length. count == 1 gives the midpoint.
std::vector<double> uniform_grid(Interval domain, int count,
                                 double margin_fraction = 0.0);

// Which one-parameter rotation group acts on the surface: rotations of a
// spacelike plane, boosts of a timelike plane, or the parabolic (null-axis)
// screw motions.
enum class SurfaceKind { Elliptic, Hyperbolic, Parabolic };

// Built-in profile-curve families. The named ones are exactly the curves for
// which the Gauss-map Laplacian degenerates (flat surfaces, proportional or
// affine Laplacian); Custom wraps a user-supplied sampled curve.
enum class CurveFamily {
  EllipticCircle,     // planar circular arc at constant rotation radius
  EllipticSpiral,     // radius linear in arclength, planar angle ~ log radius
  HyperbolicBranch,   // hyperbola branch in the (x2,x4) plane, constant x1
  HyperbolicSpiral,   // x1 linear in arclength, hyperbolic angle ~ log x1
  ParabolicLog,       // p linear in arclength, x1 slope logarithmic in p
  Custom,             // uniform sample table, derivatives by finite differences
};

SurfaceKind kind_of(CurveFamily family);

// Uniformly spaced samples of a profile curve, standard coordinates. The
// table must extend at least three nodes past each end of the declared
// domain so the interior finite-difference stencils stay inside it.
struct CurveTable {
  SurfaceKind kind = SurfaceKind::Elliptic;
  double s0 = 0.0;       // parameter of the first node
  double spacing = 0.0;  // node spacing, > 0
  std::vector<Vector4> x;
};

// A profile curve: either a named family with parameters or a sample table.
struct CurveSpec {
  CurveFamily family = CurveFamily::Custom;
  std::map<std::string, double> params;
  Interval s_domain;
  std::optional<CurveTable> table;  // Custom only

  SurfaceKind kind() const;

  // Throws InvalidInputError or AdmissibilityError when the parameters
  // violate the family's constraints or the table is unusable.
  void validate() const;
};

// Position and first three derivatives with respect to arclength.
struct CurveJet {
  Vector4 x;
  Vector4 d1;
  Vector4 d2;
  Vector4 d3;
};

// The same jet split along (eps1, xi2, xi3, eps4) where xi2, xi3 span the
// null plane of the parabolic rotation: xi2 = (eps2+eps3)/sqrt2,
// xi3 = (-eps2+eps3)/sqrt2, <xi2,xi3> = -1. Arrays hold value, d1, d2, d3.
struct NullSplitJet {
  std::array<double, 4> x1{};
  std::array<double, 4> p{};
  std::array<double, 4> q{};
  std::array<double, 4> x4{};
};

CurveJet evaluate_jet(const CurveSpec& spec, double s);
NullSplitJet null_split(const CurveJet& jet);

// Sampled curves evaluate jets at the nearest table node; returns that
// node's parameter. Closed-form families return s unchanged.
double jet_anchor(const CurveSpec& spec, double s);

struct UnitSpeedReport {
  double max_residual = 0.0;  // max |<x', x'> - 1| over the grid
  double worst_s = 0.0;
  double tol = 0.0;
  bool pass = false;
};

UnitSpeedReport check_unit_speed(const CurveSpec& spec,
                                 const std::vector<double>& grid,
                                 double tol = 1e-8);

struct AdmissibilityFlags {
  bool positive_radius = false;      // x3 > 0 / x1 > 0 / p > 0 per kind
  bool nondegenerate_normal = false; // frame denominator bounded away from 0
  std::optional<double> epsilon;     // hyperbolic: sign of (x1')^2 - 1
  bool pass() const { return positive_radius && nondegenerate_normal; }
};

AdmissibilityFlags admissibility(const CurveSpec& spec, double s);

// Builds a uniform table over [domain.lo - pad, domain.hi + pad] from an
// exact position callback, pad being four spacings.
CurveSpec sampled_profile(SurfaceKind kind, Interval s_domain, double spacing,
                          const std::function<Vector4(double)>& position);

}  // namespace rotsurf
