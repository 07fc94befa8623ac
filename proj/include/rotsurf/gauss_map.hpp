#pragma once

#include "rotsurf/pseudo_algebra.hpp"
#include "rotsurf/rotational_surfaces.hpp"

namespace rotsurf {

// Components of the Gauss map Laplacian in the moving bivector frame:
// Delta G = L e1^e2 + M e2^e3 + N e2^e4. L, M, N depend on s only.
struct LaplacianCoeffs {
  double L = 0, M = 0, N = 0;
};

// Gauss map G = e1 ^ e2; satisfies <G, G> = -1 on all three kinds.
Bivector6 gauss_map(const SurfaceSpec& spec, double t, double s);

LaplacianCoeffs laplacian_coeffs(const SurfaceSpec& spec, double s);

struct GaussMapSample {
  Bivector6 G;
  LaplacianCoeffs coeffs;
  Bivector6 deltaG;  // ambient bivector coordinates of the Laplacian
};

// Closed-form Gauss map, Laplacian coefficients, and the assembled ambient
// Laplacian at one point.
GaussMapSample laplacian_gauss_map(const SurfaceSpec& spec, double t,
                                   double s);

// Laplacian of the Gauss map straight from its definition: second
// derivatives of G along the orthonormal tangents minus the tangential
// connection correction, by central differences with steps h and h/2 and one
// Richardson extrapolation. Uses only embed() and frame(). Requires the
// point to sit at least 2h inside both domains.
Bivector6 laplacian_oracle(const SurfaceSpec& spec, double t, double s,
                           double h);

}  // namespace rotsurf
