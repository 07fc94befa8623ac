#pragma once

#include "rotsurf/profile_curves.hpp"
#include "rotsurf/rotational_surfaces.hpp"

namespace rotsurf {

// Canonical built-in instances used by the theorem harness and tests.
SurfaceSpec elliptic_circle_surface(double delta1, double delta2,
                                    double delta3, Interval s_domain,
                                    Interval t_domain);
SurfaceSpec elliptic_spiral_surface(double lambda1, double lambda2,
                                    double lambda3, double lambda4,
                                    Interval s_domain, Interval t_domain);
SurfaceSpec hyperbolic_branch_surface(double delta1, double delta2,
                                      double delta3, Interval s_domain,
                                      Interval t_domain);
SurfaceSpec hyperbolic_spiral_surface(double lambda1, double lambda2,
                                      double lambda3, double lambda4,
                                      Interval s_domain, Interval t_domain);
SurfaceSpec parabolic_log_surface(double mu1, double mu2, double mu4,
                                  double eps, Interval s_domain,
                                  Interval t_domain);

// Sampled-curve fixtures outside the named families.

// Minimal elliptic surface: profile (arcsin s, 0, sqrt(1-s^2), 0); the mean
// curvature vector vanishes and Delta G = L G with L = -2/(1-s^2)^2.
SurfaceSpec minimal_elliptic_surface(Interval t_domain);

// Minimal hyperbolic surface: profile (sqrt(s^2+1), asinh s, 0, 0).
SurfaceSpec minimal_hyperbolic_surface(Interval t_domain);

// Elliptic surface with x3 = s^2 + 1 and a rotating planar direction; its
// Laplacian has a nonvanishing e2^e3 component, so the Gauss map is not of
// 1-type and H is not parallel.
SurfaceSpec spiral_counterexample_surface(Interval t_domain);

// Flat parabolic surface that is not in the log family: the slope of x1
// carries an extra gamma * s^2 term while q keeps the curve unit speed.
// Flat (b = 0 still) but no longer harmonic.
SurfaceSpec perturbed_parabolic_surface(double mu1, double mu2, double mu4,
                                        double eps, double gamma,
                                        Interval t_domain);

}  // namespace rotsurf
