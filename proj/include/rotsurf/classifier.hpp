#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rotsurf/gauss_map.hpp"
#include "rotsurf/pseudo_algebra.hpp"
#include "rotsurf/rotational_surfaces.hpp"

namespace rotsurf {

// Classification of the Gauss map by its Laplacian:
//   Harmonic        Delta G = 0 everywhere sampled
//   FirstKind       Delta G = f G with f nonconstant allowed, C = 0
//   SecondKind      Delta G = f (G + C), C != 0, f nonconstant
//   GlobalOneType   Delta G = f (G + C) with f constant
//   NotOneType      no scalar/constant-vector pair fits
enum class Verdict { Harmonic, FirstKind, SecondKind, GlobalOneType, NotOneType };

std::string to_string(Verdict v);

struct RecoverOptions {
  // Samples with coordinate_norm(dG) <= floor * max(1, coordinate_norm(G))
  // are treated as exactly harmonic and excluded from the fit.
  double harmonic_floor = 1e-9;
};

struct RecoverResult {
  std::vector<double> f;  // per input sample; 0 for excluded samples
  Bivector6 C;
  double residual = 0.0;  // max_i ||dG_i - f_i (G_i + C)|| / max_i ||dG_i||
  bool rank_deficient = false;
  int active_samples = 0;
};

// Least-squares fit of Delta G_i = f_i (G_i + C) over the samples: solves
// u_i dG_i - C = G_i for (u_1..u_m, C) with u_i = 1/f_i, via SVD (minimal
// norm when rank-deficient). Requires at least 3 samples above the harmonic
// floor.
RecoverResult recover_f_and_C(const std::vector<Bivector6>& G,
                              const std::vector<Bivector6>& dG,
                              const RecoverOptions& opts = {});

struct ClassifyOptions {
  double residual_threshold = 1e-4;
  double c_tol = 1e-6;        // ||C||_inf <= c_tol * max(1, max ||G||_inf)
  double f_const_tol = 1e-6;  // stdev(f) <= f_const_tol * |mean(f)|
  double harmonic_floor = 1e-9;
  bool use_oracle = false;  // measure the Laplacian by finite differences
  double oracle_h = 1e-3;
  // On the oracle path every tolerance above is widened by this factor.
  double oracle_widening = 100.0;
};

struct FormulaMatch {
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
};

struct ClassificationResult {
  Verdict verdict = Verdict::NotOneType;
  double t_fixed = 0.0;
  std::vector<double> s_samples;
  std::vector<double> f_samples;  // 0 where below the harmonic floor
  Bivector6 C;
  double residual = 0.0;
  double max_deltaG_norm = 0.0;
  bool rank_deficient = false;
  std::optional<FormulaMatch> formula_match;
};

// Samples the Laplacian over the s-grid at fixed t and classifies. The
// optional reference is compared against the recovered f on the samples
// above the harmonic floor.
ClassificationResult classify(
    const SurfaceSpec& spec, const std::vector<double>& s_grid, double t_fixed,
    const ClassifyOptions& opts = {},
    const std::function<double(double)>& f_reference = nullptr);

struct ParallelHReport {
  bool parallel = false;
  double max_coeff = 0.0;  // max over the grid of max(|M|, |N|)
  double tol = 0.0;
};

// The mean curvature vector is parallel in the normal bundle exactly when
// both non-tangent Laplacian coefficients vanish.
ParallelHReport is_parallel_mean_curvature(const SurfaceSpec& spec,
                                           const std::vector<double>& s_grid,
                                           double tol = 1e-8);

}  // namespace rotsurf
