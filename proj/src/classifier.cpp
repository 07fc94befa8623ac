#include "rotsurf/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "rotsurf/errors.hpp"

namespace rotsurf {
namespace {

std::vector<std::size_t> active_indices(const std::vector<Bivector6>& G,
                                        const std::vector<Bivector6>& dG,
                                        double floor) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < dG.size(); ++i) {
    if (coordinate_norm(dG[i]) >
        floor * std::max(1.0, coordinate_norm(G[i])))
      idx.push_back(i);
  }
  return idx;
}

double fit_residual(const std::vector<Bivector6>& G,
                    const std::vector<Bivector6>& dG,
                    const std::vector<double>& f, const Bivector6& C) {
  double den = 0.0;
  for (const Bivector6& g : dG) den = std::max(den, coordinate_norm(g));
  if (den == 0.0) return 0.0;
  double num = 0.0;
  for (std::size_t i = 0; i < dG.size(); ++i)
    num = std::max(num, coordinate_norm(dG[i] - f[i] * (G[i] + C)));
  return num / den;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Harmonic: return "harmonic";
    case Verdict::FirstKind: return "first_kind";
    case Verdict::SecondKind: return "second_kind";
    case Verdict::GlobalOneType: return "global_one_type";
    case Verdict::NotOneType: return "not_one_type";
  }
  return "unknown";
}

RecoverResult recover_f_and_C(const std::vector<Bivector6>& G,
                              const std::vector<Bivector6>& dG,
                              const RecoverOptions& opts) {
  if (G.size() != dG.size())
    throw InvalidInputError("sample vectors must have equal length");
  if (G.empty()) throw InsufficientSamplesError("no samples given");
  const std::vector<std::size_t> active =
      active_indices(G, dG, opts.harmonic_floor);
  if (active.size() < 3) {
    throw InsufficientSamplesError(
        "the fit needs at least 3 samples above the harmonic floor, got " +
        std::to_string(active.size()));
  }
  const auto m = static_cast<Eigen::Index>(active.size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(6 * m, m + 6);
  Eigen::VectorXd rhs(6 * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Bivector6& g = G[active[static_cast<std::size_t>(i)]];
    const Bivector6& dg = dG[active[static_cast<std::size_t>(i)]];
    for (Eigen::Index k = 0; k < 6; ++k) {
      A(6 * i + k, i) = dg[static_cast<std::size_t>(k)];
      A(6 * i + k, m + k) = -1.0;
      rhs(6 * i + k) = g[static_cast<std::size_t>(k)];
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(A,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd x = svd.solve(rhs);
  RecoverResult out;
  out.rank_deficient = svd.rank() < m + 6;
  out.active_samples = static_cast<int>(active.size());
  for (int k = 0; k < 6; ++k)
    out.C[static_cast<std::size_t>(k)] = x(m + k);
  out.f.assign(G.size(), 0.0);
  for (Eigen::Index i = 0; i < m; ++i) {
    double u = x(i);
    if (std::abs(u) < 1e-300) u = u < 0.0 ? -1e-300 : 1e-300;
    out.f[active[static_cast<std::size_t>(i)]] = 1.0 / u;
  }
  out.residual = fit_residual(G, dG, out.f, out.C);
  return out;
}

ClassificationResult classify(const SurfaceSpec& spec,
                              const std::vector<double>& s_grid,
                              double t_fixed, const ClassifyOptions& opts,
                              const std::function<double(double)>& f_reference) {
  if (s_grid.empty()) throw InvalidInputError("classification needs samples");
  ClassificationResult res;
  res.t_fixed = t_fixed;
  std::vector<Bivector6> G, dG;
  G.reserve(s_grid.size());
  dG.reserve(s_grid.size());
  for (double s : s_grid) {
    res.s_samples.push_back(jet_anchor(spec.curve, s));
    if (opts.use_oracle) {
      G.push_back(gauss_map(spec, t_fixed, s));
      dG.push_back(laplacian_oracle(spec, t_fixed, s, opts.oracle_h));
    } else {
      const GaussMapSample gm = laplacian_gauss_map(spec, t_fixed, s);
      G.push_back(gm.G);
      dG.push_back(gm.deltaG);
    }
  }
  const double widen = opts.use_oracle ? opts.oracle_widening : 1.0;
  const double floor = opts.harmonic_floor * widen;
  for (const Bivector6& g : dG)
    res.max_deltaG_norm = std::max(res.max_deltaG_norm, coordinate_norm(g));

  const auto finish_match = [&](const std::vector<double>& f,
                                const std::vector<std::size_t>& over) {
    if (!f_reference) return;
    FormulaMatch fm;
    for (std::size_t i : over) {
      const double ref = f_reference(res.s_samples[i]);
      const double abs_err = std::abs(f[i] - ref);
      fm.max_abs_err = std::max(fm.max_abs_err, abs_err);
      fm.max_rel_err =
          std::max(fm.max_rel_err, abs_err / std::max(std::abs(ref), 1e-12));
    }
    res.formula_match = fm;
  };

  const std::vector<std::size_t> active = active_indices(G, dG, floor);
  if (active.empty()) {
    res.verdict = Verdict::Harmonic;
    res.f_samples.assign(s_grid.size(), 0.0);
    std::vector<std::size_t> all(s_grid.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    finish_match(res.f_samples, all);
    return res;
  }

  RecoverOptions ropts;
  ropts.harmonic_floor = floor;
  const RecoverResult fit = recover_f_and_C(G, dG, ropts);
  res.f_samples = fit.f;
  res.C = fit.C;
  res.residual = fit.residual;
  res.rank_deficient = fit.rank_deficient;
  finish_match(fit.f, active);

  double scaleG = 1.0;
  for (const Bivector6& g : G)
    scaleG = std::max(scaleG, coordinate_norm_inf(g));

  if (fit.residual > opts.residual_threshold * widen) {
    res.verdict = Verdict::NotOneType;
    return res;
  }
  if (coordinate_norm_inf(res.C) <= opts.c_tol * widen * scaleG) {
    res.verdict = Verdict::FirstKind;
    return res;
  }
  double mean = 0.0;
  for (std::size_t i : active) mean += fit.f[i];
  mean /= static_cast<double>(active.size());
  double var = 0.0;
  for (std::size_t i : active) {
    const double dev = fit.f[i] - mean;
    var += dev * dev;
  }
  const double sd = std::sqrt(var / static_cast<double>(active.size()));
  if (sd <= opts.f_const_tol * widen * std::max(std::abs(mean), 1e-12))
    res.verdict = Verdict::GlobalOneType;
  else
    res.verdict = Verdict::SecondKind;
  return res;
}

ParallelHReport is_parallel_mean_curvature(const SurfaceSpec& spec,
                                           const std::vector<double>& s_grid,
                                           double tol) {
  ParallelHReport rep;
  rep.tol = tol;
  for (double s : s_grid) {
    const LaplacianCoeffs lc = laplacian_coeffs(spec, s);
    rep.max_coeff =
        std::max({rep.max_coeff, std::abs(lc.M), std::abs(lc.N)});
  }
  rep.parallel = rep.max_coeff <= tol;
  return rep;
}

}  // namespace rotsurf
