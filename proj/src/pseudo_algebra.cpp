#include "rotsurf/pseudo_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace rotsurf {

CausalCharacter causal_character(const Vector4& v, double tol) {
  const double n = coordinate_norm(v);
  if (n <= tol) return CausalCharacter::Zero;
  const double q = inner(v, v);
  if (std::abs(q) <= tol * std::max(1.0, n * n)) return CausalCharacter::Lightlike;
  return q > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

Bivector6 wedge(const Vector4& u, const Vector4& v) {
  return Bivector6{
      u[0] * v[1] - u[1] * v[0],  // e1^e2
      u[0] * v[2] - u[2] * v[0],  // e1^e3
      u[0] * v[3] - u[3] * v[0],  // e1^e4
      u[1] * v[2] - u[2] * v[1],  // e2^e3
      u[1] * v[3] - u[3] * v[1],  // e2^e4
      u[2] * v[3] - u[3] * v[2],  // e3^e4
  };
}

double inner(const Bivector6& a, const Bivector6& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 6; ++i) sum += kBivectorSigns[i] * a[i] * b[i];
  return sum;
}

double coordinate_norm(const Bivector6& a) {
  double sum = 0.0;
  for (double x : a.c) sum += x * x;
  return std::sqrt(sum);
}

double coordinate_norm_inf(const Bivector6& a) {
  double m = 0.0;
  for (double x : a.c) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace rotsurf
