#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace rotsurf {

// Vector in R^4 equipped with the flat metric diag(+1, +1, -1, -1).
struct Vector4 {
  std::array<double, 4> v{0.0, 0.0, 0.0, 0.0};

  constexpr Vector4() = default;
  constexpr Vector4(double a, double b, double c, double d) : v{a, b, c, d} {}

  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }

  Vector4& operator+=(const Vector4& o) {
    for (std::size_t i = 0; i < 4; ++i) v[i] += o.v[i];
    return *this;
  }
  Vector4& operator-=(const Vector4& o) {
    for (std::size_t i = 0; i < 4; ++i) v[i] -= o.v[i];
    return *this;
  }
  Vector4& operator*=(double k) {
    for (double& x : v) x *= k;
    return *this;
  }
};

inline Vector4 operator+(Vector4 a, const Vector4& b) { return a += b; }
inline Vector4 operator-(Vector4 a, const Vector4& b) { return a -= b; }
inline Vector4 operator*(double k, Vector4 a) { return a *= k; }
inline Vector4 operator*(Vector4 a, double k) { return a *= k; }
inline Vector4 operator/(Vector4 a, double k) { return a *= (1.0 / k); }
inline Vector4 operator-(const Vector4& a) { return -1.0 * a; }

// Metric signs of the four coordinate axes.
inline constexpr std::array<double, 4> kMetricSigns{1.0, 1.0, -1.0, -1.0};

// Indefinite inner product <u,v> = u1 v1 + u2 v2 - u3 v3 - u4 v4.
inline double inner(const Vector4& a, const Vector4& b) {
  return a[0] * b[0] + a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

// Euclidean norm of the raw coordinates (used for tolerances, not geometry).
inline double coordinate_norm(const Vector4& a) {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
}

inline double coordinate_norm_inf(const Vector4& a) {
  double m = 0.0;
  for (double x : a.v) m = std::max(m, std::abs(x));
  return m;
}

enum class CausalCharacter { Spacelike, Timelike, Lightlike, Zero };

// Classifies v by the sign of <v,v>. A vector counts as lightlike when
// |<v,v>| <= tol * max(1, coordinate_norm(v)^2) but the vector itself is not
// (coordinate-)zero at the same relative tolerance.
CausalCharacter causal_character(const Vector4& v, double tol = 1e-12);

// Bivector coordinates in the ordered basis
// (e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4).
struct Bivector6 {
  std::array<double, 6> c{0.0, 0.0, 0.0, 0.0, 0.0, 0.0};

  constexpr Bivector6() = default;
  constexpr Bivector6(double c12, double c13, double c14, double c23,
                      double c24, double c34)
      : c{c12, c13, c14, c23, c24, c34} {}

  double& operator[](std::size_t i) { return c[i]; }
  double operator[](std::size_t i) const { return c[i]; }

  Bivector6& operator+=(const Bivector6& o) {
    for (std::size_t i = 0; i < 6; ++i) c[i] += o.c[i];
    return *this;
  }
  Bivector6& operator-=(const Bivector6& o) {
    for (std::size_t i = 0; i < 6; ++i) c[i] -= o.c[i];
    return *this;
  }
  Bivector6& operator*=(double k) {
    for (double& x : c) x *= k;
    return *this;
  }
};

inline Bivector6 operator+(Bivector6 a, const Bivector6& b) { return a += b; }
inline Bivector6 operator-(Bivector6 a, const Bivector6& b) { return a -= b; }
inline Bivector6 operator*(double k, Bivector6 a) { return a *= k; }
inline Bivector6 operator*(Bivector6 a, double k) { return a *= k; }
inline Bivector6 operator-(const Bivector6& a) { return -1.0 * a; }

// Metric signs induced on the bivector basis: <ei^ej, ei^ej> = eps_i * eps_j.
inline constexpr std::array<double, 6> kBivectorSigns{1.0, -1.0, -1.0,
                                                      -1.0, -1.0, 1.0};

// Exterior product; coordinate (i,j) is u_i v_j - u_j v_i.
Bivector6 wedge(const Vector4& u, const Vector4& v);

// Induced inner product on bivectors; on decomposable elements it satisfies
// <a^b, c^d> = <a,c><b,d> - <a,d><b,c>.
double inner(const Bivector6& a, const Bivector6& b);

double coordinate_norm(const Bivector6& a);
double coordinate_norm_inf(const Bivector6& a);

}  // namespace rotsurf
