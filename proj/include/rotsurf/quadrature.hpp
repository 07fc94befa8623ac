#pragma once

#include <functional>

namespace rotsurf {

// Adaptive Simpson integration of f over [a, b] to absolute accuracy eps.
// a > b is allowed and gives the signed integral.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double eps = 1e-12);

}  // namespace rotsurf
