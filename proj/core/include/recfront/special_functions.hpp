#pragma once

#include <vector>

namespace recfront {

// Euler-Mascheroni constant and zeta(2..9), 18 significant digits.
inline constexpr double kEulerGamma = 0.577215664901532861;

// kZeta[k] = zeta(k); entries 0 and 1 are unused.
inline constexpr double kZeta[10] = {
    0.0,
    0.0,
    1.64493406684822644,
    1.20205690315959429,
    1.08232323371113819,
    1.03692775514336993,
    1.01734306198444914,
    1.00834927738192283,
    1.00407735619794434,
    1.00200839282608221,
};

// psi^{(k)}(m) at integer m >= 1:
//   psi(m) = -gamma + H_{m-1}
//   psi^{(k)}(m) = (-1)^{k+1} k! (zeta(k+1) - H_{m-1}^{(k+1)}),  k >= 1.
// The zeta table limits k to 8.
double polygamma_int(int k, int m);

// Derivatives of Gamma at a positive integer.
struct GammaDerivatives {
  int m = 1;
  std::vector<double> values;  // values[k] = Gamma^{(k)}(m), k = 0..K
};

// All derivatives up to order kmax <= 8, via the complete Bell-polynomial
// recurrence for derivatives of exp(ln Gamma):
//   g_0 = (m-1)!,  g_{r+1} = sum_{i=0..r} C(r,i) psi^{(i)}(m) g_{r-i}.
GammaDerivatives gamma_derivatives(int m, int kmax);

// Gamma^{(k)}(m); k <= 8.
double gamma_derivative_int(int k, int m);

}  // namespace recfront
