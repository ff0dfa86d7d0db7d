#include "recfront/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace recfront {

namespace {

double harmonic_pow(int m, int k) {
  // H_{m-1}^{(k)} in double; m is small (coefficient depth), exact enough
  double s = 0.0;
  for (int i = m - 1; i >= 1; --i) s += 1.0 / std::pow(static_cast<double>(i), k);
  return s;
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial_d(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

double polygamma_int(int k, int m) {
  if (k < 0) throw std::invalid_argument("polygamma_int: k must be >= 0");
  if (m < 1) throw std::invalid_argument("polygamma_int: m must be >= 1");
  if (k == 0) {
    double h = 0.0;
    for (int i = m - 1; i >= 1; --i) h += 1.0 / static_cast<double>(i);
    return -kEulerGamma + h;
  }
  if (k > 8) throw std::invalid_argument("polygamma_int: zeta table covers k <= 8");
  double tail = kZeta[k + 1] - harmonic_pow(m, k + 1);
  double sign = k % 2 == 1 ? 1.0 : -1.0;
  return sign * factorial_d(k) * tail;
}

GammaDerivatives gamma_derivatives(int m, int kmax) {
  if (m < 1) throw std::invalid_argument("gamma_derivatives: m must be >= 1");
  if (kmax < 0 || kmax > 8) throw std::invalid_argument("gamma_derivatives: order must be in 0..8");
  GammaDerivatives g;
  g.m = m;
  g.values.assign(static_cast<std::size_t>(kmax) + 1, 0.0);
  g.values[0] = factorial_d(m - 1);
  std::vector<double> psi(static_cast<std::size_t>(kmax), 0.0);
  for (int i = 0; i < kmax; ++i) psi[static_cast<std::size_t>(i)] = polygamma_int(i, m);
  for (int r = 0; r < kmax; ++r) {
    double s = 0.0;
    for (int i = 0; i <= r; ++i)
      s += binomial_d(r, i) * psi[static_cast<std::size_t>(i)] *
           g.values[static_cast<std::size_t>(r - i)];
    g.values[static_cast<std::size_t>(r) + 1] = s;
  }
  return g;
}

double gamma_derivative_int(int k, int m) {
  if (k < 0 || k > 8) throw std::invalid_argument("gamma_derivative_int: k must be in 0..8");
  return gamma_derivatives(m, k).values[static_cast<std::size_t>(k)];
}

}  // namespace recfront
