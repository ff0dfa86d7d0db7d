#include "recfront/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "recfront/exact_expectations.hpp"
#include "recfront/special_functions.hpp"

namespace recfront {

namespace {

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

double a_coefficient(int d, int j) {
  if (d < 1) throw std::invalid_argument("a_coefficient: d must be >= 1");
  if (j < 0 || j >= d) throw std::invalid_argument("a_coefficient: j must be in 0..d-1");
  double denom = factorial_d(d - 1 - j);
  double s = 0.0;
  double kfact = 1.0;
  for (int k = 0; k <= j; ++k) {
    if (k > 0) kfact *= k;
    double term = binomial_d(d, d - j + k) * gamma_derivative_int(k, d - j + k) / (kfact * denom);
    s += k % 2 == 0 ? term : -term;
  }
  return s;
}

double iota_hat(int d, double n) {
  if (d < 1) throw std::invalid_argument("iota_hat: d must be >= 1");
  if (!(n >= 3.0)) throw std::invalid_argument("iota_hat: n must be >= 3");
  double ln_n = std::log(n);
  GammaDerivatives g = gamma_derivatives(d, d - 1);
  double s = 0.0;
  double jfact = 1.0;
  for (int j = 0; j < d; ++j) {
    if (j > 0) jfact *= j;
    double term = g.values[static_cast<std::size_t>(j)] / (jfact * factorial_d(d - 1 - j)) *
                  std::pow(ln_n, static_cast<double>(d - 1 - j));
    s += j % 2 == 0 ? term : -term;
  }
  return s;
}

double expected_gamma_asymptotic(int d, double n) {
  if (d < 1) throw std::invalid_argument("expected_gamma_asymptotic: d must be >= 1");
  if (!(n >= 3.0)) throw std::invalid_argument("expected_gamma_asymptotic: n must be >= 3");
  double ln_n = std::log(n);
  double s = 0.0;
  for (int j = 0; j < d; ++j)
    s += a_coefficient(d, j) * std::pow(ln_n, static_cast<double>(d - 1 - j));
  return s;
}

BoundaryValues boundary_eval(const BoundarySpec& spec, int d, double n) {
  if (d < 1) throw std::invalid_argument("boundary_eval: d must be >= 1");
  if (!(n >= 16.0)) throw std::invalid_argument("boundary_eval: n must be >= 16 for iterated logs");
  double l2 = std::log(std::log(n));
  double l3 = std::log(l2);
  double c_n;
  if (spec.form == BoundarySpec::Form::C) {
    if (!(spec.value > 0.0)) throw std::invalid_argument("boundary_eval: c must be > 0");
    c_n = spec.value;
  } else {
    if (d < 2) throw std::invalid_argument("boundary_eval: a form requires d >= 2");
    c_n = static_cast<double>(d - 1) * std::exp(-spec.value / l2);
  }
  BoundaryValues v;
  v.c_n = c_n;
  v.b = std::log(n) - l3 - std::log(c_n);
  v.beta = c_n * l2;  // exact identity beta_n = n e^{-b_n}
  return v;
}

double mean_asymptotic_truncated(int d, double n, const BoundarySpec& spec) {
  if (d < 1) throw std::invalid_argument("mean_asymptotic_truncated: d must be >= 1");
  BoundaryValues bv = boundary_eval(spec, d, n);
  double ln_n = std::log(n);
  double s = 0.0;
  for (int j = 0; j < d; ++j) {
    double term = binomial_d(d - 1, j) * std::pow(ln_n, static_cast<double>(d - 1 - j)) *
                  J_integral(j, bv.beta).value;
    s += j % 2 == 0 ? term : -term;
  }
  return s / factorial_d(d - 1);
}

ProbabilityBounds probability_bounds(int d, double n, const BoundarySpec& spec) {
  if (d < 1) throw std::invalid_argument("probability_bounds: d must be >= 1");
  BoundaryValues bv = boundary_eval(spec, d, n);
  double ln_n = std::log(n);
  double l2 = std::log(ln_n);
  ProbabilityBounds pb;
  pb.markov_hF = std::pow(ln_n, static_cast<double>(d - 1) - bv.c_n) / factorial_d(d - 1);
  pb.chebyshev_hF = 1.0 / pb.markov_hF;
  if (bv.c_n >= 1.0)
    pb.markov_F = std::pow(ln_n, static_cast<double>(d - 1)) / factorial_d(d - 1) *
                  std::pow(bv.c_n * l2, static_cast<double>(d - 1)) * std::pow(ln_n, -bv.c_n);
  return pb;
}

CenteringConstants centering(int d, double n) {
  if (d < 2) throw std::invalid_argument("centering: d must be >= 2");
  double l2 = std::log(std::log(n));
  if (!(l2 > 0.0)) throw std::invalid_argument("centering: n must exceed e");
  CenteringConstants c;
  c.fplus_center = std::log(n) + static_cast<double>(d - 1) * l2 - std::log(factorial_d(d - 1));
  c.trailing_center = std::log(n) - std::log(l2) - std::log(static_cast<double>(d - 1));
  return c;
}

}  // namespace recfront
