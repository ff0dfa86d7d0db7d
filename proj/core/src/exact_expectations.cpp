#include "recfront/exact_expectations.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "recfront/errors.hpp"

namespace recfront {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Running compensated (Neumaier) accumulator for long positive sums.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double total() const { return sum + comp; }
};

double binomial_d(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

void check_quadrature(const QuadratureResult& q, const char* what) {
  double bound = std::max(1e-6 * std::abs(q.value), 1e-13);
  if (!(q.abs_error_estimate <= bound))
    throw QuadratureError(std::string(what) + ": quadrature did not converge (error estimate " +
                          std::to_string(q.abs_error_estimate) + ")");
}

template <class F>
QuadratureResult integrate_tanh_sinh(F&& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> integ(15);
  double rel_err = 0.0;
  double l1 = 0.0;
  std::size_t levels = 0;
  double v = integ.integrate(f, a, b, 1e-11, &rel_err, &l1, &levels);
  // boost reports a relative estimate; convert using the L1 norm so that
  // cancellation inside the integral cannot hide a large absolute error
  double scale = std::max(std::abs(v), l1);
  double abs_err = std::isfinite(rel_err) ? rel_err * scale : kInf;
  return {v, std::abs(abs_err)};
}

template <class F>
QuadratureResult integrate_gauss_kronrod(F&& f, double a, double b) {
  double abs_err = 0.0;
  double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 14, 1e-11,
                                                                           &abs_err);
  return {v, std::abs(abs_err)};
}

}  // namespace

ExactRational harmonic(std::int64_t n, int k) {
  if (n < 0) throw std::invalid_argument("harmonic: n must be >= 0");
  if (k < 1) throw std::invalid_argument("harmonic: k must be >= 1");
  ExactRational h = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    ExactInt p = 1;
    for (int j = 0; j < k; ++j) p *= i;
    h += ExactRational(1, p);
  }
  return h;
}

ExactRational roman_harmonic(std::int64_t n, int k) {
  if (n < 1) throw std::invalid_argument("roman_harmonic: n must be >= 1");
  if (k < 0) throw std::invalid_argument("roman_harmonic: k must be >= 0");
  if (k == 0) return 1;
  std::vector<ExactRational> h(static_cast<std::size_t>(n) + 1, ExactRational(1));
  for (int level = 1; level <= k; ++level) {
    ExactRational run = 0;
    for (std::int64_t j = 1; j <= n; ++j) {
      run += h[static_cast<std::size_t>(j)] / j;
      h[static_cast<std::size_t>(j)] = run;
    }
  }
  return h[static_cast<std::size_t>(n)];
}

ExactRational expected_rho_exact(int d, std::int64_t n) {
  if (d < 1) throw std::invalid_argument("expected_rho_exact: d must be >= 1");
  if (n < 1) throw std::invalid_argument("expected_rho_exact: n must be >= 1");
  return roman_harmonic(n, d - 1);
}

ExactRational expected_iota_exact(int d, std::int64_t n) {
  if (d < 0 || n < 0) throw std::invalid_argument("expected_iota_exact: negative argument");
  if (d == 0) return n == 0 ? 1 : 0;
  if (n < d) return 0;
  // E iota_{d,n} = n^{falling d} sum_{j=0..d-1} (-1)^j C(d-1,j) R(m, d-1)/m,
  // m = n-d+j+1; exact arithmetic keeps the alternating sum safe here.
  ExactRational s = 0;
  for (int j = 0; j < d; ++j) {
    std::int64_t m = n - d + j + 1;
    ExactRational term = ExactRational(binomial_exact(d - 1, j)) * roman_harmonic(m, d - 1) / m;
    if (j % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return ExactRational(falling_factorial_exact(n, d)) * s;
}

ExactRational expected_gamma_exact(int d, std::int64_t n) {
  if (d < 1) throw std::invalid_argument("expected_gamma_exact: d must be >= 1");
  if (n < 0) throw std::invalid_argument("expected_gamma_exact: n must be >= 0");
  ExactRational s = 0;
  for (int k = 0; k <= d; ++k) s += ExactRational(binomial_exact(d, k)) * expected_iota_exact(k, n);
  return s;
}

namespace {

constexpr std::int64_t kRationalLimit = 500;

double expected_rho_float(int d, std::int64_t n) {
  // Roman-harmonic recurrence level by level; all terms positive.
  std::vector<double> h(static_cast<std::size_t>(n) + 1, 1.0);
  for (int level = 1; level < d; ++level) {
    Accumulator run;
    for (std::int64_t j = 1; j <= n; ++j) {
      run.add(h[static_cast<std::size_t>(j)] / static_cast<double>(j));
      h[static_cast<std::size_t>(j)] = run.total();
    }
  }
  return h[static_cast<std::size_t>(n)];
}

double expected_iota_float(int d, std::int64_t n) {
  // Cancellation-free form: E iota_{d,n} = Y_{d-1}(x_1,...,x_{d-1}), the
  // complete Bell polynomial with x_k = (k-1)! sum_{i=d..n} i^{-k}.
  // Equivalent to the alternating connection formula but sums only
  // positive quantities, so it stays accurate for n ~ 10^6.
  int m = d - 1;
  std::vector<Accumulator> tails(static_cast<std::size_t>(m) + 1);
  for (std::int64_t i = d; i <= n; ++i) {
    double inv = 1.0 / static_cast<double>(i);
    double p = inv;
    for (int k = 1; k <= m; ++k) {
      tails[static_cast<std::size_t>(k)].add(p);
      p *= inv;
    }
  }
  std::vector<double> x(static_cast<std::size_t>(m) + 1, 0.0);
  double fact = 1.0;
  for (int k = 1; k <= m; ++k) {
    x[static_cast<std::size_t>(k)] = fact * tails[static_cast<std::size_t>(k)].total();
    fact *= k;
  }
  std::vector<double> bell(static_cast<std::size_t>(m) + 1, 0.0);
  bell[0] = 1.0;
  for (int r = 1; r <= m; ++r) {
    double s = 0.0;
    for (int i = 0; i < r; ++i)
      s += binomial_d(r - 1, i) * bell[static_cast<std::size_t>(r - 1 - i)] *
           x[static_cast<std::size_t>(i + 1)];
    bell[static_cast<std::size_t>(r)] = s;
  }
  return bell[static_cast<std::size_t>(m)];
}

}  // namespace

double expected_rho_value(int d, std::int64_t n) {
  if (d < 1) throw std::invalid_argument("expected_rho_value: d must be >= 1");
  if (n < 1) throw std::invalid_argument("expected_rho_value: n must be >= 1");
  if (d == 1) return 1.0;
  if (n <= kRationalLimit) return to_double(expected_rho_exact(d, n));
  return expected_rho_float(d, n);
}

double expected_iota_value(int d, std::int64_t n) {
  if (d < 0 || n < 0) throw std::invalid_argument("expected_iota_value: negative argument");
  if (d == 0) return n == 0 ? 1.0 : 0.0;
  if (n < d) return 0.0;
  if (n <= kRationalLimit) return to_double(expected_iota_exact(d, n));
  return expected_iota_float(d, n);
}

double expected_gamma_value(int d, std::int64_t n) {
  if (d < 1) throw std::invalid_argument("expected_gamma_value: d must be >= 1");
  if (n < 0) throw std::invalid_argument("expected_gamma_value: n must be >= 0");
  if (n <= kRationalLimit) return to_double(expected_gamma_exact(d, n));
  Accumulator s;
  for (int k = 0; k <= d; ++k) s.add(binomial_d(d, k) * expected_iota_value(k, n));
  return s.total();
}

QuadratureResult iota_quadrature(int d, std::int64_t n) {
  if (d < 1 || n < d) throw std::invalid_argument("iota_quadrature: requires n >= d >= 1");
  double dm1 = static_cast<double>(d - 1);
  double fact = 1.0;
  for (int i = 2; i < d; ++i) fact *= i;
  QuadratureResult q;
  if (n <= 10000) {
    double pre = 1.0;
    for (int i = 0; i < d; ++i) pre *= static_cast<double>(n - i);
    pre /= fact;
    double nd = static_cast<double>(n - d);
    auto f = [=](double u) -> double {
      if (u <= 0.0 || u >= 1.0) return 0.0;
      double w = nd == 0.0 ? 1.0 : std::exp(nd * std::log1p(-u));
      if (d == 1) return w;
      return std::pow(u, dm1) * w * std::pow(-std::log(u), dm1);
    };
    q = integrate_tanh_sinh(f, 0.0, 1.0);
    q.value *= pre;
    q.abs_error_estimate *= pre;
  } else {
    // substitute u = v/n; prefactor n^{falling d}/n^d stays near 1
    double nn = static_cast<double>(n);
    double pre = 1.0;
    for (int i = 0; i < d; ++i) pre *= 1.0 - static_cast<double>(i) / nn;
    pre /= fact;
    double nd = static_cast<double>(n - d);
    double ln_n = std::log(nn);
    double vmax = std::min(nn, 800.0);
    auto f = [=](double v) -> double {
      if (v <= 0.0) return 0.0;
      double w = std::exp(nd * std::log1p(-v / nn));
      if (d == 1) return w;
      return std::pow(v, dm1) * w * std::pow(ln_n - std::log(v), dm1);
    };
    q = integrate_gauss_kronrod(f, 0.0, vmax);
    q.value *= pre;
    q.abs_error_estimate *= pre;
  }
  check_quadrature(q, "iota_quadrature");
  return q;
}

QuadratureResult expected_rho_truncated(int d, std::int64_t n, double b) {
  if (d < 1) throw std::invalid_argument("expected_rho_truncated: d must be >= 1");
  if (n < 1) throw std::invalid_argument("expected_rho_truncated: n must be >= 1");
  if (std::isnan(b) || b < 0.0) throw std::invalid_argument("expected_rho_truncated: b must be >= 0");
  if (b == 0.0) return {0.0, 0.0};
  double dm1 = static_cast<double>(d - 1);
  double fact = 1.0;
  for (int i = 2; i < d; ++i) fact *= i;
  double nm1 = static_cast<double>(n - 1);
  double nn = static_cast<double>(n);
  QuadratureResult q;
  if (n <= 10000) {
    double ycut = std::log(nn) + 120.0 + 10.0 * d;
    double hi = std::min(b, ycut);
    auto f = [=](double y) -> double {
      if (y <= 0.0) return 0.0;
      // (1-e^{-y})^{n-1} via log1p to keep precision near y = 0
      double w = nm1 == 0.0 ? 1.0 : std::exp(nm1 * std::log1p(-std::exp(-y)));
      double p = d == 1 ? 1.0 : std::pow(y, dm1);
      return p * std::exp(-y) * w;
    };
    q = integrate_gauss_kronrod(f, 0.0, hi);
    double pre = nn / fact;
    q.value *= pre;
    q.abs_error_estimate *= pre;
  } else {
    // z = n e^{-y}: integral over z in (n e^{-b}, n) of
    //   (ln n - ln z)^{d-1} (1 - z/n)^{n-1} / (d-1)!
    double ln_n = std::log(nn);
    double zlo = b == kInf ? 0.0 : nn * std::exp(-b);
    double zhi = std::min(nn, std::max(zlo + 150.0 + 10.0 * d, 200.0));
    auto f = [=](double z) -> double {
      if (z <= 0.0 || z >= nn) return 0.0;
      double w = std::exp(nm1 * std::log1p(-z / nn));
      if (d == 1) return w;
      return std::pow(ln_n - std::log(z), dm1) * w;
    };
    q = integrate_tanh_sinh(f, zlo, zhi);
    q.value /= fact;
    q.abs_error_estimate /= fact;
  }
  check_quadrature(q, "expected_rho_truncated");
  return q;
}

QuadratureResult J_integral(int j, double x) {
  if (j < 0) throw std::invalid_argument("J_integral: j must be >= 0");
  if (!(x > 0.0)) throw std::invalid_argument("J_integral: x must be > 0");
  double jj = static_cast<double>(j);
  double hi = x + 60.0 + 6.0 * j;
  auto f = [=](double z) -> double {
    if (z <= 0.0) return 0.0;
    double e = std::exp(-z);
    if (j == 0) return e;
    return std::pow(std::log(z), jj) * e;
  };
  QuadratureResult q = integrate_tanh_sinh(f, x, hi);
  check_quadrature(q, "J_integral");
  return q;
}

}  // namespace recfront
