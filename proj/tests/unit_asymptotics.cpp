#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "recfront/asymptotics.hpp"
#include "recfront/exact_expectations.hpp"
#include "recfront/special_functions.hpp"
#include "support/oracles.hpp"

using namespace recfront;
namespace orc = recfront::oracles;

namespace {
double rel_err(double got, double want) { return std::abs(got / want - 1.0); }

// independent oracle: Gamma^{(k)}(m) = int_0^inf (ln t)^k t^{m-1} e^{-t} dt
double gamma_deriv_quadrature(int k, int m) {
  const auto f = [&](double t) {
    return std::pow(std::log(t), k) * std::pow(t, m - 1) * std::exp(-t);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  boost::math::quadrature::gauss_kronrod<double, 61> gk;
  return ts.integrate(f, 0.0, 1.0) +
         gk.integrate(f, 1.0, static_cast<double>(m) + 80.0, 12);
}
}  // namespace

TEST_CASE("polygamma at integer arguments") {
  CHECK(polygamma_int(0, 1) == doctest::Approx(-orc::kEulerGammaRef).epsilon(1e-15));
  CHECK(polygamma_int(0, 3) == doctest::Approx(-orc::kEulerGammaRef + 1.5).epsilon(1e-15));
  CHECK(polygamma_int(1, 1) == doctest::Approx(orc::kZeta2).epsilon(1e-15));
  CHECK(polygamma_int(1, 2) == doctest::Approx(orc::kZeta2 - 1.0).epsilon(1e-14));
  CHECK(polygamma_int(2, 1) == doctest::Approx(-2 * orc::kZeta3).epsilon(1e-15));
  CHECK(polygamma_int(3, 2) == doctest::Approx(6 * (orc::kZeta4 - 1.0)).epsilon(1e-13));
  CHECK_THROWS_AS((void)polygamma_int(9, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)polygamma_int(0, 0), std::invalid_argument);
}

TEST_CASE("gamma derivatives against quadrature oracle") {
  CHECK(gamma_derivative_int(0, 5) == 24.0);
  CHECK(gamma_derivative_int(1, 1) == doctest::Approx(-orc::kEulerGammaRef).epsilon(1e-14));
  CHECK(gamma_derivative_int(1, 2) == doctest::Approx(1.0 - orc::kEulerGammaRef).epsilon(1e-14));
  for (int m = 1; m <= 6; ++m)
    for (int k = 0; k <= 4; ++k) {
      const double want = gamma_deriv_quadrature(k, m);
      const double got = gamma_derivative_int(k, m);
      if (std::abs(want) > 1e-8)
        CHECK(rel_err(got, want) < 1e-9);
      else
        CHECK(std::abs(got - want) < 1e-9);
    }
}

TEST_CASE("expansion coefficients") {
  for (int d = 1; d <= 8; ++d)
    CHECK(a_coefficient(d, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(a_coefficient(2, 1) ==
        doctest::Approx(1.0 + orc::kEulerGammaRef).epsilon(1e-12));
  CHECK(a_coefficient(3, 1) == doctest::Approx(orc::kA_3_1).epsilon(1e-9));
  CHECK(a_coefficient(3, 2) == doctest::Approx(orc::kA_3_2).epsilon(1e-9));
  CHECK(a_coefficient(4, 1) == doctest::Approx(orc::kA_4_1).epsilon(1e-9));
  CHECK(a_coefficient(4, 2) == doctest::Approx(orc::kA_4_2).epsilon(1e-9));
  CHECK(a_coefficient(4, 3) == doctest::Approx(orc::kA_4_3).epsilon(1e-9));
  CHECK_THROWS_AS((void)a_coefficient(3, 3), std::invalid_argument);
}

TEST_CASE("interior-count main term at a log-friendly point") {
  // d=2 at n=e^10: (ln n) - Gamma'(2) = 10 - (1 - eulergamma)
  const double n = std::exp(10.0);
  CHECK(iota_hat(2, n) ==
        doctest::Approx(10.0 - (1.0 - orc::kEulerGammaRef)).epsilon(1e-12));
}

TEST_CASE("asymptotic gamma approaches the exact value") {
  for (const int d : {2, 3, 4}) {
    const double coarse =
        rel_err(expected_gamma_asymptotic(d, 1e3), expected_gamma_value(d, 1000));
    const double fine =
        rel_err(expected_gamma_asymptotic(d, 1e6), expected_gamma_value(d, 1000000));
    CHECK(fine < coarse);
  }
}

TEST_CASE("boundary evaluation identities") {
  // at n = e^{e^e}: L n = e^e, L2 n = e, L3 n = 1; with c=1, b = e^e - 1 and beta = e
  const double n = std::exp(std::exp(std::exp(1.0)));
  const BoundaryValues bv = boundary_eval(BoundarySpec::c_form(1.0), 3, n);
  CHECK(bv.b == doctest::Approx(std::exp(std::exp(1.0)) - 1.0).epsilon(1e-12));
  CHECK(bv.beta == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(bv.c_n == 1.0);

  // beta_n = c_n * L2 n exactly, by construction
  const BoundaryValues bw = boundary_eval(BoundarySpec::c_form(2.5), 4, 1e6);
  CHECK(bw.beta == 2.5 * std::log(std::log(1e6)));

  // a-form: c_n = (d-1) e^{-a / L2 n}
  const BoundaryValues ba = boundary_eval(BoundarySpec::a_form(0.0), 3, 1e6);
  CHECK(ba.c_n == 2.0);
  const BoundaryValues bb = boundary_eval(BoundarySpec::a_form(1.0), 3, 1e6);
  CHECK(bb.c_n == doctest::Approx(2.0 * std::exp(-1.0 / std::log(std::log(1e6)))).epsilon(1e-14));

  CHECK_THROWS_AS((void)boundary_eval(BoundarySpec::c_form(1.0), 3, 15.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)BoundarySpec::c_form(0.0), std::invalid_argument);
}

TEST_CASE("probability bounds") {
  const ProbabilityBounds p2 = probability_bounds(3, 1e6, BoundarySpec::c_form(2.0));
  CHECK(p2.markov_hF == doctest::Approx(orc::kMarkovHF_3_1e6_c2).epsilon(1e-12));
  CHECK(p2.chebyshev_hF * p2.markov_hF == 1.0);  // exact reciprocal by construction
  CHECK(p2.markov_F.has_value());

  const ProbabilityBounds p3 = probability_bounds(3, 1e6, BoundarySpec::c_form(3.0));
  CHECK(p3.markov_hF == doctest::Approx(orc::kMarkovHF_3_1e6_c3).epsilon(1e-9));

  const ProbabilityBounds p4 = probability_bounds(3, 1e6, BoundarySpec::c_form(4.0));
  REQUIRE(p4.markov_F.has_value());
  CHECK(*p4.markov_F == doctest::Approx(orc::kMarkovF_3_1e6_c4).epsilon(1e-9));

  // generator route needs c_n >= 1
  const ProbabilityBounds p05 = probability_bounds(3, 1e6, BoundarySpec::c_form(0.5));
  CHECK_FALSE(p05.markov_F.has_value());
}

TEST_CASE("truncated-mean main term tracks the quadrature") {
  const BoundarySpec spec = BoundarySpec::c_form(2.0);
  const double asym = mean_asymptotic_truncated(3, 1e5, spec);
  const double quad = expected_rho_truncated(3, 100000, boundary_eval(spec, 3, 1e5).b).value;
  CHECK(rel_err(asym, quad) < 5e-3);
}

TEST_CASE("centering constants") {
  // d=2 at n=e^e: ln n + L2 n - ln 1 = e + 1
  const double n = std::exp(std::exp(1.0));
  const CenteringConstants cc = centering(2, n);
  CHECK(cc.fplus_center == doctest::Approx(std::exp(1.0) + 1.0).epsilon(1e-14));
  // trailing center at the same point: ln n - L3 n - ln(d-1) = e - 0 - 0
  CHECK(cc.trailing_center == doctest::Approx(std::exp(1.0)).epsilon(1e-14));

  const CenteringConstants c3 = centering(3, 1e6);
  const double l1 = std::log(1e6), l2 = std::log(l1);
  CHECK(c3.fplus_center == doctest::Approx(l1 + 2 * l2 - std::log(2.0)).epsilon(1e-14));
  CHECK(c3.trailing_center ==
        doctest::Approx(l1 - std::log(l2) - std::log(2.0)).epsilon(1e-14));

  CHECK_THROWS_AS((void)centering(2, 2.0), std::invalid_argument);  // needs n > e
  CHECK_THROWS_AS((void)centering(1, 100.0), std::invalid_argument);
}
