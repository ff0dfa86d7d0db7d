#pragma once

#include <cstdint>

#include "recfront/quadrature.hpp"
#include "recfront/rational.hpp"

namespace recfront {

// H_n^{(k)} = sum_{i=1..n} i^{-k}; H_0^{(k)} = 0.
ExactRational harmonic(std::int64_t n, int k);

// Roman harmonic number by the positive recurrence
//   R(n,0) = 1,  R(n,k) = sum_{j=1..n} R(j,k-1)/j.
// Equals the alternating sum sum_{j=1..n} (-1)^{j-1} C(n,j) j^{-k}.
ExactRational roman_harmonic(std::int64_t n, int k);

// Expected count of remaining records after n i.i.d. observations in
// dimension d: the Roman harmonic number of order d-1.
ExactRational expected_rho_exact(int d, std::int64_t n);

// Expected count of d-dimensional interior generators after n observations.
// Accepts d = 0 (one origin generator iff n = 0) and returns 0 for n < d.
ExactRational expected_iota_exact(int d, std::int64_t n);

// Expected total generator count: sum_{k=0..d} C(d,k) E iota_{k,n}.
ExactRational expected_gamma_exact(int d, std::int64_t n);

// Floating-point evaluation of the same expectations.  Exact-rational path
// for n <= 500; beyond that, recurrences with positive terms only (the
// alternating form cancels catastrophically for large n).
double expected_rho_value(int d, std::int64_t n);
double expected_iota_value(int d, std::int64_t n);
double expected_gamma_value(int d, std::int64_t n);

// E iota_{d,n} as the one-dimensional integral
//   n^{falling d}/(d-1)! * int_0^1 u^{d-1} (1-u)^{n-d} (-ln u)^{d-1} du,
// computed by adaptive quadrature (independent of the rational path).
QuadratureResult iota_quadrature(int d, std::int64_t n);

// E rho_n(b) = n/(d-1)! * int_0^b y^{d-1} e^{-y} (1-e^{-y})^{n-1} dy.
// b may be +infinity.  For n > 10^4 the substitution z = n e^{-y}
// resolves the concentration of the integrand near y = ln n.
QuadratureResult expected_rho_truncated(int d, std::int64_t n, double b);

// J_j(x) = int_x^inf (ln z)^j e^{-z} dz, with exponential tail cutoff.
QuadratureResult J_integral(int j, double x);

}  // namespace recfront
