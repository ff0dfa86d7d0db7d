#pragma once

#include <optional>
#include <stdexcept>

namespace recfront {

// Threshold family b_n = ln n - L3(n) - ln c_n with beta_n = n e^{-b_n}
// = c_n L2(n).  C form holds c_n = c constant; A form sets
// c_n = (d-1) e^{-a / L2(n)}.
struct BoundarySpec {
  enum class Form { C, A };
  Form form = Form::C;
  double value = 1.0;  // c > 0 in C form; the real parameter a in A form

  static BoundarySpec c_form(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("BoundarySpec: c must be > 0");
    return {Form::C, c};
  }
  static BoundarySpec a_form(double a) { return {Form::A, a}; }
};

struct BoundaryValues {
  double b = 0.0;
  double beta = 0.0;
  double c_n = 0.0;
};

struct ProbabilityBounds {
  double markov_hF = 0.0;
  double chebyshev_hF = 0.0;
  std::optional<double> markov_F;  // requires c_n >= 1
};

struct CenteringConstants {
  double fplus_center = 0.0;
  double trailing_center = 0.0;
};

// n is accepted as a real scale parameter throughout (the identities of
// interest evaluate at points like n = e^e); callers pass integer epochs.

// a_{d,j} = sum_{k=0..j} C(d, d-j+k) (-1)^k Gamma^{(k)}(d-j+k) / (k! (d-1-j)!)
// Requires d >= 1 and 0 <= j <= d-1; a_{d,0} evaluates to exactly 1.
double a_coefficient(int d, int j);

// Main term of the Poissonized interior-generator count:
//   (ln n)^{d-1} sum_{j=0..d-1} (-1)^j Gamma^{(j)}(d)/(j!(d-1-j)!) (ln n)^{-j}.
// Requires n >= 3; remainder orders are dropped, never estimated.
double iota_hat(int d, double n);

// Main term of E gamma_{d,n}: (ln n)^{d-1} sum_j a_{d,j} (ln n)^{-j}.
double expected_gamma_asymptotic(int d, double n);

// Requires n >= 16 (L3 positive); A form additionally requires d >= 2.
BoundaryValues boundary_eval(const BoundarySpec& spec, int d, double n);

// (1/(d-1)!) sum_{j=0..d-1} (-1)^j C(d-1,j) (ln n)^{d-1-j} J_j(beta_n).
// Quadrature errors from J_integral propagate.
double mean_asymptotic_truncated(int d, double n, const BoundarySpec& spec);

// Lead-order bound values (no (1+o(1)) factors):
//   markov_hF    = (ln n)^{d-1-c_n} / (d-1)!
//   chebyshev_hF = 1 / markov_hF
//   markov_F     = ((ln n)^{d-1}/(d-1)!) (c_n L2 n)^{d-1} (ln n)^{-c_n}
// markov_F is present only when c_n >= 1.
ProbabilityBounds probability_bounds(int d, double n, const BoundarySpec& spec);

// fplus_center = ln n + (d-1) L2 n - ln((d-1)!)
// trailing_center = ln n - L3 n - ln(d-1)
// Requires d >= 2 and n > e (iterated logs finite; the worked identities
// evaluate at n = e^e, so the threshold is deliberately not 16 here).
CenteringConstants centering(int d, double n);

}  // namespace recfront
