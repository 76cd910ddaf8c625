#pragma once

#include "pplab/numeric.hpp"

namespace pplab::asym {

struct Constants {
  Real zeta3;
  Real zeta_prime_neg1;
  Real gamma_const;  // zeta'(-1)/2
  Real pi;
};

Constants constants();

// Two explicit terms of the saddle scale: (2 zeta(3)/n)^{1/3} - 1/(36n).
Real saddle_expansion(double n);

// d with u = e^{-d} the unique root in (0,1) of sum_j j^2 u^j/(1-u^j) = n.
// Bisection on a bracket that starts at [e^{-1}, 1 - 1/(2n)] and widens to
// the left when needed (the stated left end fails for n = 1). Residual is
// below 1e-12 * n.
Real saddle_exact(double n);

// d_n^{5/3} / log n, evaluated with the two-term expansion; n >= 2.
Real delta_window(double n);

struct SaddleData {
  double n = 0;
  Real d_expansion;
  Real d_exact;
  Real u;       // e^{-d_exact}
  Real delta;   // requires n >= 2, otherwise 0
};
SaddleData saddle_data(double n);

// (zeta3)^{7/36} 2^{-11/36} (3 pi)^{-1/2} n^{-25/36}
//   * exp(3 zeta3^{1/3} (n/2)^{2/3} + 2 gamma).
Real wright_estimate(double n);
Real wright_log_estimate(double n);

// (1/(4 n sqrt(3))) exp(pi sqrt(2n/3)).
Real hardy_ramanujan_estimate(double n);

struct ThresholdSpec {
  double n = 0;
  double c = 0;
  Real m_real;
  long long m_int = 0;  // max(0, floor(m_real))
};

// m = (n/(2 zeta3))^{1/3} (log (n/(2 zeta3))^{2/3} + log log n + c); n >= 3.
ThresholdSpec threshold_m(double n, double c);

// m = d_n^{-1} (log d_n^{-2} + log log n + c) with d_n from the expansion.
ThresholdSpec threshold_m_saddle(double n, double c);

struct DebyeTail {
  Real exact;       // int_t^inf u^2/(e^u - 1) du
  Real asymptotic;  // (t^2 + 2t + 2) e^{-t}
};

// Exact value via the termwise series sum_k e^{-kt}(t^2/k + 2t/k^2 + 2/k^3)
// for t >= 1, and via 2 zeta(3) minus a Bernoulli expansion of the head
// integral for t < 1 (the series converges too slowly near 0).
DebyeTail debye_tail(const Real& t);

// Independent slow route by adaptive quadrature; used to cross-check.
Real debye_tail_quadrature(const Real& t);

// exp((2/3) e^{-c} (y - 1)).
Real limit_pgf_plane(double c, const Real& y);

struct LinearSuiteResult {
  Real d_prime;     // pi/sqrt(6n) - 1/(4n)
  Real m_fristedt;  // (sqrt(6n)/pi)(log(sqrt(6n)/pi) + c)
  Real F_value;     // prod_{j>[m]} (1-u^j)/(1-y u^j) at u = e^{-d'}
  Real limit;       // exp(e^{-c}(y-1))
};

LinearSuiteResult linear_suite(double n, double c, const Real& y);

}  // namespace pplab::asym
