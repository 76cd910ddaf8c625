#include "pplab/asymptotics.hpp"

#include <stdexcept>

#include <boost/math/quadrature/exp_sinh.hpp>

namespace pplab::asym {

using namespace pplab::constants;

Constants constants() {
  return Constants{kZeta3, kZetaPrimeNeg1, kZetaPrimeNeg1 / 2, kPi};
}

Real saddle_expansion(double n) {
  if (n < 1) throw std::invalid_argument("saddle_expansion requires n >= 1");
  Real nn(n);
  return pow(2 * kZeta3 / nn, Real(1) / 3) - 1 / (36 * nn);
}

// sum_j j^2 u^j/(1-u^j), truncated at 1e-40 relative.
static Real saddle_sum(const Real& u) {
  Real sum = 0, uj = 1;
  for (long long j = 1;; ++j) {
    uj *= u;
    Real term = j * j * uj / (1 - uj);
    sum += term;
    if (term < sum * kTailCutoff) break;
  }
  return sum;
}

Real saddle_exact(double n) {
  if (n < 1) throw std::invalid_argument("saddle_exact requires n >= 1");
  Real target(n);
  Real lo = exp(Real(-1));
  Real hi = 1 - 1 / (2 * target);
  int guard = 0;
  while (saddle_sum(lo) > target) {
    lo /= 2;
    if (++guard > 64) throw std::runtime_error("saddle bracket not found");
  }
  // The sum dominates u/(1-u)^2 = u (2n)^2 >= n at the right endpoint, so
  // the bracket holds without summing there (the series needs tens of
  // millions of terms that close to 1).
  if (hi * (2 * target) * (2 * target) < target)
    throw std::runtime_error("saddle bracket not found");
  for (int it = 0; it < 200 && hi - lo > Real("1e-17"); ++it) {
    Real mid = (lo + hi) / 2;
    if (saddle_sum(mid) > target)
      hi = mid;
    else
      lo = mid;
  }
  return -log((lo + hi) / 2);
}

Real delta_window(double n) {
  if (n < 2) throw std::invalid_argument("delta_window requires n >= 2");
  Real d = saddle_expansion(n);
  return pow(d, Real(5) / 3) / log(Real(n));
}

SaddleData saddle_data(double n) {
  SaddleData s;
  s.n = n;
  s.d_expansion = saddle_expansion(n);
  s.d_exact = saddle_exact(n);
  s.u = exp(-s.d_exact);
  s.delta = (n >= 2) ? delta_window(n) : Real(0);
  return s;
}

Real wright_log_estimate(double n) {
  Real nn(n);
  return (Real(7) / 36) * log(kZeta3) - (Real(11) / 36) * log(Real(2)) -
         log(3 * kPi) / 2 - (Real(25) / 36) * log(nn) +
         3 * pow(kZeta3, Real(1) / 3) * pow(nn / 2, Real(2) / 3) + kZetaPrimeNeg1;
}

Real wright_estimate(double n) { return exp(wright_log_estimate(n)); }

Real hardy_ramanujan_estimate(double n) {
  Real nn(n);
  return exp(kPi * sqrt(2 * nn / 3)) / (4 * nn * sqrt(Real(3)));
}

ThresholdSpec threshold_m(double n, double c) {
  if (n < 3) throw std::invalid_argument("threshold_m requires n >= 3");
  Real t = Real(n) / (2 * kZeta3);
  Real m = pow(t, Real(1) / 3) * ((Real(2) / 3) * log(t) + log(log(Real(n))) + c);
  ThresholdSpec spec;
  spec.n = n;
  spec.c = c;
  spec.m_real = m;
  spec.m_int = std::max(0LL, static_cast<long long>(floor(m)));
  return spec;
}

ThresholdSpec threshold_m_saddle(double n, double c) {
  if (n < 3) throw std::invalid_argument("threshold_m_saddle requires n >= 3");
  Real d = saddle_expansion(n);
  Real m = (-2 * log(d) + log(log(Real(n))) + c) / d;
  ThresholdSpec spec;
  spec.n = n;
  spec.c = c;
  spec.m_real = m;
  spec.m_int = std::max(0LL, static_cast<long long>(floor(m)));
  return spec;
}

// Bernoulli numbers B_2..B_24 for the head integral of u^2/(e^u - 1).
static const char* kBernoulli[] = {
    "1/6",      "-1/30",      "1/42",      "-1/30",     "5/66",     "-691/2730",
    "7/6",      "-3617/510",  "43867/798", "-174611/330", "854513/138",
    "-236364091/2730"};

// int_0^t u^2/(e^u - 1) du = t^2/2 - t^3/6 + sum_k B_{2k} t^{2k+2}/((2k+2)(2k)!),
// valid for t < 2 pi.
static Real debye_head(const Real& t) {
  Real sum = t * t / 2 - t * t * t / 6;
  Real t2 = t * t;
  Real tp = t2;         // t^{2k+2} running power
  Real fact = 1;        // (2k)!
  for (int k = 1; k <= 12; ++k) {
    fact *= (2 * k - 1) * (2 * k);
    tp *= t2;
    Rational b(kBernoulli[k - 1]);
    Real term = to_real(b) * tp / ((2 * k + 2) * fact);
    sum += term;
    if (abs(term) < kTailCutoff) break;
  }
  return sum;
}

DebyeTail debye_tail(const Real& t) {
  if (t < 0) throw std::invalid_argument("debye_tail requires t >= 0");
  DebyeTail out;
  out.asymptotic = (t * t + 2 * t + 2) * exp(-t);
  if (t < 1) {
    out.exact = 2 * kZeta3 - debye_head(t);
    return out;
  }
  Real sum = 0, ekt = 1, e = exp(-t);
  for (long long k = 1;; ++k) {
    ekt *= e;
    Real term = ekt * (t * t / k + 2 * t / (Real(k) * k) + 2 / (Real(k) * k * k));
    sum += term;
    if (term < kTailCutoff) break;
  }
  out.exact = sum;
  return out;
}

Real debye_tail_quadrature(const Real& t) {
  if (t < 0) throw std::invalid_argument("debye_tail_quadrature requires t >= 0");
  boost::math::quadrature::exp_sinh<Real> quad;
  return quad.integrate([&](const Real& v) {
    Real u = t + v;
    if (u == 0) return Real(0);
    return u * u / expm1(u);
  });
}

Real limit_pgf_plane(double c, const Real& y) {
  return exp((Real(2) / 3) * exp(Real(-c)) * (y - 1));
}

LinearSuiteResult linear_suite(double n, double c, const Real& y) {
  if (n < 3) throw std::invalid_argument("linear_suite requires n >= 3");
  if (!(y >= 0 && y <= 1)) throw std::domain_error("linear_suite requires y in [0,1]");
  LinearSuiteResult r;
  Real nn(n);
  Real root = sqrt(6 * nn) / kPi;
  r.d_prime = kPi / sqrt(6 * nn) - 1 / (4 * nn);
  r.m_fristedt = root * (log(root) + c);
  r.limit = exp(exp(Real(-c)) * (y - 1));
  long long m = std::max(0LL, static_cast<long long>(floor(r.m_fristedt)));
  Real u = exp(-r.d_prime);
  Real sum = 0;
  Real uj = pow(u, Real(static_cast<double>(m)));
  for (long long j = m + 1;; ++j) {
    uj *= u;
    if (uj < kTailCutoff) break;
    sum += log1m(uj) - log1m(y * uj);
  }
  r.F_value = exp(sum);
  return r;
}

}  // namespace pplab::asym
