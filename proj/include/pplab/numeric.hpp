#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace pplab {

// Exact integers and rationals are GMP-backed; reals carry 50 significant
// decimal digits so that differences of near-equal saddle quantities keep
// well over 30 good digits.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

// Absolute tail cutoff shared by the infinite-product evaluators.
inline const Real kTailCutoff = Real("1e-40");

namespace constants {

inline const Real kPi("3.14159265358979323846264338327950288419716939937511");
inline const Real kZeta3("1.20205690315959428539973816151144999076498629234050");
// zeta'(-1) = 1/12 - log(Glaisher); frozen from a 50-digit independent
// evaluation, cross-checked against 2*int_0^inf u log(u)/(e^{2 pi u}-1) du.
inline const Real kZetaPrimeNeg1(
    "-0.1654211437004509292139196602427806427640363803352");
inline const Real kZeta2("1.64493406684822643647241516664602518921894990120680");

}  // namespace constants

inline double to_double(const Real& x) { return static_cast<double>(x); }

inline Real to_real(const BigInt& v) { return Real(v.str()); }

inline Real to_real(const Rational& v) {
  return to_real(numerator(v)) / to_real(denominator(v));
}

// log(1 - z) for z in [0, 1); series branch keeps tail sums fast, since the
// generic log is the hot cost in the product evaluators.
inline Real log1m(const Real& z) {
  using std::abs;
  if (z == 0) return Real(0);
  if (abs(z) < Real("0.25")) {
    Real term = z, sum = z;
    for (int s = 2; s < 200; ++s) {
      term *= z;
      Real add = term / s;
      sum += add;
      if (abs(add) < kTailCutoff * 1e-5) break;
    }
    return -sum;
  }
  return log(Real(1) - z);
}

}  // namespace pplab
