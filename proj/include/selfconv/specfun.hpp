#pragma once

#include "selfconv/rational.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace selfconv::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Gamma(x); reflection is used below 1/2. Throws PoleArgument at 0, -1, -2, ...
double gamma_fn(double x);

/// Digamma psi(x) = Gamma'(x)/Gamma(x). Throws PoleArgument at 0, -1, -2, ...
double digamma_fn(double x);

/// 1/Gamma(x), which is entire: exactly 0 at the nonpositive integers.
double rgamma(double x);

/// ln|Gamma(x)| and the sign of Gamma(x). Throws PoleArgument at the poles.
double lgamma_signed(double x, int& sign);

/// sin(pi x) and cos(pi x), exact at integers and half-integers.
double sin_pi(double x);
double cos_pi(double x);

struct AiryValues {
    double ai;
    double bi;
    double ai_prime;
    double bi_prime;
};

AiryValues airy_pair(double x);

struct BesselIK {
    double i;
    double k;
};

/// I_nu(x) and K_nu(x) for x > 0; K_nu = K_{-nu}.
BesselIK bessel_ik(double nu, double x);

/// Generalised exponential integral E_p(x) = int_1^inf e^{-xt} t^{-p} dt, x > 0.
double expint_e(double order, double x);

/// Ei(x), principal value, x > 0.
double ei(double x);

/// Ei_m(x) = ln x - psi(m) + (m-1)! sum_{r >= 0, r != m-1} x^{r+1-m} / ((r+1-m) r!); Ei_1 = Ei.
double ei_m(int m, double x);

/// e^{-x} Ei_m(x), summed term-wise so it stays finite for large x.
double ei_m_scaled(int m, double x);

/// Roots of the Laguerre polynomial L_m^{(alpha)}: eigenvalues of the
/// tridiagonal operator (symmetrised when alpha > -1), Newton-polished on the
/// monic polynomial. Sorted by real part, then imaginary part.
std::vector<std::complex<double>> laguerre_roots(const Rational& alpha, std::size_t m);

}  // namespace selfconv::specfun
