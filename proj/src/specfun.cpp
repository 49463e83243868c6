#include "selfconv/specfun.hpp"

#include "selfconv/compensated.hpp"
#include "selfconv/errors.hpp"
#include "selfconv/exact_seq.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/sin_pi.hpp>
#include <boost/math/special_functions/cos_pi.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace selfconv::specfun {

namespace {

namespace bm = boost::math;
using Policy = bm::policies::policy<bm::policies::overflow_error<bm::policies::ignore_error>>;

bool is_pole(double x) { return x <= 0.0 && std::floor(x) == x; }

void check_pole(double x, const char* fn) {
    if (is_pole(x))
        throw Error(ErrorCode::PoleArgument, std::string(fn) + " has a pole at " + std::to_string(x));
}

}  // namespace

double gamma_fn(double x) {
    check_pole(x, "gamma");
    return bm::tgamma(x, Policy());
}

double digamma_fn(double x) {
    check_pole(x, "digamma");
    return bm::digamma(x, Policy());
}

double rgamma(double x) {
    if (is_pole(x)) return 0.0;
    if (x > 171.0) return 0.0;
    return 1.0 / bm::tgamma(x, Policy());
}

double lgamma_signed(double x, int& sign) {
    check_pole(x, "lgamma");
    return bm::lgamma(x, &sign, Policy());
}

double sin_pi(double x) { return bm::sin_pi(x); }
double cos_pi(double x) { return bm::cos_pi(x); }

AiryValues airy_pair(double x) {
    return {bm::airy_ai(x), bm::airy_bi(x), bm::airy_ai_prime(x), bm::airy_bi_prime(x)};
}

BesselIK bessel_ik(double nu, double x) {
    if (!(x > 0.0)) throw Error(ErrorCode::InvalidParams, "bessel_ik needs x > 0");
    return {bm::cyl_bessel_i(nu, x, Policy()), bm::cyl_bessel_k(std::abs(nu), x, Policy())};
}

double expint_e(double order, double x) {
    if (!(x > 0.0)) throw Error(ErrorCode::InvalidParams, "expint_e needs x > 0");
    const double p = order;
    if (std::floor(p) == p && p >= 0.0 && p < 1e6)
        return bm::expint(static_cast<unsigned>(p), x, Policy());
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (x > 1.5) {
        // Continued fraction (modified Lentz).
        constexpr double tiny = 1e-300;
        double b = x + p;
        double c = 1.0 / tiny;
        double d = 1.0 / b;
        double h = d;
        for (int i = 1; i < 10000; ++i) {
            const double an = -i * (p - 1.0 + i);
            b += 2.0;
            d = 1.0 / (an * d + b);
            c = b + an / c;
            const double del = c * d;
            h *= del;
            if (std::abs(del - 1.0) < eps) break;
        }
        return h * std::exp(-x);
    }
    // Small x, non-integer order: Gamma(1-p) x^{p-1} - sum_k (-x)^k / (k! (1-p+k)).
    CompensatedSum s;
    double term = 1.0;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) term *= -x / k;
        const double t = term / (1.0 - p + k);
        s.add(t);
        if (std::abs(t) < eps * std::abs(s.value()) && k > 2) break;
    }
    return gamma_fn(1.0 - p) * std::pow(x, p - 1.0) - s.value();
}

double ei(double x) {
    if (!(x > 0.0)) throw Error(ErrorCode::InvalidParams, "ei needs x > 0");
    return bm::expint(x, Policy());
}

double ei_m_scaled(int m, double x) {
    if (m < 1) throw Error(ErrorCode::InvalidParams, "ei_m needs m >= 1");
    if (!(x > 0.0)) throw Error(ErrorCode::InvalidParams, "ei_m needs x > 0");
    constexpr double eps = std::numeric_limits<double>::epsilon();
    // (m-1)! x^{1-m} sum_{r != m-1} p_r / (r+1-m), with Poisson weights p_r = e^{-x} x^r / r!.
    const double prefactor = std::exp(std::lgamma(static_cast<double>(m)) + (1.0 - m) * std::log(x));
    CompensatedSum s;
    double poisson = std::exp(-x);
    const int r_min_stop = static_cast<int>(x) + m + 5;
    for (int r = 0; r < 100000; ++r) {
        if (r > 0) poisson *= x / r;
        if (r == m - 1) continue;
        const double t = poisson / (r + 1 - m);
        s.add(t);
        if (r > r_min_stop && std::abs(t) < eps * std::abs(s.value())) break;
    }
    return std::exp(-x) * (std::log(x) - digamma_fn(m)) + prefactor * s.value();
}

double ei_m(int m, double x) {
    if (m == 1) return ei(x);
    if (x < 600.0) {
        // Direct sum avoids the e^{x} e^{-x} round trip for moderate x.
        constexpr double eps = std::numeric_limits<double>::epsilon();
        const double fact = std::tgamma(static_cast<double>(m));
        CompensatedSum s;
        double power = std::pow(x, 1.0 - m);  // x^{r+1-m} / r!
        for (int r = 0; r < 100000; ++r) {
            if (r > 0) power *= x / r;
            if (r == m - 1) continue;
            const double t = power / (r + 1 - m);
            s.add(t);
            if (r > static_cast<int>(x) + m + 5 && std::abs(t) < eps * std::abs(s.value())) break;
        }
        return std::log(x) - digamma_fn(m) + fact * s.value();
    }
    return std::exp(x) * ei_m_scaled(m, x);
}

std::vector<std::complex<double>> laguerre_roots(const Rational& alpha, std::size_t m) {
    if (m == 0) throw Error(ErrorCode::InvalidParams, "laguerre_roots needs m >= 1");
    const TridiagonalOperator op{alpha, m};
    const auto n = static_cast<Eigen::Index>(m);
    std::vector<std::complex<double>> roots;
    roots.reserve(m);
    if (alpha > -1) {
        Eigen::VectorXd diag(n);
        Eigen::VectorXd off(std::max<Eigen::Index>(n - 1, 0));
        for (std::size_t j = 0; j < m; ++j) diag(static_cast<Eigen::Index>(j)) = to_double(op.diagonal(j));
        for (std::size_t j = 1; j < m; ++j)
            off(static_cast<Eigen::Index>(j - 1)) = std::sqrt(to_double(op.subdiagonal(j)));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < n; ++i) roots.emplace_back(solver.eigenvalues()(i), 0.0);
    } else {
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
        for (std::size_t j = 0; j < m; ++j) {
            const auto jj = static_cast<Eigen::Index>(j);
            t(jj, jj) = to_double(op.diagonal(j));
            if (j + 1 < m) t(jj, jj + 1) = 1.0;
            if (j >= 1) t(jj, jj - 1) = to_double(op.subdiagonal(j));
        }
        Eigen::EigenSolver<Eigen::MatrixXd> solver(t, false);
        for (Eigen::Index i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()(i));
    }

    // Newton polish on the monic polynomial.
    const auto coeffs_q = laguerre_linear_recurrence(alpha, m);
    std::vector<double> coeffs;
    for (const auto& c : coeffs_q) coeffs.push_back(to_double(c));
    for (auto& z : roots) {
        for (int it = 0; it < 20; ++it) {
            std::complex<double> p = coeffs.back();
            std::complex<double> dp = 0.0;
            for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
                dp = dp * z + p;
                p = p * z + coeffs[i];
            }
            if (dp == 0.0) break;
            const auto step = p / dp;
            z -= step;
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        if (std::abs(z.imag()) <= 1e-13 * std::max(1.0, std::abs(z))) z.imag(0.0);
    }
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return roots;
}

}  // namespace selfconv::specfun
