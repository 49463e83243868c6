#include "selfconv/chgf.hpp"

#include "selfconv/compensated.hpp"
#include "selfconv/double_double.hpp"
#include "selfconv/errors.hpp"
#include "selfconv/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace selfconv::chgf {

namespace {

using cd = std::complex<double>;
using specfun::cos_pi;
using specfun::digamma_fn;
using specfun::gamma_fn;
using specfun::kPi;
using specfun::rgamma;
using specfun::sin_pi;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRichardsonEps = 1e-5;
constexpr double kFallbackRel = 1e-13;
constexpr double kMaxUnscaledX = 650.0;

bool is_int(double v) { return std::floor(v) == v; }
bool is_nonpos_int(double v) { return v <= 0.0 && is_int(v); }

std::string ab_string(double a, double b) {
    return "a=" + std::to_string(a) + ", b=" + std::to_string(b);
}

// --- scaled Kummer M ------------------------------------------------------

SeriesValue kummer_dd(double a, double b, double x) {
    const DoubleDouble da(a), db(b), dx(x);
    DoubleDouble term(1.0), sum(1.0);
    double abs_sum = 1.0;
    for (int r = 0; r < 100000; ++r) {
        if (a + r == 0.0) break;
        term = term * (da + DoubleDouble(r)) * dx / ((db + DoubleDouble(r)) * DoubleDouble(r + 1.0));
        sum += term;
        const double t = std::abs(static_cast<double>(term));
        abs_sum += t;
        if (r > x + std::abs(a) + std::abs(b) + 2 && t < 1e-33 * abs_sum) break;
    }
    const double scale = std::exp(-x);
    const double v = static_cast<double>(sum) * scale;
    return {v, 2 * kEps * std::abs(v) + 1e-30 * abs_sum * scale, true};
}

}  // namespace

SeriesValue kummer_m_scaled(double a, double b, double x) {
    if (is_nonpos_int(b))
        throw Error(ErrorCode::BNonpositiveInteger, "M(a,b,x) undefined for " + ab_string(a, b));
    if (!(x >= 0.0)) throw Error(ErrorCode::InvalidParams, "kummer_m_scaled needs x >= 0");
    if (x == 0.0) return {1.0, 0.0, false};

    // Terms carry an explicit log scale so e^{-x} never underflows to zero.
    double log_scale = 0.0;
    double term = 1.0;
    if (x < 700.0)
        term = std::exp(-x);
    else
        log_scale = -x;
    CompensatedSum sum;
    double rounding = 0.0;
    sum.add(log_scale == 0.0 ? term : std::exp(log_scale));
    rounding += 2 * std::abs(sum.value());
    for (int r = 0; r < 100000; ++r) {
        if (a + r == 0.0) break;  // terminating series
        term *= (a + r) * x / ((b + r) * (r + 1.0));
        if (std::abs(term) > 1e250) {
            term *= 1e-250;
            log_scale += 250 * std::log(10.0);
        }
        const double t = log_scale == 0.0 ? term : term * std::exp(log_scale);
        sum.add(t);
        rounding += (2.0 + std::sqrt(r + 1.0)) * std::abs(t);
        if (r > x + std::abs(a) + std::abs(b) + 2 && std::abs(t) <= 0.25 * kEps * std::abs(sum.value()))
            break;
    }
    SeriesValue out{sum.value(), kEps * (rounding + sum.abs_sum()), false};
    if (out.abs_error > kFallbackRel * std::abs(out.value) && x < kMaxUnscaledX) return kummer_dd(a, b, x);
    return out;
}

std::string_view to_string(BranchMethod m) {
    switch (m) {
        case BranchMethod::Auto: return "auto";
        case BranchMethod::Series: return "series";
        case BranchMethod::Asymptotic: return "asymptotic";
        case BranchMethod::Richardson: return "richardson";
        case BranchMethod::Limit: return "limit";
        case BranchMethod::EiClass: return "ei-class";
        case BranchMethod::HalfZero: return "half-zero";
        case BranchMethod::Bessel: return "bessel";
    }
    return "?";
}

namespace {

// --- branch values --------------------------------------------------------

BranchPair series_pair(double a, double b, double x) {
    const SeriesValue e1 = kummer_m_scaled(b - a, b, x);
    const SeriesValue e2 = kummer_m_scaled(1.0 - a, 2.0 - b, x);
    const double c1 = gamma_fn(1.0 - b) * rgamma(a - b + 1.0);
    const double c2 = gamma_fn(b - 1.0) * rgamma(a) * std::pow(x, 1.0 - b);
    const double t1 = c1 * e1.value;
    const double t2 = c2 * e2.value;
    BranchPair p;
    p.u_r = t1 - cos_pi(b) * t2;
    p.u_i = sin_pi(b) * t2;
    p.abs_error = std::abs(c1) * e1.abs_error + std::abs(c2) * e2.abs_error +
                  8 * kEps * (std::abs(t1) + std::abs(t2));
    p.method = BranchMethod::Series;
    return p;
}

BranchPair richardson_pair(double a, double b, double x) {
    auto avg = [&](double h) {
        const BranchPair up = series_pair(a, b + h, x);
        const BranchPair dn = series_pair(a, b - h, x);
        return BranchPair{0.5 * (up.u_r + dn.u_r), 0.5 * (up.u_i + dn.u_i),
                          0.5 * (up.abs_error + dn.abs_error), BranchMethod::Richardson};
    };
    const BranchPair f1 = avg(kRichardsonEps);
    const BranchPair f2 = avg(2 * kRichardsonEps);
    BranchPair p;
    p.u_r = (4 * f1.u_r - f2.u_r) / 3;
    p.u_i = (4 * f1.u_i - f2.u_i) / 3;
    const double drift = std::hypot(f1.u_r - f2.u_r, f1.u_i - f2.u_i);
    p.abs_error = (4 * f1.abs_error + f2.abs_error) / 3 + drift * kRichardsonEps;
    p.method = BranchMethod::Richardson;
    return p;
}

// Value and d/db, for the integer-b limit below.
struct Dual {
    double v = 0.0;
    double d = 0.0;
};
Dual operator+(Dual p, double q) { return {p.v + q, p.d}; }
Dual operator*(Dual p, Dual q) { return {p.v * q.v, p.d * q.v + p.v * q.d}; }
Dual operator*(Dual p, double q) { return {p.v * q, p.d * q}; }
Dual operator/(Dual p, Dual q) { return {p.v / q.v, (p.d * q.v - p.v * q.d) / (q.v * q.v)}; }

// d/du 1/Gamma(u); (-1)^m m! at u = -m.
double drgamma(double u) {
    if (is_nonpos_int(u)) {
        double f = 1.0;
        for (int j = 2; j <= static_cast<int>(-u); ++j) f *= j;
        return (static_cast<long>(-u) % 2 == 0) ? f : -f;
    }
    return -digamma_fn(u) * rgamma(u);
}

Dual rgamma_dual(Dual u) { return {rgamma(u.v), drgamma(u.v) * u.d}; }

// e^{-x} sum_r (c)_r / Gamma(w + r) x^r / r!, with c and w carrying d/db.
Dual scaled_m_dual(Dual c, Dual w, double x, double& abs_sum) {
    const int direct = std::max(0, static_cast<int>(std::ceil(1.0 - w.v)));
    Dual sum, term;
    abs_sum = 0.0;
    for (int r = 0; r < 100000; ++r) {
        if (r <= direct) {
            Dual poch{1.0, 0.0};
            for (int j = 0; j < r; ++j) poch = poch * (c + j);
            double pw = std::exp(-x);
            for (int j = 1; j <= r; ++j) pw *= x / j;
            term = poch * rgamma_dual(w + r) * pw;
        } else {
            term = term * (c + (r - 1)) / (w + (r - 1)) * (x / r);
        }
        sum.v += term.v;
        sum.d += term.d;
        const double t = std::abs(term.v) + std::abs(term.d);
        abs_sum += t;
        if (r > direct && r > x + std::abs(c.v) + 2 && t <= 0.25 * kEps * abs_sum) break;
    }
    return sum;
}

// Integer b: U = (-1)^b d/db [ M(a,b,z)/Gamma(a-b+1) - z^{1-b} M(a-b+1,2-b,z)/Gamma(a) ]
// at z = -x + i0, M being Olver's normalised function and both terms
// Kummer-transformed so the sums have Poisson weights.
BranchPair limit_pair(double a, double b, double x) {
    double abs_a = 0.0, abs_b = 0.0;
    const Dual sa = scaled_m_dual({b - a, 1.0}, {b, 1.0}, x, abs_a);
    const Dual sb = scaled_m_dual({1.0 - a, 0.0}, {2.0 - b, -1.0}, x, abs_b);
    const Dual ga = rgamma_dual({a - b + 1.0, -1.0});
    const double da = (sa * ga).d;
    // z^{1-b} is real on the cut for integer b; its b-derivative brings -ln z.
    const double zp = std::pow(x, 1.0 - b) * ((static_cast<long>(1.0 - b) % 2 == 0) ? 1.0 : -1.0);
    const double ra = rgamma(a);
    const cd lz(std::log(x), kPi);
    const cd db = ra * zp * (sb.d - lz * sb.v);
    const double sign = (static_cast<long>(b) % 2 == 0) ? 1.0 : -1.0;
    const cd u = sign * (da - db);
    BranchPair p;
    p.u_r = u.real();
    p.u_i = u.imag();
    p.abs_error = 16 * kEps *
                  (abs_a * (std::abs(ga.v) + std::abs(ga.d)) + std::abs(ra * zp) * abs_b * (2 + std::abs(lz)));
    p.method = BranchMethod::Limit;
    return p;
}

struct AsymptoticSum {
    double value;
    double error;
};

// sum_n (a)_n (a-b+1)_n / (n! x^n), truncated just before the smallest term.
AsymptoticSum asymptotic_series(double a, double b, double x) {
    const double c = a - b + 1.0;
    double term = 1.0;
    double sum = 1.0;
    double prev = 1.0;
    for (int n = 0; n < 500; ++n) {
        const double next = term * (a + n) * (c + n) / ((n + 1.0) * x);
        if (next == 0.0) return {sum + 0.0, kEps * std::abs(sum)};
        if (std::abs(next) >= std::abs(prev) && n > 0) return {sum, std::abs(next) + kEps * std::abs(sum)};
        sum += next;
        prev = std::abs(next);
        term = next;
        if (std::abs(next) < 0.5 * kEps * std::abs(sum)) return {sum, kEps * std::abs(sum)};
    }
    return {sum, std::abs(term)};
}

BranchPair asymptotic_pair(double a, double b, double x) {
    const AsymptoticSum s = asymptotic_series(a, b, x);
    const double xa = std::pow(x, -a);
    BranchPair p;
    p.u_r = xa * cos_pi(a) * s.value;
    p.u_i = -xa * sin_pi(a) * s.value;
    // The recessive e^{-x} x^{a-b} contribution is not part of the expansion.
    const double recessive = 2 * kPi * std::exp(-x + (a - b) * std::log(x)) *
                             std::max({1.0, std::abs(rgamma(a)), std::abs(rgamma(a - b + 1.0))});
    p.abs_error = xa * s.error + recessive + 4 * kEps * xa * std::abs(s.value);
    p.method = BranchMethod::Asymptotic;
    return p;
}

BranchPair ei_class_pair(double a, double x) {
    const int m = static_cast<int>(a);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const double inv_fact = rgamma(static_cast<double>(m));
    BranchPair p;
    const double scaled = specfun::ei_m_scaled(m, x);
    p.u_r = sign * inv_fact * scaled;
    p.u_i = sign * inv_fact * kPi * std::exp(-x);
    p.abs_error = 1e-14 * (std::abs(p.u_r) + std::abs(p.u_i)) + 64 * kEps * inv_fact * std::exp(-x) * (x + m);
    p.method = BranchMethod::EiClass;
    return p;
}

BranchPair half_zero_pair(double x) {
    // Gamma(1/2+r)/Gamma(2+r) and d_r = psi(2+r) - psi(1/2+r) + psi(1+r) by recurrence.
    const double ln_x = std::log(x);
    CompensatedSum g3;  // sum g_r p_r
    CompensatedSum gd;  // sum g_r d_r p_r
    double g = std::sqrt(kPi);
    double d = digamma_fn(2.0) - digamma_fn(0.5) + digamma_fn(1.0);
    double poisson = std::exp(-x);  // e^{-x} x^r / r!
    for (int r = 0; r < 100000; ++r) {
        if (r > 0) {
            poisson *= x / r;
            g *= (r - 0.5) / (r + 1.0);
            d += 1.0 / (r + 1.0) - 1.0 / (r - 0.5) + 1.0 / r;
        }
        g3.add(g * poisson);
        gd.add(g * d * poisson);
        if (r > x + 4 && g * poisson < 0.25 * kEps * std::abs(g3.value())) break;
    }
    BranchPair p;
    const double s3 = x * g3.value();
    const double sd = x * gd.value();
    p.u_r = 2.0 / std::sqrt(kPi) * std::exp(-x) - ln_x / kPi * s3 + sd / kPi;
    p.u_i = -s3;
    p.abs_error = 16 * kEps * (x * (std::abs(ln_x) * g3.abs_sum() + gd.abs_sum()) / kPi + std::exp(-x));
    p.method = BranchMethod::HalfZero;
    return p;
}

BranchPair bessel_pair(double a, double x) {
    const double nu = 0.5 - a;
    const auto ik = specfun::bessel_ik(nu, 0.5 * x);
    const double w = std::exp(nu * std::log(x) - 0.5 * x);
    BranchPair p;
    p.u_r = w * (ik.k + kPi * sin_pi(nu) * ik.i) / std::sqrt(kPi);
    p.u_i = -std::sqrt(kPi) * cos_pi(nu) * w * ik.i;
    p.abs_error = 1e-14 * w * (ik.k + kPi * ik.i) * std::sqrt(kPi);
    p.method = BranchMethod::Bessel;
    return p;
}

bool is_ei_class(double a, double b) { return a == b && b >= 1.0 && is_int(b); }
bool is_half_zero(double a, double b) { return a == 0.5 && b == 0.0; }
bool is_bessel(double a, double b) { return b == 2.0 * a; }

}  // namespace

double branch_crossover(double a, double b) {
    for (double x = 10.0; x <= 200.0; x += 2.0) {
        if (std::exp(-x) * std::pow(x, std::max(0.0, 2 * a - b)) > 1e-13) continue;
        const AsymptoticSum s = asymptotic_series(a, b, x);
        if (s.error <= 1e-13 * std::abs(s.value)) return x;
    }
    return 40.0;
}

BranchPair u_branch_values(double a, double b, double x, BranchMethod method) {
    if (is_nonpos_int(a))
        throw Error(ErrorCode::PolynomialCase, "U is a polynomial for " + ab_string(a, b));
    if (!(x > 0.0)) throw Error(ErrorCode::InvalidParams, "u_branch_values needs x > 0");

    switch (method) {
        case BranchMethod::Series:
            if (is_int(b)) throw Error(ErrorCode::InvalidParams, "series branch values need non-integer b");
            return series_pair(a, b, x);
        case BranchMethod::Asymptotic: return asymptotic_pair(a, b, x);
        case BranchMethod::Richardson:
            if (!is_int(b)) throw Error(ErrorCode::InvalidParams, "Richardson branch values need integer b");
            return richardson_pair(a, b, x);
        case BranchMethod::Limit:
            if (!is_int(b)) throw Error(ErrorCode::InvalidParams, "limit branch values need integer b");
            return limit_pair(a, b, x);
        case BranchMethod::EiClass:
            if (!is_ei_class(a, b)) throw Error(ErrorCode::InvalidParams, "not an Ei-class pair: " + ab_string(a, b));
            return ei_class_pair(a, x);
        case BranchMethod::HalfZero:
            if (!is_half_zero(a, b)) throw Error(ErrorCode::InvalidParams, "not (1/2, 0): " + ab_string(a, b));
            return half_zero_pair(x);
        case BranchMethod::Bessel:
            if (!is_bessel(a, b)) throw Error(ErrorCode::InvalidParams, "not a Bessel pair: " + ab_string(a, b));
            return bessel_pair(a, x);
        case BranchMethod::Auto: break;
    }

    if (is_int(b)) {
        if (is_ei_class(a, b)) return ei_class_pair(a, x);
        if (is_bessel(a, b) && x < 1000.0) return bessel_pair(a, x);
    }
    if (x > branch_crossover(a, b)) return asymptotic_pair(a, b, x);
    if (!is_int(b)) return series_pair(a, b, x);
    if (is_half_zero(a, b)) return half_zero_pair(x);
    return limit_pair(a, b, x);
}

// --- complex U ------------------------------------------------------------

namespace {

// M(a, b, z) by direct summation; Kummer's transformation keeps Re z >= 0.
cd kummer_m_complex(double a, double b, cd z) {
    if (z.real() < 0.0) return std::exp(z) * kummer_m_complex(b - a, b, -z);
    ComplexCompensatedSum sum;
    cd term = 1.0;
    sum.add(term);
    const double az = std::abs(z);
    for (int r = 0; r < 100000; ++r) {
        if (a + r == 0.0) break;
        term *= (a + r) / ((b + r) * (r + 1.0)) * z;
        sum.add(term);
        if (r > az + std::abs(a) + std::abs(b) + 2 && std::abs(term) <= 0.25 * kEps * std::abs(sum.value()))
            break;
    }
    return sum.value();
}

double asymptotic_radius(double a, double b) {
    for (double r = 8.0; r <= 120.0; r += 2.0) {
        const AsymptoticSum s = asymptotic_series(a, b, r);
        if (s.error <= 1e-14 * std::abs(s.value)) return r;
    }
    return std::numeric_limits<double>::infinity();
}

cd u_asymptotic(double a, double b, cd z) {
    const double c = a - b + 1.0;
    cd term = 1.0;
    cd sum = 1.0;
    double prev = 1.0;
    for (int n = 0; n < 500; ++n) {
        const cd next = term * ((a + n) * (c + n) / (n + 1.0)) / (-z);
        const double an = std::abs(next);
        if (an == 0.0 || (n > 0 && an >= prev)) break;
        sum += next;
        prev = an;
        term = next;
        if (an < 0.5 * kEps * std::abs(sum)) break;
    }
    return std::exp(-a * std::log(z)) * sum;
}

// U(-m, b, z) = (-1)^m sum_s C(m,s) (b+s)_{m-s} (-z)^s.
cd u_polynomial(int m, double b, cd z) {
    cd sum = 0.0;
    double binom = 1.0;
    cd power = 1.0;
    for (int s = 0; s <= m; ++s) {
        if (s > 0) {
            binom *= static_cast<double>(m - s + 1) / s;
            power *= -z;
        }
        double poch = 1.0;
        for (int j = 0; j < m - s; ++j) poch *= b + s + j;
        sum += binom * poch * power;
    }
    return (m % 2 == 0) ? sum : -sum;
}

// Integer b = n + 1 >= 1: logarithmic expansion.
cd u_integer_b(double a, int n, cd z) {
    const cd lz = std::log(z);
    cd result = 0.0;
    const double ra = rgamma(a - n);
    if (ra != 0.0) {
        ComplexCompensatedSum sum;
        double psi_a = digamma_fn(a);
        double psi_1 = -specfun::kEulerGamma;  // psi(1+k)
        double psi_n = digamma_fn(n + 1.0);    // psi(n+k+1)
        cd coef = 1.0;                         // (a)_k / ((n+1)_k k!) z^k
        const double az = std::abs(z);
        for (int k = 0; k < 100000; ++k) {
            if (k > 0) {
                coef *= (a + k - 1) / ((n + k) * static_cast<double>(k)) * z;
                psi_a += 1.0 / (a + k - 1);
                psi_1 += 1.0 / k;
                psi_n += 1.0 / (n + k);
            }
            const cd t = coef * (lz + psi_a - psi_1 - psi_n);
            sum.add(t);
            if (k > az + std::abs(a) + n + 2 && std::abs(t) <= 0.25 * kEps * std::abs(sum.value())) break;
        }
        const double sign = ((n + 1) % 2 == 0) ? 1.0 : -1.0;
        result += sign * rgamma(n + 1.0) * ra * sum.value();
    }
    const double rga = rgamma(a);
    if (rga != 0.0) {
        cd finite = 0.0;
        for (int k = 1; k <= n; ++k) {
            double poch = 1.0;
            for (int j = 0; j < n - k; ++j) poch *= 1.0 - a + k + j;
            finite += std::tgamma(static_cast<double>(k)) * poch * rgamma(n - k + 1.0) * std::pow(z, -k);
        }
        result += rga * finite;
    }
    return result;
}

}  // namespace

std::complex<double> u_value(double a, double b, std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw Error(ErrorCode::OnBranchCut, "U evaluated on the branch cut at z=" + std::to_string(z.real()));
    if (is_nonpos_int(a)) return u_polynomial(static_cast<int>(-a), b, z);
    if (std::abs(z) >= asymptotic_radius(a, b)) return u_asymptotic(a, b, z);
    if (is_int(b)) {
        if (b >= 1.0) return u_integer_b(a, static_cast<int>(b) - 1, z);
        return std::exp((1.0 - b) * std::log(z)) * u_value(a - b + 1.0, 2.0 - b, z);
    }
    const double c1 = gamma_fn(1.0 - b) * rgamma(a - b + 1.0);
    const double c2 = gamma_fn(b - 1.0) * rgamma(a);
    cd u = 0.0;
    if (c1 != 0.0) u += c1 * kummer_m_complex(a, b, z);
    if (c2 != 0.0) u += c2 * std::exp((1.0 - b) * std::log(z)) * kummer_m_complex(a - b + 1.0, 2.0 - b, z);
    return u;
}

ComplexU u_complex(double a, double b, std::complex<double> z) {
    const cd v = u_value(a, b, z);
    const cd d = (a == 0.0) ? cd(0.0) : -a * u_value(a + 1.0, b + 1.0, z);
    return {v, d};
}

}  // namespace selfconv::chgf
