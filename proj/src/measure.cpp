#include "selfconv/measure.hpp"

#include "selfconv/chgf.hpp"
#include "selfconv/compensated.hpp"
#include "selfconv/errors.hpp"
#include "selfconv/specfun.hpp"

#include <cmath>
#include <string>

namespace selfconv {

using specfun::kEulerGamma;
using specfun::kPi;

std::string_view to_string(MeasureFamily f) {
    switch (f) {
        case MeasureFamily::Generic: return "generic";
        case MeasureFamily::Gamma: return "gamma";
        case MeasureFamily::EiClass: return "ei-class";
        case MeasureFamily::Airy: return "airy";
        case MeasureFamily::AiryPrime: return "airy-prime";
        case MeasureFamily::Bessel: return "bessel";
        case MeasureFamily::HalfZero: return "half-zero";
        case MeasureFamily::Algebraic: return "algebraic";
        case MeasureFamily::LaguerreComb: return "laguerre-comb";
        case MeasureFamily::Atomic: return "atomic";
    }
    return "?";
}

std::string_view to_string(Validity v) {
    switch (v) {
        case Validity::FullMeasure: return "full-measure";
        case Validity::Signed: return "signed";
        case Validity::ComplexUnsupported: return "complex-unsupported";
    }
    return "?";
}

std::complex<double> ComplexContour::integrand(double y, int n) const {
    const std::complex<double> minus_zeta(2.0 + alpha, -2.0 * abar * y);
    const double w = std::sqrt(std::max(0.0, 1.0 - y * y));
    return -(2.0 * abar * abar / kPi) * std::pow(minus_zeta, n - 2) * w;
}

// --- closed forms ---------------------------------------------------------

namespace closed_form {

double airy_density(double x) {
    const auto ai = specfun::airy_pair(0.25 * std::cbrt(x * x));
    return std::pow(x, -1.0 / 3.0) / (kPi * kPi * (ai.ai * ai.ai + ai.bi * ai.bi));
}

double airy_prime_density(double x) {
    const auto ai = specfun::airy_pair(0.25 * std::cbrt(x * x));
    return 0.25 * std::cbrt(x) / (kPi * kPi * (ai.ai_prime * ai.ai_prime + ai.bi_prime * ai.bi_prime));
}

double ei_class_density(int m, double x) {
    // e^{x} / Ei_m^2 rewritten with the scaled e^{-x} Ei_m so large x stays finite.
    const double s = specfun::ei_m_scaled(m, x);
    const double e = std::exp(-x);
    const double c = std::tgamma(static_cast<double>(m)) / m;
    return std::pow(x, -m) * c * e / (s * s + kPi * kPi * e * e);
}

double bessel_density(double nu, double x) {
    if (nu == 0.5) return std::exp(-x);
    const auto ik = specfun::bessel_ik(nu, 0.5 * x);
    const double h = std::exp(-0.5 * x);
    const double is = ik.i * h;      // e^{-x/2} I
    const double ks = ik.k / h;      // e^{x/2} K
    const double s = specfun::sin_pi(nu);
    // h^2 (K^2 + pi^2 I^2 + 2 pi sin(pi nu) K I), overflow-free
    const double den = h * h * h * h * ks * ks + kPi * kPi * is * is + 2 * kPi * s * h * h * ks * is;
    return specfun::cos_pi(nu) / (0.5 - nu) / x * h * h / den;
}

double d_r_elementary(int r) {
    double s = 0.0;
    for (int j = 1; j <= r; ++j) s += 1.0 / j - 1.0 / (2.0 * j - 1.0);
    return -kEulerGamma + 2 * std::log(2.0) + 1.0 / (r + 1.0) + 2 * s;
}

double d_r_digamma(int r) {
    return specfun::digamma_fn(2.0 + r) - specfun::digamma_fn(0.5 + r) + specfun::digamma_fn(1.0 + r);
}

double half_zero_density(double x) {
    const double y = 0.5 * x;
    // Scaled G3 = e^{-y} sum C_r y^{r+1}/(r! 4^r); G2 likewise with the d_r weights.
    CompensatedSum g3, gd;
    double c = 1.0;                  // C_r / 4^r
    double d = d_r_elementary(0);
    double poisson = std::exp(-y);   // e^{-y} y^r / r!
    for (int r = 0; r < 100000; ++r) {
        if (r > 0) {
            c *= (2.0 * r - 1.0) / (2.0 * (r + 1.0));
            poisson *= y / r;
            d += 1.0 / (r + 1.0) - 1.0 / r + 2.0 * (1.0 / r - 1.0 / (2.0 * r - 1.0));
        }
        const double t = c * y * poisson;
        g3.add(t);
        gd.add(t * d);
        if (r > y + 4 && t < 1e-17 * g3.value()) break;
    }
    const double e = std::exp(-y);
    const double G3 = g3.value();
    const double G2 = 2 * e - G3 * std::log(y) + gd.value();
    return 2 * e / (G2 * G2 + kPi * kPi * G3 * G3);
}

double gamma_density(double alpha, double x) {
    return std::exp(alpha * std::log(x) - x - std::lgamma(alpha + 1.0));
}

}  // namespace closed_form

// --- construction ---------------------------------------------------------

namespace {

constexpr double kClosedFormLimit = 600.0;

bool is_nonpos_int(const Rational& q) { return is_nonpositive_integer(q); }

OriginBehaviour chgf_origin(double a, double b, double k) {
    OriginBehaviour o;
    o.a = a;
    o.k = k;
    if (b < 1.0) {
        o.kind = OriginKind::Power;
        o.exponent = -b;
    } else if (b == 1.0) {
        o.kind = OriginKind::LogSquared;
        o.exponent = -1.0;
        // unused for polynomial U (purely atomic measure)
        const bool poly = a <= 0.0 && a == std::floor(a);
        o.log_shift = poly ? 0.0 : specfun::digamma_fn(a) + 2 * kEulerGamma;
    } else {
        o.kind = OriginKind::Power;
        o.exponent = b - 2.0;
    }
    return o;
}

std::function<double(double)> generic_density(double k, double a, double b) {
    const double norm = specfun::rgamma(a + 1.0) * specfun::rgamma(a - b + 1.0);
    if (norm == 0.0) return [](double) { return 0.0; };
    return [k, a, b, norm](double x) {
        const double y = k * x;
        const auto u = chgf::u_branch_values(a, b, y);
        return k * norm * std::exp(-b * std::log(y) - y) / u.modulus_sq();
    };
}

SpectralMeasure chgf_skeleton(const ChgfParams& c) {
    const double k = to_double(c.k), a = to_double(c.a), b = to_double(c.b);
    SpectralMeasure m;
    m.scale = c.sign_flipped ? -1.0 : 1.0;
    m.origin = chgf_origin(a, b, k);
    m.crossover = chgf::branch_crossover(a, b) / k;
    const double norm = specfun::rgamma(a + 1.0) * specfun::rgamma(a - b + 1.0);
    m.validity = norm >= 0.0 ? Validity::FullMeasure : Validity::Signed;
    if (!is_negative_integer(c.a) && !is_negative_integer(c.a - c.b)) m.tail = tail_asymptote(c);
    const Rational r = origin_residue(c.a, c.b);
    if (sgn(r) != 0) m.atoms.push_back({0.0, -to_double(r)});
    return m;
}

void check_atom_signs(SpectralMeasure& m) {
    for (const auto& atom : m.atoms)
        if (atom.weight < 0.0) m.validity = Validity::Signed;
}

SpectralMeasure polynomial_measure(const ChgfParams& c) {
    // Zeros of U(-m, b, y) are the roots of L_m^{(b-1)}; when b is a
    // nonpositive integer the (1-b)-fold zero at the origin belongs to r.
    SpectralMeasure m = chgf_skeleton(c);
    m.family = MeasureFamily::Atomic;
    m.tail.reset();
    long deg = -c.a.get_num().get_si();
    Rational lag_alpha = c.b - 1;
    if (is_nonpositive_integer(c.b) && 1 - c.b <= deg) {
        deg -= Rational(1 - c.b).get_num().get_si();
        lag_alpha = 1 - c.b;
    }
    const double k = to_double(c.k);
    const double weight = -1.0 / to_double(c.a);  // minus the residue alpha1/alpha3
    if (deg > 0) {
        for (const auto& y : specfun::laguerre_roots(lag_alpha, static_cast<std::size_t>(deg))) {
            const std::complex<double> zeta = y / k;
            if (zeta.imag() == 0.0)
                m.atoms.push_back({-zeta.real(), weight});
            else
                m.known_poles.push_back(zeta);
        }
    }
    m.validity = Validity::FullMeasure;
    check_atom_signs(m);
    return m;
}

SpectralMeasure factorial_measure(const SequenceParams& p) {
    const auto [q, flipped] = normalize_sign(p);
    const Rational alpha = 1 + q.alpha2() / q.alpha1();
    SpectralMeasure m;
    m.scale = flipped ? -1.0 : 1.0;
    if (alpha < -1)
        throw Error(ErrorCode::NotSimplyRepresented,
                    "factorial class with alpha = " + to_string(alpha) + " < -1 has no measure");
    if (alpha == -1) {
        m.family = MeasureFamily::Atomic;
        m.atoms.push_back({0.0, 1.0});
        return m;
    }
    const double k = to_double(1 / q.alpha1());
    const double al = to_double(alpha);
    m.family = MeasureFamily::Gamma;
    m.density = [k, al](double x) { return k * closed_form::gamma_density(al, k * x); };
    m.origin = {OriginKind::Power, al, 1.0, k, 0.0};
    m.tail = TailAsymptote{std::exp((al + 1) * std::log(k) - std::lgamma(al + 1)), al, k};
    return m;
}

// Closed form in the k = 1 variable y, or empty if (a, b) is not a named family.
std::pair<MeasureFamily, std::function<double(double)>> named_family(const Rational& a, const Rational& b) {
    const Rational sixth(1, 6), third(1, 3);
    if (a == b && is_integer(a) && a >= 1) {
        const int m = static_cast<int>(a.get_num().get_si());
        return {MeasureFamily::EiClass, [m](double y) { return closed_form::ei_class_density(m, y); }};
    }
    if (a == sixth && b == third)
        return {MeasureFamily::Airy, [](double y) { return 6 * closed_form::airy_density(6 * y); }};
    if (a == -sixth && b == -third)
        return {MeasureFamily::AiryPrime, [](double y) { return 6 * closed_form::airy_prime_density(6 * y); }};
    if (a == Rational(1, 2) && sgn(b) == 0)
        return {MeasureFamily::HalfZero, [](double y) { return 2 * closed_form::half_zero_density(2 * y); }};
    if (b == 2 * a) {
        const Rational nu = Rational(1, 2) - a;
        if (abs(nu) < Rational(3, 2) && nu != Rational(1, 2) && nu != Rational(-1, 2)) {
            const double n = to_double(nu);
            return {MeasureFamily::Bessel, [n](double y) { return closed_form::bessel_density(n, y); }};
        }
    }
    return {MeasureFamily::Generic, {}};
}

}  // namespace

TailAsymptote tail_asymptote(const ChgfParams& c) {
    if (is_negative_integer(c.a) || is_negative_integer(c.a - c.b))
        throw Error(ErrorCode::PolynomialDegenerate,
                    "tail amplitude undefined for a=" + to_string(c.a) + ", b=" + to_string(c.b));
    const double k = to_double(c.k), a = to_double(c.a), b = to_double(c.b);
    const double nu = 2 * a - b;
    const double amp = std::pow(k, nu + 1) * specfun::rgamma(a + 1) * specfun::rgamma(a - b + 1);
    return {amp, nu, k};
}

SpectralMeasure build_generic_measure(const ChgfParams& c) {
    if (is_nonpos_int(c.a))
        throw Error(ErrorCode::PolynomialCase, "U is a polynomial for a=" + to_string(c.a));
    SpectralMeasure m = chgf_skeleton(c);
    m.family = MeasureFamily::Generic;
    m.density = generic_density(to_double(c.k), to_double(c.a), to_double(c.b));
    check_atom_signs(m);
    return m;
}

SpectralMeasure build_measure(const SequenceParams& p) {
    if (p.is_algebraic())
        throw Error(ErrorCode::AlgebraicClass, "alpha1 = 0: use the algebraic measure for " + p.to_string());
    if (sgn(p.alpha3()) == 0) return factorial_measure(p);
    const ChgfParams c = chgf_params(p);
    if (is_nonpos_int(c.a)) return polynomial_measure(c);

    SpectralMeasure m = build_generic_measure(c);
    auto [family, g] = named_family(c.a, c.b);
    if (family != MeasureFamily::Generic) {
        const double k = to_double(c.k);
        auto generic = std::move(m.density);
        m.family = family;
        m.density = [k, g = std::move(g), generic = std::move(generic)](double x) {
            const double y = k * x;
            return y <= kClosedFormLimit ? k * g(y) : generic(x);
        };
    }
    return m;
}

SpectralMeasure bessel_measure(const Rational& nu) {
    if (abs(nu) > Rational(3, 2))
        throw Error(ErrorCode::OutOfRegularRange, "Bessel order " + to_string(nu) + " outside [-3/2, 3/2]");
    return build_measure(SequenceParams(1, 2 * nu - 2, Rational(1, 2) - nu));
}

MeasureOrContour algebraic_measure(const Rational& alpha) {
    if (alpha < -1) {
        ComplexContour c;
        c.alpha = to_double(alpha);
        c.abar = std::sqrt(to_double(-1 - alpha));
        c.origin_weight = alpha > -2 ? -to_double(alpha) : 0.0;
        c.first_valid_n = alpha == -2 ? 2 : 1;
        return c;
    }
    SpectralMeasure m;
    m.family = MeasureFamily::Algebraic;
    if (alpha == -1) {
        m.atoms.push_back({0.0, 1.0});
        return m;
    }
    const double al = to_double(alpha);
    const double root = std::sqrt(1.0 + al);
    m.support_lo = (root - 1) * (root - 1);
    m.support_hi = (root + 1) * (root + 1);
    const double lo = m.support_lo, hi = m.support_hi;
    m.density = [lo, hi](double x) {
        return std::sqrt(std::max(0.0, (x - lo) * (hi - x))) / (2 * kPi * x);
    };
    m.origin = {OriginKind::Power, al == 0.0 ? -0.5 : 0.0, 1.0, 1.0, 0.0};
    if (alpha < 0) m.atoms.push_back({0.0, -al});
    return m;
}

SpectralMeasure laguerre_comb(const Rational& alpha, std::size_t m) {
    SpectralMeasure out;
    out.family = MeasureFamily::LaguerreComb;
    const double w = 1.0 / static_cast<double>(m);
    for (const auto& xi : specfun::laguerre_roots(alpha, m)) {
        if (xi.imag() != 0.0)
            throw Error(ErrorCode::ComplexRoots,
                        "L_" + std::to_string(m) + "^(" + to_string(alpha) + ") has non-real roots");
        out.atoms.push_back({xi.real(), w});
    }
    check_atom_signs(out);
    return out;
}

MeasureOrContour measure_for(const SequenceParams& p) {
    if (!p.is_algebraic()) return build_measure(p);
    if (sgn(p.alpha3()) == 0) {
        SpectralMeasure m;
        m.family = MeasureFamily::Atomic;
        m.atoms.push_back({to_double(p.alpha2()), 1.0});
        return m;
    }
    MeasureOrContour out = algebraic_measure(p.alpha2() / p.alpha3());
    const double t = to_double(p.alpha3());
    std::visit([t](auto& m) { m.scale = t; }, out);
    return out;
}

}  // namespace selfconv
