#include "selfconv/moments.hpp"

#include "selfconv/errors.hpp"
#include "selfconv/exact_seq.hpp"
#include "selfconv/specfun.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace selfconv {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
using specfun::kPi;

constexpr unsigned kMaxDepth = 18;

struct Piece {
    double value = 0.0;
    double error = 0.0;
};

template <class F>
Piece integrate(const F& f, double lo, double hi, double tol, std::size_t& evals) {
    if (!(hi > lo)) return {};
    double err = 0.0;
    double l1 = 0.0;
    auto counted = [&](double x) {
        ++evals;
        return f(x);
    };
    const double v = GK::integrate(counted, lo, hi, kMaxDepth, tol, &err, &l1);
    return {v, err};
}

// x^{n-1} with 0^0 = 1.
double power_nm1(double x, int n) { return n == 1 ? 1.0 : std::pow(x, n - 1); }

double internal_tol(double tol) { return std::clamp(tol * 1e-2, 1e-13, 1e-6); }

double atom_sum(const SpectralMeasure& mu, int n) {
    double s = 0.0;
    for (const auto& atom : mu.atoms) s += atom.weight * power_nm1(atom.location, n);
    return s;
}

MomentResult finite_support_moment(const SpectralMeasure& mu, int n, double qtol) {
    // x = lo + w sin^2(phi) turns both square-root edges into smooth endpoints.
    const double lo = mu.support_lo, w = mu.support_hi - mu.support_lo;
    MomentResult r;
    auto f = [&](double phi) {
        const double s = std::sin(phi), c = std::cos(phi);
        const double x = lo + w * s * s;
        return power_nm1(x, n) * mu.density(x) * 2 * w * s * c;
    };
    const Piece p = integrate(f, 0.0, kPi / 2, qtol, r.diag.evaluations);
    r.value = p.value;
    r.diag.error_estimate = p.error;
    return r;
}

// int_0^eps x^{n-1} density from the leading origin behaviour.
double origin_remainder(const SpectralMeasure& mu, int n, double eps) {
    const double f = mu.density(eps);
    const double en = std::pow(eps, n) * f;
    if (mu.origin.kind == OriginKind::LogSquared) {
        if (n >= 2) return en / (n - 1);
        const double l = std::log(mu.origin.k * eps) + mu.origin.log_shift;
        return eps * f * (l * l + kPi * kPi) * (kPi / 2 + std::atan(l / kPi)) / kPi;
    }
    return en / (n + mu.origin.exponent);
}

MomentResult half_line_moment(const SpectralMeasure& mu, int n, double qtol) {
    MomentResult r;
    auto& diag = r.diag;
    const double k = mu.origin.k > 0 ? mu.origin.k : 1.0;
    if (mu.origin.kind == OriginKind::Power && mu.origin.exponent + n <= 0.0)
        throw Error(ErrorCode::NonIntegrableOrigin,
                    "x^{n-1} density not integrable at 0 for n=" + std::to_string(n));

    const double eps = 1e-10 / k;
    const double x0 = 0.5 / k;

    // (0, eps]: analytic remainder; [eps, x0]: in ln x.
    const double rem = origin_remainder(mu, n, eps);
    auto f_log = [&](double s) {
        const double x = std::exp(s);
        return std::pow(x, n) * mu.density(x);
    };
    const Piece near = integrate(f_log, std::log(eps), std::log(x0), qtol, diag.evaluations);

    // Far end: stop where the asymptotic tail holds a negligible share.
    double x_tail = std::max(x0 * 4, 60.0 / k);
    double tail_value = 0.0, tail_error = 0.0;
    if (mu.tail && mu.tail->amplitude != 0.0 && n + mu.tail->exponent > 0.0) {
        const double s = n + mu.tail->exponent;
        const double lam = mu.tail->rate;
        const double q_target = std::max(1e-300, 1e-4 * qtol);
        x_tail = std::max(x_tail, boost::math::gamma_q_inv(s, q_target) / lam);
        const double log_mass = std::lgamma(s) - s * std::log(lam);
        tail_value = mu.tail->amplitude * std::exp(log_mass) * boost::math::gamma_q(s, lam * x_tail);
        // Leading-order tail: relative error O(1/(lam x)).
        tail_error = std::abs(tail_value) * 4.0 / (lam * x_tail);
    }

    auto f = [&](double x) { return power_nm1(x, n) * mu.density(x); };
    Piece mid;
    for (double lo = x0; lo < x_tail;) {
        const double hi = std::min(x_tail, 2 * lo);
        const Piece p = integrate(f, lo, hi, qtol, diag.evaluations);
        mid.value += p.value;
        mid.error += p.error;
        lo = hi;
    }

    r.value = rem + near.value + mid.value + tail_value;
    diag.error_estimate = near.error + mid.error + tail_error + std::abs(rem) * 1e-6;
    const double mag = std::abs(rem) + std::abs(near.value) + std::abs(mid.value) + std::abs(tail_value);
    diag.tail_fraction = mag > 0 ? std::abs(tail_value) / mag : 0.0;
    return r;
}

}  // namespace

MomentResult moment_quadrature(const SpectralMeasure& mu, int n, double tol) {
    if (n < 1) throw Error(ErrorCode::InvalidParams, "moment index n must be >= 1");
    const double qtol = internal_tol(tol);
    MomentResult r;
    if (mu.has_density()) r = mu.finite_support() ? finite_support_moment(mu, n, qtol) : half_line_moment(mu, n, qtol);
    r.value += atom_sum(mu, n);
    r.diag.tolerance_met = r.diag.error_estimate <= tol * std::max(std::abs(r.value), 1e-300);
    return r;
}

MomentResult contour_moment(const ComplexContour& c, int n, double tol, double* imag_residual) {
    if (n < 1) throw Error(ErrorCode::InvalidParams, "moment index n must be >= 1");
    MomentResult r;
    if (imag_residual) *imag_residual = 0.0;
    if (n < c.first_valid_n) {
        r.value = 1.0;
        return r;
    }
    const double qtol = internal_tol(tol);
    // y = cos(theta) so the sqrt(1-y^2) edge is smooth.
    auto re = [&](double t) { return c.integrand(std::cos(t), n).real() * std::sin(t); };
    auto im = [&](double t) { return c.integrand(std::cos(t), n).imag() * std::sin(t); };
    const Piece pr = integrate(re, 0.0, kPi, qtol, r.diag.evaluations);
    if (imag_residual) *imag_residual = std::abs(integrate(im, 0.0, kPi, qtol, r.diag.evaluations).value);
    r.value = pr.value + (n == 1 ? c.origin_weight : 0.0);
    r.diag.error_estimate = pr.error;
    r.diag.tolerance_met = pr.error <= tol * std::max(std::abs(r.value), 1e-300);
    return r;
}

AssembledValue assemble_u_n(const SequenceParams& p, int n, const MeasureOrContour& mu, const PoleSet* poles,
                            double tol) {
    AssembledValue out;
    if (const auto* contour = std::get_if<ComplexContour>(&mu)) {
        out.moment = contour_moment(*contour, n, tol, &out.imag_residual);
        out.value = std::pow(contour->scale, n - 1) * out.moment.value;
        return out;
    }
    const auto& m = std::get<SpectralMeasure>(mu);
    out.moment = moment_quadrature(m, n, tol);

    const std::vector<std::complex<double>>* zeros = nullptr;
    if (poles)
        zeros = &poles->zeros;
    else if (!m.known_poles.empty())
        zeros = &m.known_poles;
    else if (!p.is_algebraic() && sgn(p.alpha3()) != 0) {
        const auto report = classify(p);
        if (report.zero_count && *report.zero_count > 0)
            throw Error(ErrorCode::MissingPoles,
                        p.to_string() + " has " + std::to_string(*report.zero_count) + " cut-plane poles");
    }

    std::complex<double> total = out.moment.value;
    if (zeros && !zeros->empty()) {
        const auto [q, flipped] = normalize_sign(p);
        const double s = to_double(q.alpha1() / q.alpha3());
        std::complex<double> pole_sum = 0.0;
        for (const auto& z : *zeros) pole_sum += s * (n == 1 ? std::complex<double>(1.0) : std::pow(-z, n - 1));
        total -= pole_sum;
        out.imag_residual = std::abs(total.imag());
    }
    out.value = std::pow(m.scale, n - 1) * total.real();
    return out;
}

AssembledValue assemble_u_n(const SequenceParams& p, int n, const PoleSet* poles, double tol) {
    return assemble_u_n(p, n, measure_for(p), poles, tol);
}

LogValue asymptotic_estimate(const ChgfParams& c, int n) {
    if (is_negative_integer(c.a) || is_negative_integer(c.a - c.b))
        throw Error(ErrorCode::PolynomialDegenerate,
                    "asymptotic amplitude undefined for a=" + to_string(c.a) + ", b=" + to_string(c.b));
    const double k = to_double(c.k), a = to_double(c.a), b = to_double(c.b);
    int s1 = 1, s2 = 1, s3 = 1;
    const double l1 = specfun::lgamma_signed(n + 2 * a - b, s1);
    const double l2 = specfun::lgamma_signed(a + 1, s2);
    const double l3 = specfun::lgamma_signed(a - b + 1, s3);
    LogValue v;
    v.log_abs = l1 - l2 - l3 - (n - 1) * std::log(k);
    v.sign = s1 * s2 * s3;
    if (c.sign_flipped && (n - 1) % 2 == 1) v.sign = -v.sign;
    return v;
}

bool VerificationReport::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.pass; });
}

VerificationReport verify(const SequenceParams& p, int count, double tol) {
    if (count < 1) throw Error(ErrorCode::InvalidParams, "verify needs N >= 1");
    const ExactSequence exact = generate_exact(p, static_cast<std::size_t>(count));
    const MeasureOrContour mu = measure_for(p);

    VerificationReport report{p, tol, {}, 0, 0.0, 0.0, std::nullopt, 0};
    std::optional<PoleSet> poles;
    if (const auto* m = std::get_if<SpectralMeasure>(&mu);
        m && m->known_poles.empty() && !p.is_algebraic() && sgn(p.alpha3()) != 0) {
        const auto cls = classify(p);
        if (cls.cls == SequenceClass::Irregular || cls.cls == SequenceClass::Unresolved) {
            poles = locate_poles(p, *m);
            report.pole_source = poles->provenance;
            report.pole_count = poles->zeros.size();
        }
    } else if (m && !m->known_poles.empty()) {
        report.pole_source = PoleProvenance::ExactPolynomial;
        report.pole_count = m->known_poles.size();
    }

    for (int n = 1; n <= count; ++n) {
        const AssembledValue v = assemble_u_n(p, n, mu, poles ? &*poles : nullptr, tol);
        VerificationRow row;
        row.n = n;
        row.exact = exact.u(static_cast<std::size_t>(n));
        row.numeric = v.value;
        const double ex = to_double(row.exact);
        row.abs_err = std::abs(v.value - ex);
        row.rel_err = ex != 0.0 ? row.abs_err / std::abs(ex) : row.abs_err;
        row.pass = row.rel_err <= tol;
        report.rows.push_back(std::move(row));
        report.evaluations += v.moment.diag.evaluations;
        report.max_tail_fraction = std::max(report.max_tail_fraction, v.moment.diag.tail_fraction);
        report.max_error_estimate = std::max(report.max_error_estimate, v.moment.diag.error_estimate);
    }
    return report;
}

}  // namespace selfconv
