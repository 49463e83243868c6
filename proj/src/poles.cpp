#include "selfconv/poles.hpp"

#include "selfconv/chgf.hpp"
#include "selfconv/errors.hpp"
#include "selfconv/exact_seq.hpp"
#include "selfconv/moments.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace selfconv {

std::string_view to_string(PoleProvenance p) {
    switch (p) {
        case PoleProvenance::LemmaCount: return "lemma-count";
        case PoleProvenance::PronyEstimate: return "prony-estimate";
        case PoleProvenance::NewtonPolished: return "newton-polished";
        case PoleProvenance::ExactPolynomial: return "exact-polynomial";
    }
    return "?";
}

std::optional<long> expected_zero_count(const ChgfParams& c) { return lemma_zero_count(c.a, c.b); }

namespace {

constexpr double kTableTol = 1e-12;
constexpr double kIllConditioned = 1e14;

// Roots of z^p + c_1 z^{p-1} + ... + c_p.
std::vector<std::complex<double>> monic_roots(const std::vector<double>& c) {
    const std::size_t p = c.size();
    std::vector<std::complex<double>> roots;
    if (p == 1) {
        roots.emplace_back(-c[0], 0.0);
    } else if (p == 2) {
        const std::complex<double> disc = std::sqrt(std::complex<double>(c[0] * c[0] - 4 * c[1]));
        roots.push_back((-c[0] + disc) / 2.0);
        roots.push_back((-c[0] - disc) / 2.0);
    } else if (p > 2) {
        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
        for (std::size_t i = 0; i < p; ++i) comp(0, static_cast<Eigen::Index>(i)) = -c[i];
        for (std::size_t i = 1; i < p; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
        Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            std::complex<double> z = es.eigenvalues()(i);
            for (int it = 0; it < 10; ++it) {
                std::complex<double> f = 1.0, df = 0.0;
                for (double ci : c) {
                    df = df * z + f;
                    f = f * z + ci;
                }
                if (df == 0.0) break;
                const auto step = f / df;
                z -= step;
                if (std::abs(step) <= 1e-15 * std::abs(z)) break;
            }
            roots.push_back(z);
        }
    }
    for (auto& z : roots)
        if (std::abs(z.imag()) <= 1e-14 * std::abs(z)) z.imag(0.0);
    return roots;
}

double row_v(const std::vector<PronyRow>& rows, int n) {
    for (const auto& r : rows)
        if (r.n == n) return r.v;
    throw Error(ErrorCode::InvalidParams, "difference table has no row n=" + std::to_string(n));
}

// a = alpha3/alpha1 in sign-normalised coordinates.
double normalised_a(const SequenceParams& p) {
    const auto [q, flipped] = normalize_sign(p);
    return to_double(q.alpha3() / q.alpha1());
}

}  // namespace

std::vector<PronyRow> prony_table(const SequenceParams& p, const SpectralMeasure& mu, int count, double tol) {
    const ExactSequence exact = generate_exact(p, static_cast<std::size_t>(count));
    const double a = normalised_a(p);
    std::vector<PronyRow> rows;
    for (int n = 1; n <= count; ++n) {
        PronyRow r;
        r.n = n;
        r.exact = exact.u(static_cast<std::size_t>(n));
        r.integral = moment_quadrature(mu, n, tol).value;
        // Compare in the measure's own coordinates.
        const double u = std::pow(mu.scale, n - 1) * to_double(r.exact);
        r.raw = u - r.integral;
        r.v = -a * r.raw;
        rows.push_back(std::move(r));
    }
    return rows;
}

PronyFit prony_fit(const std::vector<PronyRow>& rows, int order, int n_lo, int n_hi) {
    if (order < 1) throw Error(ErrorCode::InvalidParams, "Prony order must be >= 1");
    const int n_eq = n_hi - n_lo + 1 - order;
    if (n_eq < order)
        throw Error(ErrorCode::InvalidParams, "Prony fit of order " + std::to_string(order) + " needs at least " +
                                                  std::to_string(2 * order) + " rows");
    Eigen::MatrixXd A(n_eq, order);
    Eigen::VectorXd rhs(n_eq);
    for (int e = 0; e < n_eq; ++e) {
        const int n = n_lo + order + e;
        rhs(e) = -row_v(rows, n);
        for (int i = 1; i <= order; ++i) A(e, i - 1) = row_v(rows, n - i);
    }
    // Column scaling, then normal equations.
    Eigen::VectorXd scale(order);
    for (int i = 0; i < order; ++i) {
        const double nrm = A.col(i).norm();
        scale(i) = nrm > 0 ? 1.0 / nrm : 1.0;
    }
    const Eigen::MatrixXd B = A * scale.asDiagonal();
    const Eigen::MatrixXd N = B.transpose() * B;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(N, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff(), lmax = es.eigenvalues().maxCoeff();
    PronyFit fit;
    fit.condition = lmin > 0 ? lmax / lmin : std::numeric_limits<double>::infinity();
    if (!(fit.condition < kIllConditioned))
        throw Error(ErrorCode::IllConditioned,
                    "Prony normal matrix condition " + std::to_string(fit.condition) + " for order " +
                        std::to_string(order));
    const Eigen::VectorXd y = N.ldlt().solve(B.transpose() * rhs);
    const Eigen::VectorXd c = scale.asDiagonal() * y;
    fit.coeffs.assign(c.data(), c.data() + order);
    const double rn = rhs.norm();
    fit.residual = rn > 0 ? (A * c - rhs).norm() / rn : 0.0;
    fit.roots = monic_roots(fit.coeffs);
    return fit;
}

PronyResult prony_extract(const SequenceParams& p, const SpectralMeasure& mu, int n_zeros,
                          std::optional<std::pair<int, int>> n_range, double residual_tol) {
    if (n_zeros < 1) throw Error(ErrorCode::InvalidParams, "prony_extract needs N_zeros >= 1");
    const auto [lo, hi] = n_range.value_or(std::pair<int, int>{1, 2 * n_zeros + 2});
    PronyResult out;
    out.table = prony_table(p, mu, hi, kTableTol);
    out.fit = prony_fit(out.table, n_zeros, lo, hi);
    if (out.fit.residual > residual_tol)
        throw Error(ErrorCode::CountMismatch, "Prony residual " + std::to_string(out.fit.residual) +
                                                  " with " + std::to_string(n_zeros) + " zeros");
    const auto [q, flipped] = normalize_sign(p);
    out.poles.residue = q.alpha1() / q.alpha3();
    out.poles.provenance = PoleProvenance::PronyEstimate;
    for (const auto& r : out.fit.roots) out.poles.zeros.push_back(-r);
    return out;
}

DiscoveryResult prony_discover(const SequenceParams& p, const SpectralMeasure& mu, int max_order) {
    DiscoveryResult out;
    const auto [q, flipped] = normalize_sign(p);
    const Rational residue = q.alpha1() / q.alpha3();

    // p = 0: are the differences distinguishable from quadrature noise?
    auto table = prony_table(p, mu, 4, kTableTol);
    bool silent = true;
    for (const auto& r : table) {
        const double scale = std::abs(r.integral) + std::abs(to_double(r.exact));
        if (std::abs(r.raw) > 1e-8 * std::max(scale, 1.0)) silent = false;
    }
    out.residuals.push_back(silent ? 0.0 : 1.0);
    if (silent) {
        out.order = 0;
        out.result.table = std::move(table);
        out.result.poles.residue = residue;
        return out;
    }

    double prev = 1.0;
    for (int order = 1; order <= max_order; ++order) {
        const int hi = 2 * order + 2;
        if (static_cast<int>(table.size()) < hi) table = prony_table(p, mu, hi, kTableTol);
        PronyFit fit;
        try {
            fit = prony_fit(table, order, 1, hi);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::IllConditioned) throw;
            out.residuals.push_back(prev);
            continue;
        }
        out.residuals.push_back(fit.residual);
        if (fit.residual <= 1e-3 * prev) {
            out.order = order;
            out.result.fit = fit;
            out.result.table = table;
            out.result.poles.residue = residue;
            out.result.poles.provenance = PoleProvenance::PronyEstimate;
            for (const auto& r : fit.roots) out.result.poles.zeros.push_back(-r);
            return out;
        }
        prev = fit.residual;
    }
    throw Error(ErrorCode::CountMismatch, "no Prony order up to " + std::to_string(max_order) + " fits " + p.to_string());
}

std::vector<std::complex<double>> newton_polish(const ChgfParams& c, const std::vector<std::complex<double>>& zeros) {
    const double k = to_double(c.k), a = to_double(c.a), b = to_double(c.b);
    std::vector<std::complex<double>> out;
    out.reserve(zeros.size());
    for (auto z : zeros) {
        bool converged = false;
        for (int it = 0; it < 50; ++it) {
            chgf::ComplexU u;
            try {
                u = chgf::u_complex(a, b, k * z);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::OnBranchCut) throw;
                throw Error(ErrorCode::ConvergedToCut, "Newton iterate reached the branch cut");
            }
            const std::complex<double> step = u.value / (k * u.derivative);
            // an exact zero is returned as given
            if (it == 0 && std::abs(step) < 1e-12 * std::abs(z)) {
                converged = true;
                break;
            }
            z -= step;
            if (std::abs(step) < 1e-12 * std::abs(z)) {
                converged = true;
                break;
            }
        }
        if (!converged) throw Error(ErrorCode::NoConvergence, "Newton did not converge within 50 iterations");
        if (z.real() < 0.0 && std::abs(z.imag()) < 1e-8)
            throw Error(ErrorCode::ConvergedToCut, "zero converged onto the negative real axis");
        out.push_back(z);
    }
    return out;
}

PoleSearch search_poles(const SequenceParams& p, const SpectralMeasure& mu) {
    const ChgfParams c = chgf_params(p);
    PoleSearch out;
    out.poles.residue = 1 / c.a;
    if (!mu.known_poles.empty() || is_nonpositive_integer(c.a)) {
        out.poles.zeros = mu.known_poles;
        out.poles.provenance = PoleProvenance::ExactPolynomial;
        return out;
    }
    const auto count = expected_zero_count(c);
    if (count && *count == 0) {
        out.poles.provenance = PoleProvenance::LemmaCount;
        return out;
    }
    if (count) {
        out.prony = prony_extract(p, mu, static_cast<int>(*count));
    } else {
        DiscoveryResult d = prony_discover(p, mu);
        out.discovery_residuals = d.residuals;
        out.prony = std::move(d.result);
        if (d.order == 0) {
            out.poles.provenance = PoleProvenance::PronyEstimate;
            return out;
        }
    }
    out.poles.zeros = newton_polish(c, out.prony->poles.zeros);
    out.poles.provenance = PoleProvenance::NewtonPolished;
    return out;
}

PoleSet locate_poles(const SequenceParams& p, const SpectralMeasure& mu) { return search_poles(p, mu).poles; }

}  // namespace selfconv
