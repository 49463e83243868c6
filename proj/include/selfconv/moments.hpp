#pragma once

#include "selfconv/measure.hpp"
#include "selfconv/params.hpp"
#include "selfconv/poles.hpp"

#include <cstddef>
#include <vector>

namespace selfconv {

struct QuadratureDiagnostics {
    std::size_t evaluations = 0;
    /// Estimated absolute error of the continuous part.
    double error_estimate = 0.0;
    /// Share of |result| contributed by the analytic tail.
    double tail_fraction = 0.0;
    bool tolerance_met = true;
};

struct MomentResult {
    double value = 0.0;
    QuadratureDiagnostics diag;
};

/// int x^{n-1} density + sum_atoms w loc^{n-1} (0^0 = 1), without the
/// measure's scale factor. Throws NonIntegrableOrigin.
MomentResult moment_quadrature(const SpectralMeasure& mu, int n, double tol);

/// Contour moment including the origin weight; u_1 = 1 below first_valid_n.
/// imag_residual receives |Im| of the integral.
MomentResult contour_moment(const ComplexContour& c, int n, double tol, double* imag_residual = nullptr);

struct AssembledValue {
    double value = 0.0;
    /// |Im| left by the pole sum before it is dropped.
    double imag_residual = 0.0;
    MomentResult moment;
};

/// u_n = scale^{n-1} [ moment - sum_j s (-zeta_j)^{n-1} ], s = alpha1/alpha3.
/// The origin atom is part of the measure. Throws MissingPoles when the
/// sequence has cut-plane poles and none are supplied.
AssembledValue assemble_u_n(const SequenceParams& p, int n, const MeasureOrContour& mu, const PoleSet* poles,
                            double tol);
AssembledValue assemble_u_n(const SequenceParams& p, int n, const PoleSet* poles, double tol = 1e-10);

/// Gamma(n+2a-b) / (Gamma(a+1) Gamma(a-b+1) k^{n-1}) as ln|.| and sign;
/// the sign includes (-1)^{n-1} for sign-flipped triples.
struct LogValue {
    double log_abs = 0.0;
    int sign = 1;
};
LogValue asymptotic_estimate(const ChgfParams& c, int n);

struct VerificationRow {
    int n = 0;
    Rational exact;
    double numeric = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = true;
};

struct VerificationReport {
    SequenceParams params;
    double tol = 0.0;
    std::vector<VerificationRow> rows;
    std::size_t evaluations = 0;
    double max_tail_fraction = 0.0;
    double max_error_estimate = 0.0;
    /// Pole provenance when poles were needed.
    std::optional<PoleProvenance> pole_source;
    std::size_t pole_count = 0;

    bool passed() const;
};

/// Compares assemble_u_n with generate_exact for n = 1..count. The error is
/// relative when the exact value is nonzero, absolute otherwise. Poles are
/// located automatically when the sequence needs them.
VerificationReport verify(const SequenceParams& p, int count, double tol);

}  // namespace selfconv
