#pragma once

#include "selfconv/measure.hpp"
#include "selfconv/params.hpp"

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

namespace selfconv {

enum class PoleProvenance { LemmaCount, PronyEstimate, NewtonPolished, ExactPolynomial };

std::string_view to_string(PoleProvenance p);

/// Cut-plane zeros zeta_j of U(a, b, k z); each is a simple pole of f with the
/// shared residue alpha1/alpha3 (sign-normalised coordinates).
struct PoleSet {
    std::vector<std::complex<double>> zeros;
    Rational residue;
    PoleProvenance provenance = PoleProvenance::LemmaCount;
};

/// Zero count from the counting lemma, if it applies.
std::optional<long> expected_zero_count(const ChgfParams& c);

/// One row of the difference table: raw = u_n - integral - origin term,
/// v = raw * (-alpha3/alpha1) = sum_j (-zeta_j)^{n-1}.
struct PronyRow {
    int n = 0;
    Rational exact;
    double integral = 0.0;
    double raw = 0.0;
    double v = 0.0;
};

struct PronyFit {
    /// c_1..c_p of v_n + c_1 v_{n-1} + ... + c_p v_{n-p} = 0.
    std::vector<double> coeffs;
    /// RMS fit residual relative to the RMS of the fitted v.
    double residual = 0.0;
    /// Condition estimate of the column-scaled normal matrix.
    double condition = 0.0;
    /// The -zeta_j, i.e. the roots of z^p + c_1 z^{p-1} + ... + c_p.
    std::vector<std::complex<double>> roots;
};

/// Difference table for n = 1..count, in sign-normalised coordinates.
std::vector<PronyRow> prony_table(const SequenceParams& p, const SpectralMeasure& mu, int count, double tol);

/// Least-squares fit of order `order` over the rows with n in [n_lo, n_hi].
/// Throws IllConditioned when the scaled normal matrix is numerically singular.
PronyFit prony_fit(const std::vector<PronyRow>& rows, int order, int n_lo, int n_hi);

struct PronyResult {
    PoleSet poles;
    PronyFit fit;
    std::vector<PronyRow> table;
};

/// Prony extraction with a known zero count. Default n-range is 1..2p+2.
/// Throws CountMismatch when the fit residual exceeds residual_tol.
PronyResult prony_extract(const SequenceParams& p, const SpectralMeasure& mu, int n_zeros,
                          std::optional<std::pair<int, int>> n_range = std::nullopt,
                          double residual_tol = 1e-5);

struct DiscoveryResult {
    int order = 0;
    PronyResult result;
    /// Residual for each order tried, starting with p = 0.
    std::vector<double> residuals;
};

/// Zero count unknown: raise p until the residual drops by >= 1e3 against
/// the previous order and then stops improving, capped at 8.
DiscoveryResult prony_discover(const SequenceParams& p, const SpectralMeasure& mu, int max_order = 8);

/// Newton on U(a, b, k z). Throws NoConvergence or ConvergedToCut.
std::vector<std::complex<double>> newton_polish(const ChgfParams& c, const std::vector<std::complex<double>>& zeros);

/// Full record of a pole search, for reporting.
struct PoleSearch {
    PoleSet poles;
    /// Present when Prony ran.
    std::optional<PronyResult> prony;
    /// Discovery residuals (p = 0, 1, ...) when the count was not known.
    std::vector<double> discovery_residuals;
};

/// Poles for any CHGF sequence: exact for polynomial U, otherwise Prony
/// (lemma count or discovery) followed by Newton. Empty when regular.
PoleSearch search_poles(const SequenceParams& p, const SpectralMeasure& mu);
PoleSet locate_poles(const SequenceParams& p, const SpectralMeasure& mu);

}  // namespace selfconv
