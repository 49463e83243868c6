#pragma once

#include <complex>
#include <string_view>

namespace selfconv::chgf {

/// A real value with an absolute error estimate covering truncation and rounding.
struct SeriesValue {
    double value = 0.0;
    double abs_error = 0.0;
    /// The double-double fallback was needed.
    bool extended = false;
};

/// e^{-x} M(a, b, x) for x >= 0, summed term by term from e^{-x} so the
/// growing series never overflows. Falls back to double-double when the
/// tracked cancellation error exceeds ~1e-13 relative.
/// Throws BNonpositiveInteger when b is 0, -1, -2, ...
SeriesValue kummer_m_scaled(double a, double b, double x);

enum class BranchMethod {
    Auto,
    /// Two-term Kummer-M representation (non-integer b only).
    Series,
    /// Large-x expansion on the rays arg z = +-pi.
    Asymptotic,
    /// Integer b: average of b +- eps, Richardson-extrapolated in eps.
    Richardson,
    /// Integer b: b-derivative of the connection formula, evaluated exactly.
    Limit,
    /// a = b = m: exponential-integral closed form.
    EiClass,
    /// a = 1/2, b = 0: removable-singularity limit.
    HalfZero,
    /// b = 2a: modified Bessel closed form.
    Bessel,
};

std::string_view to_string(BranchMethod m);

/// U(a, b, x e^{+-i pi}) = u_r +- i u_i.
struct BranchPair {
    double u_r = 0.0;
    double u_i = 0.0;
    double abs_error = 0.0;
    BranchMethod method = BranchMethod::Auto;

    double modulus_sq() const { return u_r * u_r + u_i * u_i; }
};

/// Branch values of U on the cut at x > 0. Auto picks a named closed form when
/// (a, b) matches one, the two-term series below the crossover, and the
/// asymptotic expansion beyond it. Throws PolynomialCase for a in -N_0.
BranchPair u_branch_values(double a, double b, double x, BranchMethod method = BranchMethod::Auto);

/// Crossover between series and asymptotic evaluation on the rays: the
/// smallest x on a fixed grid where the first omitted asymptotic term and the
/// recessive exponential are both below 1e-13 relative. 40 when nothing on the
/// grid qualifies.
double branch_crossover(double a, double b);

struct ComplexU {
    std::complex<double> value;
    std::complex<double> derivative;
};

/// U(a, b, z) on the principal branch, cut along (-inf, 0]. Throws OnBranchCut.
std::complex<double> u_value(double a, double b, std::complex<double> z);

/// U and dU/dz = -a U(a+1, b+1, z).
ComplexU u_complex(double a, double b, std::complex<double> z);

}  // namespace selfconv::chgf
