#pragma once

#include "selfconv/params.hpp"

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace selfconv {

struct Atom {
    double location = 0.0;
    double weight = 0.0;
};

/// density(x) ~ amplitude * x^exponent * e^{-rate x} as x -> inf.
struct TailAsymptote {
    double amplitude = 0.0;
    double exponent = 0.0;
    double rate = 0.0;
};

enum class OriginKind {
    /// density ~ C x^exponent.
    Power,
    /// density ~ (1/(a x)) / ((ln(kx) + shift)^2 + pi^2), the b = 1 case.
    LogSquared,
};

struct OriginBehaviour {
    OriginKind kind = OriginKind::Power;
    double exponent = 0.0;
    double a = 1.0;
    double k = 1.0;
    double log_shift = 0.0;
};

enum class Validity { FullMeasure, Signed, ComplexUnsupported };

enum class MeasureFamily {
    Generic,
    Gamma,
    EiClass,
    Airy,
    AiryPrime,
    Bessel,
    HalfZero,
    Algebraic,
    LaguerreComb,
    Atomic,
};

std::string_view to_string(MeasureFamily f);
std::string_view to_string(Validity v);

/// Density plus atoms whose moments give the sequence:
///   u_n = scale^{n-1} * ( int x^{n-1} density + sum_atoms w loc^{n-1} - pole terms ).
/// For CHGF sequences the measure lives in sign-normalised coordinates
/// (alpha1 > 0) and scale = -1 records the flip; atoms at negative locations
/// there encode real cut-plane poles on the positive axis.
struct SpectralMeasure {
    MeasureFamily family = MeasureFamily::Generic;
    std::function<double(double)> density;
    double support_lo = 0.0;
    double support_hi = std::numeric_limits<double>::infinity();
    std::vector<Atom> atoms;
    std::optional<TailAsymptote> tail;
    OriginBehaviour origin;
    Validity validity = Validity::FullMeasure;
    double scale = 1.0;
    /// Beyond this the density is evaluated from the large-x expansion.
    double crossover = std::numeric_limits<double>::infinity();
    /// Exactly known non-real cut-plane zeros (polynomial U only).
    std::vector<std::complex<double>> known_poles;

    bool has_density() const { return static_cast<bool>(density); }
    bool finite_support() const { return support_hi < std::numeric_limits<double>::infinity(); }
};

/// Algebraic class with -oo < alpha < -1: the moments are a contour integral
///   u_n = -(2 abar^2/pi) int_{-1}^{1} (-zeta_y)^{n-2} sqrt(1-y^2) dy + origin_weight 0^{n-1},
/// zeta_y = -2 - alpha + 2 i abar y, abar = sqrt|1+alpha|. At alpha = -2 the
/// integral only holds for n >= 2 and u_1 = 1 comes from the normalisation.
struct ComplexContour {
    double alpha = 0.0;
    double abar = 0.0;
    double origin_weight = 0.0;
    double scale = 1.0;
    int first_valid_n = 1;

    std::complex<double> integrand(double y, int n) const;
};

using MeasureOrContour = std::variant<SpectralMeasure, ComplexContour>;

/// A = k^{2a-b+1} / (Gamma(a+1) Gamma(a-b+1)), exponent 2a-b, rate k.
/// Throws PolynomialDegenerate when a or a-b is a negative integer.
TailAsymptote tail_asymptote(const ChgfParams& c);

/// Density k y^{-b} e^{-y} / (Gamma(a+1) Gamma(a-b+1) |U|^2), y = kx,
/// with the origin atom -r. No family dispatch; used as the consistency oracle.
SpectralMeasure build_generic_measure(const ChgfParams& c);

/// Measure for alpha1 != 0, dispatching to closed forms for the named families.
/// Polynomial U: real zeros become atoms, non-real ones go to known_poles.
/// Throws AlgebraicClass (alpha1 = 0) and NotSimplyRepresented (factorial, alpha < -1).
SpectralMeasure build_measure(const SequenceParams& p);

/// S(1, 2nu-2, 1/2-nu). Throws OutOfRegularRange outside [-3/2, 3/2].
SpectralMeasure bessel_measure(const Rational& nu);

/// (0, alpha, 1).
MeasureOrContour algebraic_measure(const Rational& alpha);

/// Atoms (xi_i, 1/m) at the roots of L_m^{(alpha)}. Throws ComplexRoots.
SpectralMeasure laguerre_comb(const Rational& alpha, std::size_t m);

/// Any non-degenerate triple: algebraic class via algebraic_measure (scaled by
/// alpha3), (0, c, 0) as a single atom, everything else via build_measure.
MeasureOrContour measure_for(const SequenceParams& p);

/// Closed forms in the original variable of the listed sequence; exposed so
/// the tests can compare them against the generic construction.
namespace closed_form {
/// S(6,-8,1): pi^{-2} x^{-1/3} / (Ai^2 + Bi^2)(x^{2/3}/4).
double airy_density(double x);
/// S(6,-4,-1): (1/4) pi^{-2} x^{1/3} / (Ai'^2 + Bi'^2)(x^{2/3}/4).
double airy_prime_density(double x);
/// S(1,-1-m,m): x^{-m} e^x ((m-1)!/m) / (Ei_m(x)^2 + pi^2).
double ei_class_density(int m, double x);
/// S(1,2nu-2,1/2-nu).
double bessel_density(double nu, double x);
/// S(2,-2,1): 2 e^{x/2} / (G2(x/2)^2 + pi^2 G3(x/2)^2).
double half_zero_density(double x);
/// S(1,alpha-1,0): x^alpha e^{-x} / Gamma(alpha+1).
double gamma_density(double alpha, double x);
/// d_r in its elementary form and its digamma form.
double d_r_elementary(int r);
double d_r_digamma(int r);
}  // namespace closed_form

}  // namespace selfconv
