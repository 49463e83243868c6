#pragma once

#include "selfconv/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace selfconv {

/// The triple (alpha1, alpha2, alpha3) of the recurrence
///   u_n = (alpha1 n + alpha2) u_{n-1} + alpha3 sum_{j=1}^{n-1} u_j u_{n-j},  u_1 = 1.
/// Not all three may vanish.
class SequenceParams {
public:
    SequenceParams(Rational alpha1, Rational alpha2, Rational alpha3);

    const Rational& alpha1() const { return alpha1_; }
    const Rational& alpha2() const { return alpha2_; }
    const Rational& alpha3() const { return alpha3_; }

    bool is_algebraic() const { return sgn(alpha1_) == 0; }

    /// "(a1,a2,a3)" with each entry in p/q form.
    std::string to_string() const;

    friend bool operator==(const SequenceParams&, const SequenceParams&) = default;

private:
    Rational alpha1_;
    Rational alpha2_;
    Rational alpha3_;
};

/// Parses "a1,a2,a3" (each entry accepted by parse_rational).
SequenceParams parse_params(std::string_view text);

struct RiccatiParams {
    Rational beta1, beta2, beta3, beta4;
};

/// Coefficients of f' = beta1 f^2 + (beta2 + beta3/z) f + beta4.
/// Throws AlgebraicClass when alpha1 = 0 and DegenerateRiccati when alpha1 + alpha2 = 0.
RiccatiParams riccati_params(const SequenceParams& p);

/// Confluent hypergeometric parameters of the solution w ~ e^{-(ak/b)z} U(a, b, kz).
/// Computed after forcing alpha1 > 0; sign_flipped records that the scaling
/// t = -1 was applied, i.e. u_n = (-1)^{n-1} * (sequence described by k, a, b)_n.
struct ChgfParams {
    Rational k;
    Rational a;
    Rational b;
    bool sign_flipped = false;

    friend bool operator==(const ChgfParams&, const ChgfParams&) = default;
};

/// Throws AlgebraicClass (alpha1 = 0) or DegenerateA (alpha3 = 0).
ChgfParams chgf_params(const SequenceParams& p);

/// Returns p with alpha1 >= 0, and whether a sign flip was applied.
struct SignNormalized {
    SequenceParams params;
    bool flipped;
};
SignNormalized normalize_sign(const SequenceParams& p);

/// (t a1, t a2, t a3); S(t alpha)_n = t^{n-1} S(alpha)_n. Throws ZeroScale for t = 0.
SequenceParams scale(const SequenceParams& p, const Rational& t);

/// Reciprocal sequence: (a1, -2a1 - a2, a1 + a2 + a3). An involution.
SequenceParams reciprocal(const SequenceParams& p);

/// Kummer partner with S(p)_n = prefactor * S(partner)_n - n1_correction * 0^{n-1}.
struct KummerPartner {
    SequenceParams partner;
    Rational prefactor;
    Rational n1_correction;
};

/// Throws ZeroAlpha3 when alpha3 = 0.
KummerPartner kummer_partner(const SequenceParams& p);

enum class SequenceClass {
    Regular,
    Quasiregular,
    Irregular,
    AlmostSimplyRepresented,
    Algebraic,
    /// Zero count not covered by the counting lemma; must be settled numerically.
    Unresolved,
};

enum class AlgebraicSubclass { Regular, Quasiregular, Irregular, NotSimplyRepresented };

enum class ZeroCountSource { KnownByLemma, Unknown };

std::string_view to_string(SequenceClass c);
std::string_view to_string(AlgebraicSubclass c);

struct ClassificationReport {
    SequenceClass cls = SequenceClass::Unresolved;
    /// lim_{z->0} z f(z).
    Rational r_origin;
    std::optional<long> zero_count;
    ZeroCountSource zero_count_source = ZeroCountSource::Unknown;
    std::optional<AlgebraicSubclass> algebraic_subclass;
    /// CHGF triple when alpha1 != 0 and alpha3 != 0.
    std::optional<ChgfParams> chgf;
    /// U(a, b, z) is a polynomial (a in -N_0).
    bool polynomial_u = false;
};

/// Residue of f at the origin from the four cases on (a, b).
Rational origin_residue(const Rational& a, const Rational& b);

/// Number of zeros of U(a, b, z) in the cut plane where the counting lemma
/// applies: 2m for -2m-1 <= a < -2m+1 with b < a+1 (boundary a = -(2m+1)
/// taking the smaller count), 0 for a = b >= 1, nullopt otherwise.
std::optional<long> lemma_zero_count(const Rational& a, const Rational& b);

ClassificationReport classify(const SequenceParams& p);

}  // namespace selfconv
