#include "selfconv/params.hpp"

#include "selfconv/errors.hpp"

#include <vector>

namespace selfconv {

SequenceParams::SequenceParams(Rational alpha1, Rational alpha2, Rational alpha3)
    : alpha1_(std::move(alpha1)), alpha2_(std::move(alpha2)), alpha3_(std::move(alpha3)) {
    alpha1_.canonicalize();
    alpha2_.canonicalize();
    alpha3_.canonicalize();
    if (sgn(alpha1_) == 0 && sgn(alpha2_) == 0 && sgn(alpha3_) == 0)
        throw Error(ErrorCode::InvalidParams, "alpha1, alpha2, alpha3 are all zero");
}

std::string SequenceParams::to_string() const {
    return "(" + selfconv::to_string(alpha1_) + "," + selfconv::to_string(alpha2_) + "," +
           selfconv::to_string(alpha3_) + ")";
}

SequenceParams parse_params(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3)
        throw Error(ErrorCode::ParseError,
                    "expected three comma-separated values, got '" + std::string(text) + "'");
    return SequenceParams(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
}

RiccatiParams riccati_params(const SequenceParams& p) {
    const auto& a1 = p.alpha1();
    const auto& a2 = p.alpha2();
    const auto& a3 = p.alpha3();
    if (sgn(a1) == 0) throw Error(ErrorCode::AlgebraicClass, "alpha1 = 0: Riccati equation is algebraic");
    const Rational s = a1 + a2;
    if (sgn(s) == 0)
        throw Error(ErrorCode::DegenerateRiccati, "alpha1 + alpha2 = 0: u_0 is infinite");
    RiccatiParams r;
    r.beta1 = -a3 / a1;
    r.beta2 = (a1 + a2 + 2 * a3) / (a1 * s);
    r.beta3 = 1 + a2 / a1;
    r.beta4 = -(a1 + a2 + a3) / (a1 * s * s);
    return r;
}

SignNormalized normalize_sign(const SequenceParams& p) {
    if (sgn(p.alpha1()) < 0) return {scale(p, Rational(-1)), true};
    return {p, false};
}

ChgfParams chgf_params(const SequenceParams& p) {
    if (p.is_algebraic())
        throw Error(ErrorCode::AlgebraicClass, "alpha1 = 0: no CHGF parametrisation");
    if (sgn(p.alpha3()) == 0)
        throw Error(ErrorCode::DegenerateA, "alpha3 = 0: a = 0 (factorial / exponential-integral class)");
    const auto [q, flipped] = normalize_sign(p);
    ChgfParams c;
    c.k = 1 / q.alpha1();
    c.a = q.alpha3() / q.alpha1();
    c.b = -1 - q.alpha2() / q.alpha1();
    c.sign_flipped = flipped;
    return c;
}

SequenceParams scale(const SequenceParams& p, const Rational& t) {
    if (sgn(t) == 0) throw Error(ErrorCode::ZeroScale, "scale factor t = 0");
    return SequenceParams(t * p.alpha1(), t * p.alpha2(), t * p.alpha3());
}

SequenceParams reciprocal(const SequenceParams& p) {
    const auto& a1 = p.alpha1();
    const auto& a2 = p.alpha2();
    const auto& a3 = p.alpha3();
    return SequenceParams(a1, -2 * a1 - a2, a1 + a2 + a3);
}

KummerPartner kummer_partner(const SequenceParams& p) {
    const auto& a1 = p.alpha1();
    const auto& a2 = p.alpha2();
    const auto& a3 = p.alpha3();
    if (sgn(a3) == 0) throw Error(ErrorCode::ZeroAlpha3, "Kummer symmetry needs alpha3 != 0");
    const Rational a3p = 2 * a1 + a2 + a3;
    // The partner triple can be all-zero only if a1 = a3 = 0, excluded above.
    return {SequenceParams(a1, -4 * a1 - a2, a3p), a3p / a3, (2 * a1 + a2) / a3};
}

std::string_view to_string(SequenceClass c) {
    switch (c) {
        case SequenceClass::Regular: return "Regular";
        case SequenceClass::Quasiregular: return "Quasiregular";
        case SequenceClass::Irregular: return "Irregular";
        case SequenceClass::AlmostSimplyRepresented: return "AlmostSimplyRepresented";
        case SequenceClass::Algebraic: return "Algebraic";
        case SequenceClass::Unresolved: return "Unresolved";
    }
    return "Unresolved";
}

std::string_view to_string(AlgebraicSubclass c) {
    switch (c) {
        case AlgebraicSubclass::Regular: return "Regular";
        case AlgebraicSubclass::Quasiregular: return "Quasiregular";
        case AlgebraicSubclass::Irregular: return "Irregular";
        case AlgebraicSubclass::NotSimplyRepresented: return "NotSimplyRepresented";
    }
    return "NotSimplyRepresented";
}

Rational origin_residue(const Rational& a, const Rational& b) {
    const bool a_poly = is_nonpositive_integer(a);
    const bool c_poly = is_nonpositive_integer(a - b + 1);
    if (!a_poly && !c_poly) return b > 1 ? Rational((1 - b) / a) : Rational(0);
    if (a_poly && !c_poly) return Rational(0);
    if (!a_poly && c_poly) return (1 - b) / a;
    // Both polynomial, so b is an integer; a = 0 cannot occur with a CHGF triple.
    return b <= 1 ? Rational((1 - b) / a) : Rational(0);
}

std::optional<long> lemma_zero_count(const Rational& a, const Rational& b) {
    // (ii) a = b >= 1
    if (a == b && a >= 1) return 0;
    // (i) smallest m >= 0 with -2m-1 <= a, then require a < -2m+1 and b < a+1.
    const Rational lower = (-1 - a) / 2;
    Integer m;
    mpz_cdiv_q(m.get_mpz_t(), lower.get_num_mpz_t(), lower.get_den_mpz_t());
    if (m < 0) m = 0;
    if (!(a < 1 - 2 * Rational(m))) return std::nullopt;
    if (!(b < a + 1)) return std::nullopt;
    if (!m.fits_slong_p()) return std::nullopt;
    return 2 * m.get_si();
}

namespace {

ClassificationReport classify_algebraic(const SequenceParams& p) {
    ClassificationReport r;
    r.cls = SequenceClass::Algebraic;
    r.r_origin = 0;
    if (sgn(p.alpha3()) == 0) {
        // u_n = alpha2^{n-1}: a single atom at alpha2, or a cut-plane pole when alpha2 < 0.
        r.algebraic_subclass =
            sgn(p.alpha2()) > 0 ? AlgebraicSubclass::Regular : AlgebraicSubclass::Irregular;
        return r;
    }
    const Rational alpha = p.alpha2() / p.alpha3();
    if (alpha >= 0) {
        r.algebraic_subclass = AlgebraicSubclass::Regular;
    } else if (alpha >= -1) {
        r.algebraic_subclass = AlgebraicSubclass::Quasiregular;
        r.r_origin = alpha;
    } else {
        r.algebraic_subclass = AlgebraicSubclass::NotSimplyRepresented;
        if (alpha >= -2) r.r_origin = alpha;
    }
    return r;
}

ClassificationReport classify_factorial(const SequenceParams& p) {
    // (a1, a2, 0) is a scaled S(1, alpha-1, 0) with alpha = 1 + a2/a1.
    ClassificationReport r;
    const Rational alpha = 1 + p.alpha2() / p.alpha1();
    r.zero_count = 0;
    r.zero_count_source = ZeroCountSource::KnownByLemma;
    r.r_origin = 0;
    if (alpha > -1) {
        r.cls = SequenceClass::Regular;
    } else if (alpha == -1) {
        r.cls = SequenceClass::Quasiregular;
        r.r_origin = -1;
    } else {
        r.cls = SequenceClass::AlmostSimplyRepresented;
    }
    return r;
}

}  // namespace

ClassificationReport classify(const SequenceParams& p) {
    if (p.is_algebraic()) return classify_algebraic(p);
    if (sgn(p.alpha3()) == 0) return classify_factorial(p);

    ClassificationReport r;
    const ChgfParams c = chgf_params(p);
    r.chgf = c;
    r.polynomial_u = is_nonpositive_integer(c.a);
    r.r_origin = origin_residue(c.a, c.b);
    r.zero_count = lemma_zero_count(c.a, c.b);
    r.zero_count_source = r.zero_count ? ZeroCountSource::KnownByLemma : ZeroCountSource::Unknown;
    if (!r.zero_count) {
        r.cls = SequenceClass::Unresolved;
    } else if (*r.zero_count > 0) {
        r.cls = SequenceClass::Irregular;
    } else {
        r.cls = sgn(r.r_origin) == 0 ? SequenceClass::Regular : SequenceClass::Quasiregular;
    }
    return r;
}

}  // namespace selfconv
