#include "selfconv/rational.hpp"

#include "selfconv/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace selfconv {

namespace {

[[noreturn]] void bad(std::string_view text) {
    throw Error(ErrorCode::ParseError, "cannot parse rational '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_signed_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) bad(whole);
    Integer z(std::string(s), 10);
    return neg ? Integer(-z) : z;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        const auto exp_part = s.substr(e + 1);
        const Integer ez = parse_signed_integer(exp_part, whole);
        if (!ez.fits_slong_p() || abs(ez) > 4000) bad(whole);
        exponent = ez.get_si();
        s = s.substr(0, e);
    }
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto dot = s.find('.');
    std::string digits;
    long frac_len = 0;
    if (dot == std::string_view::npos) {
        digits = std::string(s);
    } else {
        const auto ip = s.substr(0, dot);
        const auto fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) bad(whole);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) bad(whole);
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    }
    if (!all_digits(digits)) bad(whole);
    Rational q{Integer(digits, 10)};
    const long shift = exponent - frac_len;
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        q *= ten_pow;
    else
        q /= ten_pow;
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad(text);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const Integer num = parse_signed_integer(s.substr(0, slash), text);
        const auto den_text = s.substr(slash + 1);
        if (!all_digits(den_text)) bad(text);
        const Integer den(std::string(den_text), 10);
        if (den == 0) bad(text);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    return parse_decimal(s, text);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational pow(const Rational& q, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

}  // namespace selfconv
