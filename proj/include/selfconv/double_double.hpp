#pragma once

#include <cmath>

namespace selfconv {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2, giving roughly 106 bits of
/// mantissa. Only what the series kernels need: +, -, *, / and comparisons.
class DoubleDouble {
public:
    constexpr DoubleDouble(double x = 0.0) : hi_(x), lo_(0.0) {}
    constexpr DoubleDouble(double hi, double lo) : hi_(hi), lo_(lo) {}

    constexpr double hi() const { return hi_; }
    constexpr double lo() const { return lo_; }
    explicit operator double() const { return hi_ + lo_; }

    static DoubleDouble two_sum(double a, double b) {
        const double s = a + b;
        const double bb = s - a;
        const double e = (a - (s - bb)) + (b - bb);
        return {s, e};
    }

    static DoubleDouble two_prod(double a, double b) {
        const double p = a * b;
        return {p, std::fma(a, b, -p)};
    }

    friend DoubleDouble operator+(DoubleDouble x, DoubleDouble y) {
        DoubleDouble s = two_sum(x.hi_, y.hi_);
        DoubleDouble t = two_sum(x.lo_, y.lo_);
        s.lo_ += t.hi_;
        s = quick_two_sum(s.hi_, s.lo_);
        s.lo_ += t.lo_;
        return quick_two_sum(s.hi_, s.lo_);
    }

    friend DoubleDouble operator-(DoubleDouble x) { return {-x.hi_, -x.lo_}; }
    friend DoubleDouble operator-(DoubleDouble x, DoubleDouble y) { return x + (-y); }

    friend DoubleDouble operator*(DoubleDouble x, DoubleDouble y) {
        DoubleDouble p = two_prod(x.hi_, y.hi_);
        p.lo_ += x.hi_ * y.lo_ + x.lo_ * y.hi_;
        return quick_two_sum(p.hi_, p.lo_);
    }

    friend DoubleDouble operator/(DoubleDouble x, DoubleDouble y) {
        const double q1 = x.hi_ / y.hi_;
        DoubleDouble r = x - y * DoubleDouble(q1);
        const double q2 = r.hi_ / y.hi_;
        r = r - y * DoubleDouble(q2);
        const double q3 = r.hi_ / y.hi_;
        return quick_two_sum(q1, q2) + DoubleDouble(q3);
    }

    DoubleDouble& operator+=(DoubleDouble y) { return *this = *this + y; }
    DoubleDouble& operator-=(DoubleDouble y) { return *this = *this - y; }
    DoubleDouble& operator*=(DoubleDouble y) { return *this = *this * y; }
    DoubleDouble& operator/=(DoubleDouble y) { return *this = *this / y; }

    friend bool operator<(DoubleDouble x, DoubleDouble y) {
        return x.hi_ < y.hi_ || (x.hi_ == y.hi_ && x.lo_ < y.lo_);
    }

    friend DoubleDouble abs(DoubleDouble x) { return x.hi_ < 0 ? -x : x; }

private:
    static DoubleDouble quick_two_sum(double a, double b) {
        const double s = a + b;
        return {s, b - (s - a)};
    }

    double hi_;
    double lo_;
};

}  // namespace selfconv
