#pragma once

#include <cmath>
#include <complex>

namespace selfconv {

/// Neumaier summation that also accumulates sum |x_i|, which bounds the
/// rounding error of the plain sum and feeds the series error estimates.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        abs_sum_ += std::abs(x);
    }

    double value() const { return sum_ + comp_; }
    double abs_sum() const { return abs_sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_sum_ = 0.0;
};

class ComplexCompensatedSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
        abs_sum_ += std::abs(z);
    }

    std::complex<double> value() const { return {re_.value(), im_.value()}; }
    double abs_sum() const { return abs_sum_; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
    double abs_sum_ = 0.0;
};

}  // namespace selfconv
