#pragma once

#include "selfconv/params.hpp"
#include "selfconv/rational.hpp"

#include <cstddef>
#include <vector>

namespace selfconv {

/// u_1..u_N of the self-convolutive recurrence in exact arithmetic.
struct ExactSequence {
    SequenceParams params;
    std::vector<Rational> values;  // values[0] = u_1

    std::size_t size() const { return values.size(); }
    /// 1-based access, u(1) = 1.
    const Rational& u(std::size_t n) const { return values.at(n - 1); }
};

/// O(N^2) exact evaluation; N = 0 yields an empty sequence.
ExactSequence generate_exact(const SequenceParams& p, std::size_t count);

/// Re-checks every term against the recurrence.
bool satisfies_recurrence(const ExactSequence& seq);

/// v_n = (n-1)(u_n + 2n u_{n-1}), n >= 2, from S(2,-2,1). Throws WrongBaseSequence.
std::vector<Rational> derived_a005413(const ExactSequence& u);

/// w_n = (2n-1) u_n from S(2,-3,1). Throws WrongBaseSequence.
std::vector<Rational> derived_a005416(const ExactSequence& u);

/// Dense exact square matrix, row-major.
class RationalMatrix {
public:
    explicit RationalMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static RationalMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    Rational trace() const;
    friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);

private:
    std::size_t dim_;
    std::vector<Rational> data_;
};

/// The m x m tridiagonal operator whose characteristic polynomial is the monic
/// Laguerre polynomial: diagonal 2j+1+alpha, superdiagonal 1, subdiagonal j(j+alpha).
struct TridiagonalOperator {
    Rational alpha;
    std::size_t m;

    Rational diagonal(std::size_t j) const { return 2 * Rational(j) + 1 + alpha; }
    /// Entry (j, j-1) for j = 1..m-1.
    Rational subdiagonal(std::size_t j) const { return Rational(j) * (Rational(j) + alpha); }

    RationalMatrix dense() const;
};

/// u_n = (1/m) tr T^{n-1} for n = 1..count, by repeated exact multiplication.
std::vector<Rational> laguerre_trace(const Rational& alpha, std::size_t m, std::size_t count);

/// Monic characteristic polynomial of T, coefficients in ascending order
/// (c_0, ..., c_{m-1}, 1).
std::vector<Rational> laguerre_linear_recurrence(const Rational& alpha, std::size_t m);

}  // namespace selfconv
