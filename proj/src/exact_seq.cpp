#include "selfconv/exact_seq.hpp"

#include "selfconv/errors.hpp"

namespace selfconv {

namespace {

Rational convolution(const std::vector<Rational>& u, std::size_t n) {
    // sum_{j=1}^{n-1} u_j u_{n-j} with u_j = u[j-1]; symmetric, so fold it.
    Rational acc = 0;
    for (std::size_t j = 1; 2 * j < n; ++j) acc += u[j - 1] * u[n - j - 1];
    acc *= 2;
    if (n % 2 == 0) acc += u[n / 2 - 1] * u[n / 2 - 1];
    return acc;
}

}  // namespace

ExactSequence generate_exact(const SequenceParams& p, std::size_t count) {
    ExactSequence seq{p, {}};
    seq.values.reserve(count);
    if (count == 0) return seq;
    seq.values.emplace_back(1);
    const bool linear = sgn(p.alpha3()) == 0;
    for (std::size_t n = 2; n <= count; ++n) {
        Rational next = (p.alpha1() * Rational(n) + p.alpha2()) * seq.values[n - 2];
        if (!linear) next += p.alpha3() * convolution(seq.values, n);
        seq.values.push_back(std::move(next));
    }
    return seq;
}

bool satisfies_recurrence(const ExactSequence& seq) {
    if (seq.values.empty()) return true;
    if (seq.values[0] != 1) return false;
    const auto& p = seq.params;
    for (std::size_t n = 2; n <= seq.values.size(); ++n) {
        Rational conv = 0;
        for (std::size_t j = 1; j < n; ++j) conv += seq.values[j - 1] * seq.values[n - j - 1];
        const Rational rhs =
            (p.alpha1() * Rational(n) + p.alpha2()) * seq.values[n - 2] + p.alpha3() * conv;
        if (rhs != seq.values[n - 1]) return false;
    }
    return true;
}

std::vector<Rational> derived_a005413(const ExactSequence& u) {
    if (!(u.params == SequenceParams(2, -2, 1)))
        throw Error(ErrorCode::WrongBaseSequence,
                    "A005413 transform needs S(2,-2,1), got " + u.params.to_string());
    std::vector<Rational> out;
    for (std::size_t n = 2; n <= u.size(); ++n)
        out.push_back(Rational(n - 1) * (u.u(n) + 2 * Rational(n) * u.u(n - 1)));
    return out;
}

std::vector<Rational> derived_a005416(const ExactSequence& u) {
    if (!(u.params == SequenceParams(2, -3, 1)))
        throw Error(ErrorCode::WrongBaseSequence,
                    "A005416 transform needs S(2,-3,1), got " + u.params.to_string());
    std::vector<Rational> out;
    for (std::size_t n = 1; n <= u.size(); ++n) out.push_back(Rational(2 * n - 1) * u.u(n));
    return out;
}

RationalMatrix RationalMatrix::identity(std::size_t dim) {
    RationalMatrix I(dim);
    for (std::size_t i = 0; i < dim; ++i) I(i, i) = 1;
    return I;
}

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
    const std::size_t d = x.dim();
    RationalMatrix z(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (sgn(x(i, k)) == 0) continue;
            for (std::size_t j = 0; j < d; ++j) z(i, j) += x(i, k) * y(k, j);
        }
    return z;
}

RationalMatrix TridiagonalOperator::dense() const {
    RationalMatrix t(m);
    for (std::size_t j = 0; j < m; ++j) {
        t(j, j) = diagonal(j);
        if (j + 1 < m) t(j, j + 1) = 1;
        if (j >= 1) t(j, j - 1) = subdiagonal(j);
    }
    return t;
}

std::vector<Rational> laguerre_trace(const Rational& alpha, std::size_t m, std::size_t count) {
    if (m == 0) throw Error(ErrorCode::InvalidParams, "laguerre_trace needs m >= 1");
    const RationalMatrix t = TridiagonalOperator{alpha, m}.dense();
    std::vector<Rational> out;
    out.reserve(count);
    RationalMatrix power = RationalMatrix::identity(m);
    for (std::size_t n = 1; n <= count; ++n) {
        out.push_back(power.trace() / Rational(m));
        if (n < count) power = power * t;
    }
    return out;
}

std::vector<Rational> laguerre_linear_recurrence(const Rational& alpha, std::size_t m) {
    if (m == 0) throw Error(ErrorCode::InvalidParams, "laguerre_linear_recurrence needs m >= 1");
    const TridiagonalOperator t{alpha, m};
    // Leading principal minors: p_{j+1}(x) = (x - d_j) p_j(x) - sub_j * p_{j-1}(x).
    std::vector<Rational> prev{1};                    // p_0
    std::vector<Rational> cur{-t.diagonal(0), 1};     // p_1
    for (std::size_t j = 1; j < m; ++j) {
        std::vector<Rational> next(cur.size() + 1);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += cur[i];
            next[i] -= t.diagonal(j) * cur[i];
        }
        const Rational s = t.subdiagonal(j);
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= s * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace selfconv
