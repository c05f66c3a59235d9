#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "schurfact/rational.hpp"

namespace schurfact {

// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("RationalMatrix: entry count does not match shape");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

// Exact determinant by fraction-free Bareiss elimination. Denominators are
// cleared per row up front, so the elimination runs entirely over integers;
// intermediate entries are minors of the scaled matrix, which keeps growth
// polynomial instead of the exponential blow-up of naive rational elimination.
inline Rational det(const RationalMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    std::vector<Int> a(n * n);
    Int scale(1);  // product of the row multipliers
    for (std::size_t i = 0; i < n; ++i) {
        Int l(1);
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& e = m(i, j);
            a[i * n + j] = e.num() * (l / e.den());
        }
        scale *= l;
    }

    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t piv = k;
            while (piv < n && a[piv * n + k] == 0) ++piv;
            if (piv == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            sign = -sign;
        }
        const Int& pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
                // exact by the Bareiss divisibility property
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i * n + j] = std::move(t);
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }

    Int d = a[n * n - 1];
    if (sign < 0) d = -d;
    return Rational(std::move(d), std::move(scale));
}

}  // namespace schurfact
