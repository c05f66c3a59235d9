#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schurfact/eval_point.hpp"
#include "schurfact/matrix.hpp"
#include "schurfact/partition.hpp"
#include "schurfact/rational.hpp"

namespace schurfact {

enum class FamilyTag { schur, symplectic, so_odd, o_even };

// negate is meaningful for so_odd with an integer partition only: it evaluates
// the Laurent polynomial so_odd_lambda at (-x_1, ..., -x_n).
struct CharacterFamily {
    FamilyTag tag;
    bool negate = false;
};

// sum of t^l over l = -d, -d+2, ..., d. In x = t^2 terms this is the
// geometric sum over x^j for j = -d/2 .. d/2 in unit steps, the factored row
// entry of the odd orthogonal determinant.
inline Rational geom_sum(const Rational& t, std::int64_t d) {
    Rational term = rat_pow(t, -d);
    const Rational step = t * t;
    Rational acc = term;
    for (std::int64_t l = -d; l < d; l += 2) {
        term *= step;
        acc += term;
    }
    return acc;
}

// sum of y^j over integer j = -a..a; used for so_odd evaluated at negated x.
inline Rational alternating_base_sum(const Rational& y, std::int64_t a) {
    Rational term = rat_pow(y, -a);
    Rational acc = term;
    for (std::int64_t j = -a; j < a; ++j) {
        term *= y;
        acc += term;
    }
    return acc;
}

namespace detail {

// prod_{i<j} (y_i + 1/y_i - y_j - 1/y_j): the symplectic/orthogonal Weyl
// denominator over arbitrary nonzero arguments.
inline Rational pairwise_weyl_denominator(const std::vector<Rational>& ys) {
    Rational d(1);
    std::vector<Rational> s;
    s.reserve(ys.size());
    for (const auto& y : ys) s.push_back(y + rat_pow(y, -1));
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j) d *= s[i] - s[j];
    return d;
}

}  // namespace detail

// Schur polynomial as the bialternant determinant ratio over an explicit
// argument list. The arguments must be pairwise distinct and nonzero; the
// identity layer passes lists like (x_1..x_n, xbar_1..xbar_n, 1).
inline Rational schur_bialternant(const std::vector<std::int64_t>& mu,
                                  const std::vector<Rational>& args) {
    const std::size_t N = args.size();
    if (mu.size() != N)
        throw std::invalid_argument("schur_bialternant: index length must equal argument count");
    if (N == 0) return Rational(1);
    RationalMatrix m(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            m(i, j) = rat_pow(args[i], mu[j] + static_cast<std::int64_t>(N - 1 - j));
    Rational den(1);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            if (args[i] == args[j])
                throw std::domain_error("schur_bialternant: repeated argument");
            den *= args[i] - args[j];
        }
    return det(m) / den;
}

inline Rational eval_symplectic(const ShiftedPartition& lambda, const EvalPoint& pt) {
    if (!lambda.is_integer_parity())
        throw std::invalid_argument("symplectic character requires an integer partition");
    const int n = pt.size();
    if (lambda.size() != n)
        throw std::invalid_argument("symplectic: partition length must equal point size");
    if (n == 0) return Rational(1);
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::int64_t e = lambda.doubled(j) + 2 * (n - 1 - j) + 2;  // doubled lambda_j+n-j+1
            m(i, j) = rat_pow(pt.root(i), e) - rat_pow(pt.root(i), -e);
        }
    Rational den(1);
    for (int i = 0; i < n; ++i) den *= pt.x(i) - pt.xbar(i);
    std::vector<Rational> xs = pt.xs();
    den *= detail::pairwise_weyl_denominator(xs);
    return det(m) / den;
}

// Odd orthogonal character in the row-factored form: dividing row i of the
// numerator determinant by (x_i^{1/2} - xbar_i^{1/2}) turns each entry into
// the geometric sum over x_i^j, |j| <= lambda_j + n - j. That form is a
// Laurent polynomial row-wise, which is what makes the negated evaluation
// exact for integer partitions.
inline Rational eval_so_odd(const ShiftedPartition& lambda, const EvalPoint& pt,
                            bool negate = false) {
    const int n = pt.size();
    if (lambda.size() != n)
        throw std::invalid_argument("so_odd: partition length must equal point size");
    if (negate && !lambda.is_integer_parity())
        throw std::invalid_argument("so_odd: negated evaluation requires an integer partition");
    if (n == 0) return Rational(1);
    RationalMatrix m(n, n);
    std::vector<Rational> ys;
    ys.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ys.push_back(negate ? -pt.x(i) : pt.x(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::int64_t d = lambda.doubled(j) + 2 * (n - 1 - j);  // doubled lambda_j+n-j
            m(i, j) = negate ? alternating_base_sum(ys[static_cast<std::size_t>(i)], d / 2)
                             : geom_sum(pt.root(i), d);
        }
    return det(m) / detail::pairwise_weyl_denominator(ys);
}

// Even orthogonal character. With extra_one the argument list is
// (x_1, ..., x_n, 1) and lambda has n+1 entries; the appended argument
// contributes a row of 2s and (x_i + xbar_i - 2) denominator factors, all
// nonzero by the EvalPoint invariants.
inline Rational eval_o_even(const ShiftedPartition& lambda, const EvalPoint& pt,
                            bool extra_one = false) {
    const int N = pt.size() + (extra_one ? 1 : 0);
    if (lambda.size() != N)
        throw std::invalid_argument("o_even: partition length must equal argument count");
    if (N == 0) return Rational(1);
    RationalMatrix m(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const std::int64_t e = lambda.doubled(j) + 2 * (N - 1 - j);  // doubled lambda_j+N-j
            if (i == pt.size())
                m(i, j) = Rational(2);
            else
                m(i, j) = rat_pow(pt.root(i), e) + rat_pow(pt.root(i), -e);
        }
    std::vector<Rational> ys = pt.xs();
    if (extra_one) ys.push_back(Rational(1));
    Rational den = detail::pairwise_weyl_denominator(ys);
    if (lambda.trailing_doubled() == 0) den *= Rational(2);  // (1 + delta_{lambda_N,0})
    return det(m) / den;
}

inline Rational eval_character(CharacterFamily family, const ShiftedPartition& lambda,
                               const EvalPoint& pt, bool extra_one = false) {
    if (extra_one && family.tag != FamilyTag::schur && family.tag != FamilyTag::o_even)
        throw std::invalid_argument("extra_one is only supported for schur and o_even");
    if (family.negate && family.tag != FamilyTag::so_odd)
        throw std::invalid_argument("negate is only supported for so_odd");
    switch (family.tag) {
        case FamilyTag::schur: {
            std::vector<Rational> args = pt.xs();
            if (extra_one) args.push_back(Rational(1));
            return schur_bialternant(lambda.integers(), args);
        }
        case FamilyTag::symplectic:
            return eval_symplectic(lambda, pt);
        case FamilyTag::so_odd:
            return eval_so_odd(lambda, pt, family.negate);
        case FamilyTag::o_even:
            return eval_o_even(lambda, pt, extra_one);
    }
    throw std::logic_error("eval_character: unreachable");
}

// Schur polynomial as the weighted sum over semistandard Young tableaux of
// shape lambda with entries in {1..n}: the independent combinatorial oracle
// for schur_bialternant. Aborts if the tableau count exceeds the guard.
inline Rational schur_via_ssyt(const std::vector<std::int64_t>& lambda,
                               const std::vector<Rational>& xs,
                               std::int64_t guard = 10'000'000) {
    const int n = static_cast<int>(xs.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0 || (i > 0 && lambda[i] > lambda[i - 1]))
            throw std::invalid_argument("schur_via_ssyt: invalid partition");
    }
    if (static_cast<int>(lambda.size()) > n) {
        // more rows than available entries: value is 0 unless the extra rows are empty
        for (std::size_t i = static_cast<std::size_t>(n); i < lambda.size(); ++i)
            if (lambda[i] != 0) return Rational(0);
    }
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (std::int64_t c = 0; c < lambda[r]; ++c)
            cells.emplace_back(static_cast<int>(r), static_cast<int>(c));
    const int ncells = static_cast<int>(cells.size());
    std::vector<std::vector<int>> fill(lambda.size());
    for (std::size_t r = 0; r < lambda.size(); ++r)
        fill[r].assign(static_cast<std::size_t>(lambda[r]), 0);

    Rational total(0);
    std::int64_t seen = 0;
    auto rec = [&](auto&& self, int k, const Rational& weight) -> void {
        if (k == ncells) {
            if (++seen > guard)
                throw std::runtime_error("schur_via_ssyt: enumeration guard exceeded");
            total += weight;
            return;
        }
        const auto [r, c] = cells[static_cast<std::size_t>(k)];
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= n; ++v) {
            fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            self(self, k + 1, weight * xs[static_cast<std::size_t>(v - 1)]);
        }
    };
    rec(rec, 0, Rational(1));
    return total;
}

inline Int count_ssyt(const std::vector<std::int64_t>& lambda, int n) {
    const Rational r = schur_via_ssyt(lambda, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
    return r.num();
}

// Closed-form product formulas for characters with all variables set to 1
// (or all set to -1 for negated so_odd): tableau counts and irreducible
// representation dimensions. Evaluated as exact products, never as limits of
// eval_character, since coincident variables annihilate the Weyl denominators.
inline Rational dim_character(CharacterFamily family, const ShiftedPartition& lambda) {
    const int n = lambda.size();
    auto half_diff = [&](int i, int j) {  // lambda_i - lambda_j - i + j  (1-indexed i, j)
        return Rational((lambda.doubled(i - 1) - lambda.doubled(j - 1)) / 2 - i + j);
    };
    auto half_sum = [&](int i, int j, std::int64_t shift) {  // lambda_i + lambda_j - i - j + shift
        return Rational(lambda.doubled(i - 1) + lambda.doubled(j - 1), 2) + Rational(-i - j + shift);
    };
    switch (family.tag) {
        case FamilyTag::schur: {
            if (!lambda.is_integer_parity())
                throw std::invalid_argument("dim: schur requires an integer partition");
            Rational num(1);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) num *= half_diff(i, j);
            Rational den(1);
            for (int i = 1; i < n; ++i) den *= Rational(factorial(i));
            return num / den;
        }
        case FamilyTag::symplectic: {
            if (!lambda.is_integer_parity())
                throw std::invalid_argument("dim: symplectic requires an integer partition");
            Rational num(1);
            for (int i = 1; i <= n; ++i) num *= Rational(lambda.doubled(i - 1) / 2 - i + n + 1);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    num *= half_diff(i, j) * half_sum(i, j, 2 * n + 2);
            Rational den(1);
            for (int i = 1; i <= n; ++i) den *= Rational(factorial(2 * i - 1));
            return num / den;
        }
        case FamilyTag::so_odd: {
            if (!family.negate) {
                Rational num(1);
                for (int i = 1; i <= n; ++i) num *= Rational(lambda.doubled(i - 1) - 2 * i + 2 * n + 1);
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        num *= half_diff(i, j) * half_sum(i, j, 2 * n + 1);
                Rational den(1);
                for (int i = 1; i <= n; ++i) den *= Rational(factorial(2 * i - 1));
                return num / den;
            }
            // so_odd at (-1)^n, with sign (-1)^{sum lambda_i}
            const std::int64_t s2 = lambda.sum_doubled();
            if (s2 % 2 != 0)
                throw std::domain_error("dim: sign (-1)^{sum lambda} undefined for half-integer content sum");
            Rational num((s2 / 2) % 2 == 0 ? 1 : -1);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    num *= half_diff(i, j) * half_sum(i, j, 2 * n + 1);
            Rational den(1);
            for (int i = 1; i < n; ++i) den *= Rational(factorial(2 * i));
            return num / den;
        }
        case FamilyTag::o_even: {
            Rational num = Rational(int_pow(Int(2), n));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    num *= half_diff(i, j) * half_sum(i, j, 2 * n);
            Rational den(lambda.trailing_doubled() == 0 && n > 0 ? 2 : 1);
            for (int i = 1; i < n; ++i) den *= Rational(factorial(2 * i));
            return num / den;
        }
    }
    throw std::logic_error("dim_character: unreachable");
}

}  // namespace schurfact
