#pragma once

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurfact/characters.hpp"
#include "schurfact/eval_point.hpp"
#include "schurfact/matrix.hpp"
#include "schurfact/partition.hpp"
#include "schurfact/rational.hpp"

namespace schurfact {

// One tag per factorization identity of the registry. FACT1-FACT4 are the
// general factorizations, FACT11-FACT22 their all-integer-index restatements,
// PROP* the even-to-odd orthogonal reductions, RECT*/ADDRECT* the
// rectangular-shape specializations, and QAST*/AST*/DASASM* the
// double-staircase specializations.
enum class IdentityId {
    FACT1, FACT2, FACT3, FACT3P_PLUS, FACT3P_MINUS, FACT4,
    PROP1, PROP2,
    FACT11, FACT12, FACT21, FACT22,
    RECT1, RECT2, ADDRECT1, ADDRECT2, RECT3, RECT4,
    QAST1, QAST2, AST1, AST2, DASASM1, DASASM2,
};

inline const std::vector<std::pair<IdentityId, std::string>>& identity_names() {
    static const std::vector<std::pair<IdentityId, std::string>> table = {
        {IdentityId::FACT1, "fact1"},
        {IdentityId::FACT2, "fact2"},
        {IdentityId::FACT3, "fact3"},
        {IdentityId::FACT3P_PLUS, "fact3p_plus"},
        {IdentityId::FACT3P_MINUS, "fact3p_minus"},
        {IdentityId::FACT4, "fact4"},
        {IdentityId::PROP1, "prop1"},
        {IdentityId::PROP2, "prop2"},
        {IdentityId::FACT11, "fact11"},
        {IdentityId::FACT12, "fact12"},
        {IdentityId::FACT21, "fact21"},
        {IdentityId::FACT22, "fact22"},
        {IdentityId::RECT1, "rect1"},
        {IdentityId::RECT2, "rect2"},
        {IdentityId::ADDRECT1, "addrect1"},
        {IdentityId::ADDRECT2, "addrect2"},
        {IdentityId::RECT3, "rect3"},
        {IdentityId::RECT4, "rect4"},
        {IdentityId::QAST1, "qast1"},
        {IdentityId::QAST2, "qast2"},
        {IdentityId::AST1, "ast1"},
        {IdentityId::AST2, "ast2"},
        {IdentityId::DASASM1, "dasasm1"},
        {IdentityId::DASASM2, "dasasm2"},
    };
    return table;
}

inline std::string to_string(IdentityId id) {
    for (const auto& [k, v] : identity_names())
        if (k == id) return v;
    return "?";
}

inline std::optional<IdentityId> identity_from_string(const std::string& s) {
    for (const auto& [k, v] : identity_names())
        if (v == s) return k;
    return std::nullopt;
}

// Free parameters of one identity instance. Scalars are stored doubled, like
// partition entries, so integer and half-integer regimes share one type.
struct IdentityParams {
    int n = 0;
    ShiftedPartition lambda;
    std::optional<std::int64_t> doubled_k;
    std::optional<std::int64_t> doubled_k1;
    std::optional<std::int64_t> doubled_k2;
    std::optional<std::int64_t> doubled_a;
    std::optional<std::int64_t> b;
    std::optional<std::int64_t> m;

    std::string str() const {
        std::ostringstream os;
        os << "n=" << n;
        if (!lambda.empty()) os << " lambda=" << lambda.str();
        auto scalar = [&](const char* name, const std::optional<std::int64_t>& v) {
            if (v) os << " " << name << "=" << Rational(*v, 2).str();
        };
        scalar("k", doubled_k);
        scalar("k1", doubled_k1);
        scalar("k2", doubled_k2);
        scalar("a", doubled_a);
        if (b) os << " b=" << *b;
        if (m) os << " m=" << *m;
        return os.str();
    }
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace detail

// Number of root variables t_i to sample for an identity instance.
inline int num_roots(IdentityId id, const IdentityParams& p) {
    switch (id) {
        case IdentityId::QAST1:
        case IdentityId::AST2:
        case IdentityId::DASASM1:
            return 2 * p.n;
        case IdentityId::QAST2:
        case IdentityId::AST1:
        case IdentityId::DASASM2:
            return 2 * p.n + 1;
        default:
            return p.n;
    }
}

inline void validate_params(IdentityId id, const IdentityParams& p) {
    using detail::require;
    auto require_scalar = [&](const std::optional<std::int64_t>& k, const char* name,
                              std::int64_t min_doubled) {
        require(k.has_value(), std::string(name) + " is required");
        require(shifted_scalar(*k).parity() == p.lambda.parity(),
                std::string(name) + " must have the same parity class as lambda");
        require(*k >= min_doubled, std::string(name) + " must be at least the leading entry of lambda");
    };
    switch (id) {
        case IdentityId::FACT1:
        case IdentityId::FACT4:
            require(p.n >= 1, "n must be positive");
            require(p.lambda.size() == p.n, "lambda must have n entries");
            require_scalar(p.doubled_k, "k", p.lambda.leading_doubled());
            break;
        case IdentityId::FACT2:
            require(p.n >= 1, "n must be positive");
            require(p.lambda.size() == p.n + 1, "lambda must have n+1 entries");
            require_scalar(p.doubled_k1, "k1", p.lambda.leading_doubled());
            require_scalar(p.doubled_k2, "k2", p.lambda.leading_doubled());
            break;
        case IdentityId::FACT3:
        case IdentityId::FACT3P_PLUS:
        case IdentityId::FACT3P_MINUS:
            require(p.n >= 1, "n must be positive");
            require(p.lambda.size() == p.n + 1, "lambda must have n+1 entries");
            require_scalar(p.doubled_k, "k", p.lambda.leading_doubled());
            break;
        case IdentityId::PROP1:
            require(p.n >= 1, "n must be positive");
            require(p.doubled_a && *p.doubled_a >= 0, "a must be a nonnegative integer or half-integer");
            require(p.b && *p.b >= 0, "b must be a nonnegative integer");
            break;
        case IdentityId::PROP2:
            require(p.n >= 1, "n must be positive");
            require(p.doubled_a && *p.doubled_a >= 0, "a must be a nonnegative integer or half-integer");
            require(p.b && *p.b >= *p.doubled_a, "b must be an integer with b >= 2a");
            break;
        case IdentityId::FACT11:
        case IdentityId::FACT12:
            require(p.n >= 1, "n must be positive");
            require(p.lambda.size() == p.n, "lambda must have n entries");
            require(p.lambda.is_integer_parity(), "lambda must be an integer partition");
            break;
        case IdentityId::FACT21:
        case IdentityId::FACT22:
            require(p.n >= 1, "n must be positive");
            require(p.lambda.size() == p.n + 1, "lambda must have n+1 entries");
            require(p.lambda.is_integer_parity(), "lambda must be an integer partition");
            break;
        case IdentityId::RECT1:
        case IdentityId::RECT2:
        case IdentityId::ADDRECT1:
        case IdentityId::ADDRECT2:
        case IdentityId::RECT3:
        case IdentityId::RECT4:
            require(p.n >= 1, "n must be positive");
            require(p.m && *p.m >= 0, "m must be a nonnegative integer");
            break;
        case IdentityId::QAST1:
        case IdentityId::QAST2:
        case IdentityId::AST1:
        case IdentityId::AST2:
        case IdentityId::DASASM1:
        case IdentityId::DASASM2:
            require(p.n >= 1, "n must be positive");
            break;
    }
}

enum class Mutation { none, fact2_drop_delta };

struct SidePair {
    Rational lhs, rhs;
};

namespace detail {

inline std::vector<Rational> mirror_args(const EvalPoint& pt, bool with_one) {
    std::vector<Rational> args;
    args.reserve(2 * static_cast<std::size_t>(pt.size()) + 1);
    for (int i = 0; i < pt.size(); ++i) args.push_back(pt.x(i));
    for (int i = 0; i < pt.size(); ++i) args.push_back(pt.xbar(i));
    if (with_one) args.push_back(Rational(1));
    return args;
}

// prod over the first `upto` roots of (x_i^{1/2} + xbar_i^{1/2}) = t_i + 1/t_i
inline Rational half_power_prefactor(const EvalPoint& pt, int upto) {
    Rational r(1);
    for (int i = 0; i < upto; ++i) r *= pt.root(i) + rat_pow(pt.root(i), -1);
    return r;
}

inline Rational sign_pow(std::int64_t doubled_sum) {
    if (doubled_sum % 2 != 0) throw std::logic_error("sign exponent is not an integer");
    return Rational((doubled_sum / 2) % 2 == 0 ? 1 : -1);
}

// integer Schur index for the alternative statements: the mirror embedding at
// k = lambda_1 with +1 added to the first `bump` entries.
inline std::vector<std::int64_t> embed_with_bump(const ShiftedPartition& lambda, EmbedShape shape,
                                                 std::int64_t doubled_k, int bump) {
    std::vector<std::int64_t> mu = self_complementary_embed(lambda, doubled_k, shape);
    for (int i = 0; i < bump; ++i) mu[static_cast<std::size_t>(i)] += 1;
    return mu;
}

// (top, top-1, top-1, ..., 1, 1, 0, 0): the Schur index of the DASASM
// specializations, with 2*top + 2 entries.
inline std::vector<std::int64_t> dasasm_schur_index(std::int64_t top) {
    std::vector<std::int64_t> mu{top};
    for (std::int64_t v = top - 1; v >= 1; --v) {
        mu.push_back(v);
        mu.push_back(v);
    }
    mu.push_back(0);
    mu.push_back(0);
    return mu;
}

}  // namespace detail

// Evaluates both sides of an identity instance at one point, exactly as
// printed (prefactors, Kronecker deltas, signs and all). The mutation hook
// deliberately corrupts one side; it exists for the verifier self-test.
inline SidePair evaluate_identity(IdentityId id, const IdentityParams& p, const EvalPoint& pt,
                                  Mutation mutation = Mutation::none) {
    validate_params(id, p);
    using detail::half_power_prefactor;
    using detail::mirror_args;
    using detail::sign_pow;
    const int n = p.n;
    SidePair out{Rational(0), Rational(0)};

    switch (id) {
        case IdentityId::FACT1: {
            const auto mu = self_complementary_embed(p.lambda, *p.doubled_k, EmbedShape::mirror);
            out.lhs = half_power_prefactor(pt, n) * schur_bialternant(mu, mirror_args(pt, false));
            out.rhs = eval_so_odd(p.lambda, pt) * eval_o_even(p.lambda.shifted(1), pt);
            break;
        }
        case IdentityId::FACT2: {
            const auto mu1 = self_complementary_embed(p.lambda, *p.doubled_k1, EmbedShape::sum_first);
            const auto mu2 = self_complementary_embed(p.lambda, *p.doubled_k2, EmbedShape::sum_second);
            const auto args = mirror_args(pt, false);
            out.lhs = half_power_prefactor(pt, n) *
                      (schur_bialternant(mu1, args) + schur_bialternant(mu2, args));
            Rational delta(p.lambda.trailing_doubled() == 0 ? 2 : 1);
            if (mutation == Mutation::fact2_drop_delta) delta = Rational(1);
            out.rhs = delta * eval_so_odd(p.lambda.slice(0, n).shifted(1), pt) *
                      eval_o_even(p.lambda.slice(1, n), pt);
            break;
        }
        case IdentityId::FACT3: {
            const auto mu = self_complementary_embed(p.lambda, *p.doubled_k, EmbedShape::mirror_odd);
            out.lhs = Rational(2) * half_power_prefactor(pt, n) *
                      schur_bialternant(mu, mirror_args(pt, true));
            out.rhs = eval_so_odd(p.lambda.slice(1, n), pt) *
                      eval_o_even(p.lambda.shifted(1), pt, /*extra_one=*/true);
            break;
        }
        case IdentityId::FACT3P_PLUS:
        case IdentityId::FACT3P_MINUS: {
            const auto shape = (id == IdentityId::FACT3P_PLUS) ? EmbedShape::mirror_odd_plus
                                                               : EmbedShape::mirror_odd_minus;
            const auto mu = self_complementary_embed(p.lambda, *p.doubled_k, shape);
            out.lhs = Rational(2) * half_power_prefactor(pt, n) *
                      schur_bialternant(mu, mirror_args(pt, true));
            const Rational delta(p.lambda.trailing_doubled() == 0 ? 2 : 1);
            out.rhs = delta * eval_so_odd(p.lambda.slice(0, n).shifted(1), pt) *
                      eval_o_even(p.lambda, pt, /*extra_one=*/true);
            break;
        }
        case IdentityId::FACT4: {
            const auto mu = self_complementary_embed(p.lambda, *p.doubled_k, EmbedShape::mirror);
            std::vector<Rational> args;
            for (int i = 0; i < n; ++i) args.push_back(pt.x(i));
            for (int i = 0; i + 1 < n; ++i) args.push_back(pt.xbar(i));
            args.push_back(Rational(1));
            out.lhs = Rational(2) * half_power_prefactor(pt, n - 1) * schur_bialternant(mu, args);
            out.rhs = rat_pow(pt.root(n - 1), *p.doubled_k) * eval_so_odd(p.lambda, pt) *
                      eval_o_even(p.lambda.shifted(1), pt.prefix(n - 1), /*extra_one=*/true);
            break;
        }
        case IdentityId::PROP1: {
            const auto lambda = ShiftedPartition::arithmetic_staircase(*p.doubled_a, *p.b, n);
            const Rational delta(lambda.trailing_doubled() == 0 ? 2 : 1);
            out.lhs = delta * eval_o_even(lambda, pt, /*extra_one=*/true);
            Rational pre(1);
            for (int i = 0; i < n; ++i) pre *= geom_sum(pt.root(i), *p.b);
            out.rhs = Rational(2) * pre * eval_so_odd(lambda.slice(0, n).shifted(-*p.b), pt);
            break;
        }
        case IdentityId::PROP2: {
            const auto lambda = ShiftedPartition::zigzag_staircase(*p.doubled_a, *p.b, n);
            out.lhs = eval_o_even(lambda.shifted(1), pt, /*extra_one=*/true);
            Rational pre(1);
            for (int i = 0; i < n; ++i) pre *= geom_sum(pt.root(i), *p.b + 1);
            out.rhs = Rational(2) * pre * eval_so_odd(lambda.slice(0, n).shifted(-*p.b), pt);
            break;
        }
        case IdentityId::FACT11: {
            const auto mu = self_complementary_embed(p.lambda, p.lambda.leading_doubled(), EmbedShape::mirror);
            out.lhs = schur_bialternant(mu, mirror_args(pt, false));
            out.rhs = sign_pow(p.lambda.sum_doubled()) * eval_so_odd(p.lambda, pt) *
                      eval_so_odd(p.lambda, pt, /*negate=*/true);
            break;
        }
        case IdentityId::FACT12: {
            const auto mu = detail::embed_with_bump(p.lambda, EmbedShape::mirror,
                                                    p.lambda.leading_doubled(), n);
            out.lhs = schur_bialternant(mu, mirror_args(pt, false));
            out.rhs = eval_symplectic(p.lambda, pt) * eval_o_even(p.lambda.shifted(2), pt);
            break;
        }
        case IdentityId::FACT21: {
            const std::int64_t k0 = p.lambda.leading_doubled();
            const auto mu1 = self_complementary_embed(p.lambda, k0, EmbedShape::sum_first);
            const auto mu2 = self_complementary_embed(p.lambda, k0, EmbedShape::sum_second);
            const auto args = mirror_args(pt, false);
            out.lhs = schur_bialternant(mu1, args) + schur_bialternant(mu2, args);
            const Rational delta(p.lambda.trailing_doubled() == 0 ? 2 : 1);
            out.rhs = delta * eval_symplectic(p.lambda.slice(0, n), pt) *
                      eval_o_even(p.lambda.slice(1, n), pt);
            break;
        }
        case IdentityId::FACT22: {
            const std::int64_t k0 = p.lambda.leading_doubled();
            const auto mu1 = detail::embed_with_bump(p.lambda, EmbedShape::sum_first, k0, n);
            const auto mu2 = detail::embed_with_bump(p.lambda, EmbedShape::sum_second, k0, n - 1);
            const auto args = mirror_args(pt, false);
            out.lhs = schur_bialternant(mu1, args) + schur_bialternant(mu2, args);
            out.rhs = sign_pow(p.lambda.sum_doubled() - p.lambda.doubled(0)) *
                      eval_so_odd(p.lambda.slice(0, n).shifted(2), pt) *
                      eval_so_odd(p.lambda.slice(1, n), pt, /*negate=*/true);
            break;
        }
        case IdentityId::RECT1:
        case IdentityId::RECT2: {
            const std::int64_t m = *p.m;
            const bool odd = (id == IdentityId::RECT2);
            std::vector<std::int64_t> mu(static_cast<std::size_t>(n), 2 * m + (odd ? 1 : 0));
            mu.resize(static_cast<std::size_t>(2 * n), 0);
            out.lhs = schur_bialternant(mu, mirror_args(pt, false));
            if (odd) {
                out.rhs = eval_symplectic(ShiftedPartition::rectangle(2 * m, n), pt) *
                          eval_o_even(ShiftedPartition::rectangle(2 * (m + 1), n), pt);
            } else {
                const auto rect = ShiftedPartition::rectangle(2 * m, n);
                out.rhs = sign_pow(2 * m * n) * eval_so_odd(rect, pt) *
                          eval_so_odd(rect, pt, /*negate=*/true);
            }
            break;
        }
        case IdentityId::ADDRECT1:
        case IdentityId::ADDRECT2: {
            const std::int64_t m = *p.m;
            const bool odd = (id == IdentityId::ADDRECT2);
            const std::int64_t entry = 2 * m + (odd ? 1 : 0);
            std::vector<std::int64_t> mu1(static_cast<std::size_t>(n), entry);
            mu1.resize(static_cast<std::size_t>(2 * n), 0);
            std::vector<std::int64_t> mu2(static_cast<std::size_t>(n - 1), entry);
            mu2.resize(static_cast<std::size_t>(2 * n), 0);
            const auto args = mirror_args(pt, false);
            out.lhs = schur_bialternant(mu1, args) + schur_bialternant(mu2, args);
            if (odd) {
                out.rhs = sign_pow(2 * m * n) *
                          eval_so_odd(ShiftedPartition::rectangle(2 * (m + 1), n), pt) *
                          eval_so_odd(ShiftedPartition::rectangle(2 * m, n), pt, /*negate=*/true);
            } else {
                const Rational delta(m == 0 ? 2 : 1);
                out.rhs = delta * eval_symplectic(ShiftedPartition::rectangle(2 * m, n), pt) *
                          eval_o_even(ShiftedPartition::rectangle(2 * m, n), pt);
            }
            break;
        }
        case IdentityId::RECT3:
        case IdentityId::RECT4: {
            const std::int64_t m = *p.m;
            const bool odd = (id == IdentityId::RECT4);
            std::vector<std::int64_t> mu(static_cast<std::size_t>(n), 2 * m + (odd ? 1 : 0));
            mu.resize(static_cast<std::size_t>(2 * n + 1), 0);
            out.lhs = schur_bialternant(mu, mirror_args(pt, true));
            out.rhs = eval_symplectic(ShiftedPartition::rectangle(2 * m, n), pt) *
                      eval_so_odd(ShiftedPartition::rectangle(2 * (m + odd), n), pt);
            break;
        }
        case IdentityId::QAST1: {
            const auto lambda = ShiftedPartition::double_staircase(DoubleStaircase::QAST1, n);
            const auto mu = self_complementary_embed(lambda, lambda.leading_doubled(), EmbedShape::mirror);
            out.lhs = schur_bialternant(mu, mirror_args(pt, false));
            out.rhs = sign_pow(lambda.sum_doubled()) * eval_so_odd(lambda, pt) *
                      eval_so_odd(lambda, pt, /*negate=*/true);
            break;
        }
        case IdentityId::QAST2: {
            const auto lambda = ShiftedPartition::double_staircase(DoubleStaircase::QAST2, n);
            const auto mu = detail::embed_with_bump(lambda, EmbedShape::mirror,
                                                    lambda.leading_doubled(), lambda.size());
            out.lhs = schur_bialternant(mu, mirror_args(pt, false));
            out.rhs = eval_symplectic(lambda, pt) * eval_o_even(lambda.shifted(2), pt);
            break;
        }
        case IdentityId::AST1: {
            const auto lambda = ShiftedPartition::double_staircase(DoubleStaircase::AST1, n);
            const auto mu = self_complementary_embed(lambda, lambda.leading_doubled(), EmbedShape::mirror);
            out.lhs = schur_bialternant(mu, mirror_args(pt, false));
            out.rhs = sign_pow(lambda.sum_doubled()) * eval_so_odd(lambda, pt) *
                      eval_so_odd(lambda, pt, /*negate=*/true);
            break;
        }
        case IdentityId::AST2: {
            const auto lambda = ShiftedPartition::double_staircase(DoubleStaircase::AST2, n);
            const auto mu = detail::embed_with_bump(lambda, EmbedShape::mirror,
                                                    lambda.leading_doubled(), lambda.size());
            out.lhs = schur_bialternant(mu, mirror_args(pt, false));
            out.rhs = eval_symplectic(lambda, pt) * eval_o_even(lambda.shifted(2), pt);
            break;
        }
        case IdentityId::DASASM1:
        case IdentityId::DASASM2: {
            const bool even_case = (id == IdentityId::DASASM1);
            const std::int64_t top = even_case ? 2 * n : 2 * n + 1;
            const auto mu = detail::dasasm_schur_index(top);
            out.lhs = schur_bialternant(mu, mirror_args(pt, true));
            Rational pre(1);
            for (int i = 0; i < pt.size(); ++i) pre *= pt.xbar(i) + Rational(1) + pt.x(i);
            const auto so_idx = ShiftedPartition::double_staircase(
                even_case ? DoubleStaircase::DAS1 : DoubleStaircase::DAS2, n);
            const auto sp_idx = ShiftedPartition::double_staircase(
                even_case ? DoubleStaircase::AST2 : DoubleStaircase::QAST2, n);
            out.rhs = pre * eval_so_odd(so_idx, pt) * eval_symplectic(sp_idx, pt);
            break;
        }
    }
    return out;
}

struct Witness {
    EvalPoint point;
    Rational lhs, rhs;
    int trial = 0;
};

struct VerificationReport {
    IdentityId id = IdentityId::FACT1;
    IdentityParams params;
    int trials = 0;
    int failures = 0;
    std::optional<Witness> witness;  // first mismatch; absent iff failures == 0
    std::uint64_t seed = 0;
};

inline std::int64_t sampling_bound(int roots) {
    return std::max<std::int64_t>(2 * roots + 2, 17);
}

// crude upper bound on the total doubled degree of either side in the roots,
// used only for the small-trial-count warning
inline std::int64_t degree_bound(IdentityId id, const IdentityParams& p) {
    const std::int64_t roots = num_roots(id, p);
    std::int64_t top = p.lambda.leading_doubled();
    for (const auto& v : {p.doubled_k, p.doubled_k1, p.doubled_k2, p.doubled_a})
        if (v) top = std::max(top, *v);
    if (p.b) top = std::max(top, 2 * *p.b);
    if (p.m) top = std::max(top, 2 * *p.m + 1);
    const std::int64_t cols = 2 * roots + 1;
    return cols * (2 * top + 2 * cols);
}

// Randomized exact identity testing: both sides are Laurent polynomials of
// bounded degree in the roots, so exact agreement at random points gives
// overwhelming confidence and any disagreement is a certified counterexample.
inline VerificationReport verify(IdentityId id, const IdentityParams& params, int trials,
                                 std::uint64_t seed, Mutation mutation = Mutation::none) {
    validate_params(id, params);
    if (trials < 3)
        std::cerr << "warning: " << to_string(id) << " trials=" << trials
                  << " is below the probabilistic-testing floor of 3 (degree bound "
                  << degree_bound(id, params) << ")\n";
    VerificationReport rep;
    rep.id = id;
    rep.params = params;
    rep.trials = trials;
    rep.seed = seed;
    const int roots = num_roots(id, params);
    for (int t = 0; t < trials; ++t) {
        const EvalPoint pt = sample_point(roots, mix_seed(seed, static_cast<std::uint64_t>(t)),
                                          sampling_bound(roots));
        const SidePair sides = evaluate_identity(id, params, pt, mutation);
        if (sides.lhs != sides.rhs) {
            ++rep.failures;
            if (!rep.witness) rep.witness = Witness{pt, sides.lhs, sides.rhs, t};
        }
    }
    return rep;
}

inline std::string to_line(const VerificationReport& r) {
    std::ostringstream os;
    os << "identity=" << to_string(r.id) << " " << r.params.str() << " trials=" << r.trials
       << " failures=" << r.failures << " seed=" << r.seed;
    if (r.witness) {
        os << " witness_trial=" << r.witness->trial << " point=";
        for (int i = 0; i < r.witness->point.size(); ++i) {
            if (i) os << ",";
            os << r.witness->point.root(i).str();
        }
        os << " lhs=" << r.witness->lhs.str() << " rhs=" << r.witness->rhs.str();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parameter sweeps

struct SweepRanges {
    int n_min = 1, n_max = 3;
    std::int64_t max_doubled_integer = 6;  // integer branch: lambda_1 <= 3
    std::int64_t max_doubled_half = 5;     // half branch: lambda_1 <= 5/2
    int k_count = 3;                       // k in {top, top+1, ..., top+k_count-1}
    int k_pair_count = 2;                  // k1, k2 in {top, ..., top+k_pair_count-1}
    bool include_integer = true;
    bool include_half = true;
    std::vector<std::int64_t> prop1_a_doubled = {0, 2, 4, 1, 3};
    std::vector<std::int64_t> prop1_b = {0, 1, 2, 3};
    std::vector<std::int64_t> prop2_a_doubled = {0, 1, 2};
    std::vector<std::int64_t> prop2_b_offsets = {0, 1, 2};
    std::vector<int> prop2_n = {2, 3};
    std::vector<std::int64_t> m_values = {0, 1, 2, 3};
    std::vector<int> staircase_n = {1, 2};
};

inline std::vector<IdentityParams> enumerate_params(IdentityId id, const SweepRanges& r) {
    std::vector<IdentityParams> out;
    auto parities = [&]() {
        std::vector<Parity> ps;
        if (r.include_integer) ps.push_back(Parity::integer);
        if (r.include_half) ps.push_back(Parity::half_integer);
        return ps;
    }();
    auto max_for = [&](Parity p) {
        return p == Parity::integer ? r.max_doubled_integer : r.max_doubled_half;
    };

    switch (id) {
        case IdentityId::FACT1:
        case IdentityId::FACT4:
            for (Parity parity : parities)
                for (int n = r.n_min; n <= r.n_max; ++n)
                    for (auto& lam : enumerate_partitions(n, max_for(parity), parity))
                        for (int dk = 0; dk < r.k_count; ++dk) {
                            IdentityParams p;
                            p.n = n;
                            p.lambda = ShiftedPartition::from_doubled(lam);
                            p.doubled_k = p.lambda.leading_doubled() + 2 * dk;
                            out.push_back(std::move(p));
                        }
            break;
        case IdentityId::FACT2:
            for (Parity parity : parities)
                for (int n = r.n_min; n <= r.n_max; ++n)
                    for (auto& lam : enumerate_partitions(n + 1, max_for(parity), parity))
                        for (int d1 = 0; d1 < r.k_pair_count; ++d1)
                            for (int d2 = 0; d2 < r.k_pair_count; ++d2) {
                                IdentityParams p;
                                p.n = n;
                                p.lambda = ShiftedPartition::from_doubled(lam);
                                p.doubled_k1 = p.lambda.leading_doubled() + 2 * d1;
                                p.doubled_k2 = p.lambda.leading_doubled() + 2 * d2;
                                out.push_back(std::move(p));
                            }
            break;
        case IdentityId::FACT3:
        case IdentityId::FACT3P_PLUS:
        case IdentityId::FACT3P_MINUS:
            for (Parity parity : parities)
                for (int n = r.n_min; n <= r.n_max; ++n)
                    for (auto& lam : enumerate_partitions(n + 1, max_for(parity), parity))
                        for (int dk = 0; dk < r.k_count; ++dk) {
                            IdentityParams p;
                            p.n = n;
                            p.lambda = ShiftedPartition::from_doubled(lam);
                            p.doubled_k = p.lambda.leading_doubled() + 2 * dk;
                            out.push_back(std::move(p));
                        }
            break;
        case IdentityId::PROP1:
            for (auto a : r.prop1_a_doubled)
                for (auto b : r.prop1_b)
                    for (int n = r.n_min; n <= r.n_max; ++n) {
                        IdentityParams p;
                        p.n = n;
                        p.doubled_a = a;
                        p.b = b;
                        out.push_back(std::move(p));
                    }
            break;
        case IdentityId::PROP2:
            for (auto a : r.prop2_a_doubled)
                for (auto off : r.prop2_b_offsets)
                    for (int n : r.prop2_n) {
                        IdentityParams p;
                        p.n = n;
                        p.doubled_a = a;
                        p.b = a + off;  // b >= 2a, stored doubled: 2a == a_doubled
                        out.push_back(std::move(p));
                    }
            break;
        case IdentityId::FACT11:
        case IdentityId::FACT12:
            for (int n = r.n_min; n <= r.n_max; ++n)
                for (auto& lam : enumerate_partitions(n, r.max_doubled_integer, Parity::integer)) {
                    IdentityParams p;
                    p.n = n;
                    p.lambda = ShiftedPartition::from_doubled(lam);
                    out.push_back(std::move(p));
                }
            break;
        case IdentityId::FACT21:
        case IdentityId::FACT22:
            for (int n = r.n_min; n <= r.n_max; ++n)
                for (auto& lam : enumerate_partitions(n + 1, r.max_doubled_integer, Parity::integer)) {
                    IdentityParams p;
                    p.n = n;
                    p.lambda = ShiftedPartition::from_doubled(lam);
                    out.push_back(std::move(p));
                }
            break;
        case IdentityId::RECT1:
        case IdentityId::RECT2:
        case IdentityId::ADDRECT1:
        case IdentityId::ADDRECT2:
        case IdentityId::RECT3:
        case IdentityId::RECT4:
            for (auto m : r.m_values)
                for (int n = r.n_min; n <= r.n_max; ++n) {
                    IdentityParams p;
                    p.n = n;
                    p.m = m;
                    out.push_back(std::move(p));
                }
            break;
        case IdentityId::QAST1:
        case IdentityId::QAST2:
        case IdentityId::AST1:
        case IdentityId::AST2:
        case IdentityId::DASASM1:
        case IdentityId::DASASM2:
            for (int n : r.staircase_n) {
                IdentityParams p;
                p.n = n;
                out.push_back(std::move(p));
            }
            break;
    }
    return out;
}

inline std::vector<VerificationReport> sweep(IdentityId id, const SweepRanges& ranges, int trials,
                                             std::uint64_t seed) {
    std::vector<VerificationReport> out;
    for (const auto& p : enumerate_params(id, ranges)) out.push_back(verify(id, p, trials, seed));
    return out;
}

// ---------------------------------------------------------------------------
// Proof-layer block determinant identities, checked on random rational
// matrices of the stated shapes.

enum class BlockDetId { D1, D2, D3 };

namespace detail {

inline RationalMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Rational(rng.int_in(-9, 9), rng.int_in(1, 9));
    return m;
}

}  // namespace detail

inline bool check_block_det(BlockDetId which, int size, std::uint64_t seed) {
    if (size < 1) throw std::invalid_argument("check_block_det: size must be positive");
    if (which != BlockDetId::D1 && size < 2)
        throw std::invalid_argument("check_block_det: D2/D3 need size >= 2");
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(which) * 101 + static_cast<std::uint64_t>(size)));
    const std::size_t n = static_cast<std::size_t>(size);

    switch (which) {
        case BlockDetId::D1: {
            // det [A B; B A] = det(A-B) det(A+B)
            const auto A = detail::random_matrix(n, n, rng);
            const auto B = detail::random_matrix(n, n, rng);
            RationalMatrix M(2 * n, 2 * n), P(n, n), Q(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    M(i, j) = A(i, j);
                    M(i, n + j) = B(i, j);
                    M(n + i, j) = B(i, j);
                    M(n + i, n + j) = A(i, j);
                    P(i, j) = A(i, j) - B(i, j);
                    Q(i, j) = A(i, j) + B(i, j);
                }
            return det(M) == det(P) * det(Q);
        }
        case BlockDetId::D2: {
            // det [A c d B; B c e A] = det(A+B | c) det(e-d | A-B)
            const auto A = detail::random_matrix(n, n - 1, rng);
            const auto B = detail::random_matrix(n, n - 1, rng);
            const auto c = detail::random_matrix(n, 1, rng);
            const auto d = detail::random_matrix(n, 1, rng);
            const auto e = detail::random_matrix(n, 1, rng);
            RationalMatrix M(2 * n, 2 * n), P(n, n), Q(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n - 1; ++j) {
                    M(i, j) = A(i, j);
                    M(i, n + 1 + j) = B(i, j);
                    M(n + i, j) = B(i, j);
                    M(n + i, n + 1 + j) = A(i, j);
                    P(i, j) = A(i, j) + B(i, j);
                    Q(i, j + 1) = A(i, j) - B(i, j);
                }
                M(i, n - 1) = c(i, 0);
                M(i, n) = d(i, 0);
                M(n + i, n - 1) = c(i, 0);
                M(n + i, n) = e(i, 0);
                P(i, n - 1) = c(i, 0);
                Q(i, 0) = e(i, 0) - d(i, 0);
            }
            return det(M) == det(P) * det(Q);
        }
        case BlockDetId::D3: {
            // columns of A, B indexed 0..n; left blocks drop column 0
            const auto A = detail::random_matrix(n, n + 1, rng);
            const auto B = detail::random_matrix(n, n + 1, rng);
            RationalMatrix M(2 * n + 1, 2 * n + 1), P(n, n), Q(n + 1, n + 1);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    M(i, j) = A(i, j + 1);
                    M(n + i, j) = B(i, j + 1);
                    P(i, j) = A(i, j + 1) - B(i, j + 1);
                }
                for (std::size_t j = 0; j <= n; ++j) {
                    M(i, n + j) = B(i, j);
                    M(n + i, n + j) = A(i, j);
                    Q(i, j) = A(i, j) + B(i, j);
                }
            }
            for (std::size_t j = 0; j < 2 * n + 1; ++j) M(2 * n, j) = Rational(1);
            for (std::size_t j = 0; j <= n; ++j) Q(n, j) = Rational(2);
            return det(M) == Rational(1, 2) * det(P) * det(Q);
        }
    }
    throw std::logic_error("check_block_det: unreachable");
}

// fact2's first Schur index admits a reversed form: with k1 >= lambda_1 it
// may be replaced by
// (k1+l_0, ..., k1+l_{n-1}, k1-l_n, ..., k1-l_1). Returns true when the two
// forms agree at the given point.
inline bool fact2_first_schur_variant_agrees(const IdentityParams& p, const EvalPoint& pt) {
    validate_params(IdentityId::FACT2, p);
    const int n = p.n;
    const std::int64_t k1 = *p.doubled_k1;
    const auto std_mu = self_complementary_embed(p.lambda, k1, EmbedShape::sum_first);
    std::vector<std::int64_t> var_mu;
    for (int j = 0; j < n; ++j) var_mu.push_back((k1 + p.lambda.doubled(j)) / 2);
    for (int j = n; j >= 1; --j) var_mu.push_back((k1 - p.lambda.doubled(j)) / 2);
    const auto args = detail::mirror_args(pt, false);
    return schur_bialternant(std_mu, args) == schur_bialternant(var_mu, args);
}

}  // namespace schurfact
