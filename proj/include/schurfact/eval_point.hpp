#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "schurfact/rational.hpp"

namespace schurfact {

// Deterministic generator. mt19937_64 output is fully specified by the
// standard, so sequences are reproducible across platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // uniform-ish integer in [lo, hi]; the modulo bias is irrelevant at the
    // tiny bounds used here and keeps the mapping fully deterministic
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Evaluation point under the square substitution x_i = t_i^2. The roots t_i
// are positive rationals with t_i != 1, t_i != t_j and t_i * t_j != 1, which
// makes all x_i, xbar_i and 1 pairwise distinct, so every denominator in the
// character determinant formulas is nonzero.
class EvalPoint {
public:
    explicit EvalPoint(std::vector<Rational> roots) : roots_(std::move(roots)) {
        for (std::size_t i = 0; i < roots_.size(); ++i) {
            if (roots_[i].sign() <= 0) throw std::invalid_argument("EvalPoint: roots must be positive");
            if (roots_[i] == Rational(1)) throw std::invalid_argument("EvalPoint: root equal to 1");
            for (std::size_t j = 0; j < i; ++j) {
                if (roots_[i] == roots_[j])
                    throw std::invalid_argument("EvalPoint: duplicate roots");
                if (roots_[i] * roots_[j] == Rational(1))
                    throw std::invalid_argument("EvalPoint: reciprocal pair of roots");
            }
        }
    }

    int size() const { return static_cast<int>(roots_.size()); }
    const Rational& root(int i) const { return roots_.at(static_cast<std::size_t>(i)); }
    Rational x(int i) const { return root(i) * root(i); }
    Rational xbar(int i) const { return rat_pow(root(i), -2); }

    std::vector<Rational> xs() const {
        std::vector<Rational> out;
        out.reserve(roots_.size());
        for (int i = 0; i < size(); ++i) out.push_back(x(i));
        return out;
    }

    EvalPoint prefix(int n) const {
        return EvalPoint(std::vector<Rational>(roots_.begin(), roots_.begin() + n));
    }

private:
    std::vector<Rational> roots_;
};

// Draws n roots t = p/q with 1 <= p,q <= bound, rejecting draws that violate
// the EvalPoint invariants. Deterministic for a given seed.
inline EvalPoint sample_point(int n, std::uint64_t seed, std::int64_t bound) {
    if (bound < 2 * n + 2) throw std::invalid_argument("sample_point: bound too small");
    Rng rng(seed);
    std::vector<Rational> ts;
    ts.reserve(static_cast<std::size_t>(n));
    int budget = 10000;
    while (static_cast<int>(ts.size()) < n) {
        if (--budget < 0) throw std::runtime_error("sample_point: retry budget exhausted");
        Rational t(rng.int_in(1, bound), rng.int_in(1, bound));
        if (t == Rational(1)) continue;
        bool ok = true;
        for (const auto& u : ts)
            if (t == u || t * u == Rational(1)) { ok = false; break; }
        if (ok) ts.push_back(t);
    }
    return EvalPoint(std::move(ts));
}

}  // namespace schurfact
