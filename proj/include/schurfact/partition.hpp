#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurfact/rational.hpp"

namespace schurfact {

enum class Parity { integer, half_integer };

enum class DoubleStaircase { QAST1, QAST2, AST1, AST2, DAS1, DAS2 };

// A partition or half-partition, stored with doubled entries so both parity
// classes share one integer representation. Entry i holds 2*lambda_i.
// Invariants: weakly decreasing, all entries the same parity, nonnegative
// (half-partitions are therefore strictly positive).
class ShiftedPartition {
public:
    ShiftedPartition() = default;  // empty, integer parity

    static ShiftedPartition from_doubled(std::vector<std::int64_t> doubled) {
        ShiftedPartition p;
        if (doubled.empty()) return p;
        const bool odd = (mod2(doubled[0]) == 1);
        for (std::size_t i = 0; i < doubled.size(); ++i) {
            if (doubled[i] < 0)
                throw std::invalid_argument("ShiftedPartition: negative entry");
            if ((mod2(doubled[i]) == 1) != odd)
                throw std::invalid_argument("ShiftedPartition: mixed parity entries");
            if (i > 0 && doubled[i] > doubled[i - 1])
                throw std::invalid_argument("ShiftedPartition: entries not weakly decreasing");
        }
        p.doubled_ = std::move(doubled);
        p.parity_ = odd ? Parity::half_integer : Parity::integer;
        return p;
    }

    static ShiftedPartition from_integers(const std::vector<std::int64_t>& entries) {
        std::vector<std::int64_t> d;
        d.reserve(entries.size());
        for (auto e : entries) d.push_back(2 * e);
        return from_doubled(std::move(d));
    }

    // (m^n): n copies of one entry (given doubled).
    static ShiftedPartition rectangle(std::int64_t doubled_entry, int n) {
        return from_doubled(std::vector<std::int64_t>(static_cast<std::size_t>(n), doubled_entry));
    }

    // (nb+a, ..., 2b+a, b+a, a): n+1 entries, common difference b.
    static ShiftedPartition arithmetic_staircase(std::int64_t doubled_a, std::int64_t b, int n) {
        if (doubled_a < 0 || b < 0) throw std::invalid_argument("arithmetic_staircase: negative parameter");
        std::vector<std::int64_t> d(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) d[static_cast<std::size_t>(j)] = 2 * (n - j) * b + doubled_a;
        return from_doubled(std::move(d));
    }

    // (..., 2b+a, 2b-a, b+a, b-a, a): n+1 entries built from the right end,
    // which pins down the leading entry regardless of the parity of n.
    // Requires b >= 2a.
    static ShiftedPartition zigzag_staircase(std::int64_t doubled_a, std::int64_t b, int n) {
        if (doubled_a < 0) throw std::invalid_argument("zigzag_staircase: negative a");
        if (b < doubled_a) throw std::invalid_argument("zigzag_staircase: requires b >= 2a");
        std::vector<std::int64_t> d(static_cast<std::size_t>(n) + 1);
        for (int j = n; j >= 0; --j) {
            const std::int64_t s = (n - j) / 2;
            d[static_cast<std::size_t>(j)] =
                ((n - j) % 2 == 0) ? 2 * s * b + doubled_a : 2 * (s + 1) * b - doubled_a;
        }
        return from_doubled(std::move(d));
    }

    static ShiftedPartition double_staircase(DoubleStaircase v, int n) {
        std::vector<std::int64_t> e;
        auto pairs_down_from = [&](std::int64_t top, std::int64_t bottom) {
            for (std::int64_t x = top; x >= bottom; --x) { e.push_back(x); e.push_back(x); }
        };
        switch (v) {
            case DoubleStaircase::QAST1:
            case DoubleStaircase::DAS1:  // (n, n-1, n-1, ..., 1, 1, 0): 2n entries
                e.push_back(n);
                pairs_down_from(n - 1, 1);
                e.push_back(0);
                if (n == 0) e.clear();
                break;
            case DoubleStaircase::QAST2:  // (n, n-1, n-1, ..., 1, 1, 0, 0): 2n+1 entries
                e.push_back(n);
                pairs_down_from(n - 1, 1);
                e.push_back(0);
                e.push_back(0);
                if (n == 0) e = {0};
                break;
            case DoubleStaircase::AST1:
            case DoubleStaircase::DAS2:  // (n, n, n-1, n-1, ..., 1, 1, 0): 2n+1 entries
                pairs_down_from(n, 1);
                e.push_back(0);
                break;
            case DoubleStaircase::AST2:  // (n-1, n-1, ..., 1, 1, 0, 0): 2n entries
                pairs_down_from(n - 1, 0);
                break;
        }
        std::vector<std::int64_t> d;
        d.reserve(e.size());
        for (auto x : e) d.push_back(2 * x);
        return from_doubled(std::move(d));
    }

    int size() const { return static_cast<int>(doubled_.size()); }
    bool empty() const { return doubled_.empty(); }
    Parity parity() const { return parity_; }
    bool is_integer_parity() const { return parity_ == Parity::integer; }

    std::int64_t doubled(int i) const { return doubled_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::int64_t>& doubled_entries() const { return doubled_; }
    std::int64_t leading_doubled() const { return doubled_.empty() ? 0 : doubled_.front(); }
    std::int64_t trailing_doubled() const { return doubled_.empty() ? 0 : doubled_.back(); }

    std::int64_t sum_doubled() const {
        std::int64_t s = 0;
        for (auto e : doubled_) s += e;
        return s;
    }

    Rational entry(int i) const { return Rational(doubled(i), 2); }

    std::vector<std::int64_t> integers() const {
        if (!is_integer_parity())
            throw std::domain_error("ShiftedPartition: half-partition where integer partition required");
        std::vector<std::int64_t> out;
        out.reserve(doubled_.size());
        for (auto e : doubled_) out.push_back(e / 2);
        return out;
    }

    // All entries shifted by delta (given doubled). The result must stay valid.
    ShiftedPartition shifted(std::int64_t doubled_delta) const {
        std::vector<std::int64_t> d(doubled_);
        for (auto& e : d) e += doubled_delta;
        return from_doubled(std::move(d));
    }

    ShiftedPartition slice(int from, int len) const {
        if (from < 0 || len < 0 || from + len > size())
            throw std::out_of_range("ShiftedPartition::slice");
        std::vector<std::int64_t> d(doubled_.begin() + from, doubled_.begin() + from + len);
        return from_doubled(std::move(d));
    }

    friend bool operator==(const ShiftedPartition& a, const ShiftedPartition& b) {
        return a.doubled_ == b.doubled_;
    }

    // Comma-separated entries; half-integers as fractions, e.g. "3/2,1/2".
    std::string str() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (i) s += ',';
            s += entry(i).str();
        }
        return s;
    }

    static ShiftedPartition parse(const std::string& text) {
        std::vector<std::int64_t> d;
        std::stringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("partition: empty entry in '" + text + "'");
            const Rational r = Rational::parse(tok);
            const Rational twice = r * Rational(2);
            if (!twice.is_integer())
                throw std::invalid_argument("partition: entry '" + tok + "' is not an integer or half-integer");
            if (!twice.num().fits_slong_p())
                throw std::invalid_argument("partition: entry '" + tok + "' out of range");
            d.push_back(twice.num().get_si());
        }
        return from_doubled(std::move(d));
    }

private:
    static int mod2(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

    std::vector<std::int64_t> doubled_;
    Parity parity_ = Parity::integer;
};

// A single shifted scalar (the k, k1, k2 parameters) is a length-1
// ShiftedPartition; these helpers keep the parity bookkeeping in one place.
inline ShiftedPartition shifted_scalar(std::int64_t doubled_k) {
    return ShiftedPartition::from_doubled({doubled_k});
}

enum class EmbedShape { mirror, sum_first, sum_second, mirror_odd, mirror_odd_plus, mirror_odd_minus };

// Embeds lambda into an ordinary integer partition: entries mirrored
// around the shifted scalar k. All results are ordinary integer partitions
// because k and lambda share a parity class.
inline std::vector<std::int64_t> self_complementary_embed(const ShiftedPartition& lambda,
                                                          std::int64_t doubled_k,
                                                          EmbedShape shape) {
    if (lambda.empty()) throw std::invalid_argument("embed: empty partition");
    const bool k_half = (((doubled_k % 2) + 2) % 2) == 1;
    if (k_half == lambda.is_integer_parity())
        throw std::invalid_argument("embed: k and lambda must have the same parity class");
    if (doubled_k < lambda.leading_doubled())
        throw std::invalid_argument("embed: requires k >= leading entry of lambda");

    const int len = lambda.size();
    std::vector<std::int64_t> out;
    auto plus = [&](int j) { out.push_back((doubled_k + lambda.doubled(j)) / 2); };
    auto minus = [&](int j) { out.push_back((doubled_k - lambda.doubled(j)) / 2); };

    switch (shape) {
        case EmbedShape::mirror:  // lambda = (l_1..l_n) -> (k+l_1..k+l_n, k-l_n..k-l_1)
            for (int j = 0; j < len; ++j) plus(j);
            for (int j = len - 1; j >= 0; --j) minus(j);
            break;
        case EmbedShape::sum_first:  // lambda = (l_0..l_n) -> (k+l_1..k+l_n, k-l_{n-1}..k-l_0)
            for (int j = 1; j < len; ++j) plus(j);
            for (int j = len - 2; j >= 0; --j) minus(j);
            break;
        case EmbedShape::sum_second:  // (k+l_1..k+l_{n-1}, k-l_n..k-l_0)
            for (int j = 1; j + 1 < len; ++j) plus(j);
            for (int j = len - 1; j >= 0; --j) minus(j);
            break;
        case EmbedShape::mirror_odd:  // (k+l_1..k+l_n, k-l_n..k-l_0)
            for (int j = 1; j < len; ++j) plus(j);
            for (int j = len - 1; j >= 0; --j) minus(j);
            break;
        case EmbedShape::mirror_odd_plus:  // (k+l_0..k+l_{n-1}, k+l_n, k-l_{n-1}..k-l_0)
            for (int j = 0; j < len; ++j) plus(j);
            for (int j = len - 2; j >= 0; --j) minus(j);
            break;
        case EmbedShape::mirror_odd_minus:  // (k+l_0..k+l_{n-1}, k-l_n, k-l_{n-1}..k-l_0)
            for (int j = 0; j + 1 < len; ++j) plus(j);
            for (int j = len - 1; j >= 0; --j) minus(j);
            break;
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] > out[i - 1]) throw std::logic_error("embed: result not weakly decreasing");
    return out;
}

// All weakly decreasing doubled tuples of the given length with entries of one
// parity class bounded by max_doubled: the partition grids of the sweeps.
inline std::vector<std::vector<std::int64_t>> enumerate_partitions(int length,
                                                                   std::int64_t max_doubled,
                                                                   Parity parity) {
    std::vector<std::vector<std::int64_t>> out;
    const std::int64_t lo = (parity == Parity::half_integer) ? 1 : 0;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, int i, std::int64_t hi) -> void {
        if (i == length) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t v = hi; v >= lo; v -= 2) {
            cur.push_back(v);
            self(self, i + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, max_doubled);
    return out;
}

// Complement of (l_1..l_a) in an a x b rectangle: (b-l_a, ..., b-l_1).
inline std::vector<std::int64_t> complement(const std::vector<std::int64_t>& lambda,
                                            int a, std::int64_t b) {
    if (static_cast<int>(lambda.size()) != a)
        throw std::invalid_argument("complement: partition length must equal a");
    std::vector<std::int64_t> out;
    out.reserve(lambda.size());
    for (auto it = lambda.rbegin(); it != lambda.rend(); ++it) {
        if (*it > b) throw std::invalid_argument("complement: entry exceeds rectangle width");
        out.push_back(b - *it);
    }
    return out;
}

}  // namespace schurfact
