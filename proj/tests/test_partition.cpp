#include <catch2/catch_amalgamated.hpp>

#include "schurfact/partition.hpp"

using namespace schurfact;

namespace {

std::vector<std::int64_t> ints(std::initializer_list<std::int64_t> v) { return {v}; }

}  // namespace

TEST_CASE("partition validation") {
    auto p = ShiftedPartition::from_doubled({6, 4, 2, 0});
    CHECK(p.is_integer_parity());
    CHECK(p.integers() == ints({3, 2, 1, 0}));

    auto h = ShiftedPartition::from_doubled({3, 1});
    CHECK(h.parity() == Parity::half_integer);
    CHECK(h.str() == "3/2,1/2");

    CHECK_THROWS_AS(ShiftedPartition::from_doubled({2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(ShiftedPartition::from_doubled({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ShiftedPartition::from_doubled({-2}), std::invalid_argument);
    CHECK_THROWS_AS(h.integers(), std::domain_error);
}

TEST_CASE("partition text syntax") {
    CHECK(ShiftedPartition::parse("3,2,1,0").doubled_entries() == ints({6, 4, 2, 0}));
    CHECK(ShiftedPartition::parse("3/2,1/2").doubled_entries() == ints({3, 1}));
    CHECK(ShiftedPartition::parse("").empty());
    CHECK_THROWS_AS(ShiftedPartition::parse("2,4"), std::invalid_argument);
    CHECK_THROWS_AS(ShiftedPartition::parse("1,1/2"), std::invalid_argument);
    CHECK_THROWS_AS(ShiftedPartition::parse("1/3"), std::invalid_argument);
    CHECK(ShiftedPartition::parse("5/2,1/2").str() == "5/2,1/2");
}

TEST_CASE("rectangle constructor") {
    CHECK(ShiftedPartition::rectangle(4, 3).integers() == ints({2, 2, 2}));
    CHECK(ShiftedPartition::rectangle(0, 2).integers() == ints({0, 0}));
    CHECK(ShiftedPartition::rectangle(1, 2).str() == "1/2,1/2");
}

TEST_CASE("arithmetic staircase") {
    CHECK(ShiftedPartition::arithmetic_staircase(0, 1, 3).integers() == ints({3, 2, 1, 0}));
    CHECK(ShiftedPartition::arithmetic_staircase(4, 0, 2).integers() == ints({2, 2, 2}));
    CHECK(ShiftedPartition::arithmetic_staircase(1, 2, 2).str() == "9/2,5/2,1/2");
}

TEST_CASE("zigzag staircase") {
    CHECK(ShiftedPartition::zigzag_staircase(0, 1, 4).integers() == ints({2, 2, 1, 1, 0}));
    CHECK(ShiftedPartition::zigzag_staircase(0, 0, 2).integers() == ints({0, 0, 0}));
    CHECK(ShiftedPartition::zigzag_staircase(2, 2, 3).integers() == ints({3, 3, 1, 1}));
    CHECK(ShiftedPartition::zigzag_staircase(1, 2, 3).str() == "7/2,5/2,3/2,1/2");
    CHECK_THROWS_AS(ShiftedPartition::zigzag_staircase(4, 1, 2), std::invalid_argument);
}

TEST_CASE("double staircases") {
    CHECK(ShiftedPartition::double_staircase(DoubleStaircase::QAST1, 2).integers() ==
          ints({2, 1, 1, 0}));
    CHECK(ShiftedPartition::double_staircase(DoubleStaircase::AST2, 2).integers() ==
          ints({1, 1, 0, 0}));
    CHECK(ShiftedPartition::double_staircase(DoubleStaircase::AST1, 1).integers() ==
          ints({1, 1, 0}));
    CHECK(ShiftedPartition::double_staircase(DoubleStaircase::QAST2, 2).integers() ==
          ints({2, 1, 1, 0, 0}));
    CHECK(ShiftedPartition::double_staircase(DoubleStaircase::DAS1, 3).integers() ==
          ints({3, 2, 2, 1, 1, 0}));
    CHECK(ShiftedPartition::double_staircase(DoubleStaircase::DAS2, 2).integers() ==
          ints({2, 2, 1, 1, 0}));
}

TEST_CASE("self-complementary embedding") {
    CHECK(self_complementary_embed(ShiftedPartition::parse("1,0"), 4, EmbedShape::mirror) ==
          ints({3, 2, 2, 1}));
    CHECK(self_complementary_embed(ShiftedPartition::parse("1/2,1/2"), 1, EmbedShape::mirror) ==
          ints({1, 1, 0, 0}));
    CHECK(self_complementary_embed(ShiftedPartition::parse("1,0,0"), 2, EmbedShape::mirror_odd) ==
          ints({1, 1, 1, 1, 0}));

    CHECK_THROWS_AS(self_complementary_embed(ShiftedPartition::parse("2,0"), 2, EmbedShape::mirror),
                    std::invalid_argument);
    CHECK_THROWS_AS(self_complementary_embed(ShiftedPartition::parse("1,0"), 3, EmbedShape::mirror),
                    std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(complement({2, 1}, 2, 3) == ints({2, 1}));
    CHECK(complement({0, 0}, 2, 2) == ints({2, 2}));
    CHECK(complement({3, 2, 2, 1}, 4, 4) == ints({3, 2, 2, 1}));
    CHECK_THROWS_AS(complement({4, 0}, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(complement({1, 0}, 3, 2), std::invalid_argument);
}

TEST_CASE("mirror embeddings are exactly the self-complementary partitions") {
    for (int n = 1; n <= 3; ++n) {
        for (std::int64_t k2 = 1; k2 <= 8; ++k2) {  // doubled k up to 4, both parities
            const Parity parity = (k2 % 2 == 0) ? Parity::integer : Parity::half_integer;
            for (const auto& lam : enumerate_partitions(n, k2, parity)) {
                const auto p = ShiftedPartition::from_doubled(lam);
                const auto mu = self_complementary_embed(p, k2, EmbedShape::mirror);
                CHECK(complement(mu, 2 * n, k2) == mu);
            }
        }
    }
}

TEST_CASE("odd mirror embeddings with trailing zero are self-complementary in odd-height boxes") {
    for (int n = 1; n <= 3; ++n) {
        for (std::int64_t k2 = 2; k2 <= 8; k2 += 2) {
            for (auto lam : enumerate_partitions(n, k2, Parity::integer)) {
                lam.push_back(0);  // lambda_n = 0 forces the integer regime
                const auto p = ShiftedPartition::from_doubled(lam);
                const auto mu = self_complementary_embed(p, k2, EmbedShape::mirror_odd_plus);
                CHECK(complement(mu, 2 * n + 1, k2) == mu);
                CHECK(mu == self_complementary_embed(p, k2, EmbedShape::mirror_odd_minus));
            }
        }
    }
}
