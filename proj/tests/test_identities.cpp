#include <catch2/catch_amalgamated.hpp>

#include "schurfact/identities.hpp"

using namespace schurfact;

namespace {

IdentityParams fact1_params(const std::string& lambda, const std::string& k) {
    IdentityParams p;
    p.lambda = ShiftedPartition::parse(lambda);
    p.n = p.lambda.size();
    p.doubled_k = (Rational::parse(k) * Rational(2)).num().get_si();
    return p;
}

}  // namespace

TEST_CASE("identity names round-trip") {
    for (const auto& [id, name] : identity_names()) {
        auto back = identity_from_string(name);
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(identity_from_string("nope").has_value());
}

TEST_CASE("fact1 verifies on spec examples") {
    auto rep = verify(IdentityId::FACT1, fact1_params("0,0", "1"), 5, 0);
    CHECK(rep.trials == 5);
    CHECK(rep.failures == 0);
    CHECK_FALSE(rep.witness.has_value());

    rep = verify(IdentityId::FACT1, fact1_params("1,0", "2"), 10, 0);
    CHECK(rep.failures == 0);

    rep = verify(IdentityId::FACT1, fact1_params("5/2,3/2,1/2", "5/2"), 5, 3);
    CHECK(rep.failures == 0);
}

TEST_CASE("parameter validation rejects bad instances") {
    CHECK_THROWS_AS(verify(IdentityId::FACT1, fact1_params("1,0", "0"), 5, 0),
                    std::invalid_argument);  // k < lambda_1
    CHECK_THROWS_AS(verify(IdentityId::FACT1, fact1_params("1,0", "3/2"), 5, 0),
                    std::invalid_argument);  // parity mismatch
    IdentityParams p;
    p.n = 2;
    p.doubled_a = 4;
    p.b = 1;  // b < 2a
    CHECK_THROWS_AS(verify(IdentityId::PROP2, p, 5, 0), std::invalid_argument);
    IdentityParams q;
    q.n = 2;
    q.lambda = ShiftedPartition::parse("1/2,1/2");
    CHECK_THROWS_AS(verify(IdentityId::FACT11, q, 5, 0), std::invalid_argument);
}

TEST_CASE("corrupted fact2 is detected at every trial") {
    IdentityParams p;
    p.n = 2;
    p.lambda = ShiftedPartition::parse("1,1,0");
    p.doubled_k1 = 2;
    p.doubled_k2 = 2;
    CHECK(verify(IdentityId::FACT2, p, 10, 0).failures == 0);
    const auto bad = verify(IdentityId::FACT2, p, 10, 0, Mutation::fact2_drop_delta);
    CHECK(bad.failures == bad.trials);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->lhs != bad.witness->rhs);
    CHECK(bad.witness->trial == 0);
}

TEST_CASE("fact3' plus and minus sides have equal left-hand sides") {
    for (const auto& lambda : {"3,1,0", "2,2,1", "5/2,3/2,1/2"}) {
        IdentityParams p;
        p.lambda = ShiftedPartition::parse(lambda);
        p.n = p.lambda.size() - 1;
        p.doubled_k = p.lambda.leading_doubled() + 2;
        for (std::uint64_t s = 0; s < 5; ++s) {
            const auto pt = sample_point(p.n, mix_seed(50, s), 17);
            const auto plus = evaluate_identity(IdentityId::FACT3P_PLUS, p, pt);
            const auto minus = evaluate_identity(IdentityId::FACT3P_MINUS, p, pt);
            CHECK(plus.lhs == minus.lhs);
            CHECK(plus.lhs == plus.rhs);
            CHECK(minus.lhs == minus.rhs);
        }
    }
}

TEST_CASE("fact1 sides are independent of k") {
    IdentityParams p = fact1_params("2,1", "2");
    IdentityParams q = fact1_params("2,1", "3");
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto pt = sample_point(2, mix_seed(60, s), 17);
        const auto a = evaluate_identity(IdentityId::FACT1, p, pt);
        const auto b = evaluate_identity(IdentityId::FACT1, q, pt);
        CHECK(a.lhs == b.lhs);
        CHECK(a.rhs == b.rhs);
    }
}

TEST_CASE("fact2 first-schur asymmetry variant") {
    IdentityParams p;
    p.lambda = ShiftedPartition::parse("3,2,0");
    p.n = 2;
    p.doubled_k1 = 8;
    p.doubled_k2 = 6;
    for (std::uint64_t s = 0; s < 5; ++s)
        CHECK(fact2_first_schur_variant_agrees(p, sample_point(2, mix_seed(70, s), 17)));
}

TEST_CASE("prop1 with b = 0 degenerates to the rectangular relation") {
    IdentityParams p;
    p.n = 3;
    p.doubled_a = 4;
    p.b = 0;
    CHECK(verify(IdentityId::PROP1, p, 5, 0).failures == 0);
}

TEST_CASE("one verify pass per identity family") {
    SweepRanges tiny;
    tiny.n_min = 1;
    tiny.n_max = 2;
    tiny.max_doubled_integer = 2;
    tiny.max_doubled_half = 1;
    tiny.k_count = 1;
    tiny.k_pair_count = 1;
    tiny.prop1_a_doubled = {0, 1};
    tiny.prop1_b = {0, 2};
    tiny.prop2_a_doubled = {1};
    tiny.prop2_b_offsets = {0, 1};
    tiny.prop2_n = {2};
    tiny.m_values = {0, 1};
    tiny.staircase_n = {1};
    for (const auto& [id, name] : identity_names()) {
        const auto reports = sweep(id, tiny, 3, 9);
        REQUIRE_FALSE(reports.empty());
        for (const auto& r : reports) {
            INFO(name << " " << to_line(r));
            CHECK(r.failures == 0);
        }
    }
}

TEST_CASE("sweep over an empty range is empty") {
    SweepRanges r;
    r.staircase_n = {};
    CHECK(sweep(IdentityId::QAST1, r, 3, 0).empty());
}

TEST_CASE("block determinant identities on random matrices") {
    for (int size = 2; size <= 4; ++size)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            CHECK(check_block_det(BlockDetId::D1, size, seed));
            CHECK(check_block_det(BlockDetId::D2, size, seed));
            CHECK(check_block_det(BlockDetId::D3, size, seed));
        }
    CHECK_THROWS_AS(check_block_det(BlockDetId::D2, 1, 0), std::invalid_argument);
}

TEST_CASE("block determinant identity degenerate cases") {
    // det [A B; B A] with B = A vanishes, with B = 0 it is det(A)^2
    Rng rng(321);
    const std::size_t n = 3;
    RationalMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) = Rational(rng.int_in(-9, 9), rng.int_in(1, 9));
    RationalMatrix same(2 * n, 2 * n), zero(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            same(i, j) = same(i, n + j) = same(n + i, j) = same(n + i, n + j) = A(i, j);
            zero(i, j) = zero(n + i, n + j) = A(i, j);
        }
    CHECK(det(same) == Rational(0));
    CHECK(det(zero) == det(A) * det(A));
}

TEST_CASE("report line format carries the witness") {
    IdentityParams p;
    p.n = 1;
    p.lambda = ShiftedPartition::parse("1,0");
    p.doubled_k1 = 2;
    p.doubled_k2 = 2;
    const auto bad = verify(IdentityId::FACT2, p, 2, 5, Mutation::fact2_drop_delta);
    const auto line = to_line(bad);
    CHECK(line.find("identity=fact2") != std::string::npos);
    CHECK(line.find("failures=2") != std::string::npos);
    CHECK(line.find("witness_trial=0") != std::string::npos);
}
