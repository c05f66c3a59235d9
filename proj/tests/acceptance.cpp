// Acceptance suite: one pass/fail line per criterion, nonzero exit status on
// any failure. Every range and tolerance is pinned here; all comparisons are
// exact (rational or integer equality).

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "schurfact/schurfact.hpp"

using namespace schurfact;

namespace {

int g_failed = 0;

void criterion(int idx, const std::string& name, bool ok) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx, name.c_str());
    if (!ok) ++g_failed;
}

bool all_clean(const std::vector<VerificationReport>& reports, std::size_t expect_at_least) {
    if (reports.size() < expect_at_least) return false;
    for (const auto& r : reports) {
        if (r.failures != 0) {
            std::printf("  counterexample: %s\n", to_line(r).c_str());
            return false;
        }
    }
    return true;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    const auto sweep_start = std::chrono::steady_clock::now();
    const int trials = 10;
    const std::uint64_t seed = 0;

    // 1. fact1: partitions n in {1,2,3}, lambda_1 <= 3, k in {l1, l1+1, l1+2};
    //    half-partitions lambda_1 <= 5/2, half-integer k <= lambda_1 + 2.
    {
        const auto t0 = std::chrono::steady_clock::now();
        SweepRanges r;  // defaults encode exactly these ranges
        const auto reports = sweep(IdentityId::FACT1, r, trials, seed);
        const double dt = seconds_since(t0);
        criterion(1, "fact1 sweep, both parity regimes (" + std::to_string(reports.size()) + " cases, " +
                         std::to_string(dt) + " s, target < 60 s)",
                  all_clean(reports, 150) && dt < 60.0);
    }

    // 2. fact2: lambda_0 <= 3 both parities, k1, k2 in {l0, l0+1}, with
    //    lambda_n = 0 cases present.
    {
        SweepRanges r;
        const auto reports = sweep(IdentityId::FACT2, r, trials, seed);
        bool has_trailing_zero = false;
        for (const auto& rep : reports)
            if (rep.params.lambda.trailing_doubled() == 0) has_trailing_zero = true;
        criterion(2, "fact2 sweep (" + std::to_string(reports.size()) + " cases)",
                  all_clean(reports, 300) && has_trailing_zero);
    }

    // 3. fact3 and both signs of fact3p, plus pointwise equality of the two
    //    signed left-hand sides.
    {
        SweepRanges r;
        bool ok = all_clean(sweep(IdentityId::FACT3, r, trials, seed), 100) &&
                  all_clean(sweep(IdentityId::FACT3P_PLUS, r, trials, seed), 100) &&
                  all_clean(sweep(IdentityId::FACT3P_MINUS, r, trials, seed), 100);
        for (const auto& p : enumerate_params(IdentityId::FACT3P_PLUS, r)) {
            const auto pt = sample_point(num_roots(IdentityId::FACT3P_PLUS, p),
                                         mix_seed(seed, 7), sampling_bound(p.n));
            ok = ok && evaluate_identity(IdentityId::FACT3P_PLUS, p, pt).lhs ==
                           evaluate_identity(IdentityId::FACT3P_MINUS, p, pt).lhs;
        }
        criterion(3, "fact3/fact3p sweeps incl. +/- left-hand-side agreement", ok);
    }

    // 4. prop1 and prop2 over the stated (a, b, n) grids.
    {
        SweepRanges r;  // prop1: a in {0,1,2,1/2,3/2}, b in 0..3, n in 1..3
                        // prop2: a in {0,1/2,1}, b in {2a,2a+1,2a+2}, n in {2,3}
        criterion(4, "prop1 and prop2 grids",
                  all_clean(sweep(IdentityId::PROP1, r, trials, seed), 60) &&
                      all_clean(sweep(IdentityId::PROP2, r, trials, seed), 18));
    }

    // 5. fact4 and the alternative statements over the fact1/fact2 ranges.
    {
        SweepRanges r;
        criterion(5, "fact4 and alternative statements fact11/fact12/fact21/fact22",
                  all_clean(sweep(IdentityId::FACT4, r, trials, seed), 150) &&
                      all_clean(sweep(IdentityId::FACT11, r, trials, seed), 30) &&
                      all_clean(sweep(IdentityId::FACT12, r, trials, seed), 30) &&
                      all_clean(sweep(IdentityId::FACT21, r, trials, seed), 60) &&
                      all_clean(sweep(IdentityId::FACT22, r, trials, seed), 60));
    }

    // 6. Rectangular and double-staircase specializations; the whole
    //    identity-sweep block must stay under 5 minutes.
    {
        SweepRanges r;  // m <= 3, n <= 3; staircase n in {1, 2} (up to 5 variables)
        bool ok = true;
        for (auto id : {IdentityId::RECT1, IdentityId::RECT2, IdentityId::ADDRECT1,
                        IdentityId::ADDRECT2, IdentityId::RECT3, IdentityId::RECT4})
            ok = ok && all_clean(sweep(id, r, trials, seed), 12);
        for (auto id : {IdentityId::QAST1, IdentityId::QAST2, IdentityId::AST1, IdentityId::AST2,
                        IdentityId::DASASM1, IdentityId::DASASM2})
            ok = ok && all_clean(sweep(id, r, trials, seed), 2);
        const double dt = seconds_since(sweep_start);
        criterion(6, "rect/addrect and double-staircase families (sweeps total " +
                         std::to_string(dt) + " s, target < 300 s)",
                  ok && dt < 300.0);
    }

    // 7. Schur determinant route equals the SSYT oracle.
    {
        bool ok = true;
        for (int n = 1; n <= 3 && ok; ++n)
            for (const auto& lam : enumerate_partitions(n, 6, Parity::integer)) {
                const auto p = ShiftedPartition::from_doubled(lam);
                for (std::uint64_t s = 0; s < 5; ++s) {
                    const auto pt = sample_point(n, mix_seed(1000, s), 17);
                    if (eval_character({FamilyTag::schur}, p, pt) !=
                        schur_via_ssyt(p.integers(), pt.xs())) {
                        ok = false;
                        break;
                    }
                }
            }
        criterion(7, "schur oracle equivalence (n <= 3, lambda_1 <= 3, 5 points each)", ok);
    }

    // 8. Block determinant identities at sizes 2..4, 20 seeds each.
    {
        bool ok = true;
        for (int size = 2; size <= 4; ++size)
            for (std::uint64_t s = 0; s < 20; ++s)
                ok = ok && check_block_det(BlockDetId::D1, size, s) &&
                     check_block_det(BlockDetId::D2, size, s) &&
                     check_block_det(BlockDetId::D3, size, s);
        criterion(8, "block determinant identities D1-D3, sizes 2-4, 20 seeds", ok);
    }

    // 9. Product formulas against brute-force enumeration.
    {
        bool ok = true;
        for (std::int64_t a = 0; a <= 3 && ok; ++a)
            for (std::int64_t b = 0; b <= 3 && ok; ++b)
                for (std::int64_t c = 0; c <= 3 && ok; ++c)
                    ok = brute_count(CountFamily::pp(a, b, c)) == count(CountFamily::pp(a, b, c));
        ok = ok && count(CountFamily::pp(2, 2, 2)) == 20 && count(CountFamily::pp(1, 1, 1)) == 2;
        const std::int64_t asm_values[] = {1, 2, 7, 42, 429};
        for (int m = 1; m <= 5 && ok; ++m) {
            const Int product = count(CountFamily::asm_(m));
            ok = product == asm_values[m - 1] && brute_count(CountFamily::asm_(m)) == product;
        }
        // symmetry classes on boxes of side <= 4
        for (std::int64_t a = 0; a <= 2 && ok; ++a)
            for (std::int64_t b = 0; b <= 4 && ok; ++b)
                ok = brute_count(CountFamily::spp(a, b)) == count(CountFamily::spp(a, b)) &&
                     brute_count(CountFamily::tcpp(a, b)) == count(CountFamily::tcpp(a, b));
        for (std::int64_t m = 0; m <= 4 && ok; ++m)
            ok = brute_count(CountFamily::cspp(m)) == count(CountFamily::cspp(m));
        for (std::int64_t s = 0; s <= 4 && ok; s += 2)
            ok = brute_count(CountFamily::tspp(s)) == count(CountFamily::tspp(s));
        criterion(9, "counts vs brute-force enumeration (PP, ASM, SPP, TCPP, CSPP, TSPP)", ok);
    }

    // 10. Integer factorization identities, prefactors included.
    {
        bool ok = true;
        for (std::int64_t m = 0; m <= 4 && ok; ++m)
            for (std::int64_t n = 0; n <= 4 && ok; ++n) {
                ok = check_count_identity(CountIdentity::PP1, m, n) &&
                     check_count_identity(CountIdentity::PP5, m, n) &&
                     check_count_identity(CountIdentity::PP6, m, n);
                if (n >= 1)
                    ok = ok && check_count_identity(CountIdentity::PP2, m, n) &&
                         check_count_identity(CountIdentity::PP3, m, n) &&
                         check_count_identity(CountIdentity::PP4, m, n);
            }
        for (std::int64_t n = 0; n <= 5 && ok; ++n) {
            ok = check_count_identity(CountIdentity::DS1, n) &&
                 check_count_identity(CountIdentity::DS2, n) &&
                 check_count_identity(CountIdentity::DS3, n) &&
                 check_count_identity(CountIdentity::DS5, n) &&
                 check_count_identity(CountIdentity::DS6, n);
            if (n >= 1) ok = ok && check_count_identity(CountIdentity::DS4, n);
        }
        criterion(10, "count identities PP1-PP6 (m,n <= 4) and DS1-DS6 (n <= 5)", ok);
    }

    // 11. Dimension bridges with their exact prefactors.
    {
        bool ok = true;
        for (std::int64_t a = 0; a <= 4 && ok; ++a)
            for (std::int64_t b = 0; b <= 4 && ok; ++b) {
                for (std::int64_t c = 0; c <= 4 && ok; ++c)
                    ok = dim_bridge(DimBridge::pp_schur, a, b, c);
                ok = ok && dim_bridge(DimBridge::spp_so, a, b) &&
                     dim_bridge(DimBridge::tcpp_so_neg, a, b);
                if (b >= 1) ok = ok && dim_bridge(DimBridge::tcpp_sp, a, b);
                if (a >= 1 && b >= 1) ok = ok && dim_bridge(DimBridge::spp_star_oe, a, b);
            }
        for (std::int64_t m = 0; m <= 4 && ok; ++m) {
            ok = dim_bridge(DimBridge::cspp_schur, m) && dim_bridge(DimBridge::asm_schur, m) &&
                 dim_bridge(DimBridge::dasasm_schur, m) && dim_bridge(DimBridge::tspp_so, m) &&
                 dim_bridge(DimBridge::tspp_oe, m) && dim_bridge(DimBridge::vsasm_so_neg, m) &&
                 dim_bridge(DimBridge::vsasm_sp, m);
            if (m >= 1)
                ok = ok && dim_bridge(DimBridge::r_so, m) && dim_bridge(DimBridge::r_oe, m) &&
                     dim_bridge(DimBridge::cstcpp_so_neg, m) && dim_bridge(DimBridge::cstcpp_sp, m);
        }
        criterion(11, "dimension bridges for rect (sizes <= 4) and staircase (m <= 4) families", ok);
    }

    // 12. Negative control: dropping the (1+delta) factor must fail every trial.
    {
        IdentityParams p;
        p.n = 2;
        p.lambda = ShiftedPartition::parse("2,1,0");
        p.doubled_k1 = 4;
        p.doubled_k2 = 4;
        const auto rep = verify(IdentityId::FACT2, p, trials, seed, Mutation::fact2_drop_delta);
        criterion(12, "negative control: corrupted fact2 fails all trials",
                  rep.failures == rep.trials && rep.trials == trials && rep.witness.has_value());
    }

    if (g_failed == 0)
        std::printf("all 12 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failed);
    return g_failed == 0 ? 0 : 1;
}
