#include "doctest.h"

#include <algorithm>
#include <set>

#include "mstd/constructions.hpp"
#include "mstd/core_sets.hpp"
#include "mstd/theorem8.hpp"

using namespace mstd;

namespace {

int64_t m_case2(int64_t j) {
    int64_t p = 1;
    for (int64_t i = 0; i < j; ++i) p *= 3;
    return 7 * p - 8;
}

std::vector<int64_t> expected_case1_holes(int64_t j, int64_t k) {
    std::vector<int64_t> holes;
    for (int64_t t = j - 1; t >= 0; --t) holes.push_back(24 * k + 3 - 12 * t);
    return holes;
}

} // namespace

TEST_CASE("block stacks for the difference-deficient case") {
    CHECK(case1_Xk(1) == catalog("A_12"));
    CHECK(case1_Xk(2) == catalog("A_3"));

    IntSet x3 = case1_Xk(3);
    CHECK(x3.max() == 41);
    SumDiffProfile p3 = profile(x3);
    CHECK(p3.sum_size == 83);
    CHECK(p3.diff_size == 77);

    for (int64_t k = 1; k <= 5; ++k) {
        IntSet xk = case1_Xk(k);
        SumDiffProfile p = profile(xk);
        CAPTURE(k);
        REQUIRE(xk.max() == 12 * k + 5);
        REQUIRE(p.missing_sums.empty()); // X_k + X_k = [0, 2m_k]
        std::vector<int64_t> want_missing;
        for (int64_t t = 0; t < k; ++t) want_missing.push_back(12 * t + 6);
        REQUIRE(p.missing_diffs == want_missing);
    }
    CHECK_THROWS_AS(case1_Xk(0), validation_error);
}

TEST_CASE("element removal keeps differences and opens sum holes") {
    CHECK(case1_Xjk(0, 2) == case1_Xk(2));
    CHECK(case1_Xjk(1, 1) == IntSet({0, 1, 2, 4, 5, 9, 12, 14, 16, 17}));
    CHECK(profile(case1_Xjk(1, 1)).missing_sums == std::vector<int64_t>{27});

    // Removing {25, 13} from the two-block stack punches holes at 39 and 51.
    // (The displayed-hole positions 24(k-t)+3 are refuted; the acceptance
    // suite keeps the literal claim as an intentionally red check.)
    IntSet x22 = case1_Xjk(2, 2);
    std::vector<int64_t> expect = catalog("A_3").elements();
    expect.erase(std::remove(expect.begin(), expect.end(), 13), expect.end());
    expect.erase(std::remove(expect.begin(), expect.end(), 25), expect.end());
    CHECK(x22 == IntSet(expect));
    CHECK(profile(x22).missing_sums == std::vector<int64_t>{39, 51});

    for (int64_t k = 1; k <= 5; ++k) {
        for (int64_t j = 0; j <= k; ++j) {
            IntSet xjk = case1_Xjk(j, k);
            CAPTURE(j);
            CAPTURE(k);
            REQUIRE(diffset_nonneg(xjk) == diffset_nonneg(case1_Xk(k)));
            REQUIRE(profile(xjk).missing_sums == expected_case1_holes(j, k));
        }
    }
    CHECK_THROWS_AS(case1_Xjk(2, 1), validation_error);
}

TEST_CASE("recursive fringe for the sum-deficient case") {
    CaseIIFringe l0 = case2_Lj(0);
    CHECK(l0.elements.empty());
    CHECK(l0.m == -1);

    CaseIIFringe l1 = case2_Lj(1);
    CHECK(l1.elements == std::vector<int64_t>{0, 1, 2, 5, 9, 10, 11, 12, 13});
    CHECK(l1.m == 13);
    CHECK(profile(IntSet(l1.elements)).missing_sums == std::vector<int64_t>{8});

    CaseIIFringe l2 = case2_Lj(2);
    CHECK(l2.m == 55);
    CHECK(l2.elements.size() == 32);

    for (int64_t j = 1; j <= 5; ++j) {
        CaseIIFringe lj = case2_Lj(j);
        CAPTURE(j);
        REQUIRE(lj.m == m_case2(j));
        // |L_j| = (7/2)(3^j - 1) + 2j
        REQUIRE(static_cast<int64_t>(lj.elements.size()) ==
                7 * ((lj.m + 8) / 7 - 1) / 2 + 2 * j);
        REQUIRE(lj.elements.back() == lj.m);
        std::vector<int64_t> want_holes;
        for (int64_t t = 0; t < j; ++t) want_holes.push_back(2 * (m_case2(t) + 5));
        REQUIRE(profile(IntSet(lj.elements)).missing_sums == want_holes);
    }
}

TEST_CASE("exceptional values satisfy the two side conditions") {
    CHECK(case2_x_list(5) == std::vector<int64_t>{4, 18, 60, 186, 564});
    for (int64_t j = 1; j <= 5; ++j) {
        CaseIIFringe lj = case2_Lj(j);
        std::vector<int64_t> xs = case2_x_list(j);
        std::set<int64_t> members(lj.elements.begin(), lj.elements.end());
        CAPTURE(j);
        REQUIRE(static_cast<int64_t>(xs.size()) == j);
        for (size_t t = 0; t + 1 < xs.size(); ++t) REQUIRE(xs[t] < xs[t + 1]);
        REQUIRE(xs.back() * 2 < lj.m); // x_t < m_j / 2
        REQUIRE(xs.front() == m_case2(0) + 5);
        for (int64_t xu : xs)
            for (int64_t xv : xs) REQUIRE(members.count(2 * xu - xv) == 0);
    }
}

TEST_CASE("lower fringe extras leave the sumset unchanged") {
    for (int64_t j = 1; j <= 5; ++j) {
        for (int64_t k = 1; k <= j; ++k) {
            FringePair fp = fringe_pair(j, k);
            CAPTURE(j);
            CAPTURE(k);
            REQUIRE(fp.case_tag == (j <= k ? CaseTag::CaseI : CaseTag::CaseII));
            if (j > k) {
                REQUIRE(sumset(IntSet(fp.lower)) ==
                        sumset(IntSet(case2_Lj(j).elements)));
            }
        }
    }
}

TEST_CASE("minimum ambient sizes per case") {
    CHECK(minimum_n(0, 0) == 0);
    CHECK(minimum_n(1, 1) == 69);   // 4(12k+5)+1
    CHECK(minimum_n(0, 3) == 165);
    CHECK(minimum_n(2, 2) == 117);
    CHECK(minimum_n(2, 1) == 111);  // 2m_2+1
    CHECK(minimum_n(3, 1) == 363);
    CHECK(minimum_n(1, 0) == 363);  // 2m_3+1 via the k=0 variant
    CHECK(minimum_n(2, 0) == 1119);
}

TEST_CASE("fringe pair shapes") {
    FringePair zero = fringe_pair(0, 0);
    CHECK(zero.lower.empty());
    CHECK(zero.upper_offsets.empty());
    CHECK(zero.fringe_radius == 0);

    FringePair c1 = fringe_pair(1, 1);
    CHECK(c1.case_tag == CaseTag::CaseI);
    CHECK(c1.fringe_radius == 68);
    CHECK(c1.x_list.empty());
    for (int64_t x : c1.lower) CHECK(x <= c1.fringe_radius);
    for (int64_t o : c1.upper_offsets) CHECK(o <= c1.fringe_radius);

    FringePair c2 = fringe_pair(2, 1);
    CHECK(c2.case_tag == CaseTag::CaseII);
    CHECK(c2.fringe_radius == 2 * 55);
    CHECK(c2.x_list == std::vector<int64_t>{4, 18});

    // k = 0 builds from the depth-(j+2) recursion, so three x values at j=1.
    FringePair c0 = fringe_pair(1, 0);
    CHECK(c0.case_tag == CaseTag::CaseII);
    CHECK(c0.x_list == std::vector<int64_t>{4, 18, 60});
    CHECK(c0.fringe_radius == 2 * 181);
}

TEST_CASE("full fill hits every target up to (4,4) at minimum n") {
    for (int64_t j = 0; j <= 4; ++j) {
        for (int64_t k = 0; k <= 4; ++k) {
            DeficiencyTarget t{j, k, minimum_n(j, k)};
            IntSet a = assemble_Ajk(t, FillKind::Full);
            TargetCertificate cert = verify_target(a, t);
            CAPTURE(j);
            CAPTURE(k);
            CAPTURE(t.n);
            REQUIRE(cert.verified);
            REQUIRE(static_cast<int64_t>(cert.missing_sums.size()) == j);
            REQUIRE(static_cast<int64_t>(cert.missing_diffs.size()) == k);
        }
    }
}

TEST_CASE("frozen witnesses") {
    DeficiencyTarget t11{1, 1, 69};
    IntSet a11 = assemble_Ajk(t11, FillKind::Full);
    CHECK(a11 ==
          IntSet({0,  1,  3,  5,  8,  12, 13, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26,
                  27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45,
                  46, 47, 48, 49, 50, 51, 52, 53, 55, 56, 57, 60, 64, 65, 67, 68, 69}));
    TargetCertificate c11 = verify_target(a11, t11);
    CHECK(c11.verified);
    CHECK(c11.missing_sums == std::vector<int64_t>{7});
    CHECK(c11.missing_diffs == std::vector<int64_t>{58});
    SumDiffProfile p11 = profile(a11);
    CHECK(p11.sum_size == 138);
    CHECK(p11.diff_size == 137);

    DeficiencyTarget t21{2, 1, 111};
    TargetCertificate c21 = verify_target(assemble_Ajk(t21, FillKind::Full), t21);
    CHECK(c21.verified);
    CHECK(c21.missing_sums == std::vector<int64_t>{8, 36});
    CHECK(c21.missing_diffs == std::vector<int64_t>{103});

    DeficiencyTarget t22{2, 2, 117};
    TargetCertificate c22 = verify_target(assemble_Ajk(t22, FillKind::Full), t22);
    CHECK(c22.verified);
    CHECK(c22.missing_sums == std::vector<int64_t>{7, 19});
    CHECK(c22.missing_diffs == std::vector<int64_t>{94, 106});

    DeficiencyTarget t00{0, 0, 10};
    IntSet a00 = assemble_Ajk(t00, FillKind::Full);
    CHECK(a00 == IntSet({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
    CHECK(profile(a00).sum_size == 21);
    CHECK(profile(a00).diff_size == 21);

    DeficiencyTarget t10{1, 0, 363};
    TargetCertificate c10 = verify_target(assemble_Ajk(t10, FillKind::Full), t10);
    CHECK(c10.verified);
    CHECK(c10.missing_sums == std::vector<int64_t>{120});
    CHECK(c10.missing_diffs.empty());
}

TEST_CASE("sum-deficient targets miss exactly the doubled exceptional values") {
    for (int64_t j = 2; j <= 4; ++j) {
        for (int64_t k = 1; k < j; ++k) {
            const int64_t n = minimum_n(j, k);
            DeficiencyTarget t{j, k, n};
            TargetCertificate cert = verify_target(assemble_Ajk(t, FillKind::Full), t);
            CAPTURE(j);
            CAPTURE(k);
            REQUIRE(cert.verified);
            std::vector<int64_t> xs = case2_x_list(j);
            std::vector<int64_t> want_sums;
            for (int64_t x : xs) want_sums.push_back(2 * x);
            REQUIRE(cert.missing_sums == want_sums);

            std::vector<int64_t> want_diffs{n - 2 * xs[0]};
            for (int64_t u = j - k + 2; u <= j; ++u)
                want_diffs.push_back(n - 2 * xs[static_cast<size_t>(u - 1)]);
            std::sort(want_diffs.begin(), want_diffs.end());
            REQUIRE(cert.missing_diffs == want_diffs);
        }
    }
}

TEST_CASE("difference-deficient targets stay fringe-local") {
    for (int64_t k = 1; k <= 3; ++k) {
        for (int64_t j = 0; j <= k; ++j) {
            const int64_t m = 12 * k + 5;
            for (int64_t n : {minimum_n(j, k), minimum_n(j, k) + 13}) {
                DeficiencyTarget t{j, k, n};
                TargetCertificate cert = verify_target(assemble_Ajk(t, FillKind::Full), t);
                CAPTURE(j);
                CAPTURE(k);
                CAPTURE(n);
                REQUIRE(cert.verified);
                for (int64_t s : cert.missing_sums)
                    REQUIRE((s <= 4 * m || s >= 2 * n - 4 * m));
                for (int64_t d : cert.missing_diffs) {
                    REQUIRE(d >= n - 4 * m);
                    REQUIRE(d <= n);
                }
            }
        }
    }
}

TEST_CASE("verification certificates") {
    TargetCertificate c = verify_target(catalog("A_12"), DeficiencyTarget{0, 1, 17});
    CHECK(c.verified);
    CHECK(c.missing_sums.empty());
    CHECK(c.missing_diffs == std::vector<int64_t>{6});

    TargetCertificate full = verify_target(IntSet({0, 1, 2, 3, 4, 5}), DeficiencyTarget{0, 0, 5});
    CHECK(full.verified);

    // Mismatched targets still get an honest certificate.
    TargetCertificate wrong = verify_target(catalog("A_12"), DeficiencyTarget{3, 3, 17});
    CHECK_FALSE(wrong.verified);
    CHECK(wrong.missing_diffs == std::vector<int64_t>{6});

    CHECK_THROWS_AS(verify_target(catalog("A_12"), DeficiencyTarget{0, 1, 16}),
                    validation_error);
}

TEST_CASE("ambient size below the case minimum is rejected") {
    CHECK_THROWS_AS(assemble_Ajk(DeficiencyTarget{1, 1, 68}, FillKind::Full), validation_error);
    CHECK_THROWS_AS(assemble_Ajk(DeficiencyTarget{2, 1, 110}, FillKind::Full), validation_error);
    CHECK_THROWS_AS(assemble_Ajk(DeficiencyTarget{-1, 0, 50}, FillKind::Full), validation_error);
    CHECK_THROWS_AS(estimate_cjk(1, 1, 68, 10, 0), validation_error);
    CHECK_THROWS_AS(estimate_cjk(1, 1, 69, 0, 0), validation_error);
}

TEST_CASE("random fill and proportion estimates") {
    // At n = 80 the fringe cross-sums already cover the whole middle, so
    // every random fill verifies.
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        DeficiencyTarget t{1, 1, 80};
        IntSet a = assemble_Ajk(t, FillKind::Random, seed);
        CHECK(verify_target(a, t).verified);
    }
    EstimateResult e80 = estimate_cjk(1, 1, 80, 400, 9);
    CHECK(e80.point == 1.0);
    CHECK(e80.hits == 400);

    EstimateResult e150 = estimate_cjk(1, 1, 150, 300, 3);
    CHECK(e150.point > 0.0);

    EstimateResult e00 = estimate_cjk(0, 0, 30, 20000, 5);
    CHECK(e00.point > 0.005);
    CHECK(e00.point < 0.03);
    CHECK(e00.wilson_low > 0.0);
    CHECK(e00.wilson_low <= e00.point);
    CHECK(e00.point <= e00.wilson_high);
    CHECK(e00.wilson_high < 1.0);

    EstimateResult again = estimate_cjk(0, 0, 30, 20000, 5);
    CHECK(again.hits == e00.hits);
    CHECK(again.point == e00.point);
}
