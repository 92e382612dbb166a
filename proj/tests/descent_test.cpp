#include <doctest.h>

#include <stdexcept>

#include "terai/descent.hpp"

using namespace terai;

TEST_CASE("legs recovered from the known solutions") {
    Instance i52 = make_instance(5, 2);
    Legs legs = legs_from_solution(i52, 20, 1, 1);
    CHECK(legs.u == 5);
    CHECK(legs.v == 2);

    Instance i61 = make_instance(6, 1);
    legs = legs_from_solution(i61, 12, 1, 1);
    CHECK(legs.u == 6);
    CHECK(legs.v == 1);

    CHECK_THROWS_AS(legs_from_solution(i52, 20, 1, 3), std::invalid_argument);
}

TEST_CASE("case checks on the worked values") {
    Instance i52 = make_instance(5, 2);
    Instance i61 = make_instance(6, 1);

    CHECK(!case_a_check(i52, 1, 1));  // 58 != 442
    CHECK(!case_a_check(i61, 1, 1));  // 74 != 1226
    CHECK(!case_a_check(i52, 3, 3));

    CHECK(case_b_check(i52, 1, 1));   // 49 + 9 = 58
    CHECK(case_b_check(i61, 1, 1));   // 49 + 25 = 74
    CHECK(!case_b_check(i52, 3, 3));  // 118378 != 48778

    CHECK_THROWS_AS(case_a_check(i52, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(case_b_check(i52, 1, 4), std::invalid_argument);
}

TEST_CASE("case grid holds only the origin") {
    Instance i52 = make_instance(5, 2);
    auto rows = scan_cases(i52, 5, 5);
    REQUIRE(rows.size() == 9);
    for (const CaseScanRow& row : rows) {
        CHECK(!row.case_a_holds);
        CHECK(row.case_b_holds == (row.r == 1 && row.k == 1));
    }

    // lexicographic over odd cells: (1,1), (1,3), (1,5), (3,1), ...
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].r == 2 * (i / 3) + 1);
        CHECK(rows[i].k == 2 * (i % 3) + 1);
    }

    auto single = scan_cases(i52, 1, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].r == 1);
    CHECK(single[0].k == 1);
    CHECK(!single[0].case_a_holds);
    CHECK(single[0].case_b_holds);

    for (const Instance& inst : scan_instances(15))
        for (const CaseScanRow& row : scan_cases(inst, 9, 9)) {
            REQUIRE(!row.case_a_holds);
            REQUIRE(row.case_b_holds == (row.r == 1 && row.k == 1));
        }
}

TEST_CASE("divisibility filter keeps the matching decomposition only") {
    Instance i52 = make_instance(5, 2);
    auto match = divisibility_filter(i52, TwoSquares{5, 2, 29}, 1, 1);
    REQUIRE(match);
    CHECK(match->epsilon == 1);
    CHECK(match->t1 == 1);
    CHECK(match->t2 == 1);

    Instance i92 = make_instance(9, 2);
    CHECK(divisibility_filter(i92, TwoSquares{9, 2, 85}, 1, 1));
    CHECK(!divisibility_filter(i92, TwoSquares{7, 6, 85}, 1, 1));  // 13 is no power of 11

    Instance i61 = make_instance(6, 1);
    auto m61 = divisibility_filter(i61, TwoSquares{1, 6, 37}, 1, 1);
    REQUIRE(m61);
    CHECK(m61->epsilon == 1);
    CHECK(m61->t1 == 1);  // 1 + 6 = 7 = p
    CHECK(m61->t2 == 1);  // |1 - 6| = 5 = q

    // k = 3 mod 4 swaps the orientation
    auto swapped = divisibility_filter(i52, TwoSquares{5, 2, 29}, 1, 3);
    CHECK(!swapped);  // |5 - 2| = 3 is no power of p = 7

    CHECK_THROWS_AS(divisibility_filter(i52, TwoSquares{1, 2, 5}, 1, 1), std::invalid_argument);
}

TEST_CASE("alternating power sum congruence") {
    Instance i52 = make_instance(5, 2);
    TwoSquares dec52{5, 2, 29};

    auto k1 = a_sum_congruence(i52, dec52, 1);
    CHECK(k1.a_sum == 1);
    CHECK(k1.a_mod_b == 1);
    CHECK(k1.rhs_mod_b == 1);
    CHECK(k1.match_up_to_sign);
    CHECK(k1.sign == 1);

    auto k3 = a_sum_congruence(i52, dec52, 3);
    CHECK(k3.a_sum == -759);
    CHECK(k3.a_mod_b == 18);   // -759 = 18 mod 21
    CHECK(k3.rhs_mod_b == 3);  // 1200 = 3 mod 21
    CHECK(k3.match_up_to_sign);
    CHECK(k3.sign == -1);      // k = 3 mod 4 flips the sign

    Instance i61 = make_instance(6, 1);
    auto k5 = a_sum_congruence(i61, TwoSquares{1, 6, 37}, 5);
    CHECK(k5.a_sum == -159695);
    CHECK(k5.a_mod_b == 10);
    CHECK(k5.rhs_mod_b == 10);  // 5 * 2^4 * 6^4 = 103680 = 10 mod 35
    CHECK(k5.match_up_to_sign);
    CHECK(k5.sign == 1);        // k = 1 mod 4 keeps it

    CHECK_THROWS_AS(a_sum_congruence(i52, dec52, 2), std::invalid_argument);
}

TEST_CASE("power sum matches for every filter survivor up to m = 20") {
    for (const Instance& inst : scan_instances(20)) {
        for (const TwoSquares& dec : two_square_decompositions(inst.c)) {
            if (!divisibility_filter(inst, dec, 1, 1)) continue;
            for (unsigned long k : {1, 3, 5, 7}) {
                auto sum = a_sum_congruence(inst, dec, k);
                REQUIRE(sum.match_up_to_sign);
                // exact divisibility of A -+ rhs against the raw A
                Int diff_plus = sum.a_sum - sum.rhs_mod_b;
                Int diff_minus = sum.a_sum + sum.rhs_mod_b;
                REQUIRE((mpz_divisible_p(diff_plus.get_mpz_t(), inst.b.get_mpz_t()) ||
                         mpz_divisible_p(diff_minus.get_mpz_t(), inst.b.get_mpz_t())));
                // sign follows k mod 4
                REQUIRE(sum.sign == (k % 4 == 1 ? 1 : -1));
            }
        }
    }
}

TEST_CASE("endgame classification of (r, k) cells") {
    Instance i52 = make_instance(5, 2);

    auto base = k_divisibility_conclusion(i52, 1, 1);
    CHECK(base.branch == KDivisibilityVerdict::Branch::BaseCase);

    auto contra = k_divisibility_conclusion(i52, 3, 3);
    CHECK(contra.branch == KDivisibilityVerdict::Branch::Contradiction);
    CHECK(contra.description == "contradiction: 21 does not divide k = 3");

    auto oracle = k_divisibility_conclusion(i52, 3, 21);
    CHECK(oracle.branch == KDivisibilityVerdict::Branch::OracleBranch);
    REQUIRE(oracle.a_prime);
    CHECK(*oracle.a_prime == 1);
    CHECK(oracle.description.find("oracle branch") == 0);
}

TEST_CASE("descent replay of the known solutions") {
    Instance i52 = make_instance(5, 2);
    DescentTrace trace = descent_trace(i52, 20, 2, 2);
    CHECK(trace.theorem_consistent());
    CHECK(trace.case_tag == CaseTag::B);
    REQUIRE(trace.decomposition);
    CHECK(trace.decomposition->g == 5);
    CHECK(trace.decomposition->h == 2);
    CHECK(trace.t1 == 1);
    CHECK(trace.t2 == 1);
    CHECK(trace.epsilon == 1);
    CHECK(trace.legs.u == 5);
    CHECK(trace.legs.v == 2);

    Instance i61 = make_instance(6, 1);
    trace = descent_trace(i61, 12, 2, 2);
    CHECK(trace.theorem_consistent());
    REQUIRE(trace.decomposition);
    CHECK(trace.decomposition->g == 1);
    CHECK(trace.decomposition->h == 6);

    Instance i92 = make_instance(9, 2);
    trace = descent_trace(i92, 36, 2, 2);
    CHECK(trace.theorem_consistent());
    REQUIRE(trace.decomposition);
    CHECK(trace.decomposition->g == 9);  // (7, 6) filtered out
    CHECK(trace.decomposition->h == 2);
    CHECK(trace.surviving_decompositions == 1);
}

TEST_CASE("descent replay across the scan window") {
    for (const Instance& inst : scan_instances(15)) {
        DescentTrace trace = descent_trace(inst, inst.a, 2, 2);
        REQUIRE(trace.theorem_consistent());
        REQUIRE(trace.t1 == 1);
        REQUIRE(trace.t2 == 1);
        REQUIRE(trace.decomposition);
        REQUIRE(trace.decomposition->g * trace.decomposition->h == inst.m * inst.n);
        for (const IdentityCheck& check : trace.identity_checks) REQUIRE(check.passed);
    }
}

TEST_CASE("descent replay at large scale") {
    // c = 1262101 is prime past the exhaustive threshold
    Instance prime_c = make_instance(1001, 510);
    REQUIRE(check_hypotheses(prime_c).qualifies);
    DescentTrace trace = descent_trace(prime_c, prime_c.a, 2, 2);
    CHECK(trace.theorem_consistent());
    REQUIRE(trace.decomposition);
    CHECK(trace.decomposition->g * trace.decomposition->h == prime_c.m * prime_c.n);

    // c = 1002325 = 5^2 * 40093 is composite past the threshold with two
    // representations; the filter must still isolate (1001, 18)
    Instance composite_c = make_instance(1001, 18);
    REQUIRE(check_hypotheses(composite_c).qualifies);
    trace = descent_trace(composite_c, composite_c.a, 2, 2);
    CHECK(trace.theorem_consistent());
    CHECK(trace.surviving_decompositions == 1);
    REQUIRE(trace.decomposition);
    CHECK(trace.decomposition->g == 1001);
    CHECK(trace.decomposition->h == 18);
}

TEST_CASE("descent replay rejects malformed input") {
    Instance i52 = make_instance(5, 2);
    CHECK_THROWS_AS(descent_trace(i52, 20, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(descent_trace(i52, 21, 2, 2), std::invalid_argument);
}
