/**
 * @file test_partitions.cpp
 * @brief Partition combinatorics: hooks, cores, Murnaghan-Nakayama, A_n
 *        restriction, and the S_n block model.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 *
 * Distributed under the MIT license; see LICENSE.
 */

#include <algorithm>
#include <map>
#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include "blockcheck/partitions.hpp"

using namespace blockcheck;

TEST_CASE("partition generation") {
    const i64 counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (i64 n = 0; n <= 12; ++n)
        REQUIRE(static_cast<i64>(partitions(n).size()) == counts[n]);

    const i64 strict_counts[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
    for (i64 n = 0; n <= 10; ++n)
        REQUIRE(static_cast<i64>(strict_partitions(n).size()) == strict_counts[n]);

    // descending lex order, all valid
    const auto all = partitions(8);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) REQUIRE(all[i + 1] < all[i]);
    for (const Partition &la : all) {
        REQUIRE(is_partition(la));
        REQUIRE(partition_sum(la) == 8);
    }
    for (const Partition &la : strict_partitions(9))
        REQUIRE(is_strict_partition(la));

    REQUIRE(normalized_partition({0, 3, 1, 2}) == Partition{3, 2, 1});
    REQUIRE_THROWS_AS(normalized_partition({2, -1}), Error);
}

TEST_CASE("conjugation") {
    REQUIRE(conjugate({4, 2, 1}) == Partition{3, 2, 1, 1});
    REQUIRE(conjugate({}) == Partition{});
    for (const Partition &la : partitions(9))
        REQUIRE(conjugate(conjugate(la)) == la);
    REQUIRE(is_self_conjugate({3, 1, 1}));
    REQUIRE(is_self_conjugate({2, 2}));
    REQUIRE_FALSE(is_self_conjugate({4, 1}));
}

TEST_CASE("hooks and degrees") {
    auto h = hook_lengths({4, 2, 1});
    std::sort(h.begin(), h.end());
    REQUIRE(h == std::vector<i64>{1, 1, 1, 2, 3, 4, 6});
    REQUIRE(degree({4, 2, 1}) == 35);
    REQUIRE(degree({3, 2}) == 5);
    REQUIRE(degree({2, 2, 1}) == 5);
    REQUIRE(degree({7}) == 1);
    REQUIRE(degree({1, 1, 1}) == 1);

    // sum of squared degrees is n!
    for (i64 n : {6, 10}) {
        i64 fact = 1, sumsq = 0;
        for (i64 i = 2; i <= n; ++i) fact *= i;
        for (const Partition &la : partitions(n)) {
            const i64 d = degree(la);
            sumsq += d * d;
            REQUIRE(degree(conjugate(la)) == d);
        }
        REQUIRE(sumsq == fact);
    }

    REQUIRE(factorial_valuation(10, 2) == 8);
    REQUIRE(factorial_valuation(10, 3) == 4);
    REQUIRE(degree_valuation({4, 2, 1}, 5) == 1); // 35 = 5 * 7
    REQUIRE_THROWS_AS(degree(Partition(60, 2)), BoundExceeded);
}

TEST_CASE("beta sets and p-cores") {
    REQUIRE(beta_set({3, 1}, 2) == std::vector<i64>{4, 1});
    REQUIRE(partition_from_beta(beta_set({5, 3, 3, 1}, 4)) ==
            Partition{5, 3, 3, 1});

    REQUIRE(p_core({3, 1}, 2) == Partition{});
    REQUIRE(p_weight({3, 1}, 2) == 2);
    REQUIRE(p_core({4, 2, 1}, 3) == Partition{1});
    REQUIRE(p_weight({4, 2, 1}, 3) == 2);

    for (const Partition &la : partitions(10))
        for (i64 p : {2, 3, 5, 7}) {
            const Partition core = p_core(la, p);
            REQUIRE(p_core(core, p) == core); // idempotent
            REQUIRE(partition_sum(core) + p * p_weight(la, p) == 10);
            // a core has no hook length divisible by p
            for (i64 hl : hook_lengths(core)) REQUIRE(hl % p != 0);
            // and la has at least w hooks divisible by p
            i64 divisible = 0;
            for (i64 hl : hook_lengths(la)) divisible += (hl % p == 0);
            REQUIRE(divisible >= p_weight(la, p));
        }
}

TEST_CASE("S_n blocks by p-core") {
    const auto blocks = sn_blocks(5, 2);
    REQUIRE(blocks.size() == 2);
    std::map<Partition, std::size_t> members;
    for (const SnBlock &b : blocks) {
        members[b.core] = b.members.size();
        for (const Partition &la : b.members) {
            REQUIRE(p_core(la, 2) == b.core);
            REQUIRE(p_weight(la, 2) == b.weight);
        }
    }
    REQUIRE(members.at(Partition{1}) == 5);
    REQUIRE(members.at(Partition{2, 1}) == 2);

    // blocks partition all of P(n)
    for (i64 p : {2, 3, 5}) {
        std::size_t total = 0;
        for (const SnBlock &b : sn_blocks(7, p)) total += b.members.size();
        REQUIRE(total == partitions(7).size());
    }
    REQUIRE_THROWS_AS(sn_blocks(5, 4), Error);
}

TEST_CASE("defect-group exponents of weight-w blocks") {
    REQUIRE(sn_defect_exponent(1, 2) == 2);
    REQUIRE(sn_defect_exponent(2, 2) == 4);
    REQUIRE(sn_defect_exponent(3, 2) == 4);
    REQUIRE(sn_defect_exponent(4, 2) == 8);
    REQUIRE(sn_defect_exponent(2, 3) == 3);
    REQUIRE(sn_defect_exponent(3, 3) == 9);
    REQUIRE(sn_defect_exponent(12, 3) == 27);
    REQUIRE_THROWS_AS(sn_defect_exponent(0, 2), ZeroWeight);
}

TEST_CASE("cycle-type utilities") {
    REQUIRE(cycle_type_order({6, 4, 3}) == 12);
    REQUIRE(power_cycle_type({6}, 2) == Partition{3, 3});
    REQUIRE(power_cycle_type({6, 1}, 3) == Partition{2, 2, 2, 1});
    REQUIRE(p_part_cycle_type({6, 2, 1}, 2) == Partition{2, 2, 2, 2, 1});
    REQUIRE(p_part_cycle_type({6, 2, 1}, 3) == Partition{3, 3, 1, 1, 1});
    REQUIRE(is_even_class({3, 1, 1}));
    REQUIRE_FALSE(is_even_class({2, 1, 1}));
    REQUIRE(is_split_class({5, 3, 1}));       // odd, distinct
    REQUIRE_FALSE(is_split_class({3, 3, 1})); // repeated part
    REQUIRE_FALSE(is_split_class({4, 3, 1})); // even part (odd class anyway)
}

TEST_CASE("Murnaghan-Nakayama agrees with the hand table of S5") {
    const std::vector<Partition> rows = {{5},       {4, 1},    {3, 2},
                                         {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1},
                                         {1, 1, 1, 1, 1}};
    const std::vector<Partition> cols = rows;
    const i64 expect[7][7] = {
        {1, 1, 1, 1, 1, 1, 1},    {-1, 0, -1, 1, 0, 2, 4},
        {0, -1, 1, -1, 1, 1, 5},  {1, 0, 0, 0, -2, 0, 6},
        {0, 1, -1, -1, 1, -1, 5}, {-1, 0, 1, 1, 0, -2, 4},
        {1, -1, -1, 1, 1, -1, 1}};
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            REQUIRE(mn_value(rows[i], cols[j]) == expect[i][j]);
}

TEST_CASE("Murnaghan-Nakayama structural properties") {
    // value at the identity class is the hook-length degree
    for (i64 n : {1, 4, 8, 11})
        for (const Partition &la : partitions(n))
            REQUIRE(mn_value(la, Partition(static_cast<std::size_t>(n), 1)) ==
                    degree(la));

    // trivial and sign rows
    for (const Partition &mu : partitions(7)) {
        REQUIRE(mn_value({7}, mu) == 1);
        const i64 sign = is_even_class(mu) ? 1 : -1;
        REQUIRE(mn_value({1, 1, 1, 1, 1, 1, 1}, mu) == sign);
        // conjugating the label twists by the sign character
        REQUIRE(mn_value({4, 2, 1}, mu) == sign * mn_value({3, 2, 1, 1}, mu));
    }

    // a cycle longer than every hook kills the character
    REQUIRE(mn_value({4, 2, 1}, {7}) == 0);

    // column orthogonality at (3,2,1) in S6: centralizer order 6
    i64 dot = 0;
    for (const Partition &la : partitions(6)) {
        const i64 v = mn_value(la, {3, 2, 1});
        dot += v * v;
    }
    REQUIRE(dot == 6);

    REQUIRE_THROWS_AS(mn_value({3, 1}, {5}), Error); // size mismatch
}

TEST_CASE("A_n restriction fragment") {
    const AnTableFragment F = an_character_data(5);
    REQUIRE(F.n == 5);

    // degrees: conjugate pairs restrict once, self-conjugates split in half
    std::vector<i64> degs;
    i64 sumsq = 0;
    for (const AnRow &r : F.rows) {
        degs.push_back(r.degree);
        sumsq += r.degree * r.degree * (r.split_pair ? 2 : 1);
    }
    std::sort(degs.begin(), degs.end());
    REQUIRE(degs == std::vector<i64>{1, 3, 4, 5});
    REQUIRE(sumsq == 60);

    // the split row is (3,1,1) with half degree 3
    for (const AnRow &r : F.rows)
        REQUIRE(r.split_pair == (r.label == Partition{3, 1, 1}));

    // classes: only even cycle types, split flags on odd-distinct types
    for (const AnClass &c : F.classes) {
        REQUIRE(is_even_class(c.cycle_type));
        REQUIRE(c.splits == is_split_class(c.cycle_type));
        REQUIRE(c.order == cycle_type_order(c.cycle_type));
    }

    // values: non-split rows restrict verbatim
    for (const AnRow &r : F.rows) {
        if (r.split_pair) continue;
        const Partition &la =
            r.label < conjugate(r.label) ? conjugate(r.label) : r.label;
        for (std::size_t k = 0; k < F.classes.size(); ++k) {
            REQUIRE(r.known[k] == 1);
            REQUIRE(r.values[k] == mn_value(la, F.classes[k].cycle_type));
        }
    }
}

TEST_CASE("an_value semantics") {
    REQUIRE(an_value({4, 1}, {3, 1, 1}) == mn_value({4, 1}, {3, 1, 1}));
    REQUIRE(an_value({3, 1, 1}, {2, 2, 1}) ==
            mn_value({3, 1, 1}, {2, 2, 1}) / 2);
    REQUIRE_THROWS_AS(an_value({3, 1, 1}, {5}), SplitClassUnsupported);
    REQUIRE_THROWS_AS(an_value({4, 1}, {2, 1, 1, 1}), Error); // odd class
}

TEST_CASE("A6 and A7 fragments have consistent degree sums") {
    for (i64 n : {6, 7}) {
        const AnTableFragment F = an_character_data(n);
        i64 fact = 1, sumsq = 0;
        for (i64 i = 2; i <= n; ++i) fact *= i;
        for (const AnRow &r : F.rows)
            sumsq += r.degree * r.degree * (r.split_pair ? 2 : 1);
        REQUIRE(sumsq == fact / 2);
    }
}

TEST_CASE("the S_n dagger chain verifies for small n and primes") {
    for (i64 n : {4, 9, 10})
        for (i64 p : {2, 3, 5, 7}) {
            const CheckReport r = verify_sn_dagger(n, p);
            REQUIRE(r.check == "sn-dagger");
            REQUIRE(r.status() == "PASS");
        }
}

TEST_CASE("the A10 vanishing phenomenon is reproduced") {
    const CheckReport r = verify_a10_phenomenon();
    REQUIRE(r.check == "a10");
    REQUIRE(r.group == "A10");
    REQUIRE(r.prime == 2);
    REQUIRE(r.status() == "PASS");
    REQUIRE(r.violations.empty());

    // the pinned witness, recomputed directly
    REQUIRE(degree({7, 1, 1, 1}) == 84);
    REQUIRE(mn_value({7, 1, 1, 1}, {3, 3, 2, 2}) == 3);
    REQUIRE(mn_value({7, 1, 1, 1}, {2, 2, 1, 1, 1, 1, 1, 1}) == 0);
    REQUIRE(cycle_type_order({3, 3, 2, 2}) == 6);
}
