/**
 * @file test_blocks.cpp
 * @brief p-block decompositions and the block-theoretic checks.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 *
 * Distributed under the MIT license; see LICENSE.
 */

#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "blockcheck/blocks.hpp"
#include "test_support.hpp"

using namespace blockcheck;
using namespace testsupport;

namespace {

std::vector<i64> block_degrees(const CharacterTable &T, const Block &B) {
    std::vector<i64> d;
    for (std::size_t s : B.chars) d.push_back(T.rows[s].degree);
    std::sort(d.begin(), d.end());
    return d;
}

/// Sorted degree multisets of all blocks, for order-independent comparison.
std::vector<std::vector<i64>> decomposition_shape(const CharacterTable &T,
                                                  const BlockDecomposition &D) {
    std::vector<std::vector<i64>> shape;
    for (const Block &B : D.blocks) shape.push_back(block_degrees(T, B));
    std::sort(shape.begin(), shape.end());
    return shape;
}

void check_partition_invariants(const FiniteGroup &G, const CharacterTable &T,
                                const BlockDecomposition &D) {
    // every character in exactly one block, block_of consistent
    std::vector<int> seen(T.rows.size(), 0);
    for (std::size_t b = 0; b < D.blocks.size(); ++b)
        for (std::size_t s : D.blocks[b].chars) {
            seen[s] += 1;
            REQUIRE(D.block_of[s] == b);
        }
    REQUIRE(std::count(seen.begin(), seen.end(), 1) ==
            static_cast<long>(T.rows.size()));

    const std::size_t id_class = 0; // class 0 is the identity by construction
    REQUIRE(T.classes[id_class].size == 1);
    for (const Block &B : D.blocks) {
        // defect is the maximum character defect in the block
        i64 maxdef = 0;
        for (std::size_t s : B.chars)
            maxdef = std::max(maxdef, char_defect(T, s, D.p));
        REQUIRE(B.defect == maxdef);
        // the defect-group exponent obeys exp(D) <= p^defect
        REQUIRE(B.exponent <= ipow(D.p, B.defect));
        REQUIRE(B.exponent_mod_center <= B.exponent);
        REQUIRE(B.exponent % B.exponent_mod_center == 0);
        // geoff classes consist of p-elements
        for (std::size_t k : B.geoff)
            REQUIRE(p_part_int(T.classes[k].order, D.p) == T.classes[k].order);
        // weight-0 blocks have trivial geoff set, positive defect more
        if (B.defect == 0) {
            REQUIRE(B.geoff.size() == 1);
            REQUIRE(B.exponent == 1);
        }
    }
    // the principal block contains the trivial character
    const Block &B0 = D.blocks[D.principal_index];
    REQUIRE(B0.principal);
    bool found_trivial = false;
    for (std::size_t s : B0.chars) {
        bool all_one = true;
        for (const Cyclo &v : T.rows[s].values)
            all_one = all_one && v.is_integer() && v.integer_value() == 1;
        found_trivial = found_trivial || all_one;
    }
    REQUIRE(found_trivial);
    (void)G;
}

} // namespace

TEST_CASE("GL2(3) at p = 2: one block of defect 4, exponent 8") {
    const FiniteGroup G = gl2_3_group();
    const CharacterTable T = character_table(G);
    const BlockDecomposition D = block_partition(G, T, 2);
    check_partition_invariants(G, T, D);
    REQUIRE(D.blocks.size() == 1);
    REQUIRE(D.blocks[0].defect == 4);
    REQUIRE(D.blocks[0].exponent == 8);
    REQUIRE(D.blocks[0].exponent_mod_center == 4);

    const CheckReport dag = check_dagger(G, T, 2);
    REQUIRE(dag.status() == "FAIL");
    REQUIRE(dag.violations.size() == 1);
    REQUIRE(dag.violations[0].character_degree == 4);
    REQUIRE(dag.violations[0].character_defect == 2);
    REQUIRE(dag.violations[0].lhs == 8);
    REQUIRE(dag.violations[0].rhs == 4);

    const CheckReport ds = check_dagger_star(G, T, 2);
    REQUIRE(ds.status() == "FAIL");
    REQUIRE(ds.violations[0].lhs == 4);
    REQUIRE(ds.violations[0].rhs == 2);
}

TEST_CASE("SL2(17) at p = 2: principal defect 5 plus four defect-1 blocks") {
    const FiniteGroup G = sl2_group(17);
    const CharacterTable T = character_table(G);
    const BlockDecomposition D = block_partition(G, T, 2);
    check_partition_invariants(G, T, D);
    REQUIRE(D.blocks.size() == 5);
    const Block &B0 = D.blocks[D.principal_index];
    REQUIRE(B0.defect == 5);
    REQUIRE(B0.exponent == 16);
    REQUIRE(B0.exponent_mod_center == 8);
    std::size_t defect1 = 0;
    for (const Block &B : D.blocks)
        if (B.defect == 1) {
            ++defect1;
            REQUIRE(block_degrees(T, B) == std::vector<i64>{16, 16});
            REQUIRE(B.exponent == 2);
        }
    REQUIRE(defect1 == 4);

    const CheckReport dag = check_dagger(G, T, 2);
    REQUIRE(dag.status() == "FAIL");
    REQUIRE(dag.violations.size() == 2);
    for (const Violation &v : dag.violations) {
        REQUIRE(v.character_degree == 8);
        REQUIRE(v.character_defect == 2);
        REQUIRE(v.block_defect == 5);
        REQUIRE(v.lhs == 16);
        REQUIRE(v.rhs == 4);
    }
}

TEST_CASE("SL2(9) at p = 3: two defect-2 blocks and the Steinberg block") {
    const FiniteGroup G = sl2_9_group();
    const CharacterTable T = character_table(G);
    const BlockDecomposition D = block_partition(G, T, 3);
    check_partition_invariants(G, T, D);
    REQUIRE(decomposition_shape(T, D) ==
            std::vector<std::vector<i64>>{
                {1, 5, 5, 8, 8, 10}, {4, 4, 8, 8, 10, 10}, {9}});
    for (const Block &B : D.blocks) {
        if (B.chars.size() == 1) REQUIRE(B.defect == 0);
        else REQUIRE(B.defect == 2);
    }

    SECTION("the partition does not depend on the chosen ideal factor") {
        const BlockDecomposition D1 = block_partition(G, T, 3, 1);
        REQUIRE(D1.block_of == D.block_of);
    }
}

TEST_CASE("S5 at p = 2: principal block {1,1,5,5,6} and a defect-1 pair") {
    const FiniteGroup G = symmetric_group(5);
    const CharacterTable T = character_table(G);
    const BlockDecomposition D = block_partition(G, T, 2);
    check_partition_invariants(G, T, D);
    REQUIRE(decomposition_shape(T, D) ==
            std::vector<std::vector<i64>>{{1, 1, 5, 5, 6}, {4, 4}});
    const Block &B0 = D.blocks[D.principal_index];
    REQUIRE(B0.defect == 3);
    REQUIRE(B0.exponent == 4);
    REQUIRE(check_dagger(G, T, 2).status() == "PASS");
}

TEST_CASE("coprime primes give singleton defect-0 blocks") {
    GroupContext ctx = perm_ctx(3);
    FiniteGroup G(ctx, {perm(3, {{1, 2}}), perm(3, {{1, 2, 3}})});
    G.set_name("S3");
    const CharacterTable T = character_table(G);
    const BlockDecomposition D = block_partition(G, T, 5);
    REQUIRE(D.blocks.size() == T.rows.size());
    for (const Block &B : D.blocks) {
        REQUIRE(B.chars.size() == 1);
        REQUIRE(B.defect == 0);
    }
}

TEST_CASE("partition invariants across groups and primes") {
    const FiniteGroup Q = quaternion_group();
    const CharacterTable TQ = character_table(Q);
    check_partition_invariants(Q, TQ, block_partition(Q, TQ, 2));

    const FiniteGroup A = alternating_group(5);
    const CharacterTable TA = character_table(A);
    for (i64 p : {2, 3, 5})
        check_partition_invariants(A, TA, block_partition(A, TA, p));

    const FiniteGroup S = symmetric_group(6);
    const CharacterTable TS = character_table(S);
    for (i64 p : {2, 3, 5})
        check_partition_invariants(S, TS, block_partition(S, TS, p));
}

TEST_CASE("wilde divisibility holds on the tested corpus") {
    for (const FiniteGroup &G :
         {symmetric_group(5), gl2_3_group(), sl2_group(5), a5_times_c2_group()}) {
        const CheckReport r = check_wilde(character_table(G));
        REQUIRE(r.status() == "PASS");
        REQUIRE(r.check == "wilde");
    }
}

TEST_CASE("brauer-nesbitt: defect-0 characters vanish off p-regular classes") {
    const FiniteGroup G = symmetric_group(4);
    const CharacterTable T = character_table(G);
    REQUIRE(check_brauer_nesbitt(T, 2).status() == "PASS");
    REQUIRE(check_brauer_nesbitt(T, 3).status() == "PASS");
    const CharacterTable T17 = character_table(sl2_group(17));
    REQUIRE(check_brauer_nesbitt(T17, 2).status() == "PASS");
    REQUIRE(check_brauer_nesbitt(T17, 3).status() == "PASS");
    REQUIRE(check_brauer_nesbitt(T17, 17).status() == "PASS");
}

TEST_CASE("condition (*) applicability and verdicts") {
    const FiniteGroup S5 = symmetric_group(5);
    const CheckReport ok = check_condition_star(S5, character_table(S5));
    REQUIRE(ok.applicable);
    REQUIRE(ok.status() == "PASS");

    const FiniteGroup SL29 = sl2_9_group();
    REQUIRE(check_condition_star(SL29, character_table(SL29)).status() == "PASS");

    const FiniteGroup GL23 = gl2_3_group();
    const CheckReport na = check_condition_star(GL23, character_table(GL23));
    REQUIRE_FALSE(na.applicable);
    REQUIRE(na.status() == "NA");
    REQUIRE(na.reason == "derived subgroup is not quasi-simple");

    const FiniteGroup AX = a5_times_c2_group();
    const CheckReport na2 = check_condition_star(AX, character_table(AX));
    REQUIRE(na2.status() == "NA");
    REQUIRE(na2.reason == "Z(L) differs from Z(H)");
}
