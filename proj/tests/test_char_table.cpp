/**
 * @file test_char_table.cpp
 * @brief Dixon-Schneider character tables checked against known values.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 *
 * Distributed under the MIT license; see LICENSE.
 */

#include <algorithm>
#include <map>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "blockcheck/table.hpp"
#include "test_support.hpp"

using namespace blockcheck;
using namespace testsupport;

namespace {

std::vector<i64> degrees_of(const CharacterTable &T) {
    std::vector<i64> d;
    for (const CharRow &r : T.rows) d.push_back(r.degree);
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST_CASE("dixon primes") {
    // p = 1 (mod exponent) and p^2 > 4|G|
    REQUIRE(dixon_prime(12, 120) == 37);
    REQUIRE(dixon_prime(420, 5040) == 421);
    REQUIRE(dixon_prime(2448, 4896) == 12241);
    // the retry parameter moves to the next admissible prime
    const i64 first = dixon_prime(12, 120);
    const i64 second = dixon_prime(12, 120, first);
    REQUIRE(second > first);
    REQUIRE((second - 1) % 12 == 0);
}

TEST_CASE("degree multisets of small groups") {
    REQUIRE(degrees_of(character_table(symmetric_group(4))) ==
            std::vector<i64>{1, 1, 2, 3, 3});
    REQUIRE(degrees_of(character_table(symmetric_group(5))) ==
            std::vector<i64>{1, 1, 4, 4, 5, 5, 6});
    REQUIRE(degrees_of(character_table(gl2_3_group())) ==
            std::vector<i64>{1, 1, 2, 2, 2, 3, 3, 4});
    REQUIRE(degrees_of(character_table(sl2_group(5))) ==
            std::vector<i64>{1, 2, 2, 3, 3, 4, 4, 5, 6});
    REQUIRE(degrees_of(character_table(alternating_group(5))) ==
            std::vector<i64>{1, 3, 3, 4, 5});
    REQUIRE(degrees_of(character_table(quaternion_group())) ==
            std::vector<i64>{1, 1, 1, 1, 2});
}

TEST_CASE("table invariants on S5") {
    const FiniteGroup G = symmetric_group(5);
    const CharacterTable T = character_table(G);
    REQUIRE(T.order == 120);
    REQUIRE(T.exponent == 60);
    REQUIRE(T.class_count() == 7);
    verify_orthogonality(T);

    i64 sumsq = 0;
    for (const CharRow &r : T.rows) sumsq += r.degree * r.degree;
    REQUIRE(sumsq == T.order);

    SECTION("stored values sit at conductor = class order") {
        for (const CharRow &r : T.rows)
            for (std::size_t k = 0; k < T.class_count(); ++k)
                REQUIRE(r.values[k].conductor() == T.classes[k].order);
    }

    SECTION("value at the inverse class is the complex conjugate") {
        for (const CharRow &r : T.rows)
            for (std::size_t k = 0; k < T.class_count(); ++k)
                REQUIRE(r.values[T.inverse_class(k)] == r.values[k].conj());
    }

    SECTION("hand-checked values, classes matched by element order and size") {
        // (order, size) is unambiguous for S5
        std::map<std::pair<i64, i64>, std::size_t> by_shape;
        for (std::size_t k = 0; k < T.class_count(); ++k)
            by_shape[{T.classes[k].order, T.classes[k].size}] = k;
        const std::size_t transposition = by_shape.at({2, 10});
        const std::size_t double_transposition = by_shape.at({2, 15});
        const std::size_t five_cycle = by_shape.at({5, 24});
        for (const CharRow &r : T.rows) {
            if (r.degree == 6) {
                REQUIRE(r.values[transposition].is_zero());
                REQUIRE(r.values[double_transposition].integer_value() == -2);
                REQUIRE(r.values[five_cycle].integer_value() == 1);
            }
            if (r.degree == 5)
                REQUIRE(r.values[five_cycle].integer_value() == 0);
            if (r.degree == 4)
                REQUIRE(r.values[five_cycle].integer_value() == -1);
        }
    }
}

TEST_CASE("central classes carry values of full degree") {
    const CharacterTable T = character_table(sl2_group(5));
    // -I is the unique class of order 2 and size 1
    std::size_t zk = T.class_count();
    for (std::size_t k = 0; k < T.class_count(); ++k)
        if (T.classes[k].order == 2 && T.classes[k].size == 1) zk = k;
    REQUIRE(zk < T.class_count());
    for (const CharRow &r : T.rows) {
        const Cyclo v = r.values[zk];
        REQUIRE(v.is_integer());
        REQUIRE((v.integer_value() == r.degree || v.integer_value() == -r.degree));
    }
}

TEST_CASE("central characters of the trivial row are the class sizes") {
    const CharacterTable T = character_table(symmetric_group(4));
    std::size_t triv = T.rows.size();
    for (std::size_t s = 0; s < T.rows.size(); ++s) {
        if (T.rows[s].degree != 1) continue;
        bool all_one = true;
        for (const Cyclo &v : T.rows[s].values)
            all_one = all_one && v.is_integer() && v.integer_value() == 1;
        if (all_one) triv = s;
    }
    REQUIRE(triv < T.rows.size());
    const auto omega = central_character(T, triv);
    for (std::size_t k = 0; k < T.class_count(); ++k) {
        REQUIRE(omega[k].is_integer());
        REQUIRE(omega[k].integer_value() == T.classes[k].size);
    }
}

TEST_CASE("second orthogonality on a picked column") {
    const CharacterTable T = character_table(symmetric_group(6));
    // column of the transpositions: centralizer order 2 * 4! = 48
    std::size_t k2 = T.class_count();
    for (std::size_t k = 0; k < T.class_count(); ++k)
        if (T.classes[k].order == 2 && T.classes[k].size == 15) k2 = k;
    REQUIRE(k2 < T.class_count());
    Cyclo sum;
    for (const CharRow &r : T.rows)
        sum = sum + r.values[k2] * r.values[k2].conj();
    REQUIRE(sum.is_integer());
    REQUIRE(sum.integer_value() == T.order / T.classes[k2].size);
}

TEST_CASE("class multiplication coefficients are consistent") {
    const FiniteGroup G = symmetric_group(4);
    const CharacterTable T = character_table(G);
    const auto a = class_mult_coeffs(G);
    // sum_k a[i][j][k] |K_k| = |K_i| |K_j|
    const std::size_t n = T.class_count();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            i64 total = 0;
            for (std::size_t k = 0; k < n; ++k)
                total += a[i][j][k] * T.classes[k].size;
            REQUIRE(total == T.classes[i].size * T.classes[j].size);
        }
}
