/**
 * @file test_cyclotomic.cpp
 * @brief Exact arithmetic in Z[zeta_e] on the power basis mod Phi_e.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 *
 * Distributed under the MIT license; see LICENSE.
 */

#include <catch2/catch_amalgamated.hpp>

#include "blockcheck/cyclotomic.hpp"

using namespace blockcheck;

TEST_CASE("integers embed at conductor 1") {
    const Cyclo five(5);
    REQUIRE(five.is_integer());
    REQUIRE(five.integer_value() == 5);
    REQUIRE(Cyclo().is_zero());
    REQUIRE_FALSE(five.is_zero());
}

TEST_CASE("full root-of-unity sums vanish") {
    for (i64 e : {2, 3, 4, 5, 6, 12, 30}) {
        Cyclo s;
        for (i64 k = 0; k < e; ++k)
            s = s.lifted(e) + Cyclo::root_power(e, k);
        REQUIRE(s.is_zero());
    }
}

TEST_CASE("power-basis reduction: zeta_3^2 = -1 - zeta_3") {
    const Cyclo z = Cyclo::root_power(3, 1);
    REQUIRE(z * z == -(Cyclo(1).lifted(3) + z));
    REQUIRE(z * z == Cyclo::root_power(3, 2));
}

TEST_CASE("(1 + i)(1 - i) = 2") {
    const Cyclo one = Cyclo(1).lifted(4);
    const Cyclo i = Cyclo::root_power(4, 1);
    const Cyclo prod = (one + i) * (one - i);
    REQUIRE(prod.is_integer());
    REQUIRE(prod.integer_value() == 2);
}

TEST_CASE("golden-ratio sums satisfy x^2 + x - 1 = 0") {
    const Cyclo x = Cyclo::root_power(5, 1) + Cyclo::root_power(5, 4);
    const Cyclo lhs = x * x + x - Cyclo(1).lifted(5);
    REQUIRE(lhs.is_zero());
}

TEST_CASE("lifting preserves values and enables cross-conductor sums") {
    const Cyclo z6 = Cyclo::root_power(6, 1);
    const Cyclo lifted = z6.lifted(12);
    REQUIRE(lifted.conductor() == 12);
    REQUIRE(lifted == Cyclo::root_power(12, 2));

    // zeta_3 + zeta_2 at the common conductor 6
    Cyclo s = Cyclo::root_power(3, 1).lifted(6);
    s.add_scaled(Cyclo::root_power(2, 1), 1);
    REQUIRE(s == Cyclo::root_power(6, 2) + Cyclo::root_power(6, 3));
}

TEST_CASE("add_scaled accumulates with an integer weight") {
    Cyclo acc = Cyclo::root_power(7, 2);
    acc.add_scaled(Cyclo::root_power(7, 2), 2);
    REQUIRE(acc == Cyclo::root_power(7, 2) * 3);
}

TEST_CASE("galois conjugation permutes roots and fixes rational values") {
    const Cyclo z = Cyclo::root_power(5, 1);
    REQUIRE(z.galois(2) == Cyclo::root_power(5, 2));
    REQUIRE(z.galois(4) == z.conj());

    Cyclo tr;
    for (i64 k = 1; k <= 4; ++k)
        tr = tr.lifted(5) + Cyclo::root_power(5, k);
    REQUIRE(tr.galois(3) == tr);
    REQUIRE(tr.is_integer());
    REQUIRE(tr.integer_value() == -1);
}

TEST_CASE("norm against the complex conjugate is conjugation-stable") {
    const Cyclo a = Cyclo::root_power(8, 1) + Cyclo::root_power(8, 3) * 2;
    const Cyclo norm = a * a.conj();
    REQUIRE(norm.conj() == norm);
}

TEST_CASE("exact division by an integer") {
    const Cyclo a = Cyclo::root_power(7, 2) + Cyclo::root_power(7, 5);
    REQUIRE((a * 3).divided_by(3) == a);
    REQUIRE_THROWS_AS(a.divided_by(2), NonIntegral);
}

TEST_CASE("string form is stable") {
    const Cyclo a = Cyclo::root_power(4, 1) - Cyclo(2).lifted(4);
    REQUIRE(a.str() == "-2+z4");
    REQUIRE(Cyclo(7).str() == "7");
    REQUIRE((Cyclo::root_power(5, 2) * 3).str() == "3*z5^2");
}
