/**
 * @file test_smallfield.cpp
 * @brief Finite fields with at most 256 elements.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 *
 * Distributed under the MIT license; see LICENSE.
 */

#include <catch2/catch_amalgamated.hpp>

#include "blockcheck/smallfield.hpp"

using namespace blockcheck;

namespace {

void check_axioms(const SmallField &F) {
    const int q = static_cast<int>(F.size());
    for (int a = 0; a < q; ++a) {
        REQUIRE(F.add(static_cast<FieldCode>(a), 0) == a);
        REQUIRE(F.mul(static_cast<FieldCode>(a), F.one()) == a);
        REQUIRE(F.add(static_cast<FieldCode>(a),
                      F.neg(static_cast<FieldCode>(a))) == 0);
        if (a != 0)
            REQUIRE(F.mul(static_cast<FieldCode>(a),
                          F.inv(static_cast<FieldCode>(a))) == F.one());
        for (int b = 0; b < q; ++b) {
            REQUIRE(F.add(static_cast<FieldCode>(a), static_cast<FieldCode>(b)) ==
                    F.add(static_cast<FieldCode>(b), static_cast<FieldCode>(a)));
            REQUIRE(F.mul(static_cast<FieldCode>(a), static_cast<FieldCode>(b)) ==
                    F.mul(static_cast<FieldCode>(b), static_cast<FieldCode>(a)));
            for (int c = 0; c < q; ++c) {
                const auto A = static_cast<FieldCode>(a);
                const auto B = static_cast<FieldCode>(b);
                const auto C = static_cast<FieldCode>(c);
                REQUIRE(F.mul(A, F.add(B, C)) == F.add(F.mul(A, B), F.mul(A, C)));
                REQUIRE(F.mul(A, F.mul(B, C)) == F.mul(F.mul(A, B), C));
            }
        }
    }
}

} // namespace

TEST_CASE("field axioms hold in every default field up to F_9") {
    check_axioms(*get_field(2, 1));
    check_axioms(*get_field(3, 1));
    check_axioms(*get_field(5, 1));
    check_axioms(*get_field(7, 1));
    check_axioms(*get_field(2, 2));
    check_axioms(*get_field(2, 3));
    check_axioms(*get_field(3, 2));
}

TEST_CASE("field metadata") {
    const auto F9 = get_field(3, 2);
    REQUIRE(F9->characteristic() == 3);
    REQUIRE(F9->degree() == 2);
    REQUIRE(F9->size() == 9);
    REQUIRE(F9->defining_polynomial() == std::vector<i64>{2, 1, 1});
    REQUIRE(get_field(2, 2)->defining_polynomial() == std::vector<i64>{1, 1, 1});
    REQUIRE(get_field(97, 1)->size() == 97);
}

TEST_CASE("the registry caches default fields") {
    REQUIRE(get_field(3, 2).get() == get_field(3, 2).get());
    REQUIRE(get_field(5, 1).get() == get_field(5, 1).get());
    // a custom polynomial gives a fresh, uncached field object
    const auto custom = get_field(3, 2, {1, 0, 1}); // x^2 + 1, irreducible mod 3
    REQUIRE(custom->size() == 9);
    REQUIRE(custom.get() != get_field(3, 2).get());
}

TEST_CASE("F_9 contains sqrt(2), used by the Clifford covers") {
    const auto F = get_field(3, 2);
    const FieldCode two = F->add(F->one(), F->one());
    REQUIRE(F->mul(5, 5) == two);
    REQUIRE(F->inv(5) == 7);
    // and a fourth root of unity: (-sqrt 2)^2 = 2 = -1
    const FieldCode i = F->mul(5, F->neg(F->one()));
    REQUIRE(F->mul(i, i) == F->neg(F->one()));
}

TEST_CASE("invalid field constructions are rejected") {
    REQUIRE_THROWS_AS(get_field(4, 1), Error);            // not prime
    REQUIRE_THROWS_AS(get_field(2, 9), Error);            // q > 256
    REQUIRE_THROWS_AS(get_field(3, 2, {2, 0, 1}), Error); // x^2-1 reducible mod 3
    REQUIRE_THROWS_AS(get_field(3, 2, {1, 1, 2}), Error); // not monic
    REQUIRE_THROWS_AS(get_field(3, 2, {1, 1}), Error);    // wrong length
}
