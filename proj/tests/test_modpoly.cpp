/**
 * @file test_modpoly.cpp
 * @brief Dense polynomial and matrix computations over F_p.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 *
 * Distributed under the MIT license; see LICENSE.
 */

#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "blockcheck/modpoly.hpp"

using namespace blockcheck;

namespace {

/// Phi_n mod p via (x^n - 1) / prod of proper cyclotomic divisors.
Poly cyclotomic_mod(u64 p, i64 n) {
    Poly num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = p - 1;
    num[static_cast<std::size_t>(n)] = 1;
    for (i64 d : divisors(n)) {
        if (d == n) continue;
        num = poly_div_exact(p, num, cyclotomic_mod(p, d));
    }
    return num;
}

} // namespace

TEST_CASE("polynomial ring basics") {
    const u64 p = 7;
    const Poly a{1, 2, 3};    // 3x^2 + 2x + 1
    const Poly b{6, 1};       // x + 6 = x - 1
    REQUIRE(poly_mul(p, a, b) == Poly{6, 6, 6, 3});
    REQUIRE(poly_rem(p, poly_mul(p, a, b), a) == Poly{});
    REQUIRE(poly_gcd(p, poly_mul(p, a, b), b) == poly_monic(p, b));
    REQUIRE(poly_add(p, Poly{3}, Poly{4}) == Poly{});
    // remainder of x^5 by x^2 - 1 is x: x^5 = x*(x^2)^2
    REQUIRE(poly_rem(p, Poly{0, 0, 0, 0, 0, 1}, Poly{6, 0, 1}) == Poly{0, 1});
    REQUIRE(poly_powmod(p, Poly{0, 1}, 5, Poly{6, 0, 1}) == Poly{0, 1});
}

TEST_CASE("rref and kernels") {
    const u64 p = 5;
    std::vector<std::vector<u64>> rows{{1, 2, 3}, {2, 4, 1}, {0, 0, 4}};
    const auto pivots = rref(p, rows);
    REQUIRE(pivots == std::vector<std::size_t>{0, 2});

    // M = [[1,2],[2,4]] mod 5 has a one-dimensional kernel spanned by (3,1)
    FpMat M;
    M.n = 2;
    M.a = {1, 2, 2, 4};
    const auto ker = kernel_basis(p, M);
    REQUIRE(ker.size() == 1);
    const auto &v = ker[0];
    REQUIRE((v[0] + 2 * v[1]) % p == 0);
    REQUIRE(!(v[0] == 0 && v[1] == 0));
}

TEST_CASE("charpoly of a companion matrix recovers the polynomial") {
    // companion of f(x) = x^3 + 2x + 4 mod 7
    const u64 p = 7;
    FpMat M;
    M.n = 3;
    M.a = {0, 0, 3,  // -4 mod 7
           1, 0, 5,  // -2 mod 7
           0, 1, 0};
    const Poly f = charpoly(p, M);
    REQUIRE(f == Poly{4, 2, 0, 1});
}

TEST_CASE("distinct roots") {
    const u64 p = 7;
    auto r = distinct_roots(p, Poly{6, 0, 1});
    std::sort(r.begin(), r.end());
    REQUIRE(r == std::vector<u64>{1, 6});
    // (x-2)^2(x-3): roots listed once each
    const Poly f = poly_mul(p, poly_mul(p, Poly{5, 1}, Poly{5, 1}), Poly{4, 1});
    auto roots = distinct_roots(p, f);
    std::sort(roots.begin(), roots.end());
    REQUIRE(roots == std::vector<u64>{2, 3});
    REQUIRE(distinct_roots(p, Poly{1, 0, 1}).empty()); // x^2+1 has none mod 7
}

TEST_CASE("berlekamp splits squarefree products completely") {
    const u64 p = 5;
    // x^4 - 1 mod 5 splits into four linears
    auto fs = berlekamp_factors(p, Poly{4, 0, 0, 0, 1});
    REQUIRE(fs.size() == 4);
    std::set<u64> roots;
    for (const Poly &f : fs) {
        REQUIRE(poly_deg(f) == 1);
        roots.insert((p - f[0]) % p);
    }
    REQUIRE(roots == std::set<u64>{1, 2, 3, 4});
}

TEST_CASE("berlekamp factors cyclotomics into degree ord_n(p) pieces") {
    // ord_15(2) = 4, phi(15) = 8: two quartic factors
    auto f15 = berlekamp_factors(2, cyclotomic_mod(2, 15));
    REQUIRE(f15.size() == 2);
    for (const Poly &f : f15) REQUIRE(poly_deg(f) == 4);

    // ord_63(2) = 6, phi(63) = 36: six sextic factors
    auto f63 = berlekamp_factors(2, cyclotomic_mod(2, 63));
    REQUIRE(f63.size() == 6);
    for (const Poly &f : f63) REQUIRE(poly_deg(f) == 6);

    // an irreducible stays in one piece
    auto firr = berlekamp_factors(2, Poly{1, 1, 0, 0, 1}); // x^4+x+1
    REQUIRE(firr.size() == 1);

    // product of the factors gives back the input
    Poly prod{1};
    for (const Poly &f : f15) prod = poly_mul(2, prod, f);
    REQUIRE(prod == poly_monic(2, cyclotomic_mod(2, 15)));
}
