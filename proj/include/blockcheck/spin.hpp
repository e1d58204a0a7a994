/**
 * @file spin.hpp
 * @brief Bar-partition (spin) combinatorics for double covers of S_n:
 *        bar lengths, spin character degrees, p-bar-cores and weights, and
 *        the vanishing check for faithful characters of shipped covers.
 *
 * Spin characters of 2.S_n are labelled by strict partitions of n.  Degrees
 * are computed two independent ways (Schur's closed product and the bar
 * hook length formula), both with exact prime-exponent arithmetic; the test
 * suite asserts they agree.  The p = 2 bar theory is out of scope: shipped
 * covers are checked through the group engine instead.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 *
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_SPIN_HPP
#define BLOCKCHECK_SPIN_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "blockcheck/arith.hpp"
#include "blockcheck/errors.hpp"
#include "blockcheck/partitions.hpp"
#include "blockcheck/report.hpp"
#include "blockcheck/table.hpp"

namespace blockcheck {

/// Bar lengths of a strict partition, as a multiset sorted in decreasing
/// order.  Row i carries the arm values {1, ..., lambda_i} with each
/// lambda_i - lambda_j (j > i) removed and lambda_i + lambda_j added, for a
/// total of |lambda| entries.
inline std::vector<i64> bar_lengths(const Partition &la) {
    if (!is_strict_partition(la))
        throw Error("bar_lengths: partition must be strict");
    std::vector<i64> bars;
    for (std::size_t i = 0; i < la.size(); ++i) {
        std::set<i64> row;
        for (i64 a = 1; a <= la[i]; ++a) row.insert(a);
        for (std::size_t j = i + 1; j < la.size(); ++j) {
            row.erase(la[i] - la[j]);
            row.insert(la[i] + la[j]);
        }
        bars.insert(bars.end(), row.begin(), row.end());
    }
    std::sort(bars.begin(), bars.end(), std::greater<i64>());
    return bars;
}

namespace detail {

/// Multiplies out a factored rational known to be integral.  `num` and
/// `den` list (value, multiplicity-sign) contributions: factorials appear
/// via Legendre, plain factors via direct valuation.  Negative final
/// exponents signal a formula bug, reported as NonIntegral.
struct ExponentProduct {
    i64 bound = 2; // largest prime that can occur
    std::vector<std::pair<i64, i64>> factorials; // (m, +1 or -1)
    std::vector<std::pair<i64, i64>> factors;    // (value >= 1, +1 or -1)
    i64 extra_twos = 0;

    void factorial(i64 m, i64 sign) {
        factorials.emplace_back(m, sign);
        bound = std::max(bound, m);
    }
    void factor(i64 v, i64 sign) {
        factors.emplace_back(v, sign);
        bound = std::max(bound, v);
    }

    i64 evaluate(const char *who) const {
        i64 result = 1;
        for (i64 p = 2; p <= bound; ++p) {
            if (!is_prime(static_cast<u64>(p))) continue;
            i64 e = p == 2 ? extra_twos : 0;
            for (auto [m, sign] : factorials) e += sign * factorial_valuation(m, p);
            for (auto [v, sign] : factors) e += sign * valuation(v, p);
            if (e < 0)
                throw NonIntegral(std::string(who) + ": product is not an integer");
            for (i64 i = 0; i < e; ++i) {
                if (result > std::numeric_limits<i64>::max() / p)
                    throw BoundExceeded(std::string(who) + ": result exceeds 64 bits");
                result *= p;
            }
        }
        return result;
    }
};

} // namespace detail

/// Degree of the spin character <lambda> of 2.S_n by Schur's closed
/// product  2^((n-r)/2 rounded down) * (n!/prod lambda_i!) *
/// prod_{i<j} (lambda_i - lambda_j)/(lambda_i + lambda_j).
inline i64 spin_degree(const Partition &la, i64 n) {
    if (!is_strict_partition(la))
        throw Error("spin_degree: partition must be strict");
    if (partition_sum(la) != n)
        throw Error("spin_degree: partition is not a partition of n");
    const i64 r = static_cast<i64>(la.size());
    detail::ExponentProduct prod;
    prod.extra_twos = (n - r) / 2;
    prod.factorial(n, +1);
    for (i64 part : la) prod.factorial(part, -1);
    for (std::size_t i = 0; i < la.size(); ++i)
        for (std::size_t j = i + 1; j < la.size(); ++j) {
            prod.factor(la[i] - la[j], +1);
            prod.factor(la[i] + la[j], -1);
        }
    return prod.evaluate("spin_degree");
}

/// The same degree through the bar hook length formula:
/// 2^((n-r)/2 rounded down) * n! / prod(bar lengths).  Used as an
/// independent cross-check of spin_degree.
inline i64 spin_degree_from_bars(const Partition &la) {
    const i64 n = partition_sum(la);
    const i64 r = static_cast<i64>(la.size());
    detail::ExponentProduct prod;
    prod.extra_twos = (n - r) / 2;
    prod.factorial(n, +1);
    for (i64 b : bar_lengths(la)) prod.factor(b, -1);
    return prod.evaluate("spin_degree_from_bars");
}

/// True when the strict partition admits a removable p-bar: a part equal
/// to p, a part lambda_i > p with lambda_i - p absent, or two parts
/// summing to p.
inline bool has_removable_bar(const Partition &la, i64 p) {
    const std::set<i64> parts(la.begin(), la.end());
    for (i64 part : la) {
        if (part == p) return true;
        if (part > p && parts.count(part - p) == 0) return true;
    }
    for (std::size_t i = 0; i < la.size(); ++i)
        for (std::size_t j = i + 1; j < la.size(); ++j)
            if (la[i] + la[j] == p) return true;
    return false;
}

/// The p-bar-core of a strict partition, p odd.  On the bar abacus (one
/// bead per part, runner = residue mod p) every runner-0 bead is removable
/// outright, and beads on conjugate runners j and p-j cancel in pairs; the
/// surviving |a-b| beads slide to the bottom of their runner.
inline Partition bar_core(const Partition &la, i64 p) {
    if (p == 2)
        throw EvenPrimeUnsupported("bar_core: p = 2 bar combinatorics is out of scope");
    if (p < 3 || !is_prime(static_cast<u64>(p)))
        throw Error("bar_core: p must be an odd prime");
    if (!is_strict_partition(la))
        throw Error("bar_core: partition must be strict");
    std::vector<std::vector<i64>> runner(static_cast<std::size_t>(p));
    for (i64 part : la) runner[static_cast<std::size_t>(part % p)].push_back(part);
    std::vector<i64> parts;
    for (i64 j = 1; 2 * j < p; ++j) {
        const i64 a = static_cast<i64>(runner[static_cast<std::size_t>(j)].size());
        const i64 b = static_cast<i64>(runner[static_cast<std::size_t>(p - j)].size());
        const i64 res = a >= b ? j : p - j;
        for (i64 i = 0; i < (a >= b ? a - b : b - a); ++i)
            parts.push_back(res + i * p);
    }
    return normalized_partition(std::move(parts));
}

/// Number of p-bars removed to reach the p-bar-core.
inline i64 bar_weight(const Partition &la, i64 p) {
    return (partition_sum(la) - partition_sum(bar_core(la, p))) / p;
}

/// Checks the vanishing pattern of faithful (spin) characters of a shipped
/// double cover 2.S_n against the combinatorial prediction: whenever such
/// a character is non-zero on a class, the class projects to an element of
/// S_n of odd order, or to one whose cycle type is a strict partition
/// whose spin degree equals the character degree.
///
/// `projected_types[k]` is the S_n cycle type of the image of class k of
/// the cover; MissingProjection is raised when the labelling is absent or
/// incomplete, MetadataMismatch when it is internally inconsistent.
inline CheckReport verify_spin_vanishing(const CharacterTable &T,
                                         const std::vector<Partition> &projected_types) {
    if (projected_types.size() != T.class_count())
        throw MissingProjection(
            "verify_spin_vanishing: need one projected cycle type per class");
    const i64 n = partition_sum(projected_types.at(0));
    if (projected_types.at(0) != Partition(static_cast<std::size_t>(n), 1))
        throw MetadataMismatch(
            "verify_spin_vanishing: class 0 must project to the identity");
    std::size_t centre_class = 0;
    for (std::size_t k = 1; k < projected_types.size(); ++k) {
        if (partition_sum(projected_types[k]) != n)
            throw MetadataMismatch(
                "verify_spin_vanishing: projected cycle types of unequal size");
        if (cycle_type_order(projected_types[k]) == 1) {
            if (centre_class != 0)
                throw MetadataMismatch(
                    "verify_spin_vanishing: more than one non-trivial class over the identity");
            centre_class = k;
        }
    }
    if (centre_class == 0)
        throw MetadataMismatch(
            "verify_spin_vanishing: no class of the central involution found");
    if (T.classes.at(centre_class).order != 2)
        throw MetadataMismatch(
            "verify_spin_vanishing: class over the identity does not have order 2");

    CheckReport rep;
    rep.check = "spin-vanishing";
    rep.group = T.group_name;
    rep.applicable = true;
    for (std::size_t s = 0; s < T.rows.size(); ++s) {
        const CharRow &row = T.rows[s];
        const Cyclo &zval = row.values.at(centre_class);
        // The central involution acts by a scalar, so chi(z) = +-chi(1);
        // the minus sign singles out the faithful (spin) characters.
        if (!zval.is_integer() || zval.integer_value() != -row.degree) continue;
        for (std::size_t k = 0; k < T.class_count(); ++k) {
            if (row.values[k].is_zero()) continue;
            const Partition &mu = projected_types[k];
            if (cycle_type_order(mu) % 2 == 1) continue;
            const bool consistent =
                is_strict_partition(mu) && spin_degree(mu, n) == row.degree;
            if (!consistent) {
                Violation v;
                v.character_index = static_cast<i64>(s);
                v.character_degree = row.degree;
                v.class_index = static_cast<i64>(k);
                v.class_order = T.classes[k].order;
                v.lhs = row.values[k].is_integer() ? row.values[k].integer_value() : 0;
                v.rhs = 0;
                v.note = "spin character non-zero over an even-order projection "
                         "of unmatched cycle type";
                rep.violations.push_back(std::move(v));
            }
        }
    }
    return rep;
}

} // namespace blockcheck

#endif // BLOCKCHECK_SPIN_HPP
