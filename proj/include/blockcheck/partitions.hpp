/**
 * @file partitions.hpp
 * @brief Partition combinatorics for symmetric groups: hooks, p-cores and
 *        weights, predicted block data, Murnaghan--Nakayama character
 *        values, and the alternating-group restriction fragment.
 *
 * Everything in this header is exact integer combinatorics and completely
 * independent of the group engine; agreement between the two routes is what
 * the test suite checks.  The abacus convention throughout is the beta-set
 * of first-column hook lengths b_i = lambda_i + (s - i) on s beads.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 *
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_PARTITIONS_HPP
#define BLOCKCHECK_PARTITIONS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "blockcheck/arith.hpp"
#include "blockcheck/errors.hpp"
#include "blockcheck/report.hpp"

namespace blockcheck {

/// A partition is stored as its weakly decreasing list of positive parts;
/// the empty vector is the empty partition.
using Partition = std::vector<i64>;

/// Sum of the parts, |lambda|.
inline i64 partition_sum(const Partition &la) {
    return std::accumulate(la.begin(), la.end(), i64{0});
}

/// True when the parts are weakly decreasing and strictly positive.
inline bool is_partition(const Partition &la) {
    for (std::size_t i = 0; i < la.size(); ++i) {
        if (la[i] <= 0) return false;
        if (i + 1 < la.size() && la[i] < la[i + 1]) return false;
    }
    return true;
}

/// True when the parts are strictly decreasing and strictly positive.
inline bool is_strict_partition(const Partition &la) {
    if (!is_partition(la)) return false;
    for (std::size_t i = 0; i + 1 < la.size(); ++i)
        if (la[i] == la[i + 1]) return false;
    return true;
}

/// Sorts parts into weakly decreasing order and drops zeros.  Negative
/// parts are rejected.  Used to normalise caller-supplied part lists.
inline Partition normalized_partition(std::vector<i64> parts) {
    for (i64 x : parts)
        if (x < 0) throw Error("normalized_partition: negative part");
    std::sort(parts.begin(), parts.end(), std::greater<i64>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

namespace detail {

inline void partitions_rec(i64 remaining, i64 max_part, Partition &prefix,
                           std::vector<Partition> &out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (i64 part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

inline void strict_partitions_rec(i64 remaining, i64 max_part, Partition &prefix,
                                  std::vector<Partition> &out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (i64 part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        strict_partitions_rec(remaining - part, part - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All partitions of n in descending lexicographic order, beginning with
/// (n) and ending with (1^n).  partitions(0) is the singleton { () }.
inline std::vector<Partition> partitions(i64 n) {
    if (n < 0) throw Error("partitions: n must be non-negative");
    std::vector<Partition> out;
    Partition prefix;
    detail::partitions_rec(n, n, prefix, out);
    if (n == 0) out.assign(1, Partition{});
    return out;
}

/// All strict partitions of n (distinct parts), descending lexicographic.
inline std::vector<Partition> strict_partitions(i64 n) {
    if (n < 0) throw Error("strict_partitions: n must be non-negative");
    std::vector<Partition> out;
    Partition prefix;
    detail::strict_partitions_rec(n, n, prefix, out);
    if (n == 0) out.assign(1, Partition{});
    return out;
}

/// The conjugate (transposed Young diagram) partition.
inline Partition conjugate(const Partition &la) {
    if (!is_partition(la)) throw Error("conjugate: invalid partition");
    Partition out;
    if (la.empty()) return out;
    out.resize(static_cast<std::size_t>(la[0]), 0);
    for (i64 part : la)
        for (i64 j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    return out;
}

/// True when lambda equals its conjugate.
inline bool is_self_conjugate(const Partition &la) {
    return la == conjugate(la);
}

/// Hook lengths of all cells of the Young diagram, returned as a multiset
/// sorted in decreasing order.  The hook of cell (i, j) (0-indexed) has
/// length lambda_i - j + lambda'_j - i - 1.
inline std::vector<i64> hook_lengths(const Partition &la) {
    if (!is_partition(la)) throw Error("hook_lengths: invalid partition");
    const Partition conj = conjugate(la);
    std::vector<i64> hooks;
    for (std::size_t i = 0; i < la.size(); ++i)
        for (i64 j = 0; j < la[i]; ++j)
            hooks.push_back(la[i] - j + conj[static_cast<std::size_t>(j)] -
                            static_cast<i64>(i) - 1);
    std::sort(hooks.begin(), hooks.end(), std::greater<i64>());
    return hooks;
}

/// Exponent of p in n!, by Legendre's formula.
inline i64 factorial_valuation(i64 n, i64 p) {
    if (n < 0 || p < 2) throw Error("factorial_valuation: bad arguments");
    i64 total = 0;
    for (i64 q = p; q <= n; q *= p) {
        total += n / q;
        if (q > n / p) break; // next q would overflow past n anyway
    }
    return total;
}

/// Exponent of p in the character degree chi^lambda(1), computed from the
/// hook length formula without forming the (possibly huge) degree itself.
inline i64 degree_valuation(const Partition &la, i64 p) {
    i64 val = factorial_valuation(partition_sum(la), p);
    for (i64 h : hook_lengths(la)) val -= valuation(h, p);
    return val;
}

/// Character degree chi^lambda(1) = n! / prod(hooks), assembled exactly
/// from the prime factorisation so no intermediate exceeds the result.
/// Throws BoundExceeded if the degree does not fit in a signed 64-bit
/// integer (first reached around n = 34).
inline i64 degree(const Partition &la) {
    const i64 n = partition_sum(la);
    const std::vector<i64> hooks = hook_lengths(la);
    i64 result = 1;
    for (i64 p = 2; p <= n; ++p) {
        if (!is_prime(static_cast<u64>(p))) continue;
        i64 e = factorial_valuation(n, p);
        for (i64 h : hooks) e -= valuation(h, p);
        if (e < 0) throw Error("degree: hook formula gave a non-integer");
        for (i64 i = 0; i < e; ++i) {
            if (result > std::numeric_limits<i64>::max() / p)
                throw BoundExceeded("degree: character degree exceeds 64 bits");
            result *= p;
        }
    }
    return result;
}

/// Beta-set of lambda on `beads` >= length(lambda) beads: the strictly
/// decreasing list b_i = lambda_i + (beads - i) for i = 1..beads, with
/// lambda padded by zeros.
inline std::vector<i64> beta_set(const Partition &la, i64 beads) {
    if (!is_partition(la)) throw Error("beta_set: invalid partition");
    if (beads < static_cast<i64>(la.size()))
        throw Error("beta_set: fewer beads than parts");
    std::vector<i64> beta;
    for (i64 i = 0; i < beads; ++i) {
        i64 part = i < static_cast<i64>(la.size()) ? la[static_cast<std::size_t>(i)] : 0;
        beta.push_back(part + (beads - 1 - i));
    }
    return beta;
}

/// Inverse of beta_set: recovers the partition from a set of distinct
/// non-negative bead positions (any order).
inline Partition partition_from_beta(std::vector<i64> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<i64>());
    const i64 s = static_cast<i64>(beta.size());
    Partition la;
    for (i64 i = 0; i < s; ++i) {
        i64 part = beta[static_cast<std::size_t>(i)] - (s - 1 - i);
        if (part < 0) throw Error("partition_from_beta: repeated bead position");
        if (part > 0) la.push_back(part);
    }
    return la;
}

/// The p-core of lambda: push every bead of the beta-set to the bottom of
/// its runner (its residue class mod p).  Removing one rim p-hook is the
/// same as sliding one bead down one position on its runner, so this is
/// exhaustive removal in one pass and independent of removal order.
inline Partition p_core(const Partition &la, i64 p) {
    if (p < 2) throw Error("p_core: p must be at least 2");
    if (!is_partition(la)) throw Error("p_core: invalid partition");
    const std::vector<i64> beta = beta_set(la, static_cast<i64>(la.size()));
    std::vector<i64> runner_count(static_cast<std::size_t>(p), 0);
    for (i64 b : beta) ++runner_count[static_cast<std::size_t>(b % p)];
    std::vector<i64> core_beta;
    for (i64 j = 0; j < p; ++j)
        for (i64 i = 0; i < runner_count[static_cast<std::size_t>(j)]; ++i)
            core_beta.push_back(j + i * p);
    return partition_from_beta(std::move(core_beta));
}

/// The p-weight of lambda: number of rim p-hooks removed to reach the core.
inline i64 p_weight(const Partition &la, i64 p) {
    const i64 removed = partition_sum(la) - partition_sum(p_core(la, p));
    return removed / p;
}

/// Predicted p-block of S_n: a p-core with its weight and the partitions
/// of n sharing that core.
struct SnBlock {
    Partition core;
    i64 weight = 0;
    std::vector<Partition> members;
};

/// Groups the partitions of n by p-core.  Blocks appear in order of the
/// first member encountered in partitions(n) order; members keep that
/// order too, so the output is deterministic.
inline std::vector<SnBlock> sn_blocks(i64 n, i64 p) {
    if (!is_prime(static_cast<u64>(p)))
        throw Error("sn_blocks: p must be prime");
    std::vector<SnBlock> blocks;
    std::map<Partition, std::size_t> index_of_core;
    for (const Partition &la : partitions(n)) {
        Partition core = p_core(la, p);
        auto it = index_of_core.find(core);
        if (it == index_of_core.end()) {
            SnBlock blk;
            blk.weight = (n - partition_sum(core)) / p;
            blk.core = std::move(core);
            it = index_of_core.emplace(blk.core, blocks.size()).first;
            blocks.push_back(std::move(blk));
        }
        blocks[it->second].members.push_back(la);
    }
    return blocks;
}

/// Exponent of the defect group of a weight-w block of S_n: p^(r+1) where
/// p^r <= w < p^(r+1).  Weight-0 blocks have trivial defect group, which
/// callers must special-case; asking here raises ZeroWeight.
inline i64 sn_defect_exponent(i64 w, i64 p) {
    if (!is_prime(static_cast<u64>(p)))
        throw Error("sn_defect_exponent: p must be prime");
    if (w == 0)
        throw ZeroWeight("sn_defect_exponent: weight-0 block has trivial defect group");
    if (w < 0) throw Error("sn_defect_exponent: negative weight");
    i64 r = 0;
    while (ipow(p, r + 1) <= w) ++r;
    return ipow(p, r + 1);
}

/// Order of a permutation with the given cycle type (lcm of the parts).
inline i64 cycle_type_order(const Partition &mu) {
    i64 m = 1;
    for (i64 part : mu) m = std::lcm(m, part);
    return m;
}

/// Cycle type of the k-th power of a permutation with cycle type mu: each
/// cycle of length l splits into gcd(l, k) cycles of length l / gcd(l, k).
inline Partition power_cycle_type(const Partition &mu, i64 k) {
    if (k < 0) throw Error("power_cycle_type: exponent must be non-negative");
    std::vector<i64> parts;
    for (i64 l : mu) {
        const i64 g = std::gcd(l, k);
        for (i64 i = 0; i < g; ++i) parts.push_back(l / g);
    }
    return normalized_partition(std::move(parts));
}

/// Cycle type of the p-part of a permutation with cycle type mu: each
/// cycle of length l contributes l/l_p cycles of length l_p, where l_p is
/// the p-part of l.
inline Partition p_part_cycle_type(const Partition &mu, i64 p) {
    if (p < 2) throw Error("p_part_cycle_type: p must be at least 2");
    std::vector<i64> parts;
    for (i64 l : mu) {
        const i64 lp = p_part_int(l, p);
        for (i64 i = 0; i < l / lp; ++i) parts.push_back(lp);
    }
    return normalized_partition(std::move(parts));
}

/// True when permutations of cycle type mu are even, i.e. lie in A_n.
inline bool is_even_class(const Partition &mu) {
    return (partition_sum(mu) - static_cast<i64>(mu.size())) % 2 == 0;
}

/// True when the S_n class of cycle type mu splits into two A_n classes:
/// exactly when all parts are odd and pairwise distinct.
inline bool is_split_class(const Partition &mu) {
    if (!is_even_class(mu)) return false;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] % 2 == 0) return false;
        if (i + 1 < mu.size() && mu[i] == mu[i + 1]) return false;
    }
    return true;
}

namespace detail {

/// Murnaghan--Nakayama recursion over beta-sets.  One call strips the
/// cycle type part type[pos]: every bead b with b - t fresh and
/// non-negative corresponds to a removable rim t-hook, with leg length the
/// number of beads strictly between b - t and b.
inline i64 mn_recurse(const Partition &la, std::size_t pos, const Partition &type,
                      std::map<std::pair<Partition, std::size_t>, i64> &memo) {
    if (la.empty()) return 1;
    const auto key = std::make_pair(la, pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const i64 t = type[pos];
    const std::vector<i64> beta = beta_set(la, static_cast<i64>(la.size()));
    i64 total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const i64 target = beta[i] - t;
        if (target < 0) continue;
        bool occupied = false;
        i64 between = 0;
        for (i64 b : beta) {
            if (b == target) { occupied = true; break; }
            if (b > target && b < beta[i]) ++between;
        }
        if (occupied) continue;
        std::vector<i64> next_beta = beta;
        next_beta[i] = target;
        const i64 sign = between % 2 == 0 ? 1 : -1;
        total += sign * mn_recurse(partition_from_beta(std::move(next_beta)),
                                   pos + 1, type, memo);
    }
    memo.emplace(key, total);
    return total;
}

} // namespace detail

/// Character value chi^lambda on the S_n class of the given cycle type, by
/// the Murnaghan--Nakayama rule.  Both arguments are normalised first; the
/// recursion strips the largest remaining cycle and memoises on the
/// (sub-partition, position) pair, which keeps even chi^lambda(1^n) cheap.
inline i64 mn_value(const Partition &la_in, const Partition &type_in) {
    const Partition la = normalized_partition(la_in);
    const Partition type = normalized_partition(type_in);
    if (partition_sum(la) != partition_sum(type))
        throw Error("mn_value: partition and cycle type have different sizes");
    std::map<std::pair<Partition, std::size_t>, i64> memo;
    return detail::mn_recurse(la, 0, type, memo);
}

/// Value of the restriction of chi^lambda to A_n on the class with the
/// given (even) cycle type.  For lambda != lambda' the restriction is
/// irreducible and the value is mn_value itself; for self-conjugate lambda
/// the two constituents agree on non-split classes, each taking half the
/// S_n value.  Values of the constituents on split classes involve
/// irrationalities outside this model and raise SplitClassUnsupported.
inline i64 an_value(const Partition &la, const Partition &mu) {
    if (!is_even_class(mu))
        throw Error("an_value: cycle type is odd, so not a class of A_n");
    if (!is_self_conjugate(la)) return mn_value(la, mu);
    if (is_split_class(mu))
        throw SplitClassUnsupported(
            "an_value: constituent value on a split class of A_n");
    const i64 v = mn_value(la, mu);
    if (v % 2 != 0)
        throw NonIntegral("an_value: self-conjugate restriction value is odd");
    return v / 2;
}

/// One A_n class in the restriction fragment.
struct AnClass {
    Partition cycle_type;
    i64 order = 1;
    /// True when the S_n class splits into two A_n classes (both share the
    /// recorded values of every row that carries them).
    bool splits = false;
};

/// One character row of the restriction fragment.  For a split pair
/// (lambda self-conjugate) the row stands for both constituents at once:
/// degree is chi^lambda(1)/2 and values are recorded only where the two
/// constituents agree (known[k] == 1).
struct AnRow {
    Partition label;
    bool split_pair = false;
    i64 degree = 0;
    std::vector<i64> values;
    std::vector<unsigned char> known;
};

/// Character data of A_n obtainable from the S_n combinatorial model.
struct AnTableFragment {
    i64 n = 0;
    std::vector<AnClass> classes;
    std::vector<AnRow> rows;
};

/// Restriction of the S_n character table to A_n.  Conjugate pairs
/// lambda != lambda' restrict to the same irreducible and are listed once,
/// under the lexicographically larger label; self-conjugate labels are
/// flagged split with values on split classes left unknown.
inline AnTableFragment an_character_data(i64 n) {
    if (n < 5) throw Error("an_character_data: n must be at least 5");
    AnTableFragment frag;
    frag.n = n;
    for (const Partition &mu : partitions(n)) {
        if (!is_even_class(mu)) continue;
        AnClass cls;
        cls.cycle_type = mu;
        cls.order = cycle_type_order(mu);
        cls.splits = is_split_class(mu);
        frag.classes.push_back(std::move(cls));
    }
    for (const Partition &la : partitions(n)) {
        const Partition conj = conjugate(la);
        if (la < conj) continue; // the partner carries this pair
        AnRow row;
        row.label = la;
        row.split_pair = (la == conj);
        const i64 d = degree(la);
        if (row.split_pair && d % 2 != 0)
            throw NonIntegral("an_character_data: split degree is odd");
        row.degree = row.split_pair ? d / 2 : d;
        for (const AnClass &cls : frag.classes) {
            if (row.split_pair && cls.splits) {
                row.values.push_back(0);
                row.known.push_back(0);
            } else {
                row.values.push_back(an_value(la, cls.cycle_type));
                row.known.push_back(1);
            }
        }
        frag.rows.push_back(std::move(row));
    }
    return frag;
}

/// Verifies, for every partition of n, the defect chain
///   |S_n|_p / chi^lambda(1)_p  >=  p^w  >=  p w  >=  exp(D)
/// with w the p-weight and exp(D) = p^(r+1) the defect group exponent of
/// the block.  Purely combinatorial, so n can exceed table range by far.
inline CheckReport verify_sn_dagger(i64 n, i64 p) {
    if (n < 0) throw Error("verify_sn_dagger: n must be non-negative");
    if (!is_prime(static_cast<u64>(p)))
        throw Error("verify_sn_dagger: p must be prime");
    CheckReport rep;
    rep.check = "sn-dagger";
    rep.group = "S" + std::to_string(n);
    rep.prime = p;
    rep.applicable = true;
    const std::vector<Partition> all = partitions(n);
    for (std::size_t idx = 0; idx < all.size(); ++idx) {
        const Partition &la = all[idx];
        const i64 w = p_weight(la, p);
        if (w == 0) continue; // defect-0 block: the chain is vacuous
        i64 hook_val = 0;
        for (i64 h : hook_lengths(la)) hook_val += valuation(h, p);
        // |S_n|_p / chi(1)_p = p^hook_val since v_p(chi(1)) = v_p(n!) - hook_val.
        const i64 exponent = sn_defect_exponent(w, p);
        const bool ok = hook_val >= w && ipow(p, w) >= p * w && p * w >= exponent;
        if (!ok) {
            Violation v;
            v.character_index = static_cast<i64>(idx);
            v.lhs = hook_val;
            v.rhs = w;
            v.exponent = exponent;
            v.note = "defect chain broken: v_p(|S_n|/chi(1)) = " +
                     std::to_string(hook_val) + ", weight = " + std::to_string(w) +
                     ", exp(D) = " + std::to_string(exponent);
            rep.violations.push_back(std::move(v));
        }
    }
    return rep;
}

/// Reproduces the A_10 example purely combinatorially: the character of
/// A_10 labelled by (7,1,1,1) has degree 84 and is non-zero on a class of
/// order 6 (cycle type (3,3,2,2)) yet vanishes on the 2-part of that
/// class, whose cycle type is (2,2,1,1,1,1,1,1).  So chi(g) != 0 does not
/// force chi(g_p) != 0.
inline CheckReport verify_a10_phenomenon() {
    CheckReport rep;
    rep.check = "a10";
    rep.group = "A10";
    rep.prime = 2;
    rep.applicable = true;
    const Partition la{7, 1, 1, 1};
    const Partition g{3, 3, 2, 2};

    auto record = [&rep](const std::string &note, i64 lhs, i64 rhs) {
        Violation v;
        v.lhs = lhs;
        v.rhs = rhs;
        v.note = note;
        rep.violations.push_back(std::move(v));
    };

    const i64 d = degree(la);
    if (d != 84) record("degree of (7,1,1,1) is not 84", d, 84);
    if (is_self_conjugate(la))
        record("(7,1,1,1) unexpectedly self-conjugate", 0, 0);
    if (!is_even_class(g) || is_split_class(g))
        record("(3,3,2,2) is not a non-split class of A_10", 0, 0);
    if (cycle_type_order(g) != 6)
        record("class (3,3,2,2) does not have order 6", cycle_type_order(g), 6);

    const i64 v6 = an_value(la, g);
    if (v6 != 3) record("value on the order-6 class is not 3", v6, 3);

    const Partition g2 = p_part_cycle_type(g, 2);
    if (g2 != Partition{2, 2, 1, 1, 1, 1, 1, 1})
        record("2-part of (3,3,2,2) has the wrong cycle type", 0, 0);
    if (cycle_type_order(g2) != 2)
        record("2-part does not have order 2", cycle_type_order(g2), 2);

    const i64 v2 = an_value(la, g2);
    if (v2 != 0) record("value on the 2-part does not vanish", v2, 0);
    return rep;
}

} // namespace blockcheck

#endif // BLOCKCHECK_PARTITIONS_HPP
