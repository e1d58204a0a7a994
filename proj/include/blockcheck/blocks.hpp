/**
 * @file blocks.hpp
 * @brief p-block decomposition, defect data, and the condition checkers.
 *
 * Blocks are computed classically: two irreducible characters are linked
 * when their central characters agree on every class after reduction
 * modulo a maximal ideal above p in Z[zeta_e] (e the group exponent).
 * The reduction target is F_p[x]/(f) for an irreducible factor f of
 * Phi_{e'} mod p (e = p^a e'), with p-power roots of unity collapsing to 1.
 * Agreement of reduced central characters is already an equivalence
 * relation, so the partition needs no transitive closure; it is also
 * independent of the choice of f (a Galois-conjugate ideal), which the
 * test suite exercises by recomputing with another factor.
 *
 * Defect-group *exponents* come from character values alone: the p-element
 * classes on which some character of the block is nonzero are exactly the
 * p-element classes meeting a defect group D, so exp(D) is the largest
 * element order among them, and exp(D/Z(G)_p) the largest coset order.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_BLOCKS_HPP
#define BLOCKCHECK_BLOCKS_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "blockcheck/arith.hpp"
#include "blockcheck/cyclotomic.hpp"
#include "blockcheck/errors.hpp"
#include "blockcheck/group.hpp"
#include "blockcheck/modpoly.hpp"
#include "blockcheck/report.hpp"
#include "blockcheck/table.hpp"

namespace blockcheck {

// ---------------------------------------------------------------------------
// Reduction modulo a maximal ideal above p
// ---------------------------------------------------------------------------

/// Ring map Z[zeta_e] -> F_p[x]/(f) with kernel a maximal ideal above p.
/// Writing e = p^a e', zeta_e maps to xbar^t with t = (p^a)^{-1} mod e'
/// (the p-power part of every root of unity reduces to 1, the p'-part to a
/// genuine root xbar of order e').
class ReductionMap {
public:
  ReductionMap(i64 e, i64 p, std::size_t factor_index = 0) : e_(e), p_(p) {
    i64 pa = p_part_int(e, p);
    e_prime_ = e / pa;
    m_ = mult_order(p % e_prime_ == 0 ? 1 : p % e_prime_, e_prime_);
    // Phi_{e'} reduced mod p, then split into its (equal-degree) factors.
    const std::vector<i64> &Phi = cyclotomic_polynomial(e_prime_);
    Poly phi_mod(Phi.size());
    for (std::size_t i = 0; i < Phi.size(); ++i)
      phi_mod[i] = static_cast<u64>(((Phi[i] % p) + p) % p);
    poly_trim(phi_mod);
    factors_ = berlekamp_factors(static_cast<u64>(p), phi_mod);
    factor_ = factors_[factor_index % factors_.size()];
    t_ = inv_mod(pa % e_prime_, e_prime_);
    // Powers of xbar mod f; xbar has order e' in the residue field.
    xpow_.resize(static_cast<std::size_t>(e_prime_));
    Poly x{0, 1};
    Poly cur{1};
    for (i64 r = 0; r < e_prime_; ++r) {
      xpow_[static_cast<std::size_t>(r)] = cur;
      cur = poly_rem(static_cast<u64>(p), poly_mul(static_cast<u64>(p), cur, x),
                     factor_);
    }
  }

  i64 conductor() const { return e_; }
  i64 prime() const { return p_; }
  i64 residue_degree() const { return m_; }
  std::size_t factor_count() const { return factors_.size(); }
  const Poly &factor() const { return factor_; }

  /// Image of a cyclotomic integer whose conductor divides e, as a
  /// fixed-length coefficient vector over F_p.
  std::vector<u64> reduce(const Cyclo &v) const {
    if (e_ % v.conductor() != 0)
      throw ConductorOverflow("value conductor does not divide the map conductor");
    i64 step = ((e_ / v.conductor()) % e_prime_) * (t_ % e_prime_) % e_prime_;
    std::vector<u64> out(static_cast<std::size_t>(m_), 0);
    const std::vector<i64> &c = v.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0)
        continue;
      u64 cj = static_cast<u64>(((c[j] % p_) + p_) % p_);
      if (cj == 0)
        continue;
      const Poly &pw = xpow_[static_cast<std::size_t>(
          (step * static_cast<i64>(j)) % e_prime_)];
      for (std::size_t i = 0; i < pw.size(); ++i)
        out[i] = (out[i] + cj * pw[i]) % static_cast<u64>(p_);
    }
    return out;
  }

private:
  i64 e_, p_, e_prime_ = 1, m_ = 1, t_ = 0;
  std::vector<Poly> factors_;
  Poly factor_;
  std::vector<Poly> xpow_;
};

// ---------------------------------------------------------------------------
// Block decomposition
// ---------------------------------------------------------------------------

/// Defect of a character: p^{def(chi)} = (|G| / chi(1))_p.
inline i64 char_defect(const CharacterTable &T, std::size_t s, i64 p) {
  return valuation(T.order, p) - valuation(T.rows.at(s).degree, p);
}

/// Classes of p-elements (p-power order, including the identity) on which
/// some character of the block is nonzero; these are exactly the p-element
/// classes meeting a defect group of the block.
inline std::vector<std::size_t> geoff_set(const CharacterTable &T,
                                          const std::vector<std::size_t> &block_rows,
                                          i64 p) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < T.class_count(); ++c) {
    if (p_part_int(T.classes[c].order, p) != T.classes[c].order)
      continue; // not a p-element class
    for (std::size_t s : block_rows)
      if (!T.rows[s].values[c].is_zero()) {
        out.push_back(c);
        break;
      }
  }
  return out;
}

/// exp(D): largest element order over the geoff-set.
inline i64 defect_group_exponent(const CharacterTable &T,
                                 const std::vector<std::size_t> &geoff) {
  i64 e = 1;
  for (std::size_t c : geoff)
    e = std::max(e, T.classes[c].order);
  return e;
}

/// The p-part of the centre as a subgroup of G (O_p(Z(G))), used for the
/// mod-centre exponent of Condition (double-dagger-star).
inline FiniteGroup central_p_subgroup(const FiniteGroup &G, i64 p) {
  std::vector<Element> gens;
  for (std::uint32_t z : G.center_indices()) {
    i64 o = G.element_order(z);
    if (p_part_int(o, p) == o)
      gens.push_back(G.element(z));
  }
  if (gens.empty())
    gens.push_back(identity_element(G.context()));
  return FiniteGroup(G.context(), std::move(gens));
}

/// exp(D / Z(G)_p): largest coset order over the geoff-set.  Z(G)_p is
/// central, hence contained in every defect group, and every coset of
/// D/Z(G)_p is represented by a p-element of D.  Class indices refer to
/// the canonical class order shared by the group and its table.
inline i64 defect_group_exponent_mod_center(const std::vector<std::size_t> &geoff,
                                            const FiniteGroup &G,
                                            const FiniteGroup &Zp) {
  i64 e = 1;
  for (std::size_t c : geoff)
    e = std::max(e, G.coset_order(Zp, G.cls(c).rep));
  return e;
}

struct Block {
  std::vector<std::size_t> chars; ///< table row indices, ascending
  i64 defect = 0;                 ///< d(B) = max def(chi)
  std::vector<std::size_t> geoff; ///< class indices of the geoff-set
  i64 exponent = 1;               ///< exp(D)
  i64 exponent_mod_center = 1;    ///< exp(D / Z(G)_p)
  bool principal = false;
};

struct BlockDecomposition {
  i64 p = 0;
  std::size_t principal_index = 0;
  std::vector<Block> blocks;
  std::vector<std::size_t> block_of; ///< block index per table row
};

/// Index of the trivial character's row.
inline std::size_t trivial_row(const CharacterTable &T) {
  Cyclo one(1);
  for (std::size_t s = 0; s < T.rows.size(); ++s) {
    if (T.rows[s].degree != 1)
      continue;
    bool all_one = true;
    for (const Cyclo &v : T.rows[s].values)
      if (v != one) {
        all_one = false;
        break;
      }
    if (all_one)
      return s;
  }
  throw Error("table has no trivial character row");
}

/// Partition Irr(G) into p-blocks; fills in all per-block defect data.
/// `factor_index` selects the maximal ideal (any choice yields the same
/// partition; exposed for the ideal-independence property test).
inline BlockDecomposition block_partition(const FiniteGroup &G,
                                          const CharacterTable &T, i64 p,
                                          std::size_t factor_index = 0) {
  ReductionMap rm(T.exponent, p, factor_index);
  const std::size_t k = T.class_count();
  BlockDecomposition bd;
  bd.p = p;
  bd.block_of.resize(T.rows.size());
  std::map<std::vector<u64>, std::size_t> seen;
  for (std::size_t s = 0; s < T.rows.size(); ++s) {
    std::vector<Cyclo> omega = central_character(T, s);
    std::vector<u64> key;
    key.reserve(k * static_cast<std::size_t>(rm.residue_degree()));
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<u64> r = rm.reduce(omega[c]);
      key.insert(key.end(), r.begin(), r.end());
    }
    auto it = seen.find(key);
    std::size_t id;
    if (it == seen.end()) {
      id = bd.blocks.size();
      seen.emplace(std::move(key), id);
      bd.blocks.push_back(Block{});
    } else {
      id = it->second;
    }
    bd.blocks[id].chars.push_back(s);
    bd.block_of[s] = id;
  }
  FiniteGroup Zp = central_p_subgroup(G, p);
  std::size_t triv = trivial_row(T);
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    Block &B = bd.blocks[b];
    B.defect = 0;
    for (std::size_t s : B.chars)
      B.defect = std::max(B.defect, char_defect(T, s, p));
    B.geoff = geoff_set(T, B.chars, p);
    B.exponent = defect_group_exponent(T, B.geoff);
    B.exponent_mod_center = defect_group_exponent_mod_center(B.geoff, G, Zp);
    B.principal = std::find(B.chars.begin(), B.chars.end(), triv) != B.chars.end();
    if (B.principal)
      bd.principal_index = b;
  }
  return bd;
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

/// Condition (double dagger): exp(D) <= p^{def(chi)} for every chi in
/// every p-block.
inline CheckReport check_dagger(const FiniteGroup &G, const CharacterTable &T,
                                i64 p) {
  CheckReport rep;
  rep.check = "dagger";
  rep.group = T.group_name;
  rep.prime = p;
  BlockDecomposition bd = block_partition(G, T, p);
  for (const Block &B : bd.blocks)
    for (std::size_t s : B.chars) {
      i64 d = char_defect(T, s, p);
      i64 bound = ipow(p, d);
      if (B.exponent > bound) {
        Violation v;
        v.character_index = static_cast<i64>(s);
        v.character_degree = T.rows[s].degree;
        v.lhs = B.exponent;
        v.rhs = bound;
        v.block_defect = B.defect;
        v.character_defect = d;
        v.exponent = B.exponent;
        v.note = "exp(D) = " + std::to_string(B.exponent) + " exceeds p^def(chi) = " +
                 std::to_string(bound);
        rep.violations.push_back(std::move(v));
      }
    }
  return rep;
}

/// Condition (double dagger, starred): exp(D/Z(G)_p) <= (|G:Z(G)|/chi(1))_p.
inline CheckReport check_dagger_star(const FiniteGroup &G,
                                     const CharacterTable &T, i64 p) {
  CheckReport rep;
  rep.check = "dagger-star";
  rep.group = T.group_name;
  rep.prime = p;
  BlockDecomposition bd = block_partition(G, T, p);
  i64 center_order = static_cast<i64>(G.center_indices().size());
  i64 index = G.order() / center_order;
  for (const Block &B : bd.blocks)
    for (std::size_t s : B.chars) {
      // (|G:Z|/chi(1))_p; chi(1) divides |G:Z|, so this is exact.
      i64 bound = p_part_int(index, p) / p_part_int(T.rows[s].degree, p);
      if (B.exponent_mod_center > bound) {
        Violation v;
        v.character_index = static_cast<i64>(s);
        v.character_degree = T.rows[s].degree;
        v.lhs = B.exponent_mod_center;
        v.rhs = bound;
        v.block_defect = B.defect;
        v.character_defect = char_defect(T, s, p);
        v.exponent = B.exponent_mod_center;
        v.note = "exp(D/Z_p) = " + std::to_string(B.exponent_mod_center) +
                 " exceeds (|G:Z|/chi(1))_p = " + std::to_string(bound);
        rep.violations.push_back(std::move(v));
      }
    }
  return rep;
}

/// Conjecture A: chi(g) != 0 implies o(g) divides |G|/chi(1).
inline CheckReport check_wilde(const CharacterTable &T) {
  CheckReport rep;
  rep.check = "wilde";
  rep.group = T.group_name;
  rep.prime = 0;
  for (std::size_t s = 0; s < T.rows.size(); ++s) {
    i64 quotient = T.order / T.rows[s].degree;
    for (std::size_t c = 0; c < T.class_count(); ++c) {
      if (T.rows[s].values[c].is_zero())
        continue;
      if (quotient % T.classes[c].order != 0) {
        Violation v;
        v.character_index = static_cast<i64>(s);
        v.character_degree = T.rows[s].degree;
        v.class_index = static_cast<i64>(c);
        v.class_order = T.classes[c].order;
        v.lhs = T.classes[c].order;
        v.rhs = quotient;
        v.note = "o(g) = " + std::to_string(T.classes[c].order) +
                 " does not divide |G|/chi(1) = " + std::to_string(quotient);
        rep.violations.push_back(std::move(v));
      }
    }
  }
  return rep;
}

/// Brauer-Nesbitt: if p does not divide |G|/chi(1) (defect zero), then chi
/// vanishes on every element of order divisible by p.
inline CheckReport check_brauer_nesbitt(const CharacterTable &T, i64 p) {
  CheckReport rep;
  rep.check = "brauer-nesbitt";
  rep.group = T.group_name;
  rep.prime = p;
  for (std::size_t s = 0; s < T.rows.size(); ++s) {
    if (char_defect(T, s, p) != 0)
      continue;
    for (std::size_t c = 0; c < T.class_count(); ++c) {
      if (T.classes[c].order % p != 0)
        continue;
      if (!T.rows[s].values[c].is_zero()) {
        Violation v;
        v.character_index = static_cast<i64>(s);
        v.character_degree = T.rows[s].degree;
        v.class_index = static_cast<i64>(c);
        v.class_order = T.classes[c].order;
        v.character_defect = 0;
        v.note = "defect-zero character is nonzero on a p-singular class";
        rep.violations.push_back(std::move(v));
      }
    }
  }
  return rep;
}

/// Condition (*) for nearly simple groups: with L = [H,H] quasi-simple and
/// Z(L) = Z(H) cyclic, every faithful chi and every class representative h
/// with chi(h) != 0 whose image generates H/L must satisfy
/// o(h Z(H)) | |H : Z(H)| / chi(1).
inline CheckReport check_condition_star(const FiniteGroup &H,
                                        const CharacterTable &T) {
  CheckReport rep;
  rep.check = "condition-star";
  rep.group = T.group_name;
  rep.prime = 0;

  FiniteGroup L = H.derived_subgroup();
  if (!L.is_quasisimple()) {
    rep.applicable = false;
    rep.reason = "derived subgroup is not quasi-simple";
    return rep;
  }
  FiniteGroup Z = H.center();
  FiniteGroup ZL = L.center();
  if (Z.order() != ZL.order()) {
    rep.applicable = false;
    rep.reason = "Z(L) differs from Z(H)";
    return rep;
  }
  for (i64 i = 0; i < ZL.order(); ++i)
    if (!Z.contains(ZL.element(static_cast<std::uint32_t>(i)))) {
      rep.applicable = false;
      rep.reason = "Z(L) differs from Z(H)";
      return rep;
    }
  if (Z.exponent() != Z.order()) {
    rep.applicable = false;
    rep.reason = "Z(H) is not cyclic";
    return rep;
  }

  const i64 quotient_order = H.order() / L.order();
  // Is H/L cyclic?  True iff some class representative has full coset
  // order; if not, fall back to explicit generation tests.
  bool quotient_cyclic = false;
  for (std::size_t c = 0; c < H.class_count(); ++c)
    if (H.coset_order(L, H.cls(c).rep) == quotient_order) {
      quotient_cyclic = true;
      break;
    }
  auto generates_with_L = [&](std::uint32_t rep_idx) {
    if (quotient_cyclic)
      return H.coset_order(L, rep_idx) == quotient_order;
    std::vector<Element> gens = L.generators();
    gens.push_back(H.element(rep_idx));
    return static_cast<i64>(
               closure(H.context(), gens, H.order() + 1, H.order()).size()) ==
           H.order();
  };

  // Faithful characters: kernel {g : chi(g) = chi(1)} must be trivial.
  const i64 index_over_center = H.order() / Z.order();
  for (std::size_t s = 0; s < T.rows.size(); ++s) {
    Cyclo deg(T.rows[s].degree);
    bool faithful = true;
    for (std::size_t c = 1; c < T.class_count() && faithful; ++c)
      if (T.rows[s].values[c] == deg)
        faithful = false;
    if (!faithful)
      continue;
    if (index_over_center % T.rows[s].degree != 0) {
      Violation v;
      v.character_index = static_cast<i64>(s);
      v.character_degree = T.rows[s].degree;
      v.note = "chi(1) does not divide |H:Z(H)|";
      rep.violations.push_back(std::move(v));
      continue;
    }
    i64 quotient = index_over_center / T.rows[s].degree;
    for (std::size_t c = 0; c < T.class_count(); ++c) {
      if (T.rows[s].values[c].is_zero())
        continue;
      std::uint32_t h = H.cls(c).rep;
      if (!generates_with_L(h))
        continue;
      i64 coset_ord = H.coset_order(Z, h);
      if (quotient % coset_ord != 0) {
        Violation v;
        v.character_index = static_cast<i64>(s);
        v.character_degree = T.rows[s].degree;
        v.class_index = static_cast<i64>(c);
        v.class_order = T.classes[c].order;
        v.lhs = coset_ord;
        v.rhs = quotient;
        v.note = "o(h Z(H)) = " + std::to_string(coset_ord) +
                 " does not divide |H:Z(H)|/chi(1) = " + std::to_string(quotient);
        rep.violations.push_back(std::move(v));
      }
    }
  }
  return rep;
}

} // namespace blockcheck

#endif // BLOCKCHECK_BLOCKS_HPP
