/**
 * @file group.hpp
 * @brief Finite group engine: enumeration, conjugacy data, subgroup tests.
 *
 * A FiniteGroup is built once from validated generators by breadth-first
 * closure, then frozen.  The element list is sorted in canonical payload
 * order, so "the" representative of a conjugacy class (its minimal element)
 * is simply the member of least index, and every derived quantity --
 * class order, power maps, centre, derived subgroup -- is deterministic
 * across runs and platforms.
 *
 * Intended scale is |G| <= 2 * 10^6 elements held fully in memory; the
 * shipped corpus tops out near 6 * 10^4.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_GROUP_HPP
#define BLOCKCHECK_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "blockcheck/arith.hpp"
#include "blockcheck/element.hpp"
#include "blockcheck/errors.hpp"

namespace blockcheck {

constexpr i64 kDefaultEnumerationBound = 2'000'000;

/// Breadth-first closure of a generator set under right multiplication.
/// Returns the closure in canonical (sorted) order.  Throws BoundExceeded
/// if more than `bound` distinct elements appear.  A positive `stop_at`
/// ends the search as soon as that many elements are known -- callers that
/// only compare the closure size against a known subgroup order use this
/// to skip the tail of the walk.
inline std::vector<Element> closure(const GroupContext &ctx,
                                    const std::vector<Element> &gens,
                                    i64 bound = kDefaultEnumerationBound,
                                    i64 stop_at = 0) {
  std::unordered_map<Element, std::uint32_t, ElementHash> seen;
  std::vector<Element> out;
  out.push_back(identity_element(ctx));
  seen.emplace(out.back(), 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    if (stop_at > 0 && static_cast<i64>(out.size()) >= stop_at)
      break;
    Element x = out[head]; // copy: out may reallocate below
    for (const Element &g : gens) {
      Element y = mul(ctx, x, g);
      if (seen.emplace(y, static_cast<std::uint32_t>(out.size())).second) {
        out.push_back(std::move(y));
        if (static_cast<i64>(out.size()) > bound)
          throw BoundExceeded("group enumeration exceeded bound of " +
                              std::to_string(bound) + " elements");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ConjClass {
  std::uint32_t rep = 0;             ///< index of minimal member
  i64 size = 0;                      ///< class length
  i64 order = 0;                     ///< element order of the class
  std::vector<std::uint32_t> power_map; ///< class of rep^t for 0 <= t < order
};

class FiniteGroup {
public:
  FiniteGroup(GroupContext ctx, std::vector<Element> gens,
              i64 bound = kDefaultEnumerationBound)
      : ctx_(std::move(ctx)), generators_(std::move(gens)) {
    for (const Element &g : generators_)
      validate_element(ctx_, g);
    elements_ = closure(ctx_, generators_, bound);
    index_.reserve(elements_.size() * 2);
    for (std::uint32_t i = 0; i < elements_.size(); ++i)
      index_.emplace(elements_[i], i);
    identity_ = index_.at(identity_element(ctx_));
    inv_.resize(elements_.size());
    for (std::uint32_t i = 0; i < elements_.size(); ++i)
      inv_[i] = index_.at(inverse(ctx_, elements_[i]));
    build_classes();
    build_center();
  }

  const GroupContext &context() const { return ctx_; }
  const std::vector<Element> &generators() const { return generators_; }
  const std::string &name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  i64 order() const { return static_cast<i64>(elements_.size()); }
  i64 exponent() const { return exponent_; }
  std::uint32_t identity_index() const { return identity_; }
  const Element &element(std::uint32_t i) const { return elements_[i]; }

  bool contains(const Element &e) const { return index_.count(e) != 0; }
  std::uint32_t index_of(const Element &e) const {
    auto it = index_.find(e);
    if (it == index_.end())
      throw NotInGroup("element is not a member of this group");
    return it->second;
  }

  std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const {
    return index_.at(mul(ctx_, elements_[a], elements_[b]));
  }
  std::uint32_t inv_idx(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t conj_idx(std::uint32_t g, std::uint32_t x) const {
    return mul_idx(mul_idx(g, x), inv_[g]);
  }
  std::uint32_t pow_idx(std::uint32_t a, i64 t) const {
    i64 o = element_order(a);
    t %= o;
    if (t < 0)
      t += o;
    std::uint32_t r = identity_;
    for (i64 s = 0; s < t; ++s)
      r = mul_idx(r, a);
    return r;
  }

  i64 element_order(std::uint32_t a) const {
    i64 o = 1;
    std::uint32_t x = a;
    while (x != identity_) {
      x = mul_idx(x, a);
      ++o;
    }
    return o;
  }

  /// p-part of an element: the unique power of `a` of p-power order such
  /// that a = a_p * a_{p'} with commuting factors.  Identity when p does
  /// not divide the order of `a`.
  std::uint32_t p_part(std::uint32_t a, i64 p) const {
    i64 o = element_order(a);
    i64 pa = p_part_int(o, p);
    if (pa == 1)
      return identity_;
    i64 m = o / pa;            // p'-part of the order
    i64 t = inv_mod(m % pa, pa); // m*t = 1 (mod p^a)
    return pow_idx(a, m * t);
  }

  std::size_t class_count() const { return classes_.size(); }
  const ConjClass &cls(std::size_t c) const { return classes_[c]; }
  const std::vector<ConjClass> &classes() const { return classes_; }
  std::uint32_t class_of(std::uint32_t elem_index) const {
    return class_of_[elem_index];
  }

  bool is_abelian() const { return classes_.size() == elements_.size(); }

  const std::vector<std::uint32_t> &center_indices() const { return center_; }

  /// The centre as a group in its own right (same ambient context).
  FiniteGroup center() const {
    std::vector<Element> gens;
    gens.reserve(center_.size());
    for (std::uint32_t i : center_)
      gens.push_back(elements_[i]);
    if (gens.empty())
      gens.push_back(identity_element(ctx_));
    FiniteGroup Z(ctx_, std::move(gens));
    Z.set_name(name_.empty() ? "center" : "Z(" + name_ + ")");
    return Z;
  }

  /// Derived subgroup [G, G]: the normal closure of all generator
  /// commutators.
  FiniteGroup derived_subgroup() const {
    std::vector<Element> seeds;
    for (const Element &a : generators_)
      for (const Element &b : generators_) {
        // [a, b] = a^-1 b^-1 a b
        Element c = mul(ctx_, mul(ctx_, inverse(ctx_, a), inverse(ctx_, b)),
                        mul(ctx_, a, b));
        seeds.push_back(std::move(c));
      }
    if (seeds.empty())
      seeds.push_back(identity_element(ctx_));
    std::vector<Element> ngens = normal_closure_generators(seeds);
    FiniteGroup D(ctx_, std::move(ngens));
    D.set_name(name_.empty() ? "derived" : "[" + name_ + "," + name_ + "]");
    return D;
  }

  /// Size of the normal closure of the subgroup generated by `seeds`.
  i64 normal_closure_order(std::vector<Element> seeds) const {
    for (;;) {
      std::vector<Element> S = closure(ctx_, seeds, order() + 1, order());
      if (static_cast<i64>(S.size()) == order())
        return order();
      std::unordered_map<Element, char, ElementHash> member;
      for (const Element &s : S)
        member.emplace(s, 1);
      bool grew = false;
      std::size_t fixed = seeds.size();
      for (std::size_t t = 0; t < fixed; ++t)
        for (const Element &g : generators_) {
          Element c = mul(ctx_, mul(ctx_, g, seeds[t]), inverse(ctx_, g));
          if (!member.count(c)) {
            member.emplace(c, 1);
            seeds.push_back(std::move(c));
            grew = true;
          }
        }
      if (!grew)
        return static_cast<i64>(S.size());
    }
  }

  /// A group is simple when every nontrivial element normally generates it.
  /// Checking one representative per conjugacy class suffices, since
  /// conjugate elements have the same normal closure.
  bool is_simple() const {
    if (order() == 1)
      return false;
    for (const ConjClass &c : classes_) {
      if (c.rep == identity_)
        continue;
      if (normal_closure_order({elements_[c.rep]}) != order())
        return false;
    }
    return true;
  }

  /// Quasi-simple: perfect with simple central quotient.  The quotient is
  /// simple iff every element outside the centre, together with the centre,
  /// normally generates the whole group.
  bool is_quasisimple() const {
    if (order() == 1)
      return false;
    if (derived_subgroup().order() != order())
      return false;
    if (static_cast<i64>(center_.size()) == order())
      return false; // central quotient is trivial, not simple
    std::vector<Element> central;
    for (std::uint32_t z : center_)
      central.push_back(elements_[z]);
    std::vector<bool> is_central(elements_.size(), false);
    for (std::uint32_t z : center_)
      is_central[z] = true;
    for (const ConjClass &c : classes_) {
      if (is_central[c.rep])
        continue;
      std::vector<Element> seeds = central;
      seeds.push_back(elements_[c.rep]);
      if (normal_closure_order(seeds) != order())
        return false;
    }
    return true;
  }

  /// Least m >= 1 with g^m in N, i.e. the order of gN in G/N.  N must be a
  /// subgroup of this group given over the same context (normality of N is
  /// the caller's responsibility, as is g in G).
  i64 coset_order(const FiniteGroup &N, std::uint32_t g) const {
    i64 m = 1;
    std::uint32_t x = g;
    while (!N.contains(elements_[x])) {
      x = mul_idx(x, g);
      ++m;
    }
    return m;
  }

private:
  void build_classes() {
    const std::size_t n = elements_.size();
    class_of_.assign(n, UINT32_MAX);
    std::vector<std::uint32_t> gen_idx, gen_inv_idx;
    for (const Element &g : generators_) {
      std::uint32_t gi = index_.at(g);
      gen_idx.push_back(gi);
      gen_inv_idx.push_back(inv_[gi]);
    }
    std::vector<ConjClass> raw;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (class_of_[i] != UINT32_MAX)
        continue;
      // i is the least unvisited index, hence the minimal class member.
      std::uint32_t cid = static_cast<std::uint32_t>(raw.size());
      ConjClass c;
      c.rep = i;
      std::deque<std::uint32_t> queue{i};
      class_of_[i] = cid;
      i64 size = 0;
      while (!queue.empty()) {
        std::uint32_t x = queue.front();
        queue.pop_front();
        ++size;
        for (std::size_t t = 0; t < gen_idx.size(); ++t) {
          std::uint32_t y = mul_idx(mul_idx(gen_idx[t], x), gen_inv_idx[t]);
          if (class_of_[y] == UINT32_MAX) {
            class_of_[y] = cid;
            queue.push_back(y);
          }
        }
      }
      c.size = size;
      c.order = element_order(i);
      raw.push_back(std::move(c));
    }
    // Canonical class order: element order, then class size, then minimal
    // representative.  The identity class always lands first.
    std::vector<std::uint32_t> perm(raw.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (raw[a].order != raw[b].order)
        return raw[a].order < raw[b].order;
      if (raw[a].size != raw[b].size)
        return raw[a].size < raw[b].size;
      return raw[a].rep < raw[b].rep;
    });
    std::vector<std::uint32_t> new_id(raw.size());
    classes_.clear();
    classes_.reserve(raw.size());
    for (std::uint32_t pos = 0; pos < raw.size(); ++pos) {
      new_id[perm[pos]] = pos;
      classes_.push_back(raw[perm[pos]]);
    }
    for (std::uint32_t i = 0; i < n; ++i)
      class_of_[i] = new_id[class_of_[i]];
    // Power maps and the group exponent.
    exponent_ = 1;
    for (ConjClass &c : classes_) {
      exponent_ = std::lcm(exponent_, c.order);
      c.power_map.resize(static_cast<std::size_t>(c.order));
      std::uint32_t x = identity_;
      for (i64 t = 0; t < c.order; ++t) {
        c.power_map[static_cast<std::size_t>(t)] = class_of_[x];
        x = mul_idx(x, c.rep);
      }
    }
  }

  void build_center() {
    std::vector<std::uint32_t> gen_idx;
    for (const Element &g : generators_)
      gen_idx.push_back(index_.at(g));
    for (std::uint32_t i = 0; i < elements_.size(); ++i) {
      bool central = true;
      for (std::uint32_t g : gen_idx)
        if (mul_idx(i, g) != mul_idx(g, i)) {
          central = false;
          break;
        }
      if (central)
        center_.push_back(i);
    }
  }

  /// Extend `seeds` to a generator set of their normal closure: repeatedly
  /// close under the group operation and adjoin missing conjugates by the
  /// ambient generators.
  std::vector<Element> normal_closure_generators(std::vector<Element> seeds) const {
    for (;;) {
      std::vector<Element> S = closure(ctx_, seeds);
      if (static_cast<i64>(S.size()) == order())
        return seeds; // already everything
      std::unordered_map<Element, char, ElementHash> member;
      for (const Element &s : S)
        member.emplace(s, 1);
      bool grew = false;
      std::size_t fixed = seeds.size();
      for (std::size_t t = 0; t < fixed; ++t)
        for (const Element &g : generators_) {
          Element c =
              mul(ctx_, mul(ctx_, g, seeds[t]), inverse(ctx_, g));
          if (!member.count(c)) {
            member.emplace(c, 1);
            seeds.push_back(std::move(c));
            grew = true;
          }
        }
      if (!grew)
        return seeds;
    }
  }

  GroupContext ctx_;
  std::vector<Element> generators_;
  std::string name_;
  std::vector<Element> elements_;
  std::unordered_map<Element, std::uint32_t, ElementHash> index_;
  std::vector<std::uint32_t> inv_;
  std::uint32_t identity_ = 0;
  std::vector<ConjClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> center_;
  i64 exponent_ = 1;
};

/// Images of every element of G under the homomorphism sending the i-th
/// generator of G to img_gens[i].  The map is propagated along the Cayley
/// graph and every edge is cross-checked, so a return value certifies that
/// the assignment extends to a homomorphism; MetadataMismatch is thrown
/// otherwise.
inline std::vector<Element> homomorphism_images(const FiniteGroup &G,
                                                const GroupContext &img_ctx,
                                                const std::vector<Element> &img_gens) {
  if (img_gens.size() != G.generators().size())
    throw MetadataMismatch("projection generator count mismatch");
  for (const Element &g : img_gens)
    validate_element(img_ctx, g);
  const std::size_t n = static_cast<std::size_t>(G.order());
  std::vector<Element> image(n);
  std::vector<bool> have(n, false);
  std::vector<std::uint32_t> gen_idx;
  for (const Element &g : G.generators())
    gen_idx.push_back(G.index_of(g));
  std::deque<std::uint32_t> queue{G.identity_index()};
  image[G.identity_index()] = identity_element(img_ctx);
  have[G.identity_index()] = true;
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::size_t t = 0; t < gen_idx.size(); ++t) {
      std::uint32_t y = G.mul_idx(x, gen_idx[t]);
      Element img = mul(img_ctx, image[x], img_gens[t]);
      if (!have[y]) {
        image[y] = std::move(img);
        have[y] = true;
        queue.push_back(y);
      } else if (image[y] != img) {
        throw MetadataMismatch("generator images do not define a homomorphism");
      }
    }
  }
  return image;
}

} // namespace blockcheck

#endif // BLOCKCHECK_GROUP_HPP
