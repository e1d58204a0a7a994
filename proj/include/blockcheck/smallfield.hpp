/**
 * @file smallfield.hpp
 * @brief Small finite fields F_{p^k} with table-driven arithmetic.
 *
 * A SmallField is F_p[x]/(f) for a fixed monic irreducible f of degree k.
 * Elements are encoded as integers in [0, p^k): the coefficient vector
 * (c_0, ..., c_{k-1}) of a residue-class polynomial is packed in base p as
 * c_0 + c_1*p + ... + c_{k-1}*p^{k-1}.  This encoding doubles as the
 * canonical comparison order for matrix entries.
 *
 * The shipped registry fixes one defining polynomial per field so that all
 * outputs are bit-exact across runs and machines:
 *   F_4 = F_2[x]/(x^2+x+1),  F_8 = F_2[x]/(x^3+x+1),  F_9 = F_3[x]/(x^2+x+2).
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_SMALLFIELD_HPP
#define BLOCKCHECK_SMALLFIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "blockcheck/arith.hpp"
#include "blockcheck/errors.hpp"

namespace blockcheck {

/// An element of a SmallField is its packed code; 8 bits suffice for q <= 256.
using FieldCode = std::uint8_t;

class SmallField {
public:
  /// Build F_p[x]/(poly).  poly holds coefficients low to high, length k+1,
  /// monic; it must be irreducible over F_p (verified at construction).
  SmallField(i64 p, i64 k, std::vector<i64> poly)
      : p_(p), k_(k), q_(ipow(p, k)), poly_(std::move(poly)) {
    if (!blockcheck::is_prime(p_))
      throw Error("SmallField: characteristic must be prime");
    if (k_ < 1 || q_ > 256)
      throw Error("SmallField: only fields with q <= 256 are supported");
    if (static_cast<i64>(poly_.size()) != k_ + 1 || poly_[k_] != 1)
      throw Error("SmallField: defining polynomial must be monic of degree k");
    for (i64 &c : poly_)
      c = ((c % p_) + p_) % p_;
    if (!irreducible_over_prime_field())
      throw Error("SmallField: defining polynomial is reducible");
    build_tables();
  }

  i64 characteristic() const { return p_; }
  i64 degree() const { return k_; }
  i64 size() const { return q_; }
  const std::vector<i64> &defining_polynomial() const { return poly_; }

  FieldCode zero() const { return 0; }
  FieldCode one() const { return 1; }

  FieldCode add(FieldCode a, FieldCode b) const { return add_[idx(a, b)]; }
  FieldCode sub(FieldCode a, FieldCode b) const { return add_[idx(a, neg_[b])]; }
  FieldCode neg(FieldCode a) const { return neg_[a]; }
  FieldCode mul(FieldCode a, FieldCode b) const { return mul_[idx(a, b)]; }

  FieldCode inv(FieldCode a) const {
    if (a == 0)
      throw Error("SmallField: division by zero");
    return inv_[a];
  }

  /// Multiplicative order of a nonzero element (divides q - 1).
  i64 element_order(FieldCode a) const {
    if (a == 0)
      throw Error("SmallField: order of zero undefined");
    i64 o = 1;
    FieldCode x = a;
    while (x != 1) {
      x = mul(x, a);
      ++o;
    }
    return o;
  }

  /// Encode a coefficient vector (low to high, length <= k) as a code.
  FieldCode encode(const std::vector<i64> &coeffs) const {
    i64 code = 0, w = 1;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      code += (((coeffs[i] % p_) + p_) % p_) * w;
      w *= p_;
    }
    return static_cast<FieldCode>(code);
  }

  /// Decode a code into its coefficient vector (length k, low to high).
  std::vector<i64> decode(FieldCode a) const {
    std::vector<i64> c(static_cast<std::size_t>(k_));
    i64 v = a;
    for (i64 i = 0; i < k_; ++i) {
      c[static_cast<std::size_t>(i)] = v % p_;
      v /= p_;
    }
    return c;
  }

private:
  std::size_t idx(FieldCode a, FieldCode b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b;
  }

  // Multiply two residue polynomials given as coefficient vectors mod poly_.
  std::vector<i64> poly_mulmod(const std::vector<i64> &a,
                               const std::vector<i64> &b) const {
    std::vector<i64> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
    for (i64 i = 0; i < k_; ++i)
      for (i64 j = 0; j < k_; ++j)
        prod[static_cast<std::size_t>(i + j)] +=
            a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    // Reduce by the monic defining polynomial, top down.
    for (i64 d = 2 * k_ - 2; d >= k_; --d) {
      i64 c = prod[static_cast<std::size_t>(d)] % p_;
      if (c == 0)
        continue;
      for (i64 j = 0; j <= k_; ++j)
        prod[static_cast<std::size_t>(d - k_ + j)] -= c * poly_[static_cast<std::size_t>(j)];
    }
    prod.resize(static_cast<std::size_t>(k_));
    for (i64 &c : prod)
      c = ((c % p_) + p_) % p_;
    return prod;
  }

  // Rabin's criterion: f of degree k is irreducible over F_p iff
  // x^{p^k} = x mod f and gcd(x^{p^{k/r}} - x, f) = 1 for all primes r | k.
  bool irreducible_over_prime_field() const {
    auto frob_power = [&](i64 e) {
      // Compute x^{p^e} mod f by repeated p-th powering of x.
      std::vector<i64> acc(static_cast<std::size_t>(k_), 0);
      if (k_ == 1) {
        // Degree-1 modulus: x = -poly_[0].
        acc[0] = ((-poly_[0]) % p_ + p_) % p_;
        return acc;
      }
      acc[1] = 1; // the polynomial x
      for (i64 step = 0; step < e; ++step) {
        // acc <- acc^p via binary exponentiation in F_p[x]/(f).
        std::vector<i64> base = acc;
        std::vector<i64> res(static_cast<std::size_t>(k_), 0);
        res[0] = 1;
        i64 ex = p_;
        while (ex) {
          if (ex & 1)
            res = poly_mulmod(res, base);
          base = poly_mulmod(base, base);
          ex >>= 1;
        }
        acc = res;
      }
      return acc;
    };
    auto is_x = [&](const std::vector<i64> &v) {
      for (i64 i = 0; i < k_; ++i) {
        i64 want = (i == 1) ? 1 : 0;
        if (k_ == 1)
          want = (i == 0) ? (((-poly_[0]) % p_ + p_) % p_) : 0;
        if (v[static_cast<std::size_t>(i)] != want)
          return false;
      }
      return true;
    };
    if (k_ == 1)
      return true; // any monic linear polynomial is irreducible
    if (!is_x(frob_power(k_)))
      return false;
    for (auto &[r, e] : factorize(k_)) {
      std::vector<i64> v = frob_power(k_ / r);
      // gcd(v - x, f) must be 1; since f is irreducible iff v != x here
      // (any common factor would be a proper one), a direct check suffices:
      // v == x would mean every root lies in F_{p^{k/r}}.
      if (is_x(v))
        return false;
      // A nontrivial gcd with v - x not equal to f itself is also fatal; we
      // detect it by checking that v - x is a unit-free witness: compute
      // gcd explicitly.
      std::vector<i64> diff = v;
      diff[1] = ((diff[1] - 1) % p_ + p_) % p_;
      if (!gcd_is_one(diff))
        return false;
    }
    return true;
  }

  // gcd(f, g) over F_p, returning whether it is a (nonzero) constant.
  bool gcd_is_one(std::vector<i64> g) const {
    std::vector<i64> f = poly_;
    auto deg = [&](const std::vector<i64> &v) {
      for (i64 d = static_cast<i64>(v.size()) - 1; d >= 0; --d)
        if (v[static_cast<std::size_t>(d)] % p_ != 0)
          return d;
      return static_cast<i64>(-1);
    };
    while (true) {
      i64 dg = deg(g);
      if (dg < 0)
        return deg(f) == 0;
      if (dg == 0)
        return true;
      // f <- f mod g
      i64 df = deg(f);
      i64 lg_inv = inv_mod(g[static_cast<std::size_t>(dg)], p_);
      while (df >= dg) {
        i64 c = (f[static_cast<std::size_t>(df)] * lg_inv) % p_;
        for (i64 j = 0; j <= dg; ++j) {
          i64 &fj = f[static_cast<std::size_t>(df - dg + j)];
          fj = ((fj - c * g[static_cast<std::size_t>(j)]) % p_ + p_) % p_;
        }
        df = deg(f);
      }
      std::swap(f, g);
    }
  }

  void build_tables() {
    const std::size_t q = static_cast<std::size_t>(q_);
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.resize(q);
    for (std::size_t a = 0; a < q; ++a) {
      std::vector<i64> va = decode(static_cast<FieldCode>(a));
      std::vector<i64> na(static_cast<std::size_t>(k_));
      for (i64 i = 0; i < k_; ++i)
        na[static_cast<std::size_t>(i)] =
            ((-va[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
      neg_[a] = encode(na);
      for (std::size_t b = 0; b < q; ++b) {
        std::vector<i64> vb = decode(static_cast<FieldCode>(b));
        std::vector<i64> s(static_cast<std::size_t>(k_));
        for (i64 i = 0; i < k_; ++i)
          s[static_cast<std::size_t>(i)] = (va[static_cast<std::size_t>(i)] +
                                            vb[static_cast<std::size_t>(i)]) %
                                           p_;
        add_[a * q + b] = encode(s);
        mul_[a * q + b] = encode(poly_mulmod(va, vb));
      }
    }
    inv_[0] = 0;
    for (std::size_t a = 1; a < q; ++a)
      for (std::size_t b = 1; b < q; ++b)
        if (mul_[a * q + b] == 1) {
          inv_[a] = static_cast<FieldCode>(b);
          break;
        }
  }

  i64 p_, k_, q_;
  std::vector<i64> poly_;
  std::vector<FieldCode> add_, mul_, neg_, inv_;
};

/// Registry of the shipped fields with their fixed defining polynomials.
/// Returns a shared immutable field; thread-safe.
inline std::shared_ptr<const SmallField> get_field(i64 p, i64 k,
                                                   std::vector<i64> poly = {}) {
  static std::mutex mtx;
  static std::map<std::pair<i64, i64>, std::shared_ptr<const SmallField>> cache;
  if (poly.empty()) {
    if (k == 1) {
      poly = {0, 1}; // the polynomial x; unused for prime fields
    } else if (p == 2 && k == 2) {
      poly = {1, 1, 1}; // x^2 + x + 1
    } else if (p == 2 && k == 3) {
      poly = {1, 1, 0, 1}; // x^3 + x + 1
    } else if (p == 3 && k == 2) {
      poly = {2, 1, 1}; // x^2 + x + 2
    } else {
      throw Error("get_field: no registered defining polynomial for this field");
    }
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end())
      return it->second;
    auto f = std::make_shared<const SmallField>(p, k, poly);
    cache.emplace(key, f);
    return f;
  }
  // Custom polynomial: construct without caching (file-supplied fields).
  return std::make_shared<const SmallField>(p, k, std::move(poly));
}

} // namespace blockcheck

#endif // BLOCKCHECK_SMALLFIELD_HPP
