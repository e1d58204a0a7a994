/**
 * @file arith.hpp
 * @brief Elementary integer arithmetic shared across the library.
 *
 * Everything here is exact 64-bit integer arithmetic (128-bit intermediates
 * where products could overflow).  No floating point is used anywhere in
 * blockcheck.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_ARITH_HPP
#define BLOCKCHECK_ARITH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "blockcheck/errors.hpp"

namespace blockcheck {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// x^e for small exact integer powers; throws on signed overflow.
inline i64 ipow(i64 x, i64 e) {
  i64 r = 1;
  for (i64 i = 0; i < e; ++i) {
    __int128 t = static_cast<__int128>(r) * x;
    if (t > INT64_MAX || t < INT64_MIN)
      throw Error("ipow: 64-bit overflow");
    r = static_cast<i64>(t);
  }
  return r;
}

/// Largest e with p^e | n (the p-adic valuation); nu_p(0) is undefined.
inline i64 valuation(i64 n, i64 p) {
  if (n == 0)
    throw Error("valuation: nu_p(0) undefined");
  if (n < 0)
    n = -n;
  i64 e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

/// p-part n_p = p^{nu_p(n)} of a nonzero integer.
inline i64 p_part_int(i64 n, i64 p) { return ipow(p, valuation(n, p)); }

/// Deterministic trial-division primality (fine for the 64-bit desk scale).
inline bool is_prime(i64 n) {
  if (n < 2)
    return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Prime factorisation n = prod p_i^{e_i} as (p_i, e_i) pairs, p_i ascending.
inline std::vector<std::pair<i64, i64>> factorize(i64 n) {
  if (n <= 0)
    throw Error("factorize: positive argument required");
  std::vector<std::pair<i64, i64>> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      i64 e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

/// All prime divisors of n, ascending.
inline std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> ps;
  for (auto &[p, e] : factorize(n))
    ps.push_back(p);
  return ps;
}

/// Euler totient.
inline i64 euler_phi(i64 n) {
  i64 r = n;
  for (auto &[p, e] : factorize(n))
    r = r / p * (p - 1);
  return r;
}

/// All positive divisors of n, ascending.
inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> ds;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d)
        ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

/// a*b mod m without overflow (m < 2^63).
inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

/// a^e mod m by binary exponentiation; e >= 0.
inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

/// a^e mod m with an unsigned 128-bit exponent (needed when e = (p^d-1)/2).
inline u64 powmod128(u64 a, unsigned __int128 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

/// Multiplicative inverse of a mod m (gcd(a, m) = 1) via extended Euclid.
inline i64 inv_mod(i64 a, i64 m) {
  i64 g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1) {
    i64 q = g / a1;
    x -= q * x1;
    std::swap(x, x1);
    g -= q * a1;
    std::swap(g, a1);
  }
  if (g != 1)
    throw Error("inv_mod: arguments not coprime");
  return ((x % m) + m) % m;
}

/// Least primitive root modulo an odd prime p.
inline u64 primitive_root(u64 p) {
  if (p == 2)
    return 1;
  std::vector<i64> qs = prime_divisors(static_cast<i64>(p - 1));
  for (u64 w = 2; w < p; ++w) {
    bool ok = true;
    for (i64 q : qs)
      if (powmod(w, (p - 1) / static_cast<u64>(q), p) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return w;
  }
  throw Error("primitive_root: no generator found (p not prime?)");
}

/// A square root of a modulo an odd prime p (Tonelli-Shanks), or throws if
/// a is a quadratic non-residue.  Deterministic: the auxiliary non-residue
/// is the least one.
inline u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0)
    return 0;
  if (powmod(a, (p - 1) / 2, p) != 1)
    throw Error("sqrt_mod: not a quadratic residue");
  if (p % 4 == 3)
    return powmod(a, (p + 1) / 4, p);
  // p = 1 mod 4: write p - 1 = q * 2^s with q odd.
  u64 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1)
    ++z;
  u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p),
      r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = powmod(c, u64{1} << (m - i - 1), p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

/// Multiplicative order of a modulo m (gcd(a, m) = 1).
inline i64 mult_order(i64 a, i64 m) {
  if (m == 1)
    return 1;
  i64 x = ((a % m) + m) % m, acc = x % m, o = 1;
  while (acc != 1 % m) {
    acc = static_cast<i64>(mulmod(static_cast<u64>(acc), static_cast<u64>(x),
                                  static_cast<u64>(m)));
    ++o;
    if (o > m)
      throw Error("mult_order: arguments not coprime");
  }
  return o;
}

} // namespace blockcheck

#endif // BLOCKCHECK_ARITH_HPP
