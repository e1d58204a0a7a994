/**
 * @file modpoly.hpp
 * @brief Polynomials and linear algebra over prime fields F_p.
 *
 * Supports two consumers with one representation (coefficient vectors of
 * u64 residues, low degree first):
 *
 *   - the character-table solver, which needs characteristic polynomials
 *     (Hessenberg reduction), distinct-root extraction and null spaces
 *     modulo a large auxiliary prime; and
 *   - the block-decomposition code, which factors cyclotomic polynomials
 *     modulo the small prime p of interest.
 *
 * All splitting routines are deterministic: candidate separating elements
 * are enumerated in a fixed order (no randomness), so repeated runs yield
 * byte-identical results.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_MODPOLY_HPP
#define BLOCKCHECK_MODPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "blockcheck/arith.hpp"
#include "blockcheck/errors.hpp"

namespace blockcheck {

using Poly = std::vector<u64>; // coefficients low degree first, reduced mod p

inline void poly_trim(Poly &f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}
inline int poly_deg(const Poly &f) { return static_cast<int>(f.size()) - 1; }

inline Poly poly_add(u64 p, Poly a, const Poly &b) {
  if (a.size() < b.size())
    a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = (a[i] + b[i]) % p;
  poly_trim(a);
  return a;
}

inline Poly poly_sub(u64 p, Poly a, const Poly &b) {
  if (a.size() < b.size())
    a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = (a[i] + p - b[i]) % p;
  poly_trim(a);
  return a;
}

inline Poly poly_mul(u64 p, const Poly &a, const Poly &b) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  poly_trim(r);
  return r;
}

inline Poly poly_scale(u64 p, Poly a, u64 c) {
  for (u64 &v : a)
    v = mulmod(v, c, p);
  poly_trim(a);
  return a;
}

/// Remainder of a modulo monic-or-not b (b != 0).
inline Poly poly_rem(u64 p, Poly a, const Poly &b) {
  int db = poly_deg(b);
  u64 lead_inv = inv_mod(b.back(), p);
  while (poly_deg(a) >= db) {
    u64 c = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    poly_trim(a);
  }
  return a;
}

/// Exact quotient a / b; the caller guarantees b | a.
inline Poly poly_div_exact(u64 p, Poly a, const Poly &b) {
  int db = poly_deg(b);
  u64 lead_inv = inv_mod(b.back(), p);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (poly_deg(a) >= db) {
    u64 c = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    poly_trim(a);
  }
  poly_trim(q);
  return q;
}

inline Poly poly_monic(u64 p, Poly f) {
  if (f.empty())
    return f;
  return poly_scale(p, std::move(f), inv_mod(f.back(), p));
}

inline Poly poly_gcd(u64 p, Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(p, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(p, std::move(a));
}

/// base^exp mod f, with f of degree >= 1.
inline Poly poly_powmod(u64 p, Poly base, i64 exp, const Poly &f) {
  Poly result{1};
  base = poly_rem(p, std::move(base), f);
  while (exp > 0) {
    if (exp & 1)
      result = poly_rem(p, poly_mul(p, result, base), f);
    base = poly_rem(p, poly_mul(p, base, base), f);
    exp >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Dense linear algebra over F_p (row-vector convention).
// ---------------------------------------------------------------------------

struct FpMat {
  std::size_t n = 0;       // square dimension
  std::vector<u64> a;      // row-major
  u64 &at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  u64 at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  static FpMat zero(std::size_t n) { return FpMat{n, std::vector<u64>(n * n, 0)}; }
};

inline std::vector<u64> mat_vec(u64 p, const FpMat &M, const std::vector<u64> &v) {
  std::vector<u64> u(M.n, 0);
  for (std::size_t i = 0; i < M.n; ++i) {
    unsigned __int128 acc = 0;
    for (std::size_t j = 0; j < M.n; ++j)
      acc += static_cast<unsigned __int128>(M.at(i, j)) * v[j];
    u[i] = static_cast<u64>(acc % p);
  }
  return u;
}

/// Row-reduce `rows` in place to reduced row echelon form; returns the
/// pivot column of each surviving row.  Deterministic (first nonzero pivot
/// in column order).
inline std::vector<std::size_t> rref(u64 p, std::vector<std::vector<u64>> &rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty())
    return pivots;
  std::size_t ncols = rows[0].size(), r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0)
      ++sel;
    if (sel == rows.size())
      continue;
    std::swap(rows[r], rows[sel]);
    u64 inv = inv_mod(rows[r][col], p);
    for (std::size_t j = col; j < ncols; ++j)
      rows[r][j] = mulmod(rows[r][j], inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0)
        continue;
      u64 c = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[i][j] = (rows[i][j] + p - mulmod(c, rows[r][j], p)) % p;
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Canonical basis of the null space of (square) M: free variables are set
/// to 1 one at a time in column order.
inline std::vector<std::vector<u64>> kernel_basis(u64 p, const FpMat &M) {
  std::vector<std::vector<u64>> rows(M.n, std::vector<u64>(M.n, 0));
  for (std::size_t i = 0; i < M.n; ++i)
    for (std::size_t j = 0; j < M.n; ++j)
      rows[i][j] = M.at(i, j);
  std::vector<std::size_t> pivots = rref(p, rows);
  std::vector<bool> is_pivot(M.n, false);
  for (std::size_t c : pivots)
    is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free_col = 0; free_col < M.n; ++free_col) {
    if (is_pivot[free_col])
      continue;
    std::vector<u64> v(M.n, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (p - rows[r][free_col]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial det(xI - M) by Hessenberg reduction followed
/// by the standard leading-minor recurrence; O(n^3), exact mod p.
inline Poly charpoly(u64 p, FpMat M) {
  const std::size_t n = M.n;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && M.at(piv, col) == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != col + 1) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(M.at(col + 1, j), M.at(piv, j));
      for (std::size_t i = 0; i < n; ++i)
        std::swap(M.at(i, col + 1), M.at(i, piv));
    }
    u64 inv = inv_mod(M.at(col + 1, col), p);
    for (std::size_t row = col + 2; row < n; ++row) {
      u64 f = mulmod(M.at(row, col), inv, p);
      if (f == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        M.at(row, j) = (M.at(row, j) + p - mulmod(f, M.at(col + 1, j), p)) % p;
      for (std::size_t i = 0; i < n; ++i)
        M.at(i, col + 1) = (M.at(i, col + 1) + mulmod(f, M.at(i, row), p)) % p;
    }
  }
  // p_m = (x - H[m-1][m-1]) p_{m-1}
  //       - sum_i H[m-1-i][m-1] (prod of subdiagonals) p_{m-1-i}.
  std::vector<Poly> minors(n + 1);
  minors[0] = Poly{1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly t(minors[m - 1].size() + 1, 0);
    u64 d = M.at(m - 1, m - 1);
    for (std::size_t k = 0; k < minors[m - 1].size(); ++k) {
      t[k + 1] = (t[k + 1] + minors[m - 1][k]) % p;
      t[k] = (t[k] + p - mulmod(d, minors[m - 1][k], p)) % p;
    }
    u64 prod = 1;
    for (std::size_t i = 1; i < m; ++i) {
      prod = mulmod(prod, M.at(m - i, m - i - 1), p);
      if (prod == 0)
        break;
      u64 coef = mulmod(M.at(m - 1 - i, m - 1), prod, p);
      if (coef == 0)
        continue;
      const Poly &q = minors[m - 1 - i];
      for (std::size_t k = 0; k < q.size(); ++k)
        t[k] = (t[k] + p - mulmod(coef, q[k], p)) % p;
    }
    poly_trim(t);
    minors[m] = std::move(t);
  }
  return minors[n];
}

/// All roots of f in F_p (without multiplicity), sorted ascending.
/// Deterministic: the squarefree part of the linear factors is split by
/// sweeping the shifts (x+a)^{(p-1)/2} - 1 for a = 0, 1, 2, ...
inline std::vector<u64> distinct_roots(u64 p, const Poly &f_in) {
  Poly f = poly_monic(p, f_in);
  // Linear-factor part: gcd(f, x^p - x).
  Poly xp = poly_powmod(p, Poly{0, 1}, static_cast<i64>(p), f);
  Poly xp_minus_x = poly_sub(p, xp, Poly{0, 1});
  Poly g = poly_gcd(p, f, xp_minus_x);
  std::vector<u64> roots;
  std::vector<Poly> stack{g};
  while (!stack.empty()) {
    Poly h = std::move(stack.back());
    stack.pop_back();
    if (poly_deg(h) <= 0)
      continue;
    if (poly_deg(h) == 1) {
      // monic x + c: root is -c
      roots.push_back((p - h[0]) % p);
      continue;
    }
    bool split = false;
    for (u64 a = 0; a < p && !split; ++a) {
      // roots r with r = -a are captured by gcd with (x+a) directly
      Poly shifted{a, 1};
      Poly w = poly_powmod(p, shifted, static_cast<i64>((p - 1) / 2), h);
      w = poly_sub(p, std::move(w), Poly{1});
      Poly d = poly_gcd(p, h, w);
      if (poly_deg(d) > 0 && poly_deg(d) < poly_deg(h)) {
        Poly other = poly_div_exact(p, h, d);
        stack.push_back(std::move(d));
        stack.push_back(std::move(other));
        split = true;
      }
    }
    if (!split)
      throw SplitFailure("could not split linear factors over F_p");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Deterministic Berlekamp factorisation over small F_p.
// ---------------------------------------------------------------------------

/// Factor a squarefree monic f over a small prime field F_p into monic
/// irreducibles, sorted by coefficient vector (low degree first).
///
/// Classic deterministic Berlekamp: the fixed algebra of the Frobenius
/// b -> b^p on F_p[x]/(f) has one dimension per irreducible factor and
/// separates them, so sweeping gcd(f, b - c) over a canonical kernel basis
/// b and all c in F_p refines the factorisation completely.  For the small
/// p used in block reductions (p <= 7 here) this is both fast and free of
/// randomness.
inline std::vector<Poly> berlekamp_factors(u64 p, const Poly &f_in) {
  Poly f = poly_monic(p, f_in);
  const int n = poly_deg(f);
  if (n <= 1)
    return {f};
  // Frobenius matrix: row i = coefficients of x^{p*i} mod f.
  Poly xp = poly_powmod(p, Poly{0, 1}, static_cast<i64>(p), f);
  std::vector<std::vector<u64>> Q(static_cast<std::size_t>(n),
                                  std::vector<u64>(static_cast<std::size_t>(n), 0));
  Poly cur{1};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= poly_deg(cur); ++j)
      Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j)];
    cur = poly_rem(p, poly_mul(p, cur, xp), f);
  }
  // b = sum b_i x^i satisfies b^p = b  iff  b (Q - I) = 0; as column
  // vectors that is the null space of (Q - I)^T.
  FpMat M = FpMat::zero(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      u64 v = Q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (i == j)
        v = (v + p - 1) % p;
      M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
    }
  std::vector<std::vector<u64>> basis = kernel_basis(p, M);
  const std::size_t r = basis.size(); // number of irreducible factors
  std::vector<Poly> factors{f};
  for (const std::vector<u64> &bvec : basis) {
    if (factors.size() == r)
      break;
    Poly b(bvec.begin(), bvec.end());
    poly_trim(b);
    if (poly_deg(b) <= 0)
      continue; // constants never split
    for (u64 c = 0; c < p && factors.size() < r; ++c) {
      Poly shifted = b;
      shifted[0] = (shifted[0] + p - c) % p;
      poly_trim(shifted);
      std::vector<Poly> next;
      for (Poly &h : factors) {
        if (poly_deg(h) <= 1) {
          next.push_back(std::move(h));
          continue;
        }
        Poly g = poly_gcd(p, h, shifted);
        if (poly_deg(g) > 0 && poly_deg(g) < poly_deg(h)) {
          Poly rest = poly_div_exact(p, h, g);
          next.push_back(std::move(g));
          next.push_back(std::move(rest));
        } else {
          next.push_back(std::move(h));
        }
      }
      factors = std::move(next);
    }
  }
  if (factors.size() != r)
    throw SplitFailure("Berlekamp basis failed to separate all factors");
  std::sort(factors.begin(), factors.end());
  return factors;
}

} // namespace blockcheck

#endif // BLOCKCHECK_MODPOLY_HPP
