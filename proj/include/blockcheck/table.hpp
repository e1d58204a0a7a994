/**
 * @file table.hpp
 * @brief Exact character tables via the Dixon-Schneider method.
 *
 * Pipeline: the class-multiplication tensor a_{ijk} of the group is
 * computed exactly; its class matrices are simultaneously diagonalised
 * over F_ell for an auxiliary prime ell = 1 (mod exp(G)) with
 * ell > 2*sqrt(|G|); the resulting central characters determine the
 * degrees (a square root mod ell with a unique small representative) and
 * the character values mod ell; finally each value is lifted exactly to
 * Z[zeta_m] (m the class order) by reading off root-of-unity
 * multiplicities through a discrete Fourier sum over the power map.
 *
 * Everything downstream of the tensor is deterministic for a given ell,
 * and ell itself is chosen canonically, so tables are byte-stable across
 * runs.  A SplitFailure at any stage (in theory impossible, in practice a
 * guard against latent bugs) retries with the next admissible prime.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_TABLE_HPP
#define BLOCKCHECK_TABLE_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "blockcheck/arith.hpp"
#include "blockcheck/cyclotomic.hpp"
#include "blockcheck/errors.hpp"
#include "blockcheck/group.hpp"
#include "blockcheck/modpoly.hpp"

namespace blockcheck {

struct ClassInfo {
  i64 order = 1; ///< element order within the class
  i64 size = 1;  ///< number of elements
  std::vector<std::uint32_t> power_map; ///< class of rep^t for 0 <= t < order
};

struct CharRow {
  i64 degree = 1;
  std::vector<Cyclo> values; ///< one per class, conductor = class order
};

struct CharacterTable {
  std::string group_name;
  i64 order = 1;
  i64 exponent = 1;
  std::vector<ClassInfo> classes;
  std::vector<CharRow> rows;

  std::size_t class_count() const { return classes.size(); }

  /// Index of the class of inverse elements of class k.
  std::size_t inverse_class(std::size_t k) const {
    const ClassInfo &c = classes[k];
    return c.power_map[static_cast<std::size_t>(c.order - 1)];
  }
};

/// Smallest prime ell = 1 (mod exponent) with ell^2 > 4*order and
/// ell > after.  Such a prime never divides the group order: every prime
/// q | order also divides the exponent, so ell = 1 (mod q).
inline i64 dixon_prime(i64 exponent, i64 order, i64 after = 0) {
  for (i64 ell = exponent + 1;; ell += exponent) {
    if (ell <= after)
      continue;
    if (ell * ell > 4 * order && is_prime(ell))
      return ell;
  }
}

/// Class multiplication coefficients a[i][j][k] = #{(x,y) in K_i x K_j :
/// xy = z_k} for the fixed class representatives z_k.
inline std::vector<std::vector<std::vector<i64>>>
class_mult_coeffs(const FiniteGroup &G) {
  const std::size_t k = G.class_count();
  std::vector<std::vector<std::vector<i64>>> a(
      k, std::vector<std::vector<i64>>(k, std::vector<i64>(k, 0)));
  const std::uint32_t n = static_cast<std::uint32_t>(G.order());
  for (std::size_t kk = 0; kk < k; ++kk) {
    std::uint32_t z = G.cls(kk).rep;
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint32_t y = G.mul_idx(G.inv_idx(x), z);
      a[G.class_of(x)][G.class_of(y)][kk] += 1;
    }
  }
  return a;
}

namespace detail {

/// Pivot columns of an RREF basis (rows ordered by ascending pivot).
inline std::vector<std::size_t> pivots_of(const std::vector<std::vector<u64>> &rows) {
  std::vector<std::size_t> piv;
  for (const std::vector<u64> &r : rows) {
    std::size_t c = 0;
    while (c < r.size() && r[c] == 0)
      ++c;
    piv.push_back(c);
  }
  return piv;
}

/// Simultaneously diagonalise the class matrices mod ell; returns the k
/// central-character vectors normalised to omega(identity class) = 1,
/// in a deterministic order.
inline std::vector<std::vector<u64>>
split_central_characters(const std::vector<std::vector<std::vector<i64>>> &a,
                         u64 ell) {
  const std::size_t k = a.size();
  std::vector<std::vector<std::vector<u64>>> spaces;
  {
    std::vector<std::vector<u64>> full(k, std::vector<u64>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (std::size_t i = 1; i < k; ++i) {
    bool all_one = std::all_of(spaces.begin(), spaces.end(),
                               [](const auto &V) { return V.size() == 1; });
    if (all_one)
      break;
    // (M_i)_{j,kk} = a_{i,j,kk} mod ell, acting on column vectors indexed
    // by classes; common eigenvectors are the central characters.
    FpMat M = FpMat::zero(k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t kk = 0; kk < k; ++kk)
        M.at(j, kk) = static_cast<u64>(a[i][j][kk] % static_cast<i64>(ell));
    std::vector<std::vector<std::vector<u64>>> next;
    for (std::vector<std::vector<u64>> &V : spaces) {
      const std::size_t d = V.size();
      if (d == 1) {
        next.push_back(std::move(V));
        continue;
      }
      std::vector<std::size_t> piv = pivots_of(V);
      // Restriction A of M to span(V): column r = coordinates of M*V[r].
      FpMat A = FpMat::zero(d);
      for (std::size_t r = 0; r < d; ++r) {
        std::vector<u64> u = mat_vec(ell, M, V[r]);
        std::vector<u64> coord(d);
        for (std::size_t s = 0; s < d; ++s)
          coord[s] = u[piv[s]];
        // span check: u must equal sum coord[s] * V[s]
        for (std::size_t c = 0; c < k; ++c) {
          unsigned __int128 acc = 0;
          for (std::size_t s = 0; s < d; ++s)
            acc += static_cast<unsigned __int128>(coord[s]) * V[s][c];
          if (static_cast<u64>(acc % ell) != u[c])
            throw SplitFailure("class matrix does not preserve subspace");
        }
        for (std::size_t s = 0; s < d; ++s)
          A.at(s, r) = coord[s];
      }
      std::vector<u64> roots = distinct_roots(ell, charpoly(ell, A));
      if (roots.size() <= 1) {
        next.push_back(std::move(V));
        continue;
      }
      std::size_t split_total = 0;
      for (u64 lam : roots) {
        FpMat B = A;
        for (std::size_t s = 0; s < d; ++s)
          B.at(s, s) = (B.at(s, s) + ell - lam) % ell;
        std::vector<std::vector<u64>> ker = kernel_basis(ell, B);
        if (ker.empty())
          throw SplitFailure("eigenvalue with empty eigenspace");
        std::vector<std::vector<u64>> ambient;
        for (const std::vector<u64> &y : ker) {
          std::vector<u64> w(k, 0);
          for (std::size_t s = 0; s < d; ++s) {
            if (y[s] == 0)
              continue;
            for (std::size_t c = 0; c < k; ++c)
              w[c] = (w[c] + mulmod(y[s], V[s][c], ell)) % ell;
          }
          ambient.push_back(std::move(w));
        }
        rref(ell, ambient);
        split_total += ambient.size();
        next.push_back(std::move(ambient));
      }
      if (split_total != d)
        throw SplitFailure("eigenspaces do not fill the subspace");
    }
    spaces = std::move(next);
  }
  std::vector<std::vector<u64>> omegas;
  for (const std::vector<std::vector<u64>> &V : spaces) {
    if (V.size() != 1)
      throw SplitFailure("class matrices did not separate all characters");
    std::vector<u64> v = V[0];
    if (v[0] == 0)
      throw SplitFailure("central character vanishes on the identity class");
    u64 s = inv_mod(static_cast<i64>(v[0]), static_cast<i64>(ell));
    for (u64 &x : v)
      x = mulmod(x, s, ell);
    omegas.push_back(std::move(v));
  }
  return omegas;
}

} // namespace detail

/// Exact character table of G.  Uses the canonical class order from the
/// group engine; rows are sorted by (degree, value vector).
inline CharacterTable character_table(const FiniteGroup &G) {
  const std::size_t k = G.class_count();
  const i64 n = G.order();
  CharacterTable T;
  T.group_name = G.name();
  T.order = n;
  T.exponent = G.exponent();
  for (std::size_t c = 0; c < k; ++c)
    T.classes.push_back(ClassInfo{G.cls(c).order, G.cls(c).size, G.cls(c).power_map});

  std::vector<std::vector<std::vector<i64>>> a = class_mult_coeffs(G);

  i64 after = 0;
  for (int attempt = 0;; ++attempt) {
    i64 ell_i = dixon_prime(T.exponent, n, after);
    after = ell_i;
    u64 ell = static_cast<u64>(ell_i);
    try {
      std::vector<std::vector<u64>> omegas = detail::split_central_characters(a, ell);

      // Degrees: chi(1)^2 = |G| / sum_k omega(k) omega(k*) / |K_k|.
      std::vector<std::size_t> inv_class(k);
      for (std::size_t c = 0; c < k; ++c)
        inv_class[c] = T.inverse_class(c);
      std::vector<i64> degrees;
      for (const std::vector<u64> &v : omegas) {
        u64 denom = 0;
        for (std::size_t c = 0; c < k; ++c) {
          u64 term = mulmod(v[c], v[inv_class[c]], ell);
          term = mulmod(term, static_cast<u64>(inv_mod(T.classes[c].size % ell_i, ell_i)), ell);
          denom = (denom + term) % ell;
        }
        if (denom == 0)
          throw SplitFailure("degenerate degree denominator");
        u64 d2 = mulmod(static_cast<u64>(n % ell_i),
                        static_cast<u64>(inv_mod(static_cast<i64>(denom), ell_i)), ell);
        u64 r;
        try {
          r = sqrt_mod(d2, ell);
        } catch (const Error &) {
          throw SplitFailure("degree is not a square residue");
        }
        u64 d = std::min(r, ell - r);
        if (d == 0 || static_cast<i64>(d) * static_cast<i64>(d) > n)
          throw SplitFailure("degree out of range");
        degrees.push_back(static_cast<i64>(d));
      }
      i64 sumsq = 0;
      for (i64 d : degrees)
        sumsq += d * d;
      if (sumsq != n)
        throw SplitFailure("degree squares do not sum to the group order");

      // Character values mod ell: chi(k) = d * omega(k) / |K_k|.
      std::vector<std::vector<u64>> X(omegas.size(), std::vector<u64>(k));
      for (std::size_t s = 0; s < omegas.size(); ++s)
        for (std::size_t c = 0; c < k; ++c) {
          u64 t = mulmod(omegas[s][c], static_cast<u64>(degrees[s]), ell);
          X[s][c] = mulmod(
              t, static_cast<u64>(inv_mod(T.classes[c].size % ell_i, ell_i)), ell);
        }

      // Exact lift class by class: multiplicity of zeta_m^j in chi(g) is
      // (1/m) sum_t chi(g^t) z^{-jt} with z of order m in F_ell.
      u64 w = primitive_root(ell);
      std::vector<CharRow> rows(omegas.size());
      for (std::size_t s = 0; s < omegas.size(); ++s) {
        rows[s].degree = degrees[s];
        rows[s].values.resize(k, Cyclo(0));
      }
      for (std::size_t c = 0; c < k; ++c) {
        const i64 m = T.classes[c].order;
        u64 z = powmod(w, (ell - 1) / static_cast<u64>(m), ell);
        u64 zi = static_cast<u64>(inv_mod(static_cast<i64>(z), ell_i));
        std::vector<u64> zipow(static_cast<std::size_t>(m));
        zipow[0] = 1;
        for (i64 r = 1; r < m; ++r)
          zipow[static_cast<std::size_t>(r)] =
              mulmod(zipow[static_cast<std::size_t>(r - 1)], zi, ell);
        u64 inv_m = static_cast<u64>(inv_mod(m % ell_i, ell_i));
        const std::vector<std::uint32_t> &pm = T.classes[c].power_map;
        for (std::size_t s = 0; s < X.size(); ++s) {
          i64 multsum = 0;
          Cyclo val(0);
          bool started = false;
          for (i64 j = 0; j < m; ++j) {
            u64 acc = 0;
            for (i64 t = 0; t < m; ++t) {
              u64 term = mulmod(X[s][pm[static_cast<std::size_t>(t)]],
                                zipow[static_cast<std::size_t>((j * t) % m)], ell);
              acc = (acc + term) % ell;
            }
            u64 mj = mulmod(inv_m, acc, ell);
            if (mj == 0)
              continue;
            if (static_cast<i64>(mj) > degrees[s])
              throw SplitFailure("root-of-unity multiplicity exceeds degree");
            multsum += static_cast<i64>(mj);
            Cyclo rp = Cyclo::root_power(m, j);
            if (!started) {
              val = rp * static_cast<i64>(mj);
              started = true;
            } else {
              val.add_scaled(rp, static_cast<i64>(mj));
            }
          }
          if (multsum != degrees[s])
            throw SplitFailure("root-of-unity multiplicities do not sum to degree");
          // Keep the declared conductor equal to the class order even for
          // all-zero values, for a uniform serialised shape.
          rows[s].values[c] = started ? val : Cyclo(m, std::vector<i64>(
                                                           static_cast<std::size_t>(
                                                               euler_phi(m)),
                                                           0));
        }
      }

      std::sort(rows.begin(), rows.end(), [](const CharRow &x, const CharRow &y) {
        if (x.degree != y.degree)
          return x.degree < y.degree;
        for (std::size_t c = 0; c < x.values.size(); ++c) {
          if (x.values[c] != y.values[c])
            return x.values[c] < y.values[c];
        }
        return false;
      });
      T.rows = std::move(rows);
      return T;
    } catch (const SplitFailure &) {
      if (attempt >= 3)
        throw;
    }
  }
}

/// Central character omega_chi(k) = |K_k| chi(k) / chi(1), an algebraic
/// integer; a NonIntegral throw here would indicate a broken table.
inline std::vector<Cyclo> central_character(const CharacterTable &T, std::size_t s) {
  const CharRow &row = T.rows.at(s);
  std::vector<Cyclo> omega;
  omega.reserve(T.class_count());
  for (std::size_t c = 0; c < T.class_count(); ++c)
    omega.push_back((row.values[c] * T.classes[c].size).divided_by(row.degree));
  return omega;
}

/// First and second orthogonality relations, verified exactly over the
/// cyclotomic integers.  Throws OrthogonalityFailure on any mismatch.
inline void verify_orthogonality(const CharacterTable &T) {
  const std::size_t k = T.class_count();
  if (T.rows.size() != k)
    throw OrthogonalityFailure("table is not square");
  const i64 E = T.exponent;
  std::vector<std::vector<Cyclo>> conj_vals(k);
  for (std::size_t s = 0; s < k; ++s) {
    conj_vals[s].reserve(k);
    for (std::size_t c = 0; c < k; ++c)
      conj_vals[s].push_back(T.rows[s].values[c].conj());
  }
  Cyclo zeroE(E, std::vector<i64>(static_cast<std::size_t>(euler_phi(E)), 0));
  for (std::size_t s1 = 0; s1 < k; ++s1)
    for (std::size_t s2 = s1; s2 < k; ++s2) {
      Cyclo acc = zeroE;
      for (std::size_t c = 0; c < k; ++c)
        acc.add_scaled(T.rows[s1].values[c] * conj_vals[s2][c], T.classes[c].size);
      Cyclo expected(s1 == s2 ? T.order : 0);
      if (acc != expected)
        throw OrthogonalityFailure("row orthogonality fails for characters " +
                                   std::to_string(s1) + "," + std::to_string(s2));
    }
  for (std::size_t c1 = 0; c1 < k; ++c1)
    for (std::size_t c2 = c1; c2 < k; ++c2) {
      Cyclo acc = zeroE;
      for (std::size_t s = 0; s < k; ++s)
        acc.add_scaled(T.rows[s].values[c1] * conj_vals[s][c2], 1);
      Cyclo expected(c1 == c2 ? T.order / T.classes[c1].size : 0);
      if (acc != expected)
        throw OrthogonalityFailure("column orthogonality fails for classes " +
                                   std::to_string(c1) + "," + std::to_string(c2));
    }
}

} // namespace blockcheck

#endif // BLOCKCHECK_TABLE_HPP
