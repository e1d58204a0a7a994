/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in cyclotomic integer rings Z[zeta_e].
 *
 * A value is a coefficient vector of length phi(e) over the power basis
 * 1, zeta, ..., zeta^{phi(e)-1} of Z[x]/(Phi_e), tagged with its conductor
 * e.  Values of different conductors combine by lifting into the least
 * common multiple; lifting zeta_e -> zeta_E^{E/e} is a table lookup into a
 * per-conductor cache of reduced monomials x^j mod Phi_e.
 *
 * Character-table work keeps each value at a small conductor (the order of
 * its class) and only lift-adds into wide accumulators, so products are
 * always taken at small conductors; this is what makes exact orthogonality
 * verification cheap even when the group exponent is in the thousands.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_CYCLOTOMIC_HPP
#define BLOCKCHECK_CYCLOTOMIC_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "blockcheck/arith.hpp"
#include "blockcheck/errors.hpp"

namespace blockcheck {

/// Coefficients of the e-th cyclotomic polynomial Phi_e, low degree first,
/// computed by exact division of x^e - 1 by all Phi_d with d | e, d < e.
inline const std::vector<i64> &cyclotomic_polynomial(i64 e) {
  static std::map<i64, std::vector<i64>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(e);
  if (it != cache.end())
    return it->second;
  // Exact division f / g for monic g over Z, low degree first.
  auto div_exact = [](std::vector<i64> f, const std::vector<i64> &g) {
    std::size_t df = f.size() - 1, dg = g.size() - 1;
    std::vector<i64> q(df - dg + 1, 0);
    for (std::size_t k = df - dg + 1; k-- > 0;) {
      i64 c = f[k + dg];
      q[k] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dg; ++j)
          f[k + j] -= c * g[j];
    }
    return q;
  };
  // Build by recursion on divisors; iterative to keep the lock simple.
  std::function<const std::vector<i64> &(i64)> get = [&](i64 n) -> const std::vector<i64> & {
    auto hit = cache.find(n);
    if (hit != cache.end())
      return hit->second;
    std::vector<i64> f(static_cast<std::size_t>(n) + 1, 0);
    f[0] = -1;
    f[static_cast<std::size_t>(n)] = 1; // x^n - 1
    for (i64 d : divisors(n))
      if (d < n)
        f = div_exact(std::move(f), get(d));
    return cache.emplace(n, std::move(f)).first->second;
  };
  return get(e);
}

/// Per-conductor reduction data: x^j mod Phi_e for all 0 <= j < e (and at
/// least up to 2*phi(e)-2, whichever is larger), as rows of length phi(e).
class CycloBasis {
public:
  explicit CycloBasis(i64 e) : e_(e), phi_(euler_phi(e)) {
    const std::vector<i64> &Phi = cyclotomic_polynomial(e);
    std::size_t phi = static_cast<std::size_t>(phi_);
    std::size_t nrows = std::max<std::size_t>(static_cast<std::size_t>(e),
                                              2 * phi >= 1 ? 2 * phi - 1 : 1);
    rows_.assign(nrows, std::vector<i64>(phi, 0));
    rows_[0][0] = 1;
    for (std::size_t j = 1; j < nrows; ++j) {
      // rows_[j] = x * rows_[j-1] mod Phi_e
      std::vector<i64> &r = rows_[j];
      const std::vector<i64> &prev = rows_[j - 1];
      i64 lead = prev[phi - 1];
      for (std::size_t k = phi; k-- > 1;)
        r[k] = prev[k - 1];
      r[0] = 0;
      if (lead != 0)
        for (std::size_t k = 0; k < phi; ++k)
          r[k] -= lead * Phi[k]; // Phi is monic of degree phi
    }
  }

  i64 conductor() const { return e_; }
  i64 phi() const { return phi_; }
  const std::vector<i64> &row(std::size_t j) const { return rows_[j]; }

private:
  i64 e_, phi_;
  std::vector<std::vector<i64>> rows_;
};

inline std::shared_ptr<const CycloBasis> cyclo_basis(i64 e) {
  static std::map<i64, std::shared_ptr<const CycloBasis>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(e);
  if (it == cache.end())
    it = cache.emplace(e, std::make_shared<CycloBasis>(e)).first;
  return it->second;
}

/// An element of Z[zeta_e] for the declared conductor e.
class Cyclo {
public:
  Cyclo() : conductor_(1), c_{0} {}
  explicit Cyclo(i64 n) : conductor_(1), c_{n} {}
  Cyclo(i64 conductor, std::vector<i64> coeffs)
      : conductor_(conductor), c_(std::move(coeffs)) {
    if (conductor_ < 1 || static_cast<i64>(c_.size()) != euler_phi(conductor_))
      throw ParseError("cyclotomic coefficient vector has wrong length");
  }

  /// zeta_e^j as a value of conductor e.
  static Cyclo root_power(i64 e, i64 j) {
    auto basis = cyclo_basis(e);
    j %= e;
    if (j < 0)
      j += e;
    return Cyclo(e, basis->row(static_cast<std::size_t>(j)));
  }

  i64 conductor() const { return conductor_; }
  const std::vector<i64> &coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](i64 v) { return v == 0; });
  }
  bool is_integer() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
      if (c_[k] != 0)
        return false;
    return true;
  }
  i64 integer_value() const {
    if (!is_integer())
      throw NonIntegral("cyclotomic value is not a rational integer");
    return c_[0];
  }

  /// The same value rewritten over conductor E (requires conductor | E).
  Cyclo lifted(i64 E) const {
    if (E == conductor_)
      return *this;
    if (E % conductor_ != 0)
      throw ConductorOverflow("cannot lift to a non-multiple conductor");
    auto basis = cyclo_basis(E);
    std::vector<i64> out(static_cast<std::size_t>(basis->phi()), 0);
    i64 step = E / conductor_;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0)
        continue;
      const std::vector<i64> &row =
          basis->row(static_cast<std::size_t>(static_cast<i64>(j) * step));
      for (std::size_t k = 0; k < out.size(); ++k)
        out[k] += c_[j] * row[k];
    }
    return Cyclo(E, std::move(out));
  }

  /// In-place accumulation of n * other, lifting other into this value's
  /// conductor.  The workhorse of orthogonality sums: the accumulator stays
  /// at one wide conductor and each summand is folded in directly.
  void add_scaled(const Cyclo &other, i64 n = 1) {
    if (n == 0 || other.is_zero())
      return;
    if (other.conductor_ == conductor_) {
      for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] += n * other.c_[k];
      return;
    }
    if (conductor_ % other.conductor_ != 0) {
      *this = lifted(std::lcm(conductor_, other.conductor_));
    }
    auto basis = cyclo_basis(conductor_);
    i64 step = conductor_ / other.conductor_;
    for (std::size_t j = 0; j < other.c_.size(); ++j) {
      if (other.c_[j] == 0)
        continue;
      const std::vector<i64> &row =
          basis->row(static_cast<std::size_t>(static_cast<i64>(j) * step));
      for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] += n * other.c_[j] * row[k];
    }
  }

  Cyclo operator+(const Cyclo &o) const {
    i64 L = std::lcm(conductor_, o.conductor_);
    Cyclo r = lifted(L);
    r.add_scaled(o);
    return r;
  }
  Cyclo operator-(const Cyclo &o) const {
    i64 L = std::lcm(conductor_, o.conductor_);
    Cyclo r = lifted(L);
    r.add_scaled(o, -1);
    return r;
  }
  Cyclo operator-() const {
    Cyclo r = *this;
    for (i64 &v : r.c_)
      v = -v;
    return r;
  }
  Cyclo operator*(i64 n) const {
    Cyclo r = *this;
    for (i64 &v : r.c_)
      v *= n;
    return r;
  }

  Cyclo operator*(const Cyclo &o) const {
    i64 L = std::lcm(conductor_, o.conductor_);
    Cyclo a = lifted(L), b = o.lifted(L);
    auto basis = cyclo_basis(L);
    std::size_t phi = a.c_.size();
    std::vector<i64> prod(2 * phi - 1, 0);
    for (std::size_t i = 0; i < phi; ++i) {
      if (a.c_[i] == 0)
        continue;
      for (std::size_t j = 0; j < phi; ++j)
        prod[i + j] += a.c_[i] * b.c_[j];
    }
    std::vector<i64> out(phi, 0);
    for (std::size_t d = 0; d < prod.size(); ++d) {
      if (prod[d] == 0)
        continue;
      const std::vector<i64> &row = basis->row(d);
      for (std::size_t k = 0; k < phi; ++k)
        out[k] += prod[d] * row[k];
    }
    return Cyclo(L, std::move(out));
  }

  /// Galois twist zeta -> zeta^t for gcd(t, conductor) = 1.
  Cyclo galois(i64 t) const {
    t %= conductor_;
    if (t < 0)
      t += conductor_;
    if (std::gcd(t, conductor_) != 1)
      throw ConductorOverflow("galois exponent not coprime to conductor");
    auto basis = cyclo_basis(conductor_);
    std::vector<i64> out(c_.size(), 0);
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0)
        continue;
      const std::vector<i64> &row = basis->row(
          static_cast<std::size_t>((static_cast<i64>(j) * t) % conductor_));
      for (std::size_t k = 0; k < out.size(); ++k)
        out[k] += c_[j] * row[k];
    }
    return Cyclo(conductor_, std::move(out));
  }

  /// Complex conjugation zeta -> zeta^{-1}.
  Cyclo conj() const {
    if (conductor_ == 1)
      return *this;
    return galois(conductor_ - 1);
  }

  /// Exact division by a nonzero rational integer; throws NonIntegral if
  /// any coefficient fails to divide.
  Cyclo divided_by(i64 n) const {
    Cyclo r = *this;
    for (i64 &v : r.c_) {
      if (v % n != 0)
        throw NonIntegral("cyclotomic value is not divisible by " +
                          std::to_string(n));
      v /= n;
    }
    return r;
  }

  bool operator==(const Cyclo &o) const {
    if (conductor_ == o.conductor_)
      return c_ == o.c_;
    i64 L = std::lcm(conductor_, o.conductor_);
    return lifted(L).c_ == o.lifted(L).c_;
  }
  bool operator!=(const Cyclo &o) const { return !(*this == o); }

  /// Deterministic total order used when sorting character rows: compare
  /// coefficient vectors over the common conductor, lexicographically.
  bool operator<(const Cyclo &o) const {
    i64 L = std::lcm(conductor_, o.conductor_);
    return lifted(L).c_ < o.lifted(L).c_;
  }

  /// Human-readable rendering, e.g. "2", "-1+z8-z8^3" (z8 = primitive
  /// eighth root of unity).
  std::string str() const {
    if (is_integer())
      return std::to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      i64 v = c_[j];
      if (v == 0)
        continue;
      if (first) {
        if (v < 0)
          os << "-";
      } else {
        os << (v < 0 ? "-" : "+");
      }
      first = false;
      i64 a = v < 0 ? -v : v;
      if (j == 0) {
        os << a;
        continue;
      }
      if (a != 1)
        os << a << "*";
      os << "z" << conductor_;
      if (j > 1)
        os << "^" << j;
    }
    return os.str();
  }

private:
  i64 conductor_;
  std::vector<i64> c_;
};

inline Cyclo operator*(i64 n, const Cyclo &v) { return v * n; }

} // namespace blockcheck

#endif // BLOCKCHECK_CYCLOTOMIC_HPP
