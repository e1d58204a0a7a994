/**
 * @file element.hpp
 * @brief Group elements: permutations and invertible matrices over SmallField.
 *
 * An element is a flat byte payload interpreted through a GroupContext:
 *   - permutations of degree d store the image tuple (0-based), d bytes;
 *   - d x d matrices store row-major field-element codes, d*d bytes.
 *
 * The byte payload is also the canonical comparison order required for
 * deterministic class representatives: image-tuple lexicographic for
 * permutations, row-major code lexicographic for matrices.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_ELEMENT_HPP
#define BLOCKCHECK_ELEMENT_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "blockcheck/errors.hpp"
#include "blockcheck/smallfield.hpp"

namespace blockcheck {

using Element = std::vector<std::uint8_t>;

struct GroupContext {
  enum class Kind { Perm, Matrix } kind = Kind::Perm;
  int degree = 1; // permutation points, or matrix dimension
  std::shared_ptr<const SmallField> field; // null for permutations

  std::size_t payload_size() const {
    return kind == Kind::Perm
               ? static_cast<std::size_t>(degree)
               : static_cast<std::size_t>(degree) * static_cast<std::size_t>(degree);
  }
  bool same_shape(const GroupContext &o) const {
    if (kind != o.kind || degree != o.degree)
      return false;
    if (kind == Kind::Matrix)
      return field->characteristic() == o.field->characteristic() &&
             field->degree() == o.field->degree() &&
             field->defining_polynomial() == o.field->defining_polynomial();
    return true;
  }
};

/// FNV-1a over the payload bytes; elements of one group share a context, so
/// the payload alone is a sound hash key.
struct ElementHash {
  std::size_t operator()(const Element &e) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : e) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline Element identity_element(const GroupContext &ctx) {
  Element e(ctx.payload_size(), 0);
  if (ctx.kind == GroupContext::Kind::Perm) {
    for (int i = 0; i < ctx.degree; ++i)
      e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  } else {
    for (int i = 0; i < ctx.degree; ++i)
      e[static_cast<std::size_t>(i * ctx.degree + i)] = ctx.field->one();
  }
  return e;
}

/// Product a*b.  Permutations compose right to left: (a*b)(i) = a(b(i)).
inline Element mul(const GroupContext &ctx, const Element &a, const Element &b) {
  const int d = ctx.degree;
  Element r(ctx.payload_size());
  if (ctx.kind == GroupContext::Kind::Perm) {
    for (int i = 0; i < d; ++i)
      r[static_cast<std::size_t>(i)] = a[b[static_cast<std::size_t>(i)]];
  } else {
    const SmallField &F = *ctx.field;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        FieldCode s = 0;
        for (int k = 0; k < d; ++k)
          s = F.add(s, F.mul(a[static_cast<std::size_t>(i * d + k)],
                             b[static_cast<std::size_t>(k * d + j)]));
        r[static_cast<std::size_t>(i * d + j)] = s;
      }
  }
  return r;
}

/// Inverse element.  Matrices use Gauss-Jordan elimination over the field;
/// throws InvalidGenerator on singular input.
inline Element inverse(const GroupContext &ctx, const Element &a) {
  const int d = ctx.degree;
  Element r(ctx.payload_size());
  if (ctx.kind == GroupContext::Kind::Perm) {
    for (int i = 0; i < d; ++i)
      r[a[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    return r;
  }
  const SmallField &F = *ctx.field;
  std::vector<FieldCode> m(a.begin(), a.end());
  r = identity_element(ctx);
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int row = col; row < d; ++row)
      if (m[static_cast<std::size_t>(row * d + col)] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0)
      throw InvalidGenerator("matrix is singular");
    if (pivot != col)
      for (int j = 0; j < d; ++j) {
        std::swap(m[static_cast<std::size_t>(pivot * d + j)],
                  m[static_cast<std::size_t>(col * d + j)]);
        std::swap(r[static_cast<std::size_t>(pivot * d + j)],
                  r[static_cast<std::size_t>(col * d + j)]);
      }
    FieldCode piv_inv = F.inv(m[static_cast<std::size_t>(col * d + col)]);
    for (int j = 0; j < d; ++j) {
      m[static_cast<std::size_t>(col * d + j)] =
          F.mul(m[static_cast<std::size_t>(col * d + j)], piv_inv);
      r[static_cast<std::size_t>(col * d + j)] =
          F.mul(r[static_cast<std::size_t>(col * d + j)], piv_inv);
    }
    for (int row = 0; row < d; ++row) {
      if (row == col)
        continue;
      FieldCode c = m[static_cast<std::size_t>(row * d + col)];
      if (c == 0)
        continue;
      for (int j = 0; j < d; ++j) {
        m[static_cast<std::size_t>(row * d + j)] =
            F.sub(m[static_cast<std::size_t>(row * d + j)],
                  F.mul(c, m[static_cast<std::size_t>(col * d + j)]));
        r[static_cast<std::size_t>(row * d + j)] =
            F.sub(r[static_cast<std::size_t>(row * d + j)],
                  F.mul(c, r[static_cast<std::size_t>(col * d + j)]));
      }
    }
  }
  return r;
}

/// Validate a raw payload as a group element; used on generators and on
/// every element read from a data file.
inline void validate_element(const GroupContext &ctx, const Element &e) {
  if (e.size() != ctx.payload_size())
    throw InvalidGenerator("element payload has wrong size");
  if (ctx.kind == GroupContext::Kind::Perm) {
    std::vector<bool> seen(static_cast<std::size_t>(ctx.degree), false);
    for (std::uint8_t img : e) {
      if (img >= ctx.degree || seen[img])
        throw InvalidGenerator("permutation is not a bijection");
      seen[img] = true;
    }
  } else {
    for (std::uint8_t c : e)
      if (c >= ctx.field->size())
        throw InvalidGenerator("matrix entry is not a field element code");
    inverse(ctx, e); // throws InvalidGenerator if singular
  }
}

/// Cycle type of a permutation as a weakly decreasing partition of degree.
inline std::vector<i64> cycle_type(const Element &perm) {
  const std::size_t d = perm.size();
  std::vector<bool> seen(d, false);
  std::vector<i64> type;
  for (std::size_t i = 0; i < d; ++i) {
    if (seen[i])
      continue;
    i64 len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

} // namespace blockcheck

#endif // BLOCKCHECK_ELEMENT_HPP
