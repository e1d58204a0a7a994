/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by all blockcheck components.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_ERRORS_HPP
#define BLOCKCHECK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blockcheck {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// Group closure grew past the configured enumeration bound.
class BoundExceeded : public Error {
public:
  using Error::Error;
};

/// A generator is malformed (singular matrix, non-bijective permutation, ...).
class InvalidGenerator : public Error {
public:
  using Error::Error;
};

/// An element was passed that does not belong to the group at hand.
class NotInGroup : public Error {
public:
  using Error::Error;
};

/// A cyclotomic operation would exceed the configured conductor bound.
class ConductorOverflow : public Error {
public:
  using Error::Error;
};

/// Eigenspace splitting stalled for the current Dixon prime.
class SplitFailure : public Error {
public:
  using Error::Error;
};

/// An exact division that must succeed (algebraic integrality) failed;
/// signals an internal table bug rather than bad user input.
class NonIntegral : public Error {
public:
  using Error::Error;
};

/// A data file could not be parsed.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Self-certifying metadata in a data file disagrees with the engine.
class MetadataMismatch : public Error {
public:
  using Error::Error;
};

/// An imported character table failed the orthogonality relations.
class OrthogonalityFailure : public Error {
public:
  using Error::Error;
};

/// A double-cover data file lacks the class-projection labels.
class MissingProjection : public Error {
public:
  using Error::Error;
};

/// A split-class value of a self-conjugate partition was requested.
class SplitClassUnsupported : public Error {
public:
  using Error::Error;
};

/// Bar-partition combinatorics is only defined here for odd primes.
class EvenPrimeUnsupported : public Error {
public:
  using Error::Error;
};

/// Defect-group exponent of a weight-0 block was requested.
class ZeroWeight : public Error {
public:
  using Error::Error;
};

/// A report or data file could not be written.
class IOError : public Error {
public:
  using Error::Error;
};

} // namespace blockcheck

#endif // BLOCKCHECK_ERRORS_HPP
