/**
 * @file report.hpp
 * @brief Uniform result record for conjecture/condition checkers.
 *
 * Every checker returns a CheckReport rather than throwing on mathematical
 * failure: a violated inequality is a *finding*, and surveys must be able
 * to keep going and document it with full witness data.  A report is
 * "not applicable" (with a reason) when a structural precondition fails,
 * e.g. Condition (*) on a group that is not nearly simple; NA counts as a
 * pass for exit-code purposes but is flagged in serialised output.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_REPORT_HPP
#define BLOCKCHECK_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "blockcheck/arith.hpp"

namespace blockcheck {

/// One violated instance of a checked statement.  Integer fields that do
/// not apply to a given check are left at -1.
struct Violation {
  i64 character_index = -1;  ///< table row of the offending character
  i64 character_degree = -1;
  i64 class_index = -1;      ///< class witnessing the violation, if any
  i64 class_order = -1;
  i64 lhs = -1;              ///< violated comparison: lhs vs rhs
  i64 rhs = -1;
  i64 block_defect = -1;     ///< d(B) for block-level checks
  i64 character_defect = -1; ///< def(chi) for defect-based checks
  i64 exponent = -1;         ///< defect-group exponent datum, if block-level
  std::string note;          ///< human-readable statement of what failed
};

struct CheckReport {
  std::string check;
  std::string group;
  i64 prime = 0; ///< 0 for checks that are not prime-specific
  bool applicable = true;
  std::string reason; ///< why not applicable, or informational notes
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  std::string status() const {
    if (!applicable)
      return "NA";
    return violations.empty() ? "PASS" : "FAIL";
  }
};

} // namespace blockcheck

#endif // BLOCKCHECK_REPORT_HPP
