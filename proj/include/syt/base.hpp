#pragma once

/*
 * Shared basics for the syt library: exact arithmetic aliases and the
 * library-wide error type. All counting is done with arbitrary-precision
 * integers; rationals appear only where a formula is evaluated exactly and
 * then asserted to be integral.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace syt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Distinct error kinds so tests and the CLI can tell precondition failures
// apart without parsing messages.
enum class errc {
  bad_shape,          // not a partition, empty, or wrong kind of shape
  bad_entries,        // entries are not a permutation of 1..N
  row_order,          // a row is not strictly increasing
  column_order,       // a column is not strictly increasing
  not_rectangular,    // operation requires all parts equal
  not_distinct,       // operation requires strictly decreasing parts
  invalid_arrows,     // arrow array fails validation or cannot be decoded
  bad_dyck,           // not a balanced U/D word staying weakly above y=x
  bad_sigma,          // not a permutation of 1..k
  bad_canon_word,     // word is not a valid interleaving (see message)
  bad_labeling,       // grid is not an order-preserving bijection onto 1..N
  descents_not_contained,  // block resort called with Des(T) not inside S
  budget_exceeded,    // enumeration would visit more tableaux than allowed
  unknown_suite,      // verification suite name not recognized
  bad_argument,       // malformed input (files, words, ranges)
  iteration_guard,    // descent-transport iteration exceeded its guard
  internal,           // invariant the library itself must uphold was broken
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

// Internal invariant check that must never fire on any input accepted by the
// public preconditions. Kept as a real check (not assert) so release builds
// abort loudly instead of continuing with corrupt state.
inline void check_internal(bool ok, const char* what) {
  if (!ok) fail(errc::internal, std::string("internal invariant broken: ") + what);
}

}  // namespace syt
