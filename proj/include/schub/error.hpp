#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace schub {

// Violated internal invariant (an arithmetic/logic bug, never user error).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Malformed user input (bad index, bad word, bad GCM file, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A feature-flagged computation exceeded its configured size budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define SCHUB_INTERNAL_CHECK(cond, msg)                                  \
  do {                                                                   \
    if (!(cond)) {                                                       \
      std::ostringstream oss_;                                           \
      oss_ << "internal invariant violated at " << __FILE__ << ":"       \
           << __LINE__ << ": " << msg;                                   \
      throw ::schub::InternalError(oss_.str());                          \
    }                                                                    \
  } while (0)

#define SCHUB_REQUIRE(cond, msg)                  \
  do {                                            \
    if (!(cond)) {                                \
      std::ostringstream oss_;                    \
      oss_ << msg;                                \
      throw ::schub::DomainError(oss_.str());     \
    }                                             \
  } while (0)

}  // namespace schub
