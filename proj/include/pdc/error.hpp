// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace pdc {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax or grammar problem in an input; position is 1-based, 0 = unknown.
struct parse_error : error {
  parse_error(const std::string& msg, int line_ = 0, int col_ = 0)
      : error(line_ > 0 ? std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg
                        : msg),
        line(line_),
        col(col_) {}
  int line = 0;
  int col = 0;
};

// A precondition on the inputs does not hold (bad draft, undeclared variable, ...).
struct validation_error : error {
  using error::error;
};

// Evaluation cannot proceed (unbound variable, open tuplix where a closed one is required).
struct eval_error : error {
  using error::error;
};

// An agent attempted an operation reserved for another agent.
struct permission_error : error {
  using error::error;
};

// An operation is not legal in the object's current state.
struct state_error : error {
  using error::error;
};

}  // namespace pdc
