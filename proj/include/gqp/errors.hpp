#pragma once

#include <stdexcept>
#include <string>

namespace gqp {

// Error taxonomy. Everything a caller can recover from is one of these four;
// anything else escaping the library is a bug.
//
//   input_error        malformed or out-of-range user input (bad file, bad index,
//                      mismatched spaces, invalid model parameters)
//   precondition_error a documented precondition of an operation fails on
//                      otherwise well-formed data (e.g. deriving an event
//                      relation from a structure with no strict constant pair)
//   budget_error       an enumeration or check would exceed the configured cap;
//                      the message names the offending count and the cap
//   parse_error        text-format syntax error; carries line/column
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
  parse_error(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}

  std::size_t line;
  std::size_t column;
};

}  // namespace gqp
