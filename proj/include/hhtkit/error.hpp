#ifndef HHTKIT_ERROR_HPP
#define HHTKIT_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hhtkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical or syntactic problem in an input file; line/column are 1-based.
struct ParseError : Error {
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line(line), column(column) {}
  int line;
  int column;
};

struct SignatureError : Error {
  using Error::Error;
};

// A term is not free for a variable in a formula and the caller demanded it.
struct CaptureViolation : Error {
  using Error::Error;
};

// Raised before an enumeration starts when its computed size exceeds the budget.
struct BudgetExceeded : Error {
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : Error(what + ": requires " + std::to_string(required) + " evaluations, budget is " +
              std::to_string(budget)),
        required(required), budget(budget) {}
  std::uint64_t required;
  std::uint64_t budget;
};

}  // namespace hhtkit

#endif  // HHTKIT_ERROR_HPP
