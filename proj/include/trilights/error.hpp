#pragma once

#include <stdexcept>
#include <string>

namespace trilights {

enum class ErrorKind {
  size,                  // board size outside the supported range
  coordinate,            // (row, column) or button id outside the board
  shape,                 // vector/matrix dimensions disagree
  range,                 // invalid numeric range argument
  oracle_range,          // exhaustive oracle asked for a board that is too large
  parse,                 // malformed textual input
  precondition,          // caller broke an operation's precondition
  construction_failure,  // a constructed object failed its own verification
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trilights
