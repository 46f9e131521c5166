#pragma once

#include <stdexcept>
#include <string>

namespace passhom {

enum class ErrorCode {
  DimensionMismatch,
  NotSeifert,
  EntryOverflow,
  SyntaxError,
  UnknownBandName,
  SelfCrossing,
  DuplicateTwistDeclaration,
  MissingSurfaceHeader,
  NotPrimitive,
  ZeroClass,
  NotFormPreserving,
  IndexOutOfRange,
  OddParity,
  NotEquivalent,
};

const char* to_string(ErrorCode code) noexcept;

// Single exception type for the whole library.  Parse errors carry a
// 1-based line/column; everything else leaves them at zero.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Error(ErrorCode code, const std::string& message, int line, int column)
      : std::runtime_error(std::string(to_string(code)) + " at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        code_(code),
        line_(line),
        column_(column) {}

  ErrorCode code() const noexcept { return code_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace passhom
