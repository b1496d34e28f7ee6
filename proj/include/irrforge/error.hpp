#pragma once

#include <stdexcept>
#include <string>

namespace irrforge {

enum class ErrorKind {
  BadIndex,
  CycleOrDisconnected,
  InvalidDegreeSequence,
  InvalidArrangement,
  WrongArity,
  NotSorted,
  BadLabel,
  NotRealizable,
  TooLarge,
  NoValidArrangement,
  DegenerateDenominator,
  CapExceeded,
  InputNotViolated,
  ParseError,
};

const char* to_string(ErrorKind kind);

// Every validation failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Cap violations map to their own CLI exit code.
  bool is_cap() const noexcept {
    return kind_ == ErrorKind::TooLarge || kind_ == ErrorKind::CapExceeded;
  }

 private:
  ErrorKind kind_;
};

}  // namespace irrforge
