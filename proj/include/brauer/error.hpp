#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brauer {

/// Failure categories surfaced by the library. The CLI maps them to exit codes.
enum class ErrorKind {
  Domain,
  UnsupportedCharacter,
  UnsupportedChart,
  UnsupportedCharacteristic,
  Unsupported,
  BudgetExceeded,
  NonIsolated,
  NotADE,
  TableMiss,
  DegenerateResidue,
  IndeterminateAtPoint,
  RamifiedAtPoint,
  SingularReduction,
  Cache,
  Component,
  Empty,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace brauer
