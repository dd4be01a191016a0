#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptqm {

enum class ErrorKind {
  NonFinite,
  BrokenPhase,
  ExceptionalPoint,
  ZeroOrNegativeNorm,
  NotNormalized,
  DomainError,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ptqm
