#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqtree {

enum class ErrorKind {
  InvalidOrder,
  Dimension,
  InvalidVertex,
  SelfLoop,
  Resource,
  DegeneratePair,
  Membership,
  Capacity,
  Conflict,
  OrderMismatch,
  MalformedPermutation,
  InvalidTerminals,
  ConstructionDefect,
  TheoremViolation,
  InvalidDocument,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every contract violation raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fqtree
