#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zbrace {

enum class ErrorKind {
  NotClosed,
  NoIdentity,
  NotAssociative,
  MissingInverse,
  IndexOutOfRange,
  IdentityMismatch,
  NotLeftDistributive,
  NotRing,
  NotRadical,
  BoundExceeded,
  InadmissibleZ,
  InverseCheckFailed,
  CriterionMismatch,
  SchemaError,
  UnknownObject,
};

std::string_view to_string(ErrorKind kind);

// Every construction failure carries the first counterexample found in
// row-major scan order, so messages are reproducible.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::uint64_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::uint64_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::uint64_t> witness_;
};

}  // namespace zbrace
