#pragma once

#include <stdexcept>
#include <string>

namespace gs {

enum class Err {
  ModeMismatch,
  UnknownGenerator,
  TableNotAGroup,
  OrderCapExceeded,
  InvalidPartition,
  EmptySet,
  AmbientMismatch,
  GroupTooLarge,
  TooLarge,
  SubsetCountCapExceeded,
  HypothesisFails,
  IdentityWord,
  EmptyStar,
  ContainsIdentity,
  ColorOutOfRange,
  PartialConfiguration,
  MissingCosetColor,
  QTooSmall,
  StateSpaceTooLarge,
  SearchCapExceeded,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

  /// Stable error-code string used in CLI reports.
  const char* code_name() const;

  /// True for resource-cap errors (CLI exit code 3).
  bool is_cap_error() const;

 private:
  Err code_;
};

}  // namespace gs
