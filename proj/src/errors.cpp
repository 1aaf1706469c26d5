#include "gs/errors.hpp"

namespace gs {

const char* Error::code_name() const {
  switch (code_) {
    case Err::ModeMismatch: return "ModeMismatch";
    case Err::UnknownGenerator: return "UnknownGenerator";
    case Err::TableNotAGroup: return "TableNotAGroup";
    case Err::OrderCapExceeded: return "OrderCapExceeded";
    case Err::InvalidPartition: return "InvalidPartition";
    case Err::EmptySet: return "EmptySet";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::GroupTooLarge: return "GroupTooLarge";
    case Err::TooLarge: return "TooLarge";
    case Err::SubsetCountCapExceeded: return "SubsetCountCapExceeded";
    case Err::HypothesisFails: return "HypothesisFails";
    case Err::IdentityWord: return "IdentityWord";
    case Err::EmptyStar: return "EmptyStar";
    case Err::ContainsIdentity: return "ContainsIdentity";
    case Err::ColorOutOfRange: return "ColorOutOfRange";
    case Err::PartialConfiguration: return "PartialConfiguration";
    case Err::MissingCosetColor: return "MissingCosetColor";
    case Err::QTooSmall: return "QTooSmall";
    case Err::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case Err::SearchCapExceeded: return "SearchCapExceeded";
    case Err::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool Error::is_cap_error() const {
  switch (code_) {
    case Err::OrderCapExceeded:
    case Err::GroupTooLarge:
    case Err::TooLarge:
    case Err::SubsetCountCapExceeded:
    case Err::StateSpaceTooLarge:
    case Err::SearchCapExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace gs
