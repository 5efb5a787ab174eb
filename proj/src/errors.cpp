#include "grass/errors.hpp"

namespace grass {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::BadShape: return "BadShape";
    case Errc::BadArguments: return "BadArguments";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case Errc::ConditionNotMet: return "ConditionNotMet";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptyAfterRestriction: return "EmptyAfterRestriction";
    case Errc::DiagramMismatch: return "DiagramMismatch";
    case Errc::NotACwc: return "NotACwc";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotRref: return "NotRref";
    case Errc::ParameterMismatch: return "ParameterMismatch";
    case Errc::RankRestrictionViolated: return "RankRestrictionViolated";
    case Errc::GuardFailed: return "GuardFailed";
    case Errc::OddDeltaUnsupported: return "OddDeltaUnsupported";
    case Errc::NotInRegistry: return "NotInRegistry";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateCodeword: return "DuplicateCodeword";
  }
  return "Unknown";
}

}  // namespace grass
