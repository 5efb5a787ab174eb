#pragma once

#include <stdexcept>
#include <string>

namespace grass {

enum class Errc {
  UnsupportedOrder,
  DegreeTooLarge,
  BadShape,
  BadArguments,
  AmbientMismatch,
  TooLargeToEnumerate,
  ConditionNotMet,
  DimensionMismatch,
  EmptyAfterRestriction,
  DiagramMismatch,
  NotACwc,
  LengthMismatch,
  NotRref,
  ParameterMismatch,
  RankRestrictionViolated,
  GuardFailed,
  OddDeltaUnsupported,
  NotInRegistry,
  TooLarge,
  ParseError,
  DuplicateCodeword,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace grass
