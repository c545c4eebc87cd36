#pragma once

#include <stdexcept>
#include <string>

namespace lagcob {

enum class Errc {
  NonPlanar,
  NonPositiveArea,
  MalformedCrossing,
  AreaCountMismatch,
  MalformedPlacement,
  UnknownComponent,
  ParseError,
  PreconditionViolation,
  PatternMismatch,
  OrientationMismatch,
  NotCapShape,
  NotSplitFromRest,
  NonzeroSignedArea,
  NonConstantArea,
  NormalizationFailure,
  InconsistentTrace,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPlanar: return "NonPlanar";
    case Errc::NonPositiveArea: return "NonPositiveArea";
    case Errc::MalformedCrossing: return "MalformedCrossing";
    case Errc::AreaCountMismatch: return "AreaCountMismatch";
    case Errc::MalformedPlacement: return "MalformedPlacement";
    case Errc::UnknownComponent: return "UnknownComponent";
    case Errc::ParseError: return "ParseError";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::PatternMismatch: return "PatternMismatch";
    case Errc::OrientationMismatch: return "OrientationMismatch";
    case Errc::NotCapShape: return "NotCapShape";
    case Errc::NotSplitFromRest: return "NotSplitFromRest";
    case Errc::NonzeroSignedArea: return "NonzeroSignedArea";
    case Errc::NonConstantArea: return "NonConstantArea";
    case Errc::NormalizationFailure: return "NormalizationFailure";
    case Errc::InconsistentTrace: return "InconsistentTrace";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lagcob
