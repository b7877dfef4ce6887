#pragma once

#include <stdexcept>
#include <string>

namespace obt {

// Every failure mode the library reports deliberately.  Callers that need to
// branch on the kind of failure should switch on `code` rather than parse the
// message text.
enum class ErrorCode {
  UnknownSurface,
  CatalogCorrupt,
  NotInCatalog,
  CannotCapLast,
  MalformedWord,
  ParseError,
  UnknownGenerator,
  SurfaceMismatch,
  EndpointMismatch,
  WordLengthLimit,
  HypothesisConflict,
  InsufficientResolution,
  WindingOutOfRange,
  OutputCorrupt,
  Internal,
};

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnknownSurface: return "UnknownSurface";
    case ErrorCode::CatalogCorrupt: return "CatalogCorrupt";
    case ErrorCode::NotInCatalog: return "NotInCatalog";
    case ErrorCode::CannotCapLast: return "CannotCapLast";
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::WordLengthLimit: return "WordLengthLimit";
    case ErrorCode::HypothesisConflict: return "HypothesisConflict";
    case ErrorCode::InsufficientResolution: return "InsufficientResolution";
    case ErrorCode::WindingOutOfRange: return "WindingOutOfRange";
    case ErrorCode::OutputCorrupt: return "OutputCorrupt";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace obt
