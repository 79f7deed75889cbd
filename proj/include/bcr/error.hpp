#pragma once

#include <stdexcept>
#include <string>

namespace bcr {

enum class ErrorCode {
  EmptyAdaptationSpace,
  RoleSetMismatch,
  UnknownService,
  InvalidModel,
  MissingAttribute,
  MissingCostEntry,
  DuplicateAttribute,
  ZeroScaledCost,
  UnratedTier,
  EmptyRatings,
  OutOfAxis,
  MissingRiskLevel,
  NoViableOption,
  InsufficientOptions,
  SinkWriteError,
  UnboundRole,
  RunCapExceeded,
  TooManyPaths,
  UnknownConfiguration,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorCode code);

// Every failure the engine reports is a bcr::Error carrying a code, so callers
// can branch on the kind without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

// Parse and validation errors point into the scenario document with a
// JSON-pointer style path such as "/goals/1/weight".
class DocumentError : public Error {
 public:
  DocumentError(ErrorCode code, std::string path, const std::string& message)
      : Error(code, (path.empty() ? std::string("/") : path) + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace bcr
