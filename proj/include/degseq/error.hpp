#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degseq {

enum class ErrorKind {
  InvalidSequence,
  ParseError,
  NotGraphic,
  NotForestSequence,
  NotConnected,
  PreconditionViolated,
  TooLarge,
  Infeasible,
  InternalRepairFailure,
  InternalError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotGraphic: return "NotGraphic";
    case ErrorKind::NotForestSequence: return "NotForestSequence";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::InternalRepairFailure: return "InternalRepairFailure";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures that indicate a bug rather than bad input.
  bool is_internal() const noexcept {
    return kind_ == ErrorKind::InternalRepairFailure ||
           kind_ == ErrorKind::InternalError;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace degseq
