#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace avgdeg {

enum class Errc {
  Parse,
  InvalidArgument,
  NotInDk,
  ROutOfRange,
  NoQualifyingIndex,
  SizeLimit,
  PreconditionViolation,
  EmptySet,
  NotATree,
  HypothesisNotSatisfied,
  Unreachable,
  IsomorphismMismatch,
  Internal,
};

constexpr std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::Parse: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotInDk: return "NotInDk";
    case Errc::ROutOfRange: return "ROutOfRange";
    case Errc::NoQualifyingIndex: return "NoQualifyingIndex";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::EmptySet: return "EmptySet";
    case Errc::NotATree: return "NotATree";
    case Errc::HypothesisNotSatisfied: return "HypothesisNotSatisfied";
    case Errc::Unreachable: return "Unreachable";
    case Errc::IsomorphismMismatch: return "IsomorphismMismatch";
    case Errc::Internal: return "InternalError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Input error tied to a 1-based line of the offending text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Internal invariant check that stays on in release builds.
inline void ensure(bool cond, Errc code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace avgdeg
