#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace condcap {

enum class ErrorKind {
  NomeOutOfRange,
  NonFinite,
  PoleAtZero,
  ModulusOutOfRange,
  ArgOutOfRange,
  CharacteristicPole,
  ImagArgTooLarge,
  PoleAtAlpha,
  ArgBranch,
  GeometryInvalid,
  OutsideLemmaRange,
  LambdaOutOfRange,
  BracketFailure,
  SolveDiverged,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NomeOutOfRange: return "NomeOutOfRange";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::ModulusOutOfRange: return "ModulusOutOfRange";
    case ErrorKind::ArgOutOfRange: return "ArgOutOfRange";
    case ErrorKind::CharacteristicPole: return "CharacteristicPole";
    case ErrorKind::ImagArgTooLarge: return "ImagArgTooLarge";
    case ErrorKind::PoleAtAlpha: return "PoleAtAlpha";
    case ErrorKind::ArgBranch: return "ArgBranch";
    case ErrorKind::GeometryInvalid: return "GeometryInvalid";
    case ErrorKind::OutsideLemmaRange: return "OutsideLemmaRange";
    case ErrorKind::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::SolveDiverged: return "SolveDiverged";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace detail
}  // namespace condcap
