#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subord_lab {

enum class ErrorKind {
  Domain,
  BadArgument,
  Unsupported,
  TooCloseToBoundary,
  NonIntegerWinding,
  StencilOutOfDomain,
  NotRealOnAxis,
  DenominatorVanishes,
  BranchCut,
  QuadratureFailure,
  NearZeroDenominator,
  PoleAtBoundary,
  Parse,
  GateFailed,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::BadArgument: return "BadArgument";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::TooCloseToBoundary: return "TooCloseToBoundary";
    case ErrorKind::NonIntegerWinding: return "NonIntegerWinding";
    case ErrorKind::StencilOutOfDomain: return "StencilOutOfDomain";
    case ErrorKind::NotRealOnAxis: return "NotRealOnAxis";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::BranchCut: return "BranchCut";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::NearZeroDenominator: return "NearZeroDenominator";
    case ErrorKind::PoleAtBoundary: return "PoleAtBoundary";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::GateFailed: return "GateFailed";
  }
  return "Error";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace subord_lab
