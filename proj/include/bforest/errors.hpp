#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bforest {

enum class Errc {
  HalfWithoutEvenN,
  OutOfRange,
  EmptySpokes,
  InvalidArgument,
  ZeroPolynomial,
  InexactDivision,
  UnitCircleAmbiguity,
  NonConvergence,
  NotConnected,
  DegenerateSystem,
  NonIntegralResult,
  NonPositiveStructure,
  NotAPerfectSquare,
  NonDivisible,
  OrderExceeded,
  InsufficientTerms,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::HalfWithoutEvenN: return "HalfWithoutEvenN";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::EmptySpokes: return "EmptySpokes";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::UnitCircleAmbiguity: return "UnitCircleAmbiguity";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::NotConnected: return "NotConnected";
    case Errc::DegenerateSystem: return "DegenerateSystem";
    case Errc::NonIntegralResult: return "NonIntegralResult";
    case Errc::NonPositiveStructure: return "NonPositiveStructure";
    case Errc::NotAPerfectSquare: return "NotAPerfectSquare";
    case Errc::NonDivisible: return "NonDivisible";
    case Errc::OrderExceeded: return "OrderExceeded";
    case Errc::InsufficientTerms: return "InsufficientTerms";
  }
  return "Unknown";
}

// Errors that can only come from a broken invariant inside the library
// (as opposed to bad user input or a request outside a method's reach).
constexpr bool is_internal(Errc e) noexcept {
  switch (e) {
    case Errc::InexactDivision:
    case Errc::NonIntegralResult:
    case Errc::NotAPerfectSquare:
    case Errc::NonDivisible:
    case Errc::DegenerateSystem:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bforest
