#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotperm {

enum class Errc {
  MalformedInput,
  NotABijection,
  HasFixedPoint,
  SameComponent,
  OddCrossingCount,
  SyntaxError,
  SlotOutOfRange,
  NotAKink,
  TooSmall,
  NotACycle,
  SupportNotInvariant,
  CapExceeded,
  NoSeriesRoot,
  InternalInconsistency,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::NotABijection: return "NotABijection";
    case Errc::HasFixedPoint: return "HasFixedPoint";
    case Errc::SameComponent: return "SameComponent";
    case Errc::OddCrossingCount: return "OddCrossingCount";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SlotOutOfRange: return "SlotOutOfRange";
    case Errc::NotAKink: return "NotAKink";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotACycle: return "NotACycle";
    case Errc::SupportNotInvariant: return "SupportNotInvariant";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NoSeriesRoot: return "NoSeriesRoot";
    case Errc::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace knotperm
