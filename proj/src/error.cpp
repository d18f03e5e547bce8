#include "semitail/error.hpp"

namespace semitail {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::BaseTooSmall: return "BaseTooSmall";
    case Errc::NonPositive: return "NonPositive";
    case Errc::FirstTermNonPositive: return "FirstTermNonPositive";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::EmptyGenerators: return "EmptyGenerators";
    case Errc::DeskScaleExceeded: return "DeskScaleExceeded";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotOfExpectedForm: return "NotOfExpectedForm";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InvalidTuple: return "InvalidTuple";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

}  // namespace semitail
