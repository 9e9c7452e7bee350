#ifndef SCLOSURE_ERROR_HPP
#define SCLOSURE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sclosure {

enum class Errc {
  EmptyGenerators,
  GcdNotOne,
  DimensionMismatch,
  WrongDimension,
  BoxTooSmall,
  NotSubsemigroup,
  NotInS,
  ModuleMismatch,
  RoundCapExceeded,
  DivisionByZero,
  DivisionFailed,
  WitnessNotInRing,
  WitnessNotOverNormalization,
  InvalidInput,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::EmptyGenerators: return "EmptyGenerators";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::BoxTooSmall: return "BoxTooSmall";
    case Errc::NotSubsemigroup: return "NotSubsemigroup";
    case Errc::NotInS: return "NotInS";
    case Errc::ModuleMismatch: return "ModuleMismatch";
    case Errc::RoundCapExceeded: return "RoundCapExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DivisionFailed: return "DivisionFailed";
    case Errc::WitnessNotInRing: return "WitnessNotInRing";
    case Errc::WitnessNotOverNormalization: return "WitnessNotOverNormalization";
    case Errc::InvalidInput: return "InvalidInput";
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

}  // namespace sclosure

#endif  // SCLOSURE_ERROR_HPP
