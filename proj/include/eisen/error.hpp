#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eisen {

enum class Errc {
  InvalidArgument,
  NoRepresentation,
  Degenerate,
  InvariantViolation,
  InvalidParams,
  NonDivisible,
  NotRepresentable,
  NotConcyclic,
  ConstructionFailed,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NoRepresentation: return "NoRepresentation";
    case Errc::Degenerate: return "Degenerate";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NonDivisible: return "NonDivisible";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::NotConcyclic: return "NotConcyclic";
    case Errc::ConstructionFailed: return "ConstructionFailed";
  }
  return "Unknown";
}

}  // namespace eisen
