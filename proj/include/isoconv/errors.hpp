#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isoconv {

enum class ErrorKind {
  NonFinite,
  NonPositiveDeterminant,
  NotSymmetric,
  NotPositiveDefinite,
  DomainError,
  NotIsochoric,
  RegistrationFailed,
  DegenerateStencil,
  UnknownEnergy,
  ParamOutOfRange,
  InvalidConfig,
  SyntaxError,
  UnknownIdentifier,
  ArityError,
  UnboundVariable,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying the 0-based byte offset into the source string.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected)
      : Error(ErrorKind::SyntaxError,
              "at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NonPositiveDeterminant: return "NonPositiveDeterminant";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotIsochoric: return "NotIsochoric";
    case ErrorKind::RegistrationFailed: return "RegistrationFailed";
    case ErrorKind::DegenerateStencil: return "DegenerateStencil";
    case ErrorKind::UnknownEnergy: return "UnknownEnergy";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
  }
  return "Unknown";
}

}  // namespace isoconv
