#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricalc {

/// Domain failures raised by the library. Malformed input (wrong sizes,
/// unparsable data) is reported with std::invalid_argument instead.
enum class ErrorKind {
  Unbounded,
  NotSimple,
  NotPointed,
  TorsionQuotient,
  EmptyPolyhedron,
  NonSpanning,
  LinealityPresent,
  NotInSemigroup,
  AllZero,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Unbounded: return "Unbounded";
  case ErrorKind::NotSimple: return "NotSimple";
  case ErrorKind::NotPointed: return "NotPointed";
  case ErrorKind::TorsionQuotient: return "TorsionQuotient";
  case ErrorKind::EmptyPolyhedron: return "EmptyPolyhedron";
  case ErrorKind::NonSpanning: return "NonSpanning";
  case ErrorKind::LinealityPresent: return "LinealityPresent";
  case ErrorKind::NotInSemigroup: return "NotInSemigroup";
  case ErrorKind::AllZero: return "AllZero";
  }
  return "Unknown";
}

class DomainError : public std::runtime_error {
public:
  DomainError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

private:
  ErrorKind kind_;
};

} // namespace toricalc
