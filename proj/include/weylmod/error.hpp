#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace weylmod {

enum class Errc {
  DivisionByZeroPoly,
  FieldMismatch,
  InvalidField,
  InvalidIdeal,
  EnumerationBudgetExceeded,
  IndexOutOfArity,
  UncertifiedIrreducibility,
  InfiniteCharPOrbit,
  NotMaximal,
  ObjectMismatch,
  WindowTooSmall,
  InfiniteDimension,
  WrongCharacteristic,
  DegenerateOrbit,
  NotASkeletonObject,
  NotPrincipal,
  QuotientNotFiniteDimensional,
  DegenerateGenerator,
  WrongBreakOrder,
  RelationViolation,
  ShapeMismatch,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::InvalidField: return "InvalidField";
    case Errc::InvalidIdeal: return "InvalidIdeal";
    case Errc::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case Errc::IndexOutOfArity: return "IndexOutOfArity";
    case Errc::UncertifiedIrreducibility: return "UncertifiedIrreducibility";
    case Errc::InfiniteCharPOrbit: return "InfiniteCharPOrbit";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::ObjectMismatch: return "ObjectMismatch";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::InfiniteDimension: return "InfiniteDimension";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::DegenerateOrbit: return "DegenerateOrbit";
    case Errc::NotASkeletonObject: return "NotASkeletonObject";
    case Errc::NotPrincipal: return "NotPrincipal";
    case Errc::QuotientNotFiniteDimensional: return "QuotientNotFiniteDimensional";
    case Errc::DegenerateGenerator: return "DegenerateGenerator";
    case Errc::WrongBreakOrder: return "WrongBreakOrder";
    case Errc::RelationViolation: return "RelationViolation";
    case Errc::ShapeMismatch: return "ShapeMismatch";
  }
  return "Unknown";
}

// Mathematical precondition failures. The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

// Malformed input documents (exit code 2).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw DomainError(code, what);
}

// Enumeration caps shared by the finite oracles.
struct Limits {
  std::uint64_t max_enum = std::uint64_t{1} << 16;
  std::uint64_t max_oracle = 50'000'000;
  int irreducible_max_degree = 8;
  std::uint64_t irreducible_max_order = 81;

  static Limits from_env() {
    Limits l;
    if (const char* s = std::getenv("WEYLMOD_MAX_ENUM")) {
      char* end = nullptr;
      auto v = std::strtoull(s, &end, 10);
      if (end != s && v > 0) {
        l.max_enum = v;
        l.max_oracle = v;
      }
    }
    return l;
  }
};

}  // namespace weylmod
