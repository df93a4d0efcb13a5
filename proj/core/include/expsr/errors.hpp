#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "expsr/subset.hpp"

namespace expsr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One failed axiom instance. `witness` holds the element indices that
/// falsify the quantified law, in the order they appear in the law.
struct Violation {
  std::string axiom;
  std::vector<Index> witness;

  bool operator==(const Violation&) const = default;
};

std::string to_string(const Violation& v);

class SizeMismatch : public Error {
public:
  using Error::Error;
};

class AxiomViolation : public Error {
public:
  explicit AxiomViolation(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
  std::vector<Violation> violations_;
};

class BaseMismatch : public Error {
public:
  using Error::Error;
};

class NotProper : public Error {
public:
  NotProper() : Error("predicate requires a proper ideal or subsemimodule") {}
};

class CarrierTooLarge : public Error {
public:
  using Error::Error;
};

class EmptyModule : public Error {
public:
  EmptyModule() : Error("zero-divisors of the zero semimodule are undefined") {}
};

class UnknownName : public Error {
public:
  using Error::Error;
};

class OrderTooLarge : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class CycleDetected : public Error {
public:
  using Error::Error;
};

class InvalidGraph : public Error {
public:
  using Error::Error;
};

class ZeroMass : public Error {
public:
  ZeroMass() : Error("total path mass is zero; expectation undefined") {}
};

class TooManyPaths : public Error {
public:
  using Error::Error;
};

}  // namespace expsr
