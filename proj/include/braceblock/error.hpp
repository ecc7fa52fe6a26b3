#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace braceblock {

enum class ErrorKind {
  ElementNotInCarrier,
  InvalidGroup,
  KNotCentral,
  KNotInA,
  AModKNotAbelian,
  NotAHomomorphism,
  ImageEscapesA,
  GeneratorsIncomplete,
  PairMismatch,
  DeltaEscapesK,
  NotClassTwo,
  NotBilinear,
  NonvanishingOnK,
  ValueOutsideK,
  ValidationFailed,
  CarrierMismatch,
  NotAGroup,
  NotASkewBrace,
  NotAnEndomorphism,
  ImageNotAbelian,
  BoundExceeded,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind next to the usual message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace braceblock
