#include "braceblock/error.hpp"

#include <cstdlib>
#include <string>

#include "braceblock/parallel.hpp"

namespace braceblock {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ElementNotInCarrier: return "element-not-in-carrier";
    case ErrorKind::InvalidGroup: return "invalid-group";
    case ErrorKind::KNotCentral: return "K-not-central";
    case ErrorKind::KNotInA: return "K-not-in-A";
    case ErrorKind::AModKNotAbelian: return "A-mod-K-not-abelian";
    case ErrorKind::NotAHomomorphism: return "not-a-homomorphism";
    case ErrorKind::ImageEscapesA: return "image-escapes-A";
    case ErrorKind::GeneratorsIncomplete: return "generators-incomplete";
    case ErrorKind::PairMismatch: return "pair-mismatch";
    case ErrorKind::DeltaEscapesK: return "delta-escapes-K";
    case ErrorKind::NotClassTwo: return "not-class-two";
    case ErrorKind::NotBilinear: return "not-bilinear";
    case ErrorKind::NonvanishingOnK: return "nonvanishing-on-K";
    case ErrorKind::ValueOutsideK: return "value-outside-K";
    case ErrorKind::ValidationFailed: return "validation-failed";
    case ErrorKind::CarrierMismatch: return "carrier-mismatch";
    case ErrorKind::NotAGroup: return "not-a-group";
    case ErrorKind::NotASkewBrace: return "not-a-skew-brace";
    case ErrorKind::NotAnEndomorphism: return "not-an-endomorphism";
    case ErrorKind::ImageNotAbelian: return "image-not-abelian";
    case ErrorKind::BoundExceeded: return "bound-exceeded";
    case ErrorKind::ParseError: return "parse-error";
  }
  return "unknown";
}

unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* cap = std::getenv("BRACEBLOCK_THREADS")) {
    try {
      const long v = std::stol(cap);
      if (v >= 1 && static_cast<unsigned long>(v) < n) n = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // ignore malformed caps
    }
  }
  return n;
}

}  // namespace braceblock
