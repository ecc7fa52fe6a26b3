#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace braceblock {

enum class CheckMode { Exhaustive, Sampled };

std::string to_string(CheckMode mode);

/// How a verification kernel walks its domain. Auto picks exhaustive or
/// sampled per kernel threshold.
struct VerifyOptions {
  enum class Mode { Auto, Exhaustive, Sampled };

  Mode mode = Mode::Auto;
  std::uint64_t seed = 20220725;
  std::uint64_t samples = 1'000'000;
  /// Unitriangular carriers above this size are never walked exhaustively.
  std::uint64_t unitriangular_exhaustive_bound = 2000;

  static VerifyOptions exhaustive() { return {Mode::Exhaustive, 20220725, 0}; }
  static VerifyOptions sampled(std::uint64_t seed, std::uint64_t count) {
    return {Mode::Sampled, seed, count};
  }

  /// Parses "exhaustive", "auto" or "sampled:<seed>:<count>"; ParseError otherwise.
  static VerifyOptions parse(const std::string& text);

  /// Resolves Auto: exhaustive iff domain_size <= exhaustive_limit.
  CheckMode resolve(std::uint64_t domain_size, std::uint64_t exhaustive_limit) const {
    if (mode == Mode::Exhaustive) return CheckMode::Exhaustive;
    if (mode == Mode::Sampled) return CheckMode::Sampled;
    return domain_size <= exhaustive_limit ? CheckMode::Exhaustive : CheckMode::Sampled;
  }
};

}  // namespace braceblock
