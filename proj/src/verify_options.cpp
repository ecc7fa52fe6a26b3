#include "braceblock/verify_options.hpp"

#include <charconv>

#include "braceblock/error.hpp"

namespace braceblock {

std::string to_string(CheckMode mode) {
  return mode == CheckMode::Exhaustive ? "exhaustive" : "sampled";
}

namespace {

std::uint64_t parse_u64(std::string_view text, const std::string& whole) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorKind::ParseError, "bad number in mode '" + whole + "'");
  }
  return value;
}

}  // namespace

VerifyOptions VerifyOptions::parse(const std::string& text) {
  if (text == "exhaustive") return exhaustive();
  if (text == "auto") return VerifyOptions{};
  const std::string_view prefix = "sampled:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string_view rest = std::string_view(text).substr(prefix.size());
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, "expected sampled:<seed>:<count>, got '" + text + "'");
    }
    const std::uint64_t seed = parse_u64(rest.substr(0, colon), text);
    const std::uint64_t count = parse_u64(rest.substr(colon + 1), text);
    if (count == 0) throw Error(ErrorKind::ParseError, "sample count must be positive");
    return sampled(seed, count);
  }
  throw Error(ErrorKind::ParseError,
              "mode must be exhaustive, auto or sampled:<seed>:<count>, got '" + text + "'");
}

}  // namespace braceblock
