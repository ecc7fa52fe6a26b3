#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braceblock/io.hpp"
#include "braceblock/verify_options.hpp"

namespace cli {

using braceblock::Json;
using braceblock::VerifyOptions;

enum ExitCode { kPass = 0, kCheckFailed = 1, kInputError = 2, kBoundExceeded = 3 };

/// What a command produced, before it is wrapped in the report envelope.
struct Outcome {
  bool ok = true;
  Json payload = Json::object();
  /// Summary for --export text, one fact per line.
  std::vector<std::string> lines;
  /// Only the graph command fills this.
  std::optional<std::string> dot;
  std::uint64_t triples_checked = 0;
  bool sampled = false;
};

struct BlockArgs {
  std::string family;
  std::string group;
  std::uint32_t modulus = 0;
  std::vector<long long> exponents;
  std::size_t steps = 4;
  std::size_t max_operations = 12;
  std::optional<std::size_t> corrupt;
};

struct YbArgs {
  std::string source;
  std::string group = "c4";
  std::uint32_t modulus = 3;
  std::string which = "corollary";
  long long x = 1;
  long long y = 0;
  long long alpha_power = 0;
  long long beta_power = 0;
  std::uint64_t random_seed = 1;
};

struct GraphArgs {
  std::size_t order = 4;
  bool force = false;
  std::size_t cross_validate = 0;
  std::uint64_t seed = 1;
};

struct VerifyArgs {
  std::string kind;
  std::string input;
  std::string input2;
  std::string group;
  std::uint32_t modulus = 0;
};

Outcome run_block(const BlockArgs& args, const VerifyOptions& options, bool certificate);
Outcome run_yb(const YbArgs& args, const VerifyOptions& options, bool certificate);
Outcome run_graph(const GraphArgs& args);
Outcome run_catalog(const BlockArgs& args);
Outcome run_verify(const VerifyArgs& args, const VerifyOptions& options);

}  // namespace cli
