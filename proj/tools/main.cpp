#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "braceblock/error.hpp"
#include "cli.hpp"

namespace {

using braceblock::Error;
using braceblock::ErrorKind;
using braceblock::Json;
using cli::ExitCode;

struct Settings {
  std::string mode = "auto";
  std::string format = "json";
  std::string output;
  bool certificate = false;
};

ExitCode exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BoundExceeded: return cli::kBoundExceeded;
    case ErrorKind::NotASkewBrace:
    case ErrorKind::NotAGroup:
    case ErrorKind::ValidationFailed: return cli::kCheckFailed;
    default: return cli::kInputError;
  }
}

int emit(const Settings& s, const std::string& command, const std::optional<braceblock::VerifyOptions>& options,
         const cli::Outcome& out, int code, double wall_ms) {
  using braceblock::VerifyOptions;
  std::string mode = "auto";
  std::optional<std::uint64_t> seed;
  if (options) {
    if (options->mode == VerifyOptions::Mode::Sampled || out.sampled) {
      mode = "sampled";
      seed = options->seed;
    } else if (options->mode == VerifyOptions::Mode::Exhaustive || code == cli::kPass || code == cli::kCheckFailed) {
      mode = "exhaustive";
    }
  }

  std::string text;
  if (s.format == "json") {
    Json j{{"tool", "braceblock"},
           {"version", std::string(braceblock::library_version())},
           {"command", command},
           {"ok", code == cli::kPass},
           {"exit_code", code},
           {"mode", mode},
           {"triples_checked", out.triples_checked},
           {"wall_time_ms", wall_ms}};
    if (seed) j["seed"] = *seed;
    for (const auto& [k, v] : out.payload.items()) j[k] = v;
    text = j.dump(2) + "\n";
  } else if (s.format == "dot" && out.dot) {
    text = *out.dot;
  } else {
    std::ostringstream os;
    os << "tool: braceblock " << braceblock::library_version() << "\n"
       << "command: " << command << "\n"
       << "mode: " << mode << "\n";
    if (seed) os << "seed: " << *seed << "\n";
    os << "triples_checked: " << out.triples_checked << "\n"
       << "result: " << (code == cli::kPass ? "pass" : code == cli::kCheckFailed ? "fail" : "error") << "\n";
    for (const auto& line : out.lines) os << line << "\n";
    if (out.payload.contains("error")) os << "error: " << out.payload["error"]["message"].get<std::string>() << "\n";
    text = os.str();
  }

  if (s.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(s.output);
    if (!f) {
      std::cerr << "cannot write " << s.output << "\n";
      return cli::kInputError;
    }
    f << text;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brace blocks, skew braces, Yang-Baxter solutions and normalising graphs on finite groups",
               "braceblock"};
  app.set_version_flag("--version", std::string(braceblock::library_version()));
  app.set_config("--config", "", "TOML or INI file with the same options; command-line flags win");
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  app.add_option("--mode", settings.mode, "exhaustive, auto or sampled:<seed>:<count>");
  app.add_option("--export", settings.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--output,-o", settings.output, "write the report here instead of stdout");
  app.add_flag("--certificate", settings.certificate, "include the full verification transcript");

  cli::BlockArgs block;
  auto* block_cmd = app.add_subcommand("block", "build a brace block and verify every ordered pair");
  block_cmd->add_option("family", block.family, "heisenberg, power, endo or koch")->required();
  block_cmd->add_option("--group", block.group, "cN, sN, heisenberg, utM, c9c3 or a .json group file");
  block_cmd->add_option("--modulus", block.modulus, "modulus for heisenberg and utM");
  block_cmd->add_option("--exponents", block.exponents, "exponents n for the power block")->delimiter(',');
  block_cmd->add_option("--steps", block.steps, "iteration steps for koch");
  block_cmd->add_option("--max-operations", block.max_operations, "cap on endomorphisms used by endo");
  block_cmd->add_option("--corrupt", block.corrupt, "test hook: corrupt the table of this operation");

  cli::YbArgs yb;
  auto* yb_cmd = app.add_subcommand("yb", "construct and verify Yang-Baxter solutions");
  yb_cmd->add_option("source", yb.source, "heisenberg, trivial or random")->required();
  yb_cmd->add_option("--group", yb.group, "group for trivial and random");
  yb_cmd->add_option("--modulus", yb.modulus, "modulus of the Heisenberg group");
  yb_cmd->add_option("--which", yb.which, "generic, theorem or corollary");
  yb_cmd->add_option("--x", yb.x, "scaling for the second operation");
  yb_cmd->add_option("--y", yb.y, "scaling for the first operation (generic and two-deformation forms)");
  yb_cmd->add_option("--alpha-power", yb.alpha_power, "alpha = [g,h]^n for the second operation");
  yb_cmd->add_option("--beta-power", yb.beta_power, "beta = [g,h]^n for the first operation");
  yb_cmd->add_option("--random-seed", yb.random_seed, "seed for the random map");

  cli::GraphArgs graph;
  auto* graph_cmd = app.add_subcommand("graph", "normalising graph of the regular subgroups of Sym(n)");
  graph_cmd->add_option("--order", graph.order, "carrier size n")->required();
  graph_cmd->add_flag("--force", graph.force, "allow orders above the enumeration bound");
  graph_cmd->add_option("--cross-validate", graph.cross_validate, "check this many edges and non-edges by brace verification");
  graph_cmd->add_option("--seed", graph.seed, "seed for cross-validation sampling");

  cli::BlockArgs catalog;
  auto* catalog_cmd = app.add_subcommand("catalog", "list catalog entries or export one");
  catalog_cmd->add_option("name", catalog.family, "entry to export");
  catalog_cmd->add_option("--group", catalog.group, "group for power, endo and koch");
  catalog_cmd->add_option("--modulus", catalog.modulus, "modulus for heisenberg and utM");
  catalog_cmd->add_option("--exponents", catalog.exponents, "exponents for power")->delimiter(',');
  catalog_cmd->add_option("--steps", catalog.steps, "iteration steps for koch");
  catalog_cmd->add_option("--max-operations", catalog.max_operations, "cap on endomorphisms for endo");

  cli::VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "verify a JSON document");
  verify_cmd->add_option("kind", verify.kind, "group, operation, brace, yb, endo or bilinear")->required();
  verify_cmd->add_option("--input", verify.input, "JSON document")->required();
  verify_cmd->add_option("--input2", verify.input2, "second operation for brace");
  verify_cmd->add_option("--group", verify.group, "base group for operation and brace");
  verify_cmd->add_option("--modulus", verify.modulus, "modulus for the base group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }

  std::string command;
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();
  if (command == "block") command += " " + block.family;
  if (command == "yb") command += " " + yb.source;
  if (command == "catalog" && !catalog.family.empty()) command += " " + catalog.family;
  if (command == "verify") command += " " + verify.kind;

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };

  std::optional<braceblock::VerifyOptions> options;
  cli::Outcome out;
  try {
    options = braceblock::VerifyOptions::parse(settings.mode);
    if (settings.format == "dot" && !graph_cmd->parsed())
      throw Error(ErrorKind::ParseError, "dot export is only available for graph");
    if (block_cmd->parsed()) out = cli::run_block(block, *options, settings.certificate);
    if (yb_cmd->parsed()) out = cli::run_yb(yb, *options, settings.certificate);
    if (graph_cmd->parsed()) out = cli::run_graph(graph);
    if (catalog_cmd->parsed()) out = cli::run_catalog(catalog);
    if (verify_cmd->parsed()) out = cli::run_verify(verify, *options);
  } catch (const Error& e) {
    std::cerr << "braceblock: " << e.what() << "\n";
    cli::Outcome failed;
    failed.payload["error"] = {{"kind", std::string(braceblock::to_string(e.kind()))}, {"message", e.what()}};
    return emit(settings, command, options, failed, exit_for(e.kind()), elapsed());
  }
  return emit(settings, command, options, out, out.ok ? cli::kPass : cli::kCheckFailed, elapsed());
}
