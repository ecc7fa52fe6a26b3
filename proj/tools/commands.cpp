#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "braceblock/catalog.hpp"
#include "braceblock/error.hpp"
#include "cli.hpp"

namespace cli {

using namespace braceblock;

namespace {

[[noreturn]] void input_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

Json read_json(const std::string& path) {
  if (path.empty()) input_error("missing --input");
  std::ifstream in(path);
  if (!in) input_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    input_error(path + ": " + e.what());
  }
}

std::string triple_text(const FiniteGroup& g, const std::array<Elem, 3>& t) {
  return "(" + g.format(t[0]) + ", " + g.format(t[1]) + ", " + g.format(t[2]) + ")";
}

Json triple_json(const std::optional<std::array<Elem, 3>>& t) {
  if (!t) return nullptr;
  return Json::array({(*t)[0].index, (*t)[1].index, (*t)[2].index});
}

bool is_sampled(const FiniteGroup& g, const VerifyOptions& options) {
  return triple_mode(g, options) == CheckMode::Sampled;
}

CatalogEntry build_entry(const BlockArgs& args) {
  const std::string& f = args.family;
  if (f == "heisenberg") {
    if (args.modulus < 2) input_error("block heisenberg needs --modulus >= 2");
    return heisenberg_block(args.modulus);
  }
  if (f == "power") {
    if (args.group.empty()) input_error("block power needs --group");
    const GroupPtr g = group_from_spec(args.group, args.modulus);
    return args.exponents.empty() ? class_two_power_block(g) : class_two_power_block(g, args.exponents);
  }
  if (f == "endo") {
    if (args.group.empty()) input_error("block endo needs --group");
    const GroupPtr g = group_from_spec(args.group, args.modulus);
    auto endos = enumerate_endomorphisms(g);
    if (endos.size() > args.max_operations) endos.resize(args.max_operations);
    return endo_block_class_two(g, endos);
  }
  if (f == "koch") {
    if (args.group == "s3" || args.group.empty()) return koch_s3(args.steps);
    if (args.group == "c9c3") return koch_c9_c3(args.steps);
    input_error("block koch supports --group s3 or c9c3");
  }
  input_error("unknown block family \"" + f + "\" (heisenberg, power, endo, koch)");
}

GroupOperation corrupted(const GroupOperation& op, const std::string& label) {
  if (op.order() < 3) input_error("--corrupt needs a carrier of at least 3 elements");
  auto table = op.table();
  const std::size_t n = op.order();
  std::swap(table[n + 1], table[n + 2]);
  return GroupOperation::from_table(op.base(), std::move(table), ExplicitProvenance{"corrupted " + label});
}

}  // namespace

Outcome run_block(const BlockArgs& args, const VerifyOptions& options, bool certificate) {
  CatalogEntry entry = build_entry(args);
  if (args.corrupt) {
    if (*args.corrupt >= entry.operations.size()) input_error("--corrupt index out of range");
    auto& op = entry.operations[*args.corrupt];
    op = corrupted(op, entry.labels[*args.corrupt]);
    entry.labels[*args.corrupt] += " (corrupted)";
  }
  Outcome out;
  out.sampled = is_sampled(*entry.group, options);
  const auto& ops = entry.operations;
  const std::size_t n = ops.size();

  // Every ordered pair (dot, circ), the diagonal included.
  struct Cell {
    bool ok = false;
    std::optional<std::array<Elem, 3>> counterexample;
    std::string error;
  };
  std::vector<Cell> cells(n * n);
  Json reports = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      try {
        const auto r = verify_skew_brace(ops[i], ops[j], options);
        out.triples_checked += r.triples_checked;
        if (certificate) reports.push_back(to_json(r));
        cells[i * n + j] = {r.skew_ok, r.skew_ok ? std::nullopt : r.counterexample, {}};
        if (i == j) continue;
        if (r.skew_ok) {
          cells[j * n + i] = {r.biskew_ok, r.counterexample, {}};
        } else {
          const auto back = verify_skew_brace(ops[j], ops[i], options);
          out.triples_checked += back.triples_checked;
          if (certificate) reports.push_back(to_json(back));
          cells[j * n + i] = {back.skew_ok, back.counterexample, {}};
        }
      } catch (const Error& e) {
        cells[i * n + j] = {false, std::nullopt, e.what()};
        cells[j * n + i] = {false, std::nullopt, e.what()};
      }
    }

  Json pairs = Json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Cell& c = cells[i * n + j];
      passed += c.ok;
      Json p{{"dot", entry.labels[i]}, {"circ", entry.labels[j]}, {"ok", c.ok}, {"counterexample", triple_json(c.counterexample)}};
      if (!c.error.empty()) p["error"] = c.error;
      pairs.push_back(std::move(p));
      if (!c.ok) {
        std::string line = "pair " + entry.labels[i] + " | " + entry.labels[j] + ": FAIL";
        if (c.counterexample) line += " at " + triple_text(*entry.group, *c.counterexample);
        if (!c.error.empty()) line += " (" + c.error + ")";
        out.lines.push_back(line);
      }
    }
  out.ok = passed == n * n;

  CatalogEntry rest = entry;
  std::erase_if(rest.expectations, [](const Expectation& e) { return e.kind == ExpectationKind::BraceBlock; });
  Json expectations = Json::array();
  for (const auto& r : check_entry(rest, options)) {
    out.triples_checked += r.triples_checked;
    out.ok = out.ok && r.passed;
    expectations.push_back(to_json(r));
    out.lines.push_back("expectation " + to_string(r.expectation.kind) + ": " + (r.passed ? "pass" : "FAIL " + r.detail));
  }

  out.lines.insert(out.lines.begin(), {"entry: " + entry.name, "group: " + entry.group->name(),
                                       "operations: " + std::to_string(n),
                                       "ordered_pairs: " + std::to_string(n * n),
                                       "pairs_passed: " + std::to_string(passed)});
  out.payload = {{"entry", entry.name},
                 {"group", to_json(*entry.group)},
                 {"operations", entry.labels},
                 {"ordered_pairs", n * n},
                 {"pairs_passed", passed},
                 {"pairs", pairs},
                 {"expectations", expectations}};
  if (certificate) out.payload["brace_reports"] = reports;
  return out;
}

Outcome run_yb(const YbArgs& args, const VerifyOptions& options, bool certificate) {
  std::vector<YBMap> maps;
  std::vector<std::pair<std::size_t, std::size_t>> inverse_pairs;
  std::optional<bool> matches_generic;
  GroupPtr group;

  if (args.source == "heisenberg") {
    if (args.modulus < 2) input_error("yb heisenberg needs --modulus >= 2");
    group = FiniteGroup::heisenberg(args.modulus);
    const PairPtr pair = class_two_pair(group);
    auto bilinear = [&](long long power) {
      return power == 0 ? trivial_bilinear(pair) : bilinear_from_commutator_power(pair, power);
    };
    const Deformation circ{heisenberg_psi(pair, args.x), bilinear(args.alpha_power)};
    const Deformation dot{heisenberg_psi(pair, args.y), bilinear(args.beta_power)};
    const auto circ_op = deformed_operation(pair, circ.endo, circ.alpha, "circ");
    const auto dot_op = deformed_operation(pair, dot.endo, dot.alpha, "dot");
    if (args.which == "generic") {
      auto s = solutions_from_brace(dot_op, circ_op, false, options);
      maps = {std::move(s.r), std::move(s.r_prime)};
      inverse_pairs = {{0, 1}};
    } else if (args.which == "theorem") {
      auto s = explicit_solutions_thm(pair, circ, dot);
      const auto generic = solutions_from_brace(dot_op, circ_op, true, options);
      matches_generic = maps_equal(s.r, generic.r) && maps_equal(s.r_prime, generic.r_prime);
      maps = {std::move(s.r), std::move(s.r_prime)};
      inverse_pairs = {{0, 1}};
    } else if (args.which == "corollary") {
      auto s = explicit_solutions_cor(pair, circ);
      const auto generic = solutions_from_brace(GroupOperation::dot(group), circ_op, true, options);
      matches_generic = maps_equal(s.r, generic.r) && maps_equal(s.r_prime, generic.r_prime);
      maps = {std::move(s.r), std::move(s.r_prime), std::move(s.r_tilde), std::move(s.r_tilde_prime)};
      inverse_pairs = {{0, 1}, {2, 3}};
    } else {
      input_error("--which must be generic, theorem or corollary");
    }
  } else if (args.source == "trivial") {
    group = group_from_spec(args.group, args.modulus);
    const auto dot = GroupOperation::dot(group);
    auto s = solutions_from_brace(dot, dot, false, options);
    maps = {std::move(s.r), std::move(s.r_prime)};
    inverse_pairs = {{0, 1}};
  } else if (args.source == "random") {
    group = group_from_spec(args.group, args.modulus);
    const std::size_t n = group->order();
    if (n > 125) throw Error(ErrorKind::BoundExceeded, "random maps are limited to 125 elements");
    std::vector<std::uint32_t> images(n * n);
    std::iota(images.begin(), images.end(), 0u);
    std::mt19937_64 rng(args.random_seed);
    std::shuffle(images.begin(), images.end(), rng);
    maps.push_back(YBMap::from_permutation(n, std::move(images), "random"));
  } else {
    input_error("unknown yb source \"" + args.source + "\" (heisenberg, trivial, random)");
  }

  Outcome out;
  Json solutions = Json::array(), transcript = Json::array();
  out.lines.push_back("group: " + group->name());
  out.lines.push_back("solutions: " + std::to_string(maps.size()));
  for (const auto& r : maps) {
    const auto report = verify_ybe(r, options);
    const bool nondegenerate = verify_nondegenerate(r);
    const bool involutive = is_involutive(r);
    out.triples_checked += report.triples_checked;
    out.sampled = out.sampled || report.mode == CheckMode::Sampled;
    out.ok = out.ok && report.ok() && nondegenerate;
    Json s{{"label", r.label()}, {"report", to_json(report)}, {"nondegenerate", nondegenerate}, {"involutive", involutive}};
    if (r.is_materialized()) s["solution"] = to_json(r);
    solutions.push_back(std::move(s));
    std::string line = "solution " + r.label() + ": braid " + (report.braid_ok ? "pass" : "FAIL") +
                       ", bijective " + (report.bijective ? "yes" : "no") + ", nondegenerate " +
                       (nondegenerate ? "yes" : "no") + ", involutive " + (involutive ? "yes" : "no");
    if (report.witness) line += ", witness " + triple_text(*group, *report.witness);
    out.lines.push_back(line);
    if (certificate) {
      transcript.push_back({{"check", "bijective"}, {"subject", r.label()}, {"result", report.bijective}});
      transcript.push_back({{"check", "braid relation"},
                            {"subject", r.label()},
                            {"result", report.braid_ok},
                            {"mode", to_string(report.mode)},
                            {"triples_checked", report.triples_checked},
                            {"witness", triple_json(report.witness)}});
      transcript.push_back({{"check", "non-degenerate"}, {"subject", r.label()}, {"result", nondegenerate}});
      transcript.push_back({{"check", "involutive"}, {"subject", r.label()}, {"result", involutive}});
    }
  }
  Json inverses = Json::array();
  for (const auto& [a, b] : inverse_pairs) {
    const bool inv = inverse_pair(maps[a], maps[b]);
    out.ok = out.ok && inv;
    inverses.push_back({{"r", maps[a].label()}, {"r_prime", maps[b].label()}, {"inverse", inv}});
    out.lines.push_back("inverse pair " + maps[a].label() + " " + maps[b].label() + ": " + (inv ? "pass" : "FAIL"));
    if (certificate)
      transcript.push_back({{"check", "mutually inverse"}, {"subject", maps[a].label() + " " + maps[b].label()}, {"result", inv}});
  }
  out.payload = {{"group", to_json(*group)}, {"solutions", solutions}, {"inverse_pairs", inverses}};
  if (maps.size() >= 2) {
    const bool same = maps_equal(maps[0], maps[1]);
    out.payload["r_equals_r_prime"] = same;
    out.lines.push_back(std::string("r equals r': ") + (same ? "yes" : "no"));
  }
  if (matches_generic) {
    out.ok = out.ok && *matches_generic;
    out.payload["matches_generic"] = *matches_generic;
    out.lines.push_back(std::string("matches generic construction: ") + (*matches_generic ? "yes" : "no"));
  }
  if (certificate) out.payload["transcript"] = transcript;
  return out;
}

Outcome run_graph(const GraphArgs& args) {
  if (args.order == 0) input_error("--order must be positive");
  const auto graph = build_graph(enumerate_regular_subgroups(args.order, args.force));
  const auto cl = cliques(graph);
  Outcome out;
  out.payload = to_json(graph, cl);
  out.payload["order"] = args.order;
  out.lines.push_back("order: " + std::to_string(args.order));
  out.lines.push_back("vertices: " + std::to_string(graph.vertices.size()));
  out.lines.push_back("edges: " + std::to_string(graph.edges.size()));
  out.lines.push_back("maximal_cliques: " + std::to_string(cl.size()));
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    out.lines.push_back("vertex v" + std::to_string(i) + " " + graph.vertices[i].fingerprint());
  for (const auto& [a, b] : graph.edges) out.lines.push_back("edge v" + std::to_string(a) + " v" + std::to_string(b));
  for (const auto& c : cl) {
    std::string line = "clique";
    for (const auto v : c) line += " v" + std::to_string(v);
    out.lines.push_back(line);
  }
  if (args.cross_validate > 0) {
    const auto v = cross_validate(graph, args.cross_validate, args.seed);
    out.ok = v.ok();
    Json mismatches = Json::array();
    for (const auto& [a, b] : v.mismatches) mismatches.push_back({a, b});
    out.payload["cross_validation"] = {{"edges_checked", v.edges_checked},
                                       {"non_edges_checked", v.non_edges_checked},
                                       {"mismatches", mismatches}};
    out.lines.push_back("cross_validation: " + std::to_string(v.edges_checked) + " edges, " +
                        std::to_string(v.non_edges_checked) + " non-edges, " + std::to_string(v.mismatches.size()) +
                        " mismatches");
  }
  out.dot = to_dot(graph, cl);
  return out;
}

Outcome run_catalog(const BlockArgs& args) {
  Outcome out;
  if (args.family.empty()) {
    Json entries = Json::array();
    for (const auto& [name, description] : catalog_listing()) {
      entries.push_back({{"name", name}, {"description", description}});
      out.lines.push_back(name + ": " + description);
    }
    out.payload["entries"] = entries;
    return out;
  }
  const CatalogEntry entry = build_entry(args);
  Json ops = Json::array(), expectations = Json::array();
  for (const auto& op : entry.operations) {
    if (op.order() > 4096) throw Error(ErrorKind::BoundExceeded, "tables above 4096 elements are not exported");
    ops.push_back(to_json(op));
  }
  for (const auto& e : entry.expectations) {
    expectations.push_back({{"kind", to_string(e.kind)}, {"description", e.description}});
    out.lines.push_back("expectation " + to_string(e.kind) + ": " + e.description);
  }
  out.lines.insert(out.lines.begin(), {"entry: " + entry.name, "group: " + entry.group->name(),
                                       "operations: " + std::to_string(entry.operations.size())});
  out.payload = {{"entry", entry.name},
                 {"group", to_json(*entry.group)},
                 {"labels", entry.labels},
                 {"operations", ops},
                 {"expectations", expectations}};
  return out;
}

Outcome run_verify(const VerifyArgs& args, const VerifyOptions& options) {
  Outcome out;
  const Json doc = read_json(args.input);
  auto base = [&]() -> GroupPtr {
    if (!args.group.empty()) return group_from_spec(args.group, args.modulus);
    if (doc.is_object() && doc.contains("group")) return group_from_json(doc.at("group"));
    input_error("verify needs --group or a \"group\" field in the input");
  };

  if (args.kind == "group") {
    const GroupPtr g = group_from_json(doc);
    const auto cls = nilpotency_class(g);
    out.payload = {{"order", g->order()},
                   {"backend", to_string(g->backend())},
                   {"abelian", is_abelian(g)},
                   {"nilpotency_class", cls ? Json(*cls) : Json(nullptr)},
                   {"centre_order", centre(g).order()},
                   {"derived_order", derived_subgroup(g).order()}};
    out.lines = {"group: " + g->name(), "order: " + std::to_string(g->order()),
                 "nilpotency_class: " + (cls ? std::to_string(*cls) : std::string("none"))};
  } else if (args.kind == "operation") {
    const GroupPtr g = base();
    const auto report = verify_group(operation_from_json(g, doc), options);
    out.ok = report.ok();
    out.triples_checked = report.triples_checked;
    out.sampled = report.mode == CheckMode::Sampled;
    out.payload["report"] = to_json(report);
    out.lines.push_back(std::string("group laws: ") + (report.ok() ? "pass" : "FAIL " + report.failure));
    if (report.counterexample) out.lines.push_back("counterexample: " + triple_text(*g, *report.counterexample));
  } else if (args.kind == "brace") {
    const GroupPtr g = base();
    const auto report =
        verify_skew_brace(operation_from_json(g, doc), operation_from_json(g, read_json(args.input2)), options);
    out.ok = report.skew_ok;
    out.triples_checked = report.triples_checked;
    out.sampled = report.mode == CheckMode::Sampled;
    out.payload["report"] = to_json(report);
    out.lines.push_back(std::string("skew brace: ") + (report.skew_ok ? "pass" : "FAIL"));
    out.lines.push_back(std::string("bi-skew brace: ") + (report.biskew_ok ? "pass" : "FAIL"));
    if (report.counterexample) out.lines.push_back("counterexample: " + triple_text(*g, *report.counterexample));
  } else if (args.kind == "yb") {
    const YBMap r = yb_map_from_json(doc);
    const auto report = verify_ybe(r, options);
    const bool nondegenerate = verify_nondegenerate(r);
    out.ok = report.ok() && nondegenerate;
    out.triples_checked = report.triples_checked;
    out.sampled = report.mode == CheckMode::Sampled;
    out.payload = {{"report", to_json(report)}, {"nondegenerate", nondegenerate}};
    out.lines.push_back(std::string("braid relation: ") + (report.braid_ok ? "pass" : "FAIL"));
    out.lines.push_back(std::string("nondegenerate: ") + (nondegenerate ? "yes" : "no"));
  } else if (args.kind == "endo") {
    const QuotientEndo psi = endo_from_json(doc);
    out.payload = {{"cosets", psi.table().size()}, {"zero", psi.is_zero()}};
    out.lines.push_back("endomorphism: valid");
  } else if (args.kind == "bilinear") {
    const CentralBilinearMap alpha = bilinear_from_json(doc);
    out.payload = {{"trivial", alpha.is_trivial()}};
    out.lines.push_back("central bilinear map: valid");
  } else {
    input_error("unknown verify kind \"" + args.kind + "\" (group, operation, brace, yb, endo, bilinear)");
  }
  return out;
}

}  // namespace cli
