#include "braceblock/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include "braceblock/error.hpp"

namespace braceblock {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("field \"") + key + "\": " + e.what());
  }
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<Elem> elems(const FiniteGroup& g, const std::vector<std::uint32_t>& indices) {
  std::vector<Elem> out;
  out.reserve(indices.size());
  for (const auto i : indices) {
    if (i >= g.order()) throw Error(ErrorKind::ElementNotInCarrier, "index " + std::to_string(i) + " out of range");
    out.push_back(Elem{i});
  }
  return out;
}

Json indices(const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (const Elem x : xs) out.push_back(x.index);
  return out;
}

Json triple(const std::optional<std::array<Elem, 3>>& t) {
  if (!t) return nullptr;
  return Json::array({(*t)[0].index, (*t)[1].index, (*t)[2].index});
}

void put_mode(Json& j, CheckMode mode, const std::optional<std::uint64_t>& seed) {
  j["mode"] = to_string(mode);
  if (seed) j["seed"] = *seed;
}

std::vector<Elem> square_table(const Json& rows, std::size_t n, const char* what) {
  if (!rows.is_array() || rows.size() != n) bad(std::string(what) + " must have " + std::to_string(n) + " rows");
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) bad(std::string(what) + " rows must have " + std::to_string(n) + " entries");
    for (const auto& v : row) {
      if (!v.is_number_unsigned()) bad(std::string(what) + " entries must be non-negative integers");
      flat.push_back(Elem{v.get<std::uint32_t>()});
    }
  }
  return flat;
}

}  // namespace

std::string_view library_version() { return BRACEBLOCK_VERSION; }

Json to_json(const FiniteGroup& group) {
  switch (group.backend()) {
    case Backend::CayleyTable: {
      const auto flat = materialize_table(group);
      const std::size_t n = group.order();
      Json rows = Json::array();
      for (std::size_t g = 0; g < n; ++g) rows.push_back(std::vector<std::uint32_t>(flat.begin() + g * n, flat.begin() + (g + 1) * n));
      return {{"backend", "CayleyTable"}, {"order", n}, {"table", rows}};
    }
    case Backend::Heisenberg:
      return {{"backend", "Heisenberg"}, {"modulus", group.modulus()}};
    case Backend::Unitriangular:
      return {{"backend", "Unitriangular"}, {"size", group.size_parameter()}, {"modulus", group.modulus()}};
    case Backend::Permutation: {
      Json gens = Json::array();
      for (const Elem s : group.generators()) gens.push_back(group.coordinates(s));
      return {{"backend", "Permutation"}, {"degree", group.size_parameter()}, {"generators", gens}};
    }
  }
  bad("unknown backend");
}

GroupPtr group_from_json(const Json& j) {
  const std::string backend = lower(get<std::string>(j, "backend"));
  if (backend == "cayleytable" || backend == "cayley") {
    const auto n = get<std::size_t>(j, "order");
    const auto flat = square_table(field(j, "table"), n, "table");
    std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n * n; ++i) rows[i / n][i % n] = flat[i].index;
    return FiniteGroup::cayley(std::move(rows));
  }
  if (backend == "heisenberg") return FiniteGroup::heisenberg(get<std::uint32_t>(j, "modulus"));
  if (backend == "unitriangular")
    return FiniteGroup::unitriangular(get<std::uint32_t>(j, "size"), get<std::uint32_t>(j, "modulus"));
  if (backend == "permutation")
    return FiniteGroup::permutation(get<std::uint32_t>(j, "degree"), get<std::vector<Perm>>(j, "generators"));
  bad("unknown backend \"" + backend + "\"");
}

GroupPtr group_from_spec(const std::string& name, std::uint32_t modulus) {
  const std::string s = lower(name);
  auto number = [&](std::size_t from) -> std::uint32_t {
    std::uint32_t v = 0;
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data() + from, end, v);
    if (ec != std::errc() || ptr != end || v == 0) bad("bad group name \"" + name + "\"");
    return v;
  };
  auto need_modulus = [&] {
    if (modulus < 2) bad("group \"" + name + "\" needs a modulus of at least 2");
    return modulus;
  };
  if (s.size() > 5 && s.ends_with(".json")) {
    std::ifstream in(name);
    if (!in) bad("cannot open " + name);
    Json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      bad(name + ": " + e.what());
    }
    return group_from_json(j);
  }
  if (s == "heisenberg" || s == "heis") return FiniteGroup::heisenberg(need_modulus());
  if (s == "c9c3") return cyclic_semidirect(9, 3, 4);
  if (s.starts_with("ut")) return FiniteGroup::unitriangular(number(2), need_modulus());
  if (s.starts_with("c")) return cyclic_group(number(1));
  if (s.starts_with("s")) {
    const std::uint32_t n = number(1);
    if (n > 7) throw Error(ErrorKind::BoundExceeded, "symmetric groups are limited to degree 7");
    if (n == 1) return FiniteGroup::permutation(1, {});
    Perm swap(n), cycle(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      swap[i] = i;
      cycle[i] = (i + 1) % n;
    }
    std::swap(swap[0], swap[1]);
    return FiniteGroup::permutation(n, {swap, cycle});
  }
  bad("unknown group \"" + name + "\"");
}

Json to_json(const CentralPair& pair) {
  return {{"group", to_json(*pair.group())}, {"k", indices(pair.k().members())}, {"a", indices(pair.a().members())}};
}

PairPtr pair_from_json(const Json& j) {
  const GroupPtr g = group_from_json(field(j, "group"));
  return make_central_pair(g, Subgroup(g, elems(*g, get<std::vector<std::uint32_t>>(j, "k"))),
                           Subgroup(g, elems(*g, get<std::vector<std::uint32_t>>(j, "a"))));
}

Json to_json(const QuotientEndo& endo) {
  return {{"pair", to_json(*endo.pair())}, {"coset_table", indices(endo.table())}};
}

QuotientEndo endo_from_json(const Json& j) { return endo_from_json(pair_from_json(field(j, "pair")), j); }

QuotientEndo endo_from_json(const PairPtr& pair, const Json& j) {
  const auto table = get<std::vector<std::uint32_t>>(j, "coset_table");
  const auto& q = *pair->quotient().group();
  if (table.size() != q.order()) bad("coset_table must have " + std::to_string(q.order()) + " entries");
  return QuotientEndo(pair, elems(q, table));
}

Json to_json(const CentralBilinearMap& alpha) {
  const std::size_t n = alpha.pair()->group()->order();
  Json values = Json::array();
  if (!alpha.is_trivial())
    for (std::uint32_t g = 0; g < n; ++g)
      for (std::uint32_t h = 0; h < n; ++h)
        if (const Elem v = alpha(Elem{g}, Elem{h}); v.index != 0) values.push_back({g, h, v.index});
  return {{"pair", to_json(*alpha.pair())}, {"values", values}};
}

CentralBilinearMap bilinear_from_json(const Json& j) { return bilinear_from_json(pair_from_json(field(j, "pair")), j); }

CentralBilinearMap bilinear_from_json(const PairPtr& pair, const Json& j) {
  const std::size_t n = pair->group()->order();
  const auto values = get<std::vector<std::array<std::uint32_t, 3>>>(j, "values");
  if (values.empty()) return trivial_bilinear(pair);
  if (n > CentralBilinearMap::kDenseBound) throw Error(ErrorKind::BoundExceeded, "bilinear tables are limited to order 1000");
  std::vector<Elem> table(n * n, Elem{0});
  for (const auto& [g, h, v] : values) {
    if (g >= n || h >= n || v >= n) throw Error(ErrorKind::ElementNotInCarrier, "bilinear entry out of range");
    table[std::size_t{g} * n + h] = Elem{v};
  }
  return validate_bilinear(pair, std::move(table));
}

Json to_json(const GroupOperation& op) {
  const auto flat = op.table();
  const std::size_t n = op.order();
  Json rows = Json::array();
  for (std::size_t g = 0; g < n; ++g) {
    Json row = Json::array();
    for (std::size_t h = 0; h < n; ++h) row.push_back(flat[g * n + h].index);
    rows.push_back(std::move(row));
  }
  return {{"provenance", describe(op.provenance())}, {"order", n}, {"table", rows}};
}

GroupOperation operation_from_json(const GroupPtr& base, const Json& j) {
  const std::size_t n = base->order();
  if (j.contains("order") && get<std::size_t>(j, "order") != n) throw Error(ErrorKind::CarrierMismatch, "order differs from the base group");
  const std::string label = j.contains("provenance") ? get<std::string>(j, "provenance") : "imported";
  return GroupOperation::from_table(base, square_table(field(j, "table"), n, "table"), ExplicitProvenance{label});
}

Json to_json(const GroupReport& report) {
  Json j{{"ok", report.ok()},
         {"triples_checked", report.triples_checked},
         {"identity_ok", report.identity_ok},
         {"inverses_ok", report.inverses_ok},
         {"associative", report.associative},
         {"failure", report.failure},
         {"counterexample", triple(report.counterexample)}};
  if (report.expansion_ok) j["expansion_ok"] = *report.expansion_ok;
  put_mode(j, report.mode, report.seed);
  return j;
}

Json to_json(const BraceCheckReport& report) {
  Json j{{"left", describe(report.left_operation.provenance())},
         {"right", describe(report.right_operation.provenance())},
         {"skew_ok", report.skew_ok},
         {"biskew_ok", report.biskew_ok},
         {"counterexample", triple(report.counterexample)},
         {"counterexample_reversed", report.counterexample_reversed},
         {"triples_checked", report.triples_checked}};
  put_mode(j, report.mode, report.seed);
  return j;
}

Json to_json(const YBReport& report) {
  Json j{{"ok", report.ok()},
         {"bijective", report.bijective},
         {"braid_ok", report.braid_ok},
         {"witness", triple(report.witness)},
         {"triples_checked", report.triples_checked}};
  put_mode(j, report.mode, report.seed);
  return j;
}

Json to_json(const YBMap& r) {
  const std::size_t n = r.carrier_size();
  Json sigma = Json::array(), tau = Json::array();
  for (std::uint32_t x = 0; x < n; ++x) {
    Json s = Json::array(), t = Json::array();
    for (std::uint32_t y = 0; y < n; ++y) {
      s.push_back(r.sigma(Elem{x}, Elem{y}).index);
      t.push_back(r.tau(Elem{x}, Elem{y}).index);
    }
    sigma.push_back(std::move(s));
    tau.push_back(std::move(t));
  }
  return {{"label", r.label()}, {"carrier_size", n}, {"permutation", r.permutation()}, {"sigma", sigma}, {"tau", tau}};
}

YBMap yb_map_from_json(const Json& j) {
  const auto n = get<std::size_t>(j, "carrier_size");
  const std::string label = j.contains("label") ? get<std::string>(j, "label") : "imported";
  return YBMap::from_permutation(n, get<std::vector<std::uint32_t>>(j, "permutation"), label);
}

Json to_json(const NormalisingGraph& graph, const std::vector<std::vector<std::size_t>>& cliques) {
  Json vertices = Json::array();
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    const auto& v = graph.vertices[i];
    vertices.push_back({{"index", i}, {"fingerprint", v.fingerprint()}, {"generators", v.generators()}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : graph.edges) edges.push_back({a, b});
  return {{"vertices", vertices}, {"edges", edges}, {"cliques", cliques}};
}

Json to_json(const ExpectationResult& result) {
  Json j{{"kind", to_string(result.expectation.kind)},
         {"description", result.expectation.description},
         {"passed", result.passed},
         {"triples_checked", result.triples_checked}};
  if (!result.detail.empty()) j["detail"] = result.detail;
  return j;
}

}  // namespace braceblock
