#include <doctest.h>

#include "braceblock/error.hpp"
#include "braceblock/io.hpp"
#include "support/fixtures.hpp"

using namespace braceblock;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("group documents round-trip for every backend") {
  const std::vector<GroupPtr> groups = {cyclic_group(6), FiniteGroup::heisenberg(3), FiniteGroup::unitriangular(4, 2),
                                        fixtures::s3(), cyclic_semidirect(9, 3, 4)};
  for (const auto& g : groups) {
    const Json j = to_json(*g);
    const GroupPtr back = group_from_json(Json::parse(j.dump()));
    CHECK(back->backend() == g->backend());
    CHECK(materialize_table(*back) == materialize_table(*g));
  }
  CHECK(to_json(*FiniteGroup::heisenberg(5)) == Json::parse(R"({"backend":"Heisenberg","modulus":5})"));
  CHECK(to_json(*FiniteGroup::unitriangular(3, 7)) == Json::parse(R"({"backend":"Unitriangular","size":3,"modulus":7})"));
  const Json c2 = to_json(*cyclic_group(2));
  CHECK(c2["backend"] == "CayleyTable");
  CHECK(c2["order"] == 2);
  CHECK(c2["table"] == Json::parse("[[0,1],[1,0]]"));
}

TEST_CASE("malformed group documents are parse errors") {
  CHECK(kind_of([] { group_from_json(Json::parse(R"({"modulus":3})")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { group_from_json(Json::parse(R"({"backend":"Lie"})")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { group_from_json(Json::parse(R"({"backend":"Heisenberg","modulus":"x"})")); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([] { group_from_json(Json::parse(R"({"backend":"CayleyTable","order":2,"table":[[0,1]]})")); }) ==
        ErrorKind::ParseError);
  // Well formed but not a group.
  CHECK(kind_of([] { group_from_json(Json::parse(R"({"backend":"CayleyTable","order":2,"table":[[0,1],[1,1]]})")); }) ==
        ErrorKind::InvalidGroup);
}

TEST_CASE("group short names") {
  CHECK(group_from_spec("c4")->order() == 4);
  CHECK(group_from_spec("S3")->order() == 6);
  CHECK(group_from_spec("s4")->order() == 24);
  CHECK(group_from_spec("heisenberg", 3)->order() == 27);
  CHECK(group_from_spec("ut4", 3)->order() == 729);
  CHECK(group_from_spec("c9c3")->order() == 27);
  CHECK(kind_of([] { group_from_spec("heisenberg"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { group_from_spec("c"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { group_from_spec("c4x"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { group_from_spec("q8"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { group_from_spec("missing.json"); }) == ErrorKind::ParseError);
}

TEST_CASE("pair, endomorphism and bilinear documents round-trip") {
  const auto g = FiniteGroup::heisenberg(3);
  const auto pair = class_two_pair(g);
  const auto pair_back = pair_from_json(to_json(*pair));
  CHECK(pair_back->k().members() == pair->k().members());
  CHECK(pair_back->a().members() == pair->a().members());

  const auto psi = fixtures::heisenberg_psi(pair, 2);
  const Json ej = to_json(psi);
  CHECK(ej["coset_table"].size() == 9);
  CHECK(endo_from_json(pair, ej) == psi);
  CHECK(endo_from_json(ej).table() == psi.table());

  const auto alpha = bilinear_from_commutator_power(pair, 1);
  const Json aj = to_json(alpha);
  // [g,h] is nontrivial iff the images in (Z/3)^2 are independent: 8 * 6 of 81 pairs.
  CHECK(aj["values"].size() == 27 * 27 * 48 / 81);
  CHECK(equal(bilinear_from_json(pair, aj), alpha));
  CHECK(to_json(trivial_bilinear(pair))["values"].empty());

  Json broken = aj;
  broken["values"].erase(0);
  CHECK_THROWS_AS(bilinear_from_json(pair, broken), Error);
  Json wrong_size = ej;
  wrong_size["coset_table"].erase(0);
  CHECK(kind_of([&] { endo_from_json(pair, wrong_size); }) == ErrorKind::ParseError);
}

TEST_CASE("operation documents round-trip and reject bad tables") {
  const auto g = FiniteGroup::heisenberg(3);
  const auto pair = class_two_pair(g);
  const auto op = deformed_operation(pair, fixtures::heisenberg_psi(pair, 1), trivial_bilinear(pair), "o_1");
  const Json j = to_json(op);
  CHECK(j["table"].size() == 27);
  CHECK(j["provenance"].get<std::string>().find("o_1") != std::string::npos);
  const auto back = operation_from_json(g, j);
  CHECK(operations_equal(back, op));
  CHECK(kind_of([&] { operation_from_json(cyclic_group(3), j); }) == ErrorKind::CarrierMismatch);
  Json bad = j;
  bad["table"][0][0] = -1;
  CHECK(kind_of([&] { operation_from_json(g, bad); }) == ErrorKind::ParseError);
}

TEST_CASE("reports carry mode, seed and counterexample indices") {
  const auto g = FiniteGroup::heisenberg(3);
  auto table = GroupOperation::dot(g).table();
  std::swap(table[27 * 1 + 2], table[27 * 1 + 3]);
  const auto bad = GroupOperation::from_table(g, table, ExplicitProvenance{"corrupted"});
  const Json gr = to_json(verify_group(bad, VerifyOptions::sampled(9, 5000)));
  CHECK(gr["ok"] == false);
  CHECK(gr["mode"] == "sampled");
  CHECK(gr["seed"] == 9);
  CHECK(gr["counterexample"].is_array());

  const auto pair = class_two_pair(g);
  const auto op = deformed_operation(pair, fixtures::heisenberg_psi(pair, 1), trivial_bilinear(pair));
  const Json br = to_json(verify_skew_brace(GroupOperation::dot(g), op));
  CHECK(br["biskew_ok"] == true);
  CHECK(br["mode"] == "exhaustive");
  CHECK_FALSE(br.contains("seed"));
  CHECK(br["counterexample"].is_null());
}

TEST_CASE("Yang-Baxter maps round-trip through their permutation") {
  const auto g = FiniteGroup::heisenberg(3);
  const auto pair = class_two_pair(g);
  const auto op = deformed_operation(pair, fixtures::heisenberg_psi(pair, 1), trivial_bilinear(pair));
  const auto sols = solutions_from_brace(GroupOperation::dot(g), op);
  const Json j = to_json(sols.r);
  CHECK(j["permutation"].size() == 729);
  CHECK(j["sigma"][4][5] == sols.r.sigma(Elem{4}, Elem{5}).index);
  CHECK(j["tau"][5][4] == sols.r.tau(Elem{5}, Elem{4}).index);
  CHECK(maps_equal(yb_map_from_json(j), sols.r));
  CHECK(to_json(verify_ybe(sols.r))["ok"] == true);
}

TEST_CASE("graph documents list vertices, edges and cliques") {
  const auto graph = build_graph(enumerate_regular_subgroups(4));
  const auto cl = cliques(graph);
  const Json j = to_json(graph, cl);
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == graph.edges.size());
  CHECK(j["cliques"].size() == cl.size());
  CHECK(j["vertices"][0]["fingerprint"].is_string());
}
