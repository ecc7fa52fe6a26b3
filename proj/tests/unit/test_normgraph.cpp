#include <doctest.h>

#include <set>

#include "braceblock/brace.hpp"
#include "braceblock/error.hpp"
#include "braceblock/normgraph.hpp"
#include "support/fixtures.hpp"

using namespace braceblock;

namespace {

// Counts group laws on {0,1,2,3} with identity 0 by trying every filling of
// the 3x3 block of the Cayley table.
std::size_t order_four_table_count() {
  std::size_t count = 0;
  std::uint32_t t[4][4];
  for (std::uint32_t i = 0; i < 4; ++i) t[0][i] = t[i][0] = i;
  for (std::uint32_t code = 0; code < (1u << 18); ++code) {
    std::uint32_t c = code;
    for (int g = 1; g < 4; ++g)
      for (int h = 1; h < 4; ++h, c >>= 2) t[g][h] = c & 3;
    bool ok = true;
    for (int g = 0; g < 4 && ok; ++g) {
      std::set<std::uint32_t> row, col;
      for (int h = 0; h < 4; ++h) row.insert(t[g][h]), col.insert(t[h][g]);
      ok = row.size() == 4 && col.size() == 4;
    }
    for (int a = 0; a < 4 && ok; ++a)
      for (int b = 0; b < 4 && ok; ++b)
        for (int d = 0; d < 4 && ok; ++d) ok = t[t[a][b]][d] == t[a][t[b][d]];
    if (ok) ++count;
  }
  return count;
}

bool is_clique(const NormalisingGraph& g, const std::vector<std::size_t>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.adjacent(c[i], c[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("regular subgroup counts") {
  CHECK(order_four_table_count() == 4);
  const std::vector<std::size_t> expect = {0, 1, 1, 1, 4, 6, 80, 120};
  for (std::size_t n = 1; n < expect.size(); ++n) {
    const auto subs = enumerate_regular_subgroups(n);
    INFO("n = " << n);
    CHECK(subs.size() == expect[n]);
    std::set<std::vector<Perm>> distinct;
    for (const auto& s : subs) {
      distinct.insert(s.members());
      CHECK(RegularSubgroup(s.nu_table()) == s);
    }
    CHECK(distinct.size() == subs.size());
  }
  CHECK(enumerate_regular_subgroups(4).size() == order_four_table_count());
}

TEST_CASE("degree eight") {
  CHECK(enumerate_regular_subgroups(8).size() == 2760);
}

TEST_CASE("enumeration bound") {
  try {
    enumerate_regular_subgroups(9);
    FAIL("expected bound-exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
}

TEST_CASE("left regular representation") {
  const auto c3 = cyclic_group(3);
  const auto n = lambda_of_operation(GroupOperation::dot(c3));
  CHECK(n.degree() == 3);
  CHECK(n.nu(0) == Perm{0, 1, 2});
  CHECK(n.nu(1) == Perm{1, 2, 0});
  CHECK(n.fingerprint() == "1^1 3^2");
  CHECK(enumerate_regular_subgroups(3).front() == n);

  const auto pair = class_two_pair(FiniteGroup::heisenberg(3));
  const auto dot = GroupOperation::dot(pair->group());
  const auto circ = deformed_operation(pair, fixtures::heisenberg_psi(pair, 1), trivial_bilinear(pair));
  const auto ld = lambda_of_operation(dot), lc = lambda_of_operation(circ);
  CHECK_FALSE(ld == lc);
  CHECK(operations_equal(operation_of_regular_subgroup(ld, pair->group()), dot));
  CHECK(operations_equal(operation_of_regular_subgroup(lc, pair->group()), circ));
  CHECK(lambda_of_operation(operation_of_regular_subgroup(lc)) == lc);
  CHECK(normalises(lc, ld));
  CHECK(normalises(ld, lc));
  CHECK(normalises(ld, ld));

  auto table = dot.table();
  std::swap(table[30], table[31]);
  CHECK_THROWS_AS(lambda_of_operation(GroupOperation::from_table(pair->group(), table, ExplicitProvenance{"bad"})),
                  Error);
}

TEST_CASE("transported operations round trip") {
  for (const auto& n : enumerate_regular_subgroups(6)) {
    const auto op = operation_of_regular_subgroup(n);
    REQUIRE(verify_group(op).ok());
    CHECK(std::holds_alternative<TransportedProvenance>(op.provenance()));
    for (std::uint32_t g = 0; g < 6; ++g) CHECK(op(Elem{0}, Elem{g}) == Elem{g});
    CHECK(lambda_of_operation(op) == n);
  }
}

TEST_CASE("non-normalising pairs in degree six") {
  const auto subs = enumerate_regular_subgroups(6);
  std::size_t found = 0;
  for (std::size_t i = 0; i < subs.size() && found < 3; ++i)
    for (std::size_t j = 0; j < subs.size() && found < 3; ++j) {
      const auto w = normalisation_witness(subs[i], subs[j]);
      if (!w) continue;
      ++found;
      // eta mu eta^-1 really leaves M.
      const auto& [eta, mu] = *w;
      Perm conj(6), inv(6);
      for (std::uint32_t x = 0; x < 6; ++x) inv[eta[x]] = x;
      for (std::uint32_t x = 0; x < 6; ++x) conj[x] = eta[mu[inv[x]]];
      CHECK_FALSE(subs[j].contains(conj));
      CHECK_FALSE(normalises(subs[i], subs[j]));
    }
  CHECK(found == 3);
}

TEST_CASE("graph of degree four") {
  const auto graph = build_graph(enumerate_regular_subgroups(4));
  CHECK(graph.vertices.size() == 4);
  const auto validation = cross_validate(graph, 1000);
  CHECK(validation.ok());
  CHECK(validation.edges_checked == graph.edges.size());
  CHECK(validation.edges_checked + validation.non_edges_checked == 6);
  // Every edge against the brace check directly.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto a = operation_of_regular_subgroup(graph.vertices[i]);
      const auto b = operation_of_regular_subgroup(graph.vertices[j]);
      CHECK(graph.adjacent(i, j) == verify_skew_brace(a, b).biskew_ok);
    }
  const auto cl = cliques(graph);
  REQUIRE_FALSE(cl.empty());
  std::set<std::size_t> covered;
  for (const auto& c : cl) {
    CHECK(is_clique(graph, c));
    covered.insert(c.begin(), c.end());
    for (std::size_t u = 0; u < 4; ++u) {
      if (std::find(c.begin(), c.end(), u) != c.end()) continue;
      auto bigger = c;
      bigger.push_back(u);
      CHECK_FALSE(is_clique(graph, bigger));
    }
  }
  CHECK(covered.size() == 4);
  const auto dot = to_dot(graph, cl);
  CHECK(dot.find("graph normalising {") == 0);
  CHECK(dot.find("v3 [label=") != std::string::npos);
}

TEST_CASE("graphs of degree six cross-validate") {
  const auto graph = build_graph(enumerate_regular_subgroups(6));
  const auto validation = cross_validate(graph, 50, 7);
  CHECK(validation.ok());
  CHECK(validation.edges_checked == std::min<std::size_t>(50, graph.edges.size()));
  CHECK(validation.non_edges_checked == 50);
  for (const auto& c : cliques(graph)) CHECK(is_clique(graph, c));
}

TEST_CASE("single vertex and Heisenberg block") {
  const auto one = build_graph(enumerate_regular_subgroups(1));
  const auto c1 = cliques(one);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0] == std::vector<std::size_t>{0});

  const auto pair = class_two_pair(FiniteGroup::heisenberg(3));
  std::vector<RegularSubgroup> block;
  for (int x = 0; x < 3; ++x)
    block.push_back(lambda_of_operation(
        deformed_operation(pair, fixtures::heisenberg_psi(pair, x), trivial_bilinear(pair))));
  const auto graph = build_graph(block);
  CHECK(graph.edges.size() == 3);
  const auto cl = cliques(graph);
  REQUIRE(cl.size() == 1);
  CHECK(cl[0].size() == 3);
}
