#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "braceblock/brace.hpp"
#include "braceblock/error.hpp"
#include "braceblock/yang_baxter.hpp"
#include "support/fixtures.hpp"

using namespace braceblock;
using fixtures::heis;

namespace {

PairPtr heis3() { return class_two_pair(FiniteGroup::heisenberg(3)); }

// Braid relation on every triple, composed directly from r.
bool braid_oracle(const YBMap& r) {
  const std::uint32_t n = static_cast<std::uint32_t>(r.carrier_size());
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z) {
        auto [a1, b1] = r(Elem{x}, Elem{y});
        auto [b2, c2] = r(b1, Elem{z});
        auto [a3, b3] = r(a1, b2);
        auto [q1, r1] = r(Elem{y}, Elem{z});
        auto [p2, q2] = r(Elem{x}, q1);
        auto [q3, r3] = r(q2, r1);
        if (a3 != p2 || b3 != q3 || c2 != r3) return false;
      }
  return true;
}

Deformation heis_data(const PairPtr& pair, int x, int n) {
  return {fixtures::heisenberg_psi(pair, x), bilinear_from_commutator_power(pair, n)};
}

GroupOperation op_of(const PairPtr& pair, const Deformation& d) { return deformed_operation(pair, d.endo, d.alpha); }

}  // namespace

TEST_CASE("flip and identity") {
  for (std::size_t n : {1, 2, 5, 27}) {
    const auto flip = YBMap::flip(n);
    CHECK(verify_ybe(flip).ok());
    CHECK(verify_nondegenerate(flip));
    CHECK(is_involutive(flip));
    const auto id = YBMap::identity(n);
    CHECK(verify_ybe(id).ok());
    CHECK(is_involutive(id));
  }
  CHECK_FALSE(verify_nondegenerate(YBMap::identity(3)));
}

TEST_CASE("random bijections fail the braid relation") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::uint32_t> images(27 * 27);
    std::iota(images.begin(), images.end(), 0u);
    std::shuffle(images.begin(), images.end(), rng);
    const auto r = YBMap::from_permutation(27, images, "random");
    const auto report = verify_ybe(r);
    CHECK(report.bijective);
    CHECK_FALSE(report.braid_ok);
    REQUIRE(report.witness.has_value());
    CHECK_FALSE(braid_oracle(r));
  }
  std::vector<std::uint32_t> collapse(9, 0);
  CHECK_FALSE(verify_ybe(YBMap::from_permutation(3, collapse, "constant")).bijective);
}

TEST_CASE("generic solutions") {
  const auto pair = heis3();
  const auto h = pair->group();
  const auto op = op_of(pair, heis_data(pair, 1, 0));
  const auto same = solutions_from_brace(op, op);
  for (const Elem g : fixtures::all_elements(h))
    for (const Elem k : fixtures::all_elements(h)) {
      const auto [u, v] = same.r(g, k);
      CHECK(u == k);
      CHECK(v == op(op(circle_inverse(op, k), g), k));
    }

  const auto c4 = cyclic_group(4);
  const auto dot4 = GroupOperation::dot(c4);
  const auto s4 = solutions_from_brace(dot4, dot4);
  CHECK(maps_equal(s4.r, YBMap::flip(4)));

  const auto sol = solutions_from_brace(GroupOperation::dot(h), op);
  const auto report = verify_ybe(sol.r);
  CHECK(report.ok());
  CHECK(report.triples_checked == 19683);
  CHECK(braid_oracle(sol.r));
  CHECK(verify_ybe(sol.r_prime).ok());
  CHECK(verify_nondegenerate(sol.r));
  CHECK(inverse_pair(sol.r, sol.r_prime));
  CHECK_FALSE(maps_equal(sol.r, sol.r_prime));

  // Reversed roles give two more solutions.
  const auto swapped = solutions_from_brace(op, GroupOperation::dot(h));
  CHECK(verify_ybe(swapped.r).ok());
  CHECK(verify_ybe(swapped.r_prime).ok());
  CHECK(inverse_pair(swapped.r, swapped.r_prime));
}

TEST_CASE("unverified input is refused") {
  const auto pair = heis3();
  auto table = GroupOperation::dot(pair->group()).table();
  for (std::uint32_t g = 0; g < 27; ++g)
    for (std::uint32_t k = 0; k < 27; ++k) table[g * 27 + k] = Elem{(g + k) % 27};
  const auto z27 = GroupOperation::from_table(pair->group(), table, ExplicitProvenance{"Z/27"});
  try {
    solutions_from_brace(GroupOperation::dot(pair->group()), z27);
    FAIL("expected not-a-skew-brace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASkewBrace);
  }
  CHECK_NOTHROW(solutions_from_brace(GroupOperation::dot(pair->group()), z27, true));
}

TEST_CASE("two-deformation closed forms equal the generic construction") {
  const auto pair = heis3();
  const std::vector<std::pair<Deformation, Deformation>> cases = {
      {heis_data(pair, 1, 0), heis_data(pair, 0, 0)}, {heis_data(pair, 1, 1), heis_data(pair, 2, 0)},
      {heis_data(pair, 2, 2), heis_data(pair, 1, 1)}, {heis_data(pair, 0, 1), heis_data(pair, 2, 2)},
      {heis_data(pair, 1, 2), heis_data(pair, 1, 2)}};
  for (const auto& [circ, dot] : cases) {
    const auto thm = explicit_solutions_thm(pair, circ, dot);
    const auto gen = solutions_from_brace(op_of(pair, dot), op_of(pair, circ));
    REQUIRE(maps_equal(thm.r, gen.r));
    REQUIRE(maps_equal(thm.r_prime, gen.r_prime));
  }
  // Non-scalar endomorphisms as well.
  const auto ring = enumerate_ring(pair);
  for (std::size_t i = 5; i < ring.size(); i += 19) {
    const Deformation circ{ring[i], bilinear_from_commutator_power(pair, 1)};
    const Deformation dot{ring[(i * 7) % ring.size()], bilinear_from_commutator_power(pair, 2)};
    const auto thm = explicit_solutions_thm(pair, circ, dot);
    const auto gen = solutions_from_brace(op_of(pair, dot), op_of(pair, circ));
    REQUIRE(maps_equal(thm.r, gen.r));
    REQUIRE(maps_equal(thm.r_prime, gen.r_prime));
  }
}

TEST_CASE("degenerate data") {
  const auto pair = heis3();
  const auto h = pair->group();
  const Deformation trivial{QuotientEndo::zero(pair), trivial_bilinear(pair)};
  const auto thm = explicit_solutions_thm(pair, trivial, trivial);
  const auto cor = explicit_solutions_cor(pair, trivial);
  for (const Elem g : fixtures::all_elements(h))
    for (const Elem k : fixtures::all_elements(h)) {
      const auto expect = std::make_pair(k, h->mul(h->mul(h->inv(k), g), k));
      CHECK(thm.r(g, k) == expect);
      CHECK(cor.r(g, k) == expect);
    }
  const auto data = heis_data(pair, 2, 1);
  const auto thm0 = explicit_solutions_thm(pair, data, trivial);
  const auto cor0 = explicit_solutions_cor(pair, data);
  CHECK(maps_equal(thm0.r, cor0.r));
  CHECK(maps_equal(thm0.r_prime, cor0.r_prime));
}

TEST_CASE("single-deformation closed forms") {
  const auto pair = heis3();
  const auto h = pair->group();
  const Deformation trivial{QuotientEndo::zero(pair), trivial_bilinear(pair)};
  for (const auto& data : {heis_data(pair, 1, 0), heis_data(pair, 2, 1)}) {
    const auto cor = explicit_solutions_cor(pair, data);
    for (const YBMap* r : {&cor.r, &cor.r_prime, &cor.r_tilde, &cor.r_tilde_prime}) {
      INFO(r->label());
      CHECK(verify_ybe(*r).ok());
      CHECK(braid_oracle(*r));
      CHECK(verify_nondegenerate(*r));
    }
    CHECK(inverse_pair(cor.r, cor.r_prime));
    CHECK(inverse_pair(cor.r_tilde, cor.r_tilde_prime));
    // The tilde maps are the two-deformation form with the operations swapped.
    const auto swapped = explicit_solutions_thm(pair, trivial, data);
    CHECK(maps_equal(cor.r_tilde, swapped.r));
    CHECK(maps_equal(cor.r_tilde_prime, swapped.r_prime));
    const auto gen = solutions_from_brace(op_of(pair, data), GroupOperation::dot(h));
    CHECK(maps_equal(cor.r_tilde, gen.r));
    CHECK(maps_equal(cor.r_tilde_prime, gen.r_prime));
  }
}

TEST_CASE("abelian control: r equals r'") {
  const auto c9 = cyclic_group(9);
  const auto pair = make_central_pair(c9, Subgroup(c9, {Elem{3}}), whole_group(c9));
  const auto alpha = random_bilinear(pair, 5);
  REQUIRE(alpha.has_value());
  const auto op = deformed_operation(pair, power_endo(pair, 2), *alpha);
  REQUIRE(verify_group(op).ok());
  const auto sol = solutions_from_brace(GroupOperation::dot(c9), op);
  CHECK(maps_equal(sol.r, sol.r_prime));
  CHECK(verify_ybe(sol.r).ok());
  CHECK(is_involutive(sol.r));
}

TEST_CASE("large carriers are sampled") {
  const auto g = FiniteGroup::heisenberg(6);
  const auto pair = class_two_pair(g);
  const auto op = deformed_operation(pair, power_endo(pair, 1), trivial_bilinear(pair));
  const auto sol = solutions_from_brace(GroupOperation::dot(g), op);
  const auto report = verify_ybe(sol.r, VerifyOptions::sampled(17, 30000));
  CHECK(report.ok());
  CHECK(report.mode == CheckMode::Sampled);
  CHECK(report.seed == 17u);
  CHECK(verify_ybe(sol.r).mode == CheckMode::Sampled);
}
