#include <doctest.h>

#include <numeric>

#include "braceblock/error.hpp"
#include "braceblock/group.hpp"
#include "braceblock/quotient.hpp"
#include "support/fixtures.hpp"

using namespace braceblock;
using fixtures::heis;

namespace {

// Brute-force associativity over all triples.
bool associative_oracle(const FiniteGroup& g) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (g.mul(g.mul(Elem{a}, Elem{b}), Elem{c}) != g.mul(Elem{a}, g.mul(Elem{b}, Elem{c}))) return false;
  return true;
}

// Centre by definition.
std::vector<Elem> centre_oracle(const FiniteGroup& g) {
  std::vector<Elem> out;
  for (std::uint32_t z = 0; z < g.order(); ++z) {
    bool central = true;
    for (std::uint32_t x = 0; x < g.order() && central; ++x)
      central = g.mul(Elem{z}, Elem{x}) == g.mul(Elem{x}, Elem{z});
    if (central) out.push_back(Elem{z});
  }
  return out;
}

// Closure of all commutators by repeated multiplication.
std::vector<Elem> derived_oracle(const FiniteGroup& g) {
  std::vector<bool> in(g.order(), false);
  for (std::uint32_t x = 0; x < g.order(); ++x)
    for (std::uint32_t y = 0; y < g.order(); ++y) in[g.commutator(Elem{x}, Elem{y}).index] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t x = 0; x < g.order(); ++x)
      for (std::uint32_t y = 0; y < g.order(); ++y)
        if (in[x] && in[y] && !in[g.mul(Elem{x}, Elem{y}).index]) in[g.mul(Elem{x}, Elem{y}).index] = grew = true;
  }
  std::vector<Elem> out;
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(Elem{x});
  return out;
}

std::vector<GroupPtr> small_groups() {
  return {FiniteGroup::heisenberg(2), FiniteGroup::heisenberg(3), FiniteGroup::heisenberg(4),
          FiniteGroup::unitriangular(3, 2), FiniteGroup::unitriangular(4, 2), fixtures::s3(),
          cyclic_group(6), cyclic_semidirect(9, 3, 4), cyclic_semidirect(7, 3, 2),
          direct_product(cyclic_group(2), fixtures::s3())};
}

}  // namespace

TEST_CASE("heisenberg products, inverses and commutators") {
  const auto g = FiniteGroup::heisenberg(3);
  CHECK(g->order() == 27);
  CHECK(g->mul(heis(g, 1, 0, 0), heis(g, 0, 1, 0)) == heis(g, 1, 1, 1));
  CHECK(g->inv(heis(g, 1, 1, 0)) == heis(g, 2, 2, 1));
  CHECK(g->inv(g->identity()) == g->identity());
  CHECK(g->commutator(heis(g, 1, 0, 0), heis(g, 0, 1, 0)) == heis(g, 0, 0, 1));
  for (const Elem x : fixtures::all_elements(g)) {
    CHECK(g->mul(g->identity(), x) == x);
    CHECK(g->commutator(x, x) == g->identity());
  }
  // Product formula against the coordinates.
  for (const Elem x : fixtures::all_elements(g)) {
    for (const Elem y : fixtures::all_elements(g)) {
      const auto a = g->coordinates(x), b = g->coordinates(y);
      REQUIRE(g->mul(x, y) == heis(g, a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]));
    }
  }
}

TEST_CASE("cayley tables for small cyclic groups") {
  const auto c2 = FiniteGroup::cayley({{0, 1}, {1, 0}});
  CHECK(c2->mul(Elem{1}, Elem{1}) == c2->identity());
  const auto c3 = FiniteGroup::cayley({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(c3->inv(Elem{1}) == c3->mul(Elem{1}, Elem{1}));
}

TEST_CASE("invalid cayley tables are rejected") {
  CHECK_THROWS_AS(FiniteGroup::cayley({{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup::cayley({{1, 0}, {0, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup::cayley({{0, 1, 2}, {1, 2}, {2, 0, 1}}), Error);
  // Latin square with identity 0 that is not associative.
  CHECK_THROWS_AS(FiniteGroup::cayley({{0, 1, 2, 3, 4},
                                       {1, 0, 3, 4, 2},
                                       {2, 4, 0, 1, 3},
                                       {3, 2, 4, 0, 1},
                                       {4, 3, 1, 2, 0}}),
                  Error);
}

TEST_CASE("elements outside the carrier are rejected") {
  const auto g = FiniteGroup::heisenberg(3);
  try {
    g->mul(Elem{27}, Elem{0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ElementNotInCarrier);
  }
  CHECK_THROWS_AS(g->inv(Elem{100}), Error);
}

TEST_CASE("every backend is associative") {
  for (const auto& g : small_groups()) {
    INFO(g->name());
    CHECK(associative_oracle(*g));
  }
}

TEST_CASE("unitriangular backend") {
  const auto ut = FiniteGroup::unitriangular(4, 3);
  CHECK(ut->order() == 729);
  CHECK(ut->backend() == Backend::Unitriangular);
  CHECK(nilpotency_class(ut) == 3);
  CHECK_FALSE(is_nilpotent_of_class_two(ut));
  const auto ut3 = FiniteGroup::unitriangular(3, 5);
  CHECK(is_nilpotent_of_class_two(ut3));
  CHECK(centre(ut3).order() == 5);
  for (const Elem x : fixtures::all_elements(ut)) CHECK(ut->mul(x, ut->inv(x)) == ut->identity());
}

TEST_CASE("conjugation") {
  const auto g = FiniteGroup::heisenberg(3);
  CHECK(conjugation_iota(g, heis(g, 1, 0, 0))(heis(g, 0, 1, 0)) == heis(g, 0, 1, 1));
  const auto id = conjugation_iota(g, g->identity());
  for (const Elem x : fixtures::all_elements(g)) {
    CHECK(id(x) == x);
    CHECK(conjugation_iota(g, x)(x) == x);
  }
}

TEST_CASE("centre and derived subgroup against definitions") {
  for (const auto& g : small_groups()) {
    INFO(g->name());
    CHECK(centre(g).members() == centre_oracle(*g));
    CHECK(derived_subgroup(g).members() == derived_oracle(*g));
  }
  const auto h = FiniteGroup::heisenberg(3);
  const auto z = centre(h);
  CHECK(z.order() == 3);
  for (const Elem x : z.members()) {
    const auto c = h->coordinates(x);
    CHECK(c[0] == 0);
    CHECK(c[1] == 0);
  }
  CHECK(derived_subgroup(h) == z);
  const auto c6 = cyclic_group(6);
  CHECK(centre(c6).order() == 6);
  CHECK(derived_subgroup(c6).is_trivial());
}

TEST_CASE("nilpotency class") {
  CHECK(is_nilpotent_of_class_two(FiniteGroup::heisenberg(5)));
  CHECK(nilpotency_class(FiniteGroup::heisenberg(5)) == 2);
  CHECK(is_nilpotent_of_class_two(cyclic_group(6)));
  CHECK(nilpotency_class(cyclic_group(6)) == 1);
  CHECK_FALSE(is_nilpotent_of_class_two(fixtures::s3()));
  CHECK_FALSE(nilpotency_class(fixtures::s3()).has_value());
  CHECK(nilpotency_class(FiniteGroup::unitriangular(4, 2)) == 3);
}

TEST_CASE("central series") {
  const auto h = FiniteGroup::heisenberg(3);
  const auto lower = lower_central_series(h);
  REQUIRE(lower.size() == 3);
  CHECK(lower[0].order() == 27);
  CHECK(lower[1] == centre(h));
  CHECK(lower[2].is_trivial());
  const auto upper = upper_central_series(h);
  REQUIRE(upper.size() == 3);
  CHECK(upper[0].is_trivial());
  CHECK(upper[1] == centre(h));
  CHECK(upper[2].order() == 27);
}

TEST_CASE("commutator convention reproduces the power identity") {
  for (const auto& g : {FiniteGroup::heisenberg(3), FiniteGroup::heisenberg(4), FiniteGroup::unitriangular(3, 2),
                        cyclic_group(6)}) {
    INFO(g->name());
    REQUIRE(is_nilpotent_of_class_two(g));
    for (long long n = -3; n <= 6; ++n) {
      for (const Elem x : fixtures::all_elements(g)) {
        for (const Elem y : fixtures::all_elements(g)) {
          const Elem lhs = g->mul(g->mul(g->mul(x, g->pow(x, n)), y), g->pow(x, -n));
          const Elem rhs = g->mul(g->mul(x, y), g->pow(g->commutator(x, y), n));
          REQUIRE(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("quotients by central subgroups") {
  const auto h = FiniteGroup::heisenberg(3);
  const auto q = quotient(centre(h));
  CHECK(q.order() == 9);
  CHECK(is_abelian(q.group()));
  for (const Elem x : fixtures::all_elements(h)) {
    CHECK(centre(h).contains(h->mul(h->inv(q.transversal(q.project(x))), x)));
    for (const Elem y : fixtures::all_elements(h))
      REQUIRE(q.project(h->mul(x, y)) == q.group()->mul(q.project(x), q.project(y)));
  }
  // Transversal picks the least member.
  for (std::uint32_t c = 0; c < q.order(); ++c) {
    const Elem t = q.transversal(Elem{c});
    for (const Elem x : fixtures::all_elements(h))
      if (q.project(x) == Elem{c}) CHECK(t <= x);
  }

  const auto s = fixtures::s3();
  const auto trivial = quotient(trivial_subgroup(s));
  CHECK(trivial.order() == 6);
  for (const Elem x : fixtures::all_elements(s))
    for (const Elem y : fixtures::all_elements(s))
      CHECK(trivial.project(s->mul(x, y)) == trivial.group()->mul(trivial.project(x), trivial.project(y)));

  try {
    quotient(whole_group(s));
    FAIL("expected K-not-central");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::KNotCentral);
  }
  CHECK(quotient(whole_group(cyclic_group(4))).order() == 1);
}

TEST_CASE("coordinates round trip") {
  for (const auto& g : small_groups()) {
    for (const Elem x : fixtures::all_elements(g)) CHECK(g->from_coordinates(g->coordinates(x)) == x);
  }
}

TEST_CASE("semidirect product C9 x| C3") {
  const auto g = cyclic_semidirect(9, 3, 4);
  CHECK(g->order() == 27);
  CHECK_FALSE(is_abelian(g));
  const Elem a{1}, b{9};
  CHECK(g->mul(g->mul(b, a), g->inv(b)) == g->pow(a, 4));
  CHECK(g->element_order(a) == 9);
  CHECK(g->element_order(b) == 3);
}
