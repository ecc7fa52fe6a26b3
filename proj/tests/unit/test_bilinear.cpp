#include <doctest.h>

#include "braceblock/bilinear.hpp"
#include "braceblock/error.hpp"
#include "support/fixtures.hpp"

using namespace braceblock;
using fixtures::heis;

namespace {

// Exhaustive definition check, independent of check_bilinear.
bool bilinear_oracle(const CentralBilinearMap& a) {
  const auto& pair = *a.pair();
  const auto& g = *pair.group();
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      if (!pair.k().contains(a(Elem{x}, Elem{y}))) return false;
      if (pair.k().contains(Elem{x}) && a(Elem{x}, Elem{y}) != Elem{0}) return false;
      if (pair.k().contains(Elem{y}) && a(Elem{x}, Elem{y}) != Elem{0}) return false;
      for (std::uint32_t z = 0; z < n; ++z) {
        if (a(g.mul(Elem{x}, Elem{y}), Elem{z}) != g.mul(a(Elem{x}, Elem{z}), a(Elem{y}, Elem{z}))) return false;
        if (a(Elem{x}, g.mul(Elem{y}, Elem{z})) != g.mul(a(Elem{x}, Elem{y}), a(Elem{x}, Elem{z}))) return false;
      }
    }
  return true;
}

ErrorKind validate_kind(const PairPtr& pair, std::vector<Elem> table) {
  try {
    validate_bilinear(pair, std::move(table));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("trivial map") {
  const auto pair = class_two_pair(FiniteGroup::heisenberg(3));
  const auto t = trivial_bilinear(pair);
  CHECK(t.is_trivial());
  CHECK(check_bilinear(t).ok);
  CHECK(bilinear_oracle(t));
  CHECK(validate_bilinear(pair, std::vector<Elem>(27 * 27, Elem{0})).is_dense());
}

TEST_CASE("commutator powers") {
  const auto h = FiniteGroup::heisenberg(3);
  const auto pair = class_two_pair(h);
  CHECK(bilinear_from_commutator_power(pair, 0).is_trivial());
  const auto a1 = bilinear_from_commutator_power(pair, 1);
  CHECK(a1(heis(h, 1, 0, 0), heis(h, 0, 1, 0)) == heis(h, 0, 0, 1));
  CHECK(bilinear_oracle(a1));
  CHECK(equal(bilinear_from_commutator_power(pair, 2), bilinear_from_commutator_power(pair, 5)));
  CHECK(equal(bilinear_from_commutator_power(pair, 1), bilinear_from_commutator_power(pair, -2)));
  CHECK_FALSE(equal(bilinear_from_commutator_power(pair, 1), bilinear_from_commutator_power(pair, 2)));

  const auto s = fixtures::s3();
  const auto spair = make_central_pair(s, trivial_subgroup(s), Subgroup(s, {fixtures::perm(s, {1, 0, 2})}));
  try {
    bilinear_from_commutator_power(spair, 1);
    FAIL("expected not-class-two");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClassTwo);
  }
  // Class two, but K too small to hold commutators.
  const auto tpair = make_central_pair(h, trivial_subgroup(h), trivial_subgroup(h));
  try {
    bilinear_from_commutator_power(tpair, 1);
    FAIL("expected validation-failed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ValidationFailed);
  }
}

TEST_CASE("validation failures") {
  const auto h = FiniteGroup::heisenberg(3);
  const auto pair = class_two_pair(h);
  std::vector<Elem> first(27 * 27);
  for (std::uint32_t x = 0; x < 27; ++x)
    for (std::uint32_t y = 0; y < 27; ++y) first[x * 27 + y] = Elem{x};
  CHECK(validate_kind(pair, first) == ErrorKind::ValueOutsideK);

  std::vector<Elem> constant(27 * 27, Elem{0});
  const Elem z = heis(h, 0, 0, 1);
  for (std::uint32_t x = 0; x < 27; ++x)
    for (std::uint32_t y = 0; y < 27; ++y)
      if (!pair->k().contains(Elem{x}) && !pair->k().contains(Elem{y})) constant[x * 27 + y] = z;
  CHECK(validate_kind(pair, constant) == ErrorKind::NotBilinear);

  // C2 x C2 with K = first factor: (g, h) -> g_1 h_1 is bilinear but not zero on K.
  const auto v = direct_product(cyclic_group(2), cyclic_group(2));
  const Elem k{2};  // (1, 0)
  const auto vpair = make_central_pair(v, Subgroup(v, {k}), whole_group(v));
  std::vector<Elem> dot(16);
  for (std::uint32_t x = 0; x < 4; ++x)
    for (std::uint32_t y = 0; y < 4; ++y)
      dot[x * 4 + y] = (x / 2) * (y / 2) ? k : Elem{0};
  CHECK(validate_kind(vpair, dot) == ErrorKind::NonvanishingOnK);
}

TEST_CASE("beta step") {
  const auto h = FiniteGroup::heisenberg(3);
  const auto pair = class_two_pair(h);
  const auto triv = trivial_bilinear(pair);
  const auto psi = canonical_lifting(fixtures::heisenberg_psi(pair, 1));
  const auto q = canonical_lifting(fixtures::heisenberg_psi(pair, 2));
  const auto none = beta_step(triv, triv, canonical_lifting(QuotientEndo::zero(pair)), q);
  CHECK(equal(none, triv));

  const auto alpha = bilinear_from_commutator_power(pair, 1);
  const auto b = beta_step(alpha, triv, psi, q);
  for (const Elem x : fixtures::all_elements(h))
    for (const Elem y : fixtures::all_elements(h))
      CHECK(b(x, y) == h->mul(h->commutator(psi(x), q(y)), alpha(x, y)));
  CHECK(bilinear_oracle(b));
}

TEST_CASE("random bilinear maps") {
  const auto pair = class_two_pair(FiniteGroup::heisenberg(3));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto m = random_bilinear(pair, seed);
    REQUIRE(m.has_value());
    CHECK(bilinear_oracle(*m));
  }
}

TEST_CASE("large groups use closed forms and sampling") {
  const auto g = FiniteGroup::unitriangular(3, 11);
  REQUIRE(g->order() == 1331);
  const auto pair = class_two_pair(g);
  const auto a = bilinear_from_commutator_power(pair, 3);
  CHECK_FALSE(a.is_dense());
  const auto check = check_bilinear(a);
  CHECK(check.ok);
  CHECK(check.sampled);
}
