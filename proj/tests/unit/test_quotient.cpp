#include <doctest.h>

#include "braceblock/error.hpp"
#include "braceblock/quotient.hpp"
#include "support/fixtures.hpp"

using namespace braceblock;
using fixtures::heis;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

PairPtr heisenberg_pair(std::uint32_t n) { return class_two_pair(FiniteGroup::heisenberg(n)); }

}  // namespace

TEST_CASE("central pair validation") {
  const auto s = fixtures::s3();
  const Elem t12 = fixtures::perm(s, {1, 0, 2});
  const Elem c3 = fixtures::perm(s, {1, 2, 0});
  CHECK_NOTHROW(make_central_pair(s, trivial_subgroup(s), Subgroup(s, {t12})));
  CHECK(kind_of([&] { make_central_pair(s, Subgroup(s, {c3}), whole_group(s)); }) == ErrorKind::KNotCentral);
  CHECK(kind_of([&] { make_central_pair(s, trivial_subgroup(s), whole_group(s)); }) ==
        ErrorKind::AModKNotAbelian);
  const auto h = FiniteGroup::heisenberg(3);
  const auto pair = class_two_pair(h);
  CHECK(pair->k() == derived_subgroup(h));
  CHECK(pair->has_unity());
  CHECK(kind_of([&] { make_central_pair(h, centre(h), trivial_subgroup(h)); }) == ErrorKind::KNotInA);
  CHECK(kind_of([&] { class_two_pair(s); }) == ErrorKind::NotClassTwo);
  CHECK_FALSE(make_central_pair(s, trivial_subgroup(s), Subgroup(s, {t12}))->has_unity());
}

TEST_CASE("endomorphisms from generator images") {
  const auto pair = heisenberg_pair(3);
  const auto& q = pair->quotient();
  std::vector<std::pair<Elem, Elem>> zero_images;
  for (const Elem s : q.group()->generators()) zero_images.emplace_back(s, q.group()->identity());
  CHECK(endo_from_generator_images(pair, zero_images).is_zero());

  // psi_2 descends: generators of G map to (2a, 2b, *).
  const auto h = pair->group();
  const auto psi = endo_from_generator_images(
      pair, {{q.project(heis(h, 1, 0, 0)), q.project(heis(h, 2, 0, 0))},
             {q.project(heis(h, 0, 1, 0)), q.project(heis(h, 0, 2, 0))}});
  CHECK(psi == fixtures::heisenberg_psi(pair, 2));

  const auto c4 = cyclic_group(4);
  const auto c4pair = make_central_pair(c4, trivial_subgroup(c4), whole_group(c4));
  const auto sq = endo_from_generator_images(c4pair, {{Elem{1}, Elem{2}}});
  CHECK(sq(Elem{1}) == Elem{2});
  CHECK(sq(Elem{2}) == Elem{0});
  CHECK(sq == power_endo(c4pair, 2));

  CHECK(kind_of([&] { endo_from_generator_images(c4pair, {{Elem{2}, Elem{2}}}); }) ==
        ErrorKind::GeneratorsIncomplete);
  CHECK(kind_of([&] { endo_from_generator_images(c4pair, {{Elem{1}, Elem{1}}, {Elem{2}, Elem{0}}}); }) ==
        ErrorKind::NotAHomomorphism);

  const auto s = fixtures::s3();
  const auto spair = make_central_pair(s, trivial_subgroup(s), Subgroup(s, {fixtures::perm(s, {1, 0, 2})}));
  const Elem c3 = fixtures::perm(s, {1, 2, 0});
  CHECK(kind_of([&] { endo_from_generator_images(spair, {{c3, c3}}); }) == ErrorKind::ImageEscapesA);
}

TEST_CASE("ring operations on coset tables") {
  const auto pair = heisenberg_pair(5);
  const auto psi = [&](int x) { return fixtures::heisenberg_psi(pair, x); };
  const auto zero = QuotientEndo::zero(pair);
  CHECK(ring_mul(psi(2), psi(3)) == psi(1));
  CHECK(psi(1) == QuotientEndo::identity(pair));
  CHECK(ring_add(psi(2), zero) == psi(2));
  CHECK(ring_add(psi(2), ring_neg(psi(2))) == zero);
  CHECK(ring_add(psi(2), psi(4)) == psi(1));
  CHECK(jacobson_circle(psi(3), zero) == psi(3));
  CHECK(jacobson_circle(zero, psi(3)) == psi(3));
  CHECK(ring_scale(psi(1), 5) == zero);
  CHECK(ring_pow(psi(2), 4) == psi(1));
  CHECK(ring_sub(psi(4), psi(1)) == psi(3));
}

TEST_CASE("composition applies the right factor first") {
  // Two non-commuting endomorphisms of Z/3 x Z/3 = Heisenberg(Z/3)/K.
  const auto pair = heisenberg_pair(3);
  const auto h = pair->group();
  const auto& q = pair->quotient();
  const Elem e1 = q.project(heis(h, 1, 0, 0)), e2 = q.project(heis(h, 0, 1, 0));
  const auto proj1 = endo_from_generator_images(pair, {{e1, e1}, {e2, q.group()->identity()}});
  const auto swap = endo_from_generator_images(pair, {{e1, e2}, {e2, e1}});
  const auto composed = ring_mul(proj1, swap);
  for (std::uint32_t c = 0; c < q.order(); ++c) CHECK(composed(Elem{c}) == proj1(swap(Elem{c})));
  CHECK_FALSE(ring_mul(proj1, swap) == ring_mul(swap, proj1));
}

TEST_CASE("nilpotent square: circle equals sum") {
  const auto pair = heisenberg_pair(3);
  const auto h = pair->group();
  const auto& q = pair->quotient();
  const Elem e1 = q.project(heis(h, 1, 0, 0)), e2 = q.project(heis(h, 0, 1, 0));
  const auto shift = endo_from_generator_images(pair, {{e1, e2}, {e2, q.group()->identity()}});
  REQUIRE(ring_mul(shift, shift).is_zero());
  CHECK(jacobson_circle(shift, shift) == ring_add(shift, shift));
}

TEST_CASE("ring axioms on enumerated rings") {
  const auto c4 = cyclic_group(4);
  for (const auto& pair : {heisenberg_pair(2), heisenberg_pair(3),
                           make_central_pair(c4, trivial_subgroup(c4), whole_group(c4))}) {
    const auto ring = enumerate_ring(pair);
    INFO(pair->group()->name());
    const std::size_t q = pair->quotient().order();
    // |End(Z/p^2)| = p^4 for Heisenberg quotients, |End(C4)| = 4.
    if (q == 4 && pair->group()->order() == 8) CHECK(ring.size() == 16);
    if (q == 9) CHECK(ring.size() == 81);
    if (pair->group()->order() == 4) CHECK(ring.size() == 4);
    const std::size_t limit = std::min<std::size_t>(ring.size(), 20);
    for (std::size_t i = 0; i < limit; ++i)
      for (std::size_t j = 0; j < limit; ++j)
        for (std::size_t k = 0; k < limit; ++k) {
          const auto &a = ring[i], &b = ring[j], &c = ring[k];
          REQUIRE(ring_mul(ring_mul(a, b), c) == ring_mul(a, ring_mul(b, c)));
          REQUIRE(ring_mul(a, ring_add(b, c)) == ring_add(ring_mul(a, b), ring_mul(a, c)));
          REQUIRE(ring_mul(ring_add(a, b), c) == ring_add(ring_mul(a, c), ring_mul(b, c)));
          REQUIRE(ring_add(ring_add(a, b), c) == ring_add(a, ring_add(b, c)));
        }
  }
  const auto big = class_two_pair(FiniteGroup::heisenberg(9));
  CHECK(kind_of([&] { enumerate_ring(big); }) == ErrorKind::BoundExceeded);
}

TEST_CASE("canonical lifting") {
  const auto pair = heisenberg_pair(3);
  const auto h = pair->group();
  const auto& q = pair->quotient();
  const auto psi = fixtures::heisenberg_psi(pair, 1);
  const auto lift = canonical_lifting(psi);
  for (const Elem g : fixtures::all_elements(h)) {
    Elem least = g;
    for (const Elem x : fixtures::all_elements(h))
      if (q.project(x) == q.project(g) && x < least) least = x;
    CHECK(lift(g) == least);
  }
  const auto zero = canonical_lifting(QuotientEndo::zero(pair));
  for (const Elem g : fixtures::all_elements(h)) CHECK(pair->k().contains(zero(g)));

  // K = 1: the lifting is the endomorphism itself.
  const auto c4 = cyclic_group(4);
  const auto c4pair = make_central_pair(c4, trivial_subgroup(c4), whole_group(c4));
  const auto sq = canonical_lifting(power_endo(c4pair, 3));
  for (std::uint32_t g = 0; g < 4; ++g) CHECK(sq(Elem{g}) == c4->pow(Elem{g}, 3));
}

TEST_CASE("lifting properties") {
  const auto pair = heisenberg_pair(3);
  const auto h = pair->group();
  const auto& q = pair->quotient();
  const auto ring = enumerate_ring(pair);
  for (std::size_t i = 0; i < ring.size(); i += 7) {
    const auto l = canonical_lifting(ring[i]);
    for (const Elem k : pair->k().members()) CHECK(pair->k().contains(l(k)));
    for (const Elem g : fixtures::all_elements(h)) {
      CHECK(q.project(l(g)) == ring[i](q.project(g)));
      for (const Elem x : fixtures::all_elements(h))
        REQUIRE(q.project(h->mul(l(g), l(x))) == q.project(l(h->mul(g, x))));
    }
  }
  // iota(h^phi g^psi) = iota(g^psi h^phi).
  for (std::size_t i = 0; i < ring.size(); i += 11) {
    for (std::size_t j = 0; j < ring.size(); j += 13) {
      const auto lp = canonical_lifting(ring[i]), lf = canonical_lifting(ring[j]);
      for (const Elem g : fixtures::all_elements(h)) {
        for (const Elem x : fixtures::all_elements(h)) {
          const auto a = conjugation_iota(h, h->mul(lf(x), lp(g)));
          const auto b = conjugation_iota(h, h->mul(lp(g), lf(x)));
          for (const Elem y : {heis(h, 1, 0, 0), heis(h, 0, 1, 0)}) REQUIRE(a(y) == b(y));
        }
      }
    }
  }
}

TEST_CASE("perturbed liftings") {
  const auto pair = heisenberg_pair(3);
  const auto h = pair->group();
  const auto lift = canonical_lifting(fixtures::heisenberg_psi(pair, 2));
  const auto same = perturb_lifting(lift, [](Elem) { return Elem{0}; });
  CHECK(same.values() == lift.values());
  const Elem k = heis(h, 0, 0, 1);
  const auto shifted = perturb_lifting(lift, [&](Elem) { return k; });
  CHECK(shifted.values() != lift.values());
  for (const Elem g : fixtures::all_elements(h)) {
    const auto a = conjugation_iota(h, lift(g)), b = conjugation_iota(h, shifted(g));
    for (const Elem x : fixtures::all_elements(h)) CHECK(a(x) == b(x));
  }
  CHECK(kind_of([&] { perturb_lifting(lift, [&](Elem) { return heis(h, 1, 0, 0); }); }) ==
        ErrorKind::DeltaEscapesK);
}

TEST_CASE("endomorphisms of G as liftings") {
  const auto pair = heisenberg_pair(3);
  const auto h = pair->group();
  const auto map = fixtures::heisenberg_scaling(h, 2);
  CHECK(is_endomorphism(*h, map));
  const auto lift = lifting_from_endomorphism(pair, map);
  CHECK(lift.endo() == fixtures::heisenberg_psi(pair, 2));
  auto broken = map;
  std::swap(broken[1], broken[2]);
  CHECK_FALSE(is_endomorphism(*h, broken));
  CHECK(kind_of([&] { lifting_from_endomorphism(pair, broken); }) == ErrorKind::NotAnEndomorphism);
}
