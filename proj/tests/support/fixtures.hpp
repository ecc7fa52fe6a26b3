#pragma once

#include <cstdint>
#include <vector>

#include "braceblock/group.hpp"
#include "braceblock/quotient.hpp"

namespace fixtures {

using braceblock::Elem;
using braceblock::GroupPtr;

inline Elem heis(const GroupPtr& g, std::int64_t a, std::int64_t b, std::int64_t c) {
  const std::int64_t coords[3] = {a, b, c};
  return g->from_coordinates(coords);
}

inline GroupPtr s3() { return braceblock::FiniteGroup::permutation(3, {{1, 0, 2}, {1, 2, 0}}); }

inline Elem perm(const GroupPtr& g, std::vector<std::int64_t> images) { return g->from_coordinates(images); }

/// (a,b,c) -> (xa, xb, x^2 c) on a Heisenberg group, as a full map on G.
inline std::vector<Elem> heisenberg_scaling(const GroupPtr& g, std::int64_t x) {
  std::vector<Elem> out(g->order());
  for (std::uint32_t i = 0; i < g->order(); ++i) {
    const auto c = g->coordinates(Elem{i});
    out[i] = heis(g, x * c[0], x * c[1], x * x * c[2]);
  }
  return out;
}

/// The endomorphism of G/[G,G] induced by heisenberg_scaling.
inline braceblock::QuotientEndo heisenberg_psi(const braceblock::PairPtr& pair, std::int64_t x) {
  const auto map = fixtures::heisenberg_scaling(pair->group(), x);
  return braceblock::QuotientEndo::induced(pair, [&](Elem g) { return map[g.index]; });
}

inline std::vector<Elem> all_elements(const GroupPtr& g) {
  std::vector<Elem> out;
  for (std::uint32_t i = 0; i < g->order(); ++i) out.push_back(Elem{i});
  return out;
}

}  // namespace fixtures
