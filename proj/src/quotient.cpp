#include "braceblock/quotient.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "braceblock/error.hpp"

namespace braceblock {

namespace {
constexpr std::size_t kQuotientBound = 4096;
constexpr std::size_t kRingEnumerationBound = 64;
constexpr std::uint64_t kRingCandidateBound = 10'000'000;
}  // namespace

Quotient quotient(const Subgroup& k) {
  const GroupPtr& g = k.parent();
  for (const Elem z : k.members()) {
    for (const Elem s : g->generators()) {
      if (g->mul_nc(z, s) != g->mul_nc(s, z)) {
        throw Error(ErrorKind::KNotCentral, "K is not contained in the centre of " + g->name());
      }
    }
  }
  const std::size_t n = g->order();
  if (n / k.order() > kQuotientBound) {
    throw Error(ErrorKind::BoundExceeded, "quotient of order " + std::to_string(n / k.order()) +
                                              " exceeds the Cayley-table bound");
  }
  Quotient q(g, k);
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  q.projection_.assign(n, Elem{kUnset});
  for (std::uint32_t x = 0; x < n; ++x) {
    if (q.projection_[x].index != kUnset) continue;
    const Elem coset{static_cast<std::uint32_t>(q.transversal_.size())};
    q.transversal_.push_back(Elem{x});
    for (const Elem z : k.members()) q.projection_[g->mul_nc(Elem{x}, z).index] = coset;
  }
  const std::size_t m = q.transversal_.size();
  std::vector<std::uint32_t> flat(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      flat[i * m + j] = q.projection_[g->mul_nc(q.transversal_[i], q.transversal_[j]).index].index;
  q.group_ = cayley_unchecked(std::move(flat), m,
                              g->name() + "/K(" + std::to_string(k.order()) + ")");
  return q;
}

PairPtr make_central_pair(GroupPtr g, Subgroup k, Subgroup a) {
  if (k.parent() != g || a.parent() != g) {
    throw Error(ErrorKind::PairMismatch, "K and A must be subgroups of G");
  }
  if (!k.is_subset_of(a)) throw Error(ErrorKind::KNotInA, "K is not contained in A");
  Quotient q = quotient(k);
  for (const Elem x : a.generators()) {
    for (const Elem y : a.generators()) {
      if (!k.contains(g->commutator_nc(x, y))) {
        throw Error(ErrorKind::AModKNotAbelian, "A/K is not abelian");
      }
    }
  }
  auto pair = std::shared_ptr<CentralPair>(new CentralPair(g, std::move(k), std::move(a), std::move(q)));
  pair->a_mod_k_.assign(pair->quotient_.order(), false);
  for (const Elem x : pair->a_.members()) pair->a_mod_k_[pair->quotient_.project(x).index] = true;
  return pair;
}

PairPtr class_two_pair(const GroupPtr& g) {
  if (!is_nilpotent_of_class_two(g)) {
    throw Error(ErrorKind::NotClassTwo, g->name() + " is not nilpotent of class at most two");
  }
  return make_central_pair(g, derived_subgroup(g), whole_group(g));
}

void require_same_pair(const PairPtr& a, const PairPtr& b) {
  if (a == b) return;
  if (a && b && a->group() == b->group() && a->k() == b->k() && a->a() == b->a()) return;
  throw Error(ErrorKind::PairMismatch, "operands live over different (G, K, A)");
}

bool is_endomorphism(const FiniteGroup& group, std::span<const Elem> images) {
  if (images.size() != group.order()) return false;
  for (const Elem v : images) {
    if (!group.contains(v)) return false;
  }
  for (std::uint32_t x = 0; x < group.order(); ++x) {
    for (const Elem s : group.generators()) {
      if (images[group.mul_nc(Elem{x}, s).index] != group.mul_nc(images[x], images[s.index])) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// QuotientEndo

QuotientEndo::QuotientEndo(PairPtr pair, std::vector<Elem> table)
    : pair_(std::move(pair)), table_(std::move(table)) {
  const auto& q = *pair_->quotient().group();
  if (!is_endomorphism(q, table_)) {
    throw Error(ErrorKind::NotAHomomorphism, "coset table is not an endomorphism of G/K");
  }
  for (const Elem v : table_) {
    if (!pair_->in_a_mod_k(v)) throw Error(ErrorKind::ImageEscapesA, "image not contained in A/K");
  }
}

QuotientEndo QuotientEndo::zero(PairPtr pair) {
  const std::size_t m = pair->quotient().order();
  return QuotientEndo(std::move(pair), std::vector<Elem>(m, Elem{0}), Unchecked{});
}

QuotientEndo QuotientEndo::identity(PairPtr pair) {
  std::vector<Elem> table(pair->quotient().order());
  for (std::uint32_t i = 0; i < table.size(); ++i) table[i] = Elem{i};
  return QuotientEndo(std::move(pair), std::move(table));
}

QuotientEndo QuotientEndo::induced(PairPtr pair, const std::function<Elem(Elem)>& map_on_g) {
  const Quotient& q = pair->quotient();
  std::vector<Elem> table(q.order());
  for (std::uint32_t c = 0; c < q.order(); ++c) table[c] = q.project(map_on_g(q.transversal(Elem{c})));
  for (std::uint32_t x = 0; x < pair->group()->order(); ++x) {
    if (q.project(map_on_g(Elem{x})) != table[q.project(Elem{x}).index]) {
      throw Error(ErrorKind::NotAHomomorphism, "map does not respect cosets of K");
    }
  }
  return QuotientEndo(std::move(pair), std::move(table));
}

bool QuotientEndo::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](Elem e) { return e.index == 0; });
}

QuotientEndo endo_from_generator_images(const PairPtr& pair,
                                        const std::vector<std::pair<Elem, Elem>>& images) {
  const auto& q = *pair->quotient().group();
  for (const auto& [s, img] : images) {
    q.inv(s);
    q.inv(img);
    if (!pair->in_a_mod_k(img)) throw Error(ErrorKind::ImageEscapesA, "generator image outside A/K");
  }
  std::vector<std::optional<Elem>> table(q.order());
  table[0] = q.identity();
  std::deque<Elem> queue{q.identity()};
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (const auto& [s, img] : images) {
      const Elem y = q.mul_nc(x, s);
      const Elem v = q.mul_nc(*table[x.index], img);
      if (!table[y.index]) {
        table[y.index] = v;
        queue.push_back(y);
      } else if (*table[y.index] != v) {
        throw Error(ErrorKind::NotAHomomorphism, "generator images do not extend to a homomorphism");
      }
    }
  }
  std::vector<Elem> flat;
  flat.reserve(table.size());
  for (const auto& v : table) {
    if (!v) throw Error(ErrorKind::GeneratorsIncomplete, "given elements do not generate G/K");
    flat.push_back(*v);
  }
  return QuotientEndo(pair, std::move(flat));
}

QuotientEndo ring_add(const QuotientEndo& psi, const QuotientEndo& phi) {
  require_same_pair(psi.pair(), phi.pair());
  const auto& q = *psi.pair()->quotient().group();
  std::vector<Elem> t(psi.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = q.mul_nc(psi.table()[i], phi.table()[i]);
  return QuotientEndo(psi.pair(), std::move(t), QuotientEndo::Unchecked{});
}

QuotientEndo ring_mul(const QuotientEndo& psi, const QuotientEndo& phi) {
  require_same_pair(psi.pair(), phi.pair());
  std::vector<Elem> t(psi.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = psi(phi.table()[i]);
  return QuotientEndo(psi.pair(), std::move(t), QuotientEndo::Unchecked{});
}

QuotientEndo ring_neg(const QuotientEndo& psi) {
  const auto& q = *psi.pair()->quotient().group();
  std::vector<Elem> t(psi.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = q.inv_nc(psi.table()[i]);
  return QuotientEndo(psi.pair(), std::move(t), QuotientEndo::Unchecked{});
}

QuotientEndo ring_sub(const QuotientEndo& psi, const QuotientEndo& phi) {
  return ring_add(psi, ring_neg(phi));
}

QuotientEndo jacobson_circle(const QuotientEndo& psi, const QuotientEndo& phi) {
  return ring_add(ring_add(psi, phi), ring_mul(psi, phi));
}

QuotientEndo ring_pow(const QuotientEndo& psi, unsigned k) {
  if (k == 0) throw Error(ErrorKind::ValidationFailed, "ring_pow needs k >= 1 (no unity in general)");
  QuotientEndo out = psi;
  for (unsigned i = 1; i < k; ++i) out = ring_mul(out, psi);
  return out;
}

QuotientEndo ring_scale(const QuotientEndo& psi, std::uint64_t k) {
  QuotientEndo out = QuotientEndo::zero(psi.pair());
  for (std::uint64_t i = 0; i < k; ++i) out = ring_add(out, psi);
  return out;
}

QuotientEndo power_endo(const PairPtr& pair, long long n) {
  const GroupPtr& q = pair->quotient().group();
  if (!is_abelian(q)) throw Error(ErrorKind::NotAHomomorphism, "power map needs G/K abelian");
  std::vector<Elem> t(q->order());
  for (std::uint32_t i = 0; i < t.size(); ++i) t[i] = q->pow(Elem{i}, n);
  return QuotientEndo(pair, std::move(t));
}

std::vector<QuotientEndo> enumerate_ring(const PairPtr& pair) {
  const auto& q = *pair->quotient().group();
  if (q.order() > kRingEnumerationBound) {
    throw Error(ErrorKind::BoundExceeded, "ring enumeration limited to |G/K| <= 64");
  }
  std::vector<Elem> targets;
  for (std::uint32_t c = 0; c < q.order(); ++c) {
    if (pair->in_a_mod_k(Elem{c})) targets.push_back(Elem{c});
  }
  const auto& gens = q.generators();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    total *= targets.size();
    if (total > kRingCandidateBound) throw Error(ErrorKind::BoundExceeded, "too many candidate images");
  }
  std::vector<QuotientEndo> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t v = t;
    std::vector<std::pair<Elem, Elem>> images;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      images.emplace_back(gens[i], targets[v % targets.size()]);
      v /= targets.size();
    }
    try {
      out.push_back(endo_from_generator_images(pair, images));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotAHomomorphism) throw;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lifting

Lifting::Lifting(QuotientEndo endo, std::vector<Elem> map) : endo_(std::move(endo)) {
  const CentralPair& pair = *endo_.pair();
  const Quotient& q = pair.quotient();
  if (map.size() != pair.group()->order()) {
    throw Error(ErrorKind::NotAHomomorphism, "lifting must be defined on all of G");
  }
  for (std::uint32_t g = 0; g < map.size(); ++g) {
    if (!pair.a().contains(map[g])) throw Error(ErrorKind::ImageEscapesA, "lifting leaves A");
    if (q.project(map[g]) != endo_(q.project(Elem{g}))) {
      throw Error(ErrorKind::NotAHomomorphism, "map does not cover the endomorphism of G/K");
    }
  }
  map_ = std::make_shared<const std::vector<Elem>>(std::move(map));
}

Lifting canonical_lifting(const QuotientEndo& psi) {
  const Quotient& q = psi.pair()->quotient();
  std::vector<Elem> map(psi.pair()->group()->order());
  for (std::uint32_t g = 0; g < map.size(); ++g) map[g] = q.transversal(psi(q.project(Elem{g})));
  return Lifting(psi, std::move(map));
}

Lifting perturb_lifting(const Lifting& lifting, const std::function<Elem(Elem)>& delta) {
  const CentralPair& pair = *lifting.pair();
  std::vector<Elem> map(lifting.values().size());
  for (std::uint32_t g = 0; g < map.size(); ++g) {
    const Elem d = delta(Elem{g});
    if (!pair.k().contains(d)) throw Error(ErrorKind::DeltaEscapesK, "perturbation value outside K");
    map[g] = pair.group()->mul_nc(lifting(Elem{g}), d);
  }
  return Lifting(lifting.endo(), std::move(map));
}

Lifting lifting_from_endomorphism(const PairPtr& pair, std::vector<Elem> images) {
  if (!is_endomorphism(*pair->group(), images)) {
    throw Error(ErrorKind::NotAnEndomorphism, "map is not an endomorphism of G");
  }
  QuotientEndo endo = QuotientEndo::induced(pair, [&](Elem g) { return images[g.index]; });
  return Lifting(std::move(endo), std::move(images));
}

}  // namespace braceblock
