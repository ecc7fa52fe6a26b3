#include "braceblock/bilinear.hpp"

#include <deque>
#include <random>

#include "braceblock/parallel.hpp"

namespace braceblock {

CentralBilinearMap::CentralBilinearMap(PairPtr pair)
    : pair_(std::move(pair)), order_(pair_->group()->order()) {}

CentralBilinearMap CentralBilinearMap::unchecked(PairPtr pair, std::vector<Elem> table) {
  CentralBilinearMap m(std::move(pair));
  if (table.size() != m.order_ * m.order_) {
    throw Error(ErrorKind::NotBilinear, "bilinear table must cover G x G");
  }
  m.table_ = std::make_shared<const std::vector<Elem>>(std::move(table));
  return m;
}

CentralBilinearMap CentralBilinearMap::unchecked(PairPtr pair, std::function<Elem(Elem, Elem)> fn) {
  CentralBilinearMap m(std::move(pair));
  if (m.order_ <= kDenseBound) {
    std::vector<Elem> table(m.order_ * m.order_);
    for (std::uint32_t g = 0; g < m.order_; ++g)
      for (std::uint32_t h = 0; h < m.order_; ++h) table[g * m.order_ + h] = fn(Elem{g}, Elem{h});
    m.table_ = std::make_shared<const std::vector<Elem>>(std::move(table));
  } else {
    m.fn_ = std::move(fn);
  }
  return m;
}

CentralBilinearMap trivial_bilinear(PairPtr pair) {
  CentralBilinearMap m(std::move(pair));
  m.trivial_ = true;
  return m;
}

CentralBilinearMap bilinear_from_commutator_power(const PairPtr& pair, long long n) {
  const GroupPtr& g = pair->group();
  if (!is_nilpotent_of_class_two(g)) {
    throw Error(ErrorKind::NotClassTwo, g->name() + " is not of class at most two");
  }
  if (n == 0) return trivial_bilinear(pair);
  auto map = CentralBilinearMap::unchecked(
      pair, [g, n](Elem x, Elem y) { return g->pow(g->commutator_nc(x, y), n); });
  const auto check = check_bilinear(map);
  if (!check.ok) {
    throw Error(ErrorKind::ValidationFailed,
                "commutator power is not central bilinear for this pair (" +
                    std::string(to_string(*check.failure)) + ")");
  }
  return map;
}

BilinearCheck check_bilinear(const CentralBilinearMap& map) {
  BilinearCheck out;
  if (map.is_trivial()) return out;
  const CentralBilinearMap& alpha = map;
  const CentralPair& pair = *map.pair();
  const FiniteGroup& g = *pair.group();
  const std::size_t n = g.order();

  auto fail = [&](ErrorKind kind, Elem a, Elem b, Elem c) {
    out.ok = false;
    out.failure = kind;
    out.witness = std::make_tuple(a, b, c);
  };

  if (n <= CentralBilinearMap::kDenseBound) {
    // Values first, then vanishing on K, then bilinearity.
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (!pair.k().contains(alpha(Elem{x}, Elem{y}))) {
          fail(ErrorKind::ValueOutsideK, Elem{x}, Elem{y}, Elem{x});
          return out;
        }
      }
    }
    for (const Elem k : pair.k().generators()) {
      for (std::uint32_t x = 0; x < n; ++x) {
        if (alpha(k, Elem{x}) != g.identity() || alpha(Elem{x}, k) != g.identity()) {
          fail(ErrorKind::NonvanishingOnK, k, Elem{x}, k);
          return out;
        }
      }
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        const Elem ex{x}, ey{y};
        const Elem v = alpha(ex, ey);
        for (const Elem s : g.generators()) {
          if (alpha(g.mul_nc(ex, s), ey) != g.mul_nc(v, alpha(s, ey))) {
            fail(ErrorKind::NotBilinear, ex, s, ey);
            return out;
          }
          if (alpha(ex, g.mul_nc(ey, s)) != g.mul_nc(v, alpha(ex, s))) {
            fail(ErrorKind::NotBilinear, ex, ey, s);
            return out;
          }
        }
      }
    }
    return out;
  }

  out.sampled = true;
  std::mt19937_64 rng(0xB111EA5);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  std::uniform_int_distribution<std::size_t> pick_k(0, pair.k().order() - 1);
  for (int i = 0; i < 100000; ++i) {
    const Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
    const Elem v = alpha(a, c);
    if (!pair.k().contains(v)) {
      fail(ErrorKind::ValueOutsideK, a, c, a);
      return out;
    }
    if (alpha(g.mul_nc(a, b), c) != g.mul_nc(v, alpha(b, c)) ||
        alpha(a, g.mul_nc(b, c)) != g.mul_nc(alpha(a, b), v)) {
      fail(ErrorKind::NotBilinear, a, b, c);
      return out;
    }
    const Elem k = pair.k().members()[pick_k(rng)];
    if (alpha(k, a) != g.identity() || alpha(a, k) != g.identity()) {
      fail(ErrorKind::NonvanishingOnK, k, a, k);
      return out;
    }
  }
  return out;
}

CentralBilinearMap validate_bilinear(const CentralBilinearMap& candidate) {
  const auto check = check_bilinear(candidate);
  if (!check.ok) throw Error(*check.failure, "candidate is not a central bilinear map");
  return candidate;
}

CentralBilinearMap validate_bilinear(const PairPtr& pair, std::vector<Elem> table) {
  for (const Elem v : table) pair->group()->inv(v);
  return validate_bilinear(CentralBilinearMap::unchecked(pair, std::move(table)));
}

CentralBilinearMap beta_step(const CentralBilinearMap& alpha, const CentralBilinearMap& beta_prev,
                             const Lifting& step_lifting, const Lifting& accumulated_lifting) {
  const PairPtr& pair = alpha.pair();
  require_same_pair(pair, beta_prev.pair());
  require_same_pair(pair, step_lifting.pair());
  require_same_pair(pair, accumulated_lifting.pair());
  const GroupPtr g = pair->group();
  auto fn = [g, alpha, beta_prev, step_lifting, accumulated_lifting](Elem x, Elem y) {
    const Elem lx = step_lifting(x);
    Elem v = g->commutator_nc(lx, accumulated_lifting(y));
    v = g->mul_nc(v, beta_prev(lx, y));
    v = g->mul_nc(v, beta_prev(y, g->inv_nc(lx)));
    v = g->mul_nc(v, beta_prev(x, y));
    return g->mul_nc(v, alpha(x, y));
  };
  auto map = CentralBilinearMap::unchecked(pair, fn);
  const auto check = check_bilinear(map);
  if (!check.ok) {
    throw Error(ErrorKind::ValidationFailed,
                "accumulated map left the set of central bilinear maps (" +
                    std::string(to_string(*check.failure)) + ")");
  }
  return map;
}

std::optional<CentralBilinearMap> random_bilinear(const PairPtr& pair, std::uint64_t seed,
                                                  int attempts) {
  const Quotient& quo = pair->quotient();
  const FiniteGroup& q = *quo.group();
  const FiniteGroup& g = *pair->group();
  const auto& gens = q.generators();
  const auto& kmem = pair->k().members();
  const std::size_t m = q.order();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, kmem.size() - 1);

  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<std::vector<Elem>> v(gens.size(), std::vector<Elem>(gens.size()));
    for (auto& row : v)
      for (auto& e : row) e = kmem[pick(rng)];

    // col[j][x] = alpha(x, s_j), extended in the first slot.
    bool ok = true;
    std::vector<std::vector<std::optional<Elem>>> col(gens.size(),
                                                      std::vector<std::optional<Elem>>(m));
    for (std::size_t j = 0; j < gens.size() && ok; ++j) {
      col[j][0] = g.identity();
      std::deque<Elem> queue{q.identity()};
      while (!queue.empty() && ok) {
        const Elem x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i) {
          const Elem y = q.mul_nc(x, gens[i]);
          const Elem val = g.mul_nc(*col[j][x.index], v[i][j]);
          if (!col[j][y.index]) {
            col[j][y.index] = val;
            queue.push_back(y);
          } else if (*col[j][y.index] != val) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;

    std::vector<std::optional<Elem>> full(m * m);
    for (std::uint32_t x = 0; x < m && ok; ++x) {
      full[x * m] = g.identity();
      std::deque<Elem> queue{q.identity()};
      while (!queue.empty() && ok) {
        const Elem y = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < gens.size(); ++j) {
          const Elem z = q.mul_nc(y, gens[j]);
          const Elem val = g.mul_nc(*full[x * m + y.index], *col[j][x]);
          if (!full[x * m + z.index]) {
            full[x * m + z.index] = val;
            queue.push_back(z);
          } else if (*full[x * m + z.index] != val) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;

    std::vector<Elem> flat(m * m);
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = *full[i];
    auto candidate = CentralBilinearMap::unchecked(pair, [pair, flat, m](Elem a, Elem b) {
      const Quotient& qq = pair->quotient();
      return flat[qq.project(a).index * m + qq.project(b).index];
    });
    if (check_bilinear(candidate).ok) return candidate;
  }
  return std::nullopt;
}

bool equal(const CentralBilinearMap& a, const CentralBilinearMap& b) {
  require_same_pair(a.pair(), b.pair());
  const std::size_t n = a.pair()->group()->order();
  FirstFailure diff;
  parallel_for(n, [&](std::size_t x) {
    if (diff.found()) return;
    for (std::uint32_t y = 0; y < n; ++y) {
      if (a(Elem{static_cast<std::uint32_t>(x)}, Elem{y}) != b(Elem{static_cast<std::uint32_t>(x)}, Elem{y})) {
        diff.record(x);
        return;
      }
    }
  });
  return !diff.found();
}

}  // namespace braceblock
