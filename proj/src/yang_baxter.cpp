#include "braceblock/yang_baxter.hpp"

#include "braceblock/brace.hpp"
#include "braceblock/error.hpp"
#include "braceblock/parallel.hpp"
#include "triple_scan.hpp"

namespace braceblock {

namespace {

constexpr std::uint64_t kYBExhaustiveCarrier = 125;
constexpr std::uint64_t kPairScanBound = 100'000'000;

Elem elem(std::uint64_t i) { return Elem{static_cast<std::uint32_t>(i)}; }

// Runs ok(x) for every x < n; true iff all pass.
template <typename Pred>
bool all_of_parallel(std::size_t n, Pred&& ok) {
  std::atomic<bool> good{true};
  parallel_for(n, [&](std::size_t x) {
    if (good.load(std::memory_order_relaxed) && !ok(x)) good = false;
  });
  return good;
}

}  // namespace

YBMap::YBMap(std::size_t n, Forward forward, std::string label)
    : n_(n), forward_(std::move(forward)), label_(std::move(label)) {
  if (n_ > kMaterializeBound) return;
  auto table = std::make_shared<std::vector<std::uint32_t>>(n_ * n_);
  parallel_for(n_, [&](std::size_t x) {
    for (std::size_t y = 0; y < n_; ++y) {
      const auto [u, v] = forward_(elem(x), elem(y));
      if (u.index >= n_ || v.index >= n_) throw Error(ErrorKind::ElementNotInCarrier, "map leaves X x X");
      (*table)[x * n_ + y] = static_cast<std::uint32_t>(u.index * n_ + v.index);
    }
  });
  table_ = std::move(table);
}

YBMap YBMap::flip(std::size_t n) {
  return YBMap(n, [](Elem x, Elem y) { return std::make_pair(y, x); }, "flip");
}

YBMap YBMap::identity(std::size_t n) {
  return YBMap(n, [](Elem x, Elem y) { return std::make_pair(x, y); }, "identity");
}

YBMap YBMap::from_permutation(std::size_t n, std::vector<std::uint32_t> images, std::string label) {
  if (images.size() != n * n) throw Error(ErrorKind::CarrierMismatch, "need one image per pair");
  for (const auto v : images)
    if (v >= n * n) throw Error(ErrorKind::ElementNotInCarrier, "pair index out of range");
  auto shared = std::make_shared<const std::vector<std::uint32_t>>(std::move(images));
  return YBMap(
      n,
      [shared, n](Elem x, Elem y) {
        const std::uint32_t v = (*shared)[std::size_t{x.index} * n + y.index];
        return std::make_pair(elem(v / n), elem(v % n));
      },
      std::move(label));
}

const std::vector<std::uint32_t>& YBMap::permutation() const {
  if (!table_) throw Error(ErrorKind::BoundExceeded, "map is too large to materialize");
  return *table_;
}

bool is_bijective(const YBMap& r) {
  const std::uint64_t n = r.carrier_size();
  if (n * n > kPairScanBound) throw Error(ErrorKind::BoundExceeded, "too many pairs for a bijectivity scan");
  std::vector<bool> seen(n * n, false);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) {
      const auto [u, v] = r(elem(x), elem(y));
      const std::uint64_t i = std::uint64_t{u.index} * n + v.index;
      if (seen[i]) return false;
      seen[i] = true;
    }
  return true;
}

YBReport verify_ybe(const YBMap& r, const VerifyOptions& options) {
  YBReport report;
  const std::size_t n = r.carrier_size();
  report.bijective = is_bijective(r);
  report.mode = options.resolve(n, kYBExhaustiveCarrier);
  if (report.mode == CheckMode::Sampled) report.seed = options.seed;
  const auto scan = detail::scan_triples(n, report.mode, options.seed, options.samples, [&](Elem x, Elem y, Elem z) {
    const auto [a, b] = r(x, y);
    const auto [c, d] = r(b, z);
    const auto [e, f] = r(a, c);
    const auto [p, q] = r(y, z);
    const auto [s, t] = r(x, p);
    const auto [u, v] = r(t, q);
    return e == s && f == u && d == v;
  });
  report.triples_checked = scan.checked;
  report.braid_ok = !scan.failure.has_value();
  report.witness = scan.failure;
  return report;
}

bool verify_nondegenerate(const YBMap& r) {
  const std::size_t n = r.carrier_size();
  return all_of_parallel(n, [&](std::size_t x) {
    std::vector<bool> s(n, false), t(n, false);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem sv = r.sigma(elem(x), elem(y));
      const Elem tv = r.tau(elem(x), elem(y));
      if (s[sv.index] || t[tv.index]) return false;
      s[sv.index] = t[tv.index] = true;
    }
    return true;
  });
}

bool is_involutive(const YBMap& r) {
  return all_of_parallel(r.carrier_size(), [&](std::size_t x) {
    for (std::size_t y = 0; y < r.carrier_size(); ++y) {
      const auto [u, v] = r(elem(x), elem(y));
      if (r(u, v) != std::make_pair(elem(x), elem(y))) return false;
    }
    return true;
  });
}

bool inverse_pair(const YBMap& r, const YBMap& r_prime) {
  if (r.carrier_size() != r_prime.carrier_size()) return false;
  return all_of_parallel(r.carrier_size(), [&](std::size_t x) {
    for (std::size_t y = 0; y < r.carrier_size(); ++y) {
      const auto p = std::make_pair(elem(x), elem(y));
      const auto [a, b] = r_prime(p.first, p.second);
      const auto [c, d] = r(p.first, p.second);
      if (r(a, b) != p || r_prime(c, d) != p) return false;
    }
    return true;
  });
}

bool maps_equal(const YBMap& a, const YBMap& b) {
  if (a.carrier_size() != b.carrier_size()) return false;
  if (a.is_materialized() && b.is_materialized()) return a.permutation() == b.permutation();
  return all_of_parallel(a.carrier_size(), [&](std::size_t x) {
    for (std::size_t y = 0; y < a.carrier_size(); ++y)
      if (a(elem(x), elem(y)) != b(elem(x), elem(y))) return false;
    return true;
  });
}

SolutionPair solutions_from_brace(const GroupOperation& dot, const GroupOperation& circ, bool force,
                                  const VerifyOptions& options) {
  if (dot.order() != circ.order()) throw Error(ErrorKind::CarrierMismatch, "operations on different carriers");
  if (!force) {
    const auto report = verify_skew_brace(dot, circ, options);
    if (!report.skew_ok) throw Error(ErrorKind::NotASkewBrace, "operations do not form a skew brace");
  }
  const std::size_t n = dot.order();
  auto dot_inv = std::make_shared<std::vector<Elem>>(n);
  auto circ_inv = std::make_shared<std::vector<Elem>>(n);
  for (std::uint64_t g = 0; g < n; ++g) {
    (*dot_inv)[g] = dot.inverse(elem(g));
    (*circ_inv)[g] = circ.inverse(elem(g));
  }
  // Both maps send (g, h) to (a, inv(a) o (g o h)) for a different first component.
  auto make = [&](bool left, std::string label) {
    return YBMap(
        n,
        [dot, circ, dot_inv, circ_inv, left](Elem g, Elem h) {
          const Elem gh = circ(g, h);
          const Elem a = left ? dot((*dot_inv)[g.index], gh) : dot(gh, (*dot_inv)[g.index]);
          return std::make_pair(a, circ((*circ_inv)[a.index], gh));
        },
        std::move(label));
  };
  return {make(true, "r"), make(false, "r'")};
}

SolutionPair explicit_solutions_thm(const PairPtr& pair, const Deformation& circ, const Deformation& dot) {
  require_same_pair(pair, circ.endo.pair());
  require_same_pair(pair, circ.alpha.pair());
  require_same_pair(pair, dot.endo.pair());
  require_same_pair(pair, dot.alpha.pair());
  const GroupPtr group = pair->group();
  const FiniteGroup* G = group.get();
  const Lifting p = canonical_lifting(circ.endo);
  const Lifting f = canonical_lifting(dot.endo);
  const Lifting d = canonical_lifting(ring_sub(circ.endo, dot.endo));
  const Lifting e = canonical_lifting(ring_sub(dot.endo, circ.endo));
  const CentralBilinearMap alpha = circ.alpha, beta = dot.alpha;
  const std::size_t n = group->order();

  auto mul = [G](std::initializer_list<Elem> xs) {
    Elem v{0};
    for (const Elem x : xs) v = G->mul_nc(v, x);
    return v;
  };

  YBMap r(
      n,
      [=](Elem g, Elem h) {
        const Elem D = d(g), Di = G->inv_nc(D), hi = G->inv_nc(h);
        const Elem Pg = p(g), Ph = p(h);
        const Elem first = mul({D, h, Di, beta(G->inv_nc(g), h), alpha(g, h)});
        const Elem second = mul({G->inv_nc(Ph), D, hi, Di, g, Pg, h, G->inv_nc(Pg), Ph, beta(g, h), alpha(hi, g)});
        return std::make_pair(first, second);
      },
      "r");
  YBMap r_prime(
      n,
      [=](Elem g, Elem h) {
        const Elem Pg = p(g), Fh = f(h), E = e(h), gi = G->inv_nc(g);
        const Elem first = mul({g, Pg, h, G->inv_nc(Pg), Fh, gi, G->inv_nc(Fh), beta(h, gi), alpha(g, h)});
        const Elem second = mul({E, g, G->inv_nc(E), beta(h, g), alpha(G->inv_nc(h), g)});
        return std::make_pair(first, second);
      },
      "r'");
  return {std::move(r), std::move(r_prime)};
}

CorollarySolutions explicit_solutions_cor(const PairPtr& pair, const Deformation& data) {
  require_same_pair(pair, data.endo.pair());
  require_same_pair(pair, data.alpha.pair());
  const GroupPtr group = pair->group();
  const FiniteGroup* G = group.get();
  const Lifting l = canonical_lifting(data.endo);
  const CentralBilinearMap alpha = data.alpha;
  const std::size_t n = group->order();

  auto mul = [G](std::initializer_list<Elem> xs) {
    Elem v{0};
    for (const Elem x : xs) v = G->mul_nc(v, x);
    return v;
  };
  auto inv = [G](Elem x) { return G->inv_nc(x); };

  YBMap r(
      n,
      [=](Elem g, Elem h) {
        const Elem Lg = l(g), Lh = l(h);
        return std::make_pair(
            mul({Lg, h, inv(Lg), alpha(g, h)}),
            mul({inv(Lh), Lg, inv(h), inv(Lg), g, Lg, h, inv(Lg), Lh, alpha(inv(h), g)}));
      },
      "r");
  YBMap r_prime(
      n,
      [=](Elem g, Elem h) {
        const Elem Lg = l(g), Lh = l(h);
        return std::make_pair(mul({g, Lg, h, inv(Lg), inv(g), alpha(g, h)}),
                              mul({inv(Lh), g, Lh, alpha(inv(h), g)}));
      },
      "r'");
  YBMap r_tilde(
      n,
      [=](Elem g, Elem h) {
        const Elem Lg = l(g);
        return std::make_pair(mul({inv(Lg), h, Lg, alpha(inv(g), h)}),
                              mul({inv(Lg), inv(h), Lg, g, h, alpha(g, h)}));
      },
      "r~");
  YBMap r_tilde_prime(
      n,
      [=](Elem g, Elem h) {
        const Elem Lh = l(h);
        return std::make_pair(mul({g, h, Lh, inv(g), inv(Lh), alpha(h, inv(g))}),
                              mul({Lh, g, inv(Lh), alpha(h, g)}));
      },
      "r~'");
  return {std::move(r), std::move(r_prime), std::move(r_tilde), std::move(r_tilde_prime)};
}

}  // namespace braceblock
