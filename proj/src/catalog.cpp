#include "braceblock/catalog.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "braceblock/error.hpp"

namespace braceblock {

namespace {

Expectation expect(ExpectationKind kind, std::string description, std::size_t count = 0,
                   std::vector<std::size_t> indices = {}) {
  return {kind, std::move(description), count, std::move(indices)};
}

Elem elem(std::uint64_t i) { return Elem{static_cast<std::uint32_t>(i)}; }

std::string pair_text(const GroupOperation& op, Elem g, Elem h) {
  return "(" + op.base()->format(g) + ", " + op.base()->format(h) + ")";
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

// First disagreement of two operations: every pair when both are
// materialised or the mode is not Sampled, otherwise `samples` random pairs.
std::optional<std::pair<Elem, Elem>> compare(const GroupOperation& a, const GroupOperation& b,
                                             const VerifyOptions& options) {
  if (a.is_materialized() || options.mode != VerifyOptions::Mode::Sampled) return first_difference(a, b);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, a.order() - 1);
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const Elem g = elem(pick(rng)), h = elem(pick(rng));
    if (a(g, h) != b(g, h)) return std::make_pair(g, h);
  }
  return std::nullopt;
}

ExpectationResult run(const CatalogEntry& entry, const Expectation& e, const VerifyOptions& options) {
  ExpectationResult result{e, true, {}, 0};
  const auto& ops = entry.operations;
  auto fail = [&](std::string detail) {
    if (result.passed) result.detail = std::move(detail);
    result.passed = false;
  };
  const GroupOperation dot = GroupOperation::dot(entry.group);

  switch (e.kind) {
    case ExpectationKind::GroupLaws:
      for (std::size_t i = 0; i < ops.size() && result.passed; ++i) {
        const auto report = verify_group(ops[i], options);
        result.triples_checked += report.triples_checked;
        if (!report.ok()) fail(entry.labels[i] + ": " + report.failure);
      }
      break;
    case ExpectationKind::BraceBlock:
      for (std::size_t i = 0; i < ops.size() && result.passed; ++i)
        for (std::size_t j = i + 1; j < ops.size() && result.passed; ++j) {
          try {
            const auto report = verify_skew_brace(ops[i], ops[j], options);
            result.triples_checked += report.triples_checked;
            if (!report.biskew_ok) fail(entry.labels[i] + " and " + entry.labels[j] + " are not bi-skew");
          } catch (const Error& err) {
            fail(entry.labels[i] + " and " + entry.labels[j] + ": " + err.what());
          }
        }
      break;
    case ExpectationKind::DistinctCount: {
      const std::size_t got = distinct_operations(ops);
      if (got != e.count)
        fail("expected " + std::to_string(e.count) + " distinct operations, found " + std::to_string(got));
      break;
    }
    case ExpectationKind::EqualsDot:
    case ExpectationKind::DiffersFromDot:
      for (const std::size_t i : e.indices) {
        const auto diff = compare(ops.at(i), dot, options);
        if (e.kind == ExpectationKind::EqualsDot && diff)
          fail(entry.labels[i] + " differs from . at " + pair_text(dot, diff->first, diff->second));
        if (e.kind == ExpectationKind::DiffersFromDot && !diff) fail(entry.labels[i] + " equals .");
      }
      break;
    case ExpectationKind::Comparisons:
      for (const auto& c : entry.endo_comparisons)
        if (!(c.left == c.right)) fail(c.label + ": endomorphisms differ");
      for (const auto& c : entry.comparisons)
        if (const auto diff = compare(c.left, c.right, options))
          fail(c.label + ": differ at " + pair_text(c.left, diff->first, diff->second));
      break;
  }
  return result;
}

Elem power(const FiniteGroup& g, Elem x, std::uint64_t n) {
  Elem out{0};
  for (std::uint64_t i = 0; i < n; ++i) out = g.mul_nc(out, x);
  return out;
}

QuotientEndo binomial_endo(const QuotientEndo& psi, std::size_t n) {
  QuotientEndo sum = QuotientEndo::zero(psi.pair());
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    c = c * (n - i + 1) / i;
    sum = ring_add(sum, ring_scale(ring_pow(psi, static_cast<unsigned>(i)), c));
  }
  return sum;
}

}  // namespace

std::string to_string(ExpectationKind kind) {
  switch (kind) {
    case ExpectationKind::GroupLaws: return "group-laws";
    case ExpectationKind::BraceBlock: return "brace-block";
    case ExpectationKind::DistinctCount: return "distinct-count";
    case ExpectationKind::EqualsDot: return "equals-dot";
    case ExpectationKind::DiffersFromDot: return "differs-from-dot";
    case ExpectationKind::Comparisons: return "comparisons";
  }
  return "unknown";
}

std::vector<ExpectationResult> check_entry(const CatalogEntry& entry, const VerifyOptions& options) {
  std::vector<ExpectationResult> out;
  out.reserve(entry.expectations.size());
  for (const auto& e : entry.expectations) out.push_back(run(entry, e, options));
  return out;
}

std::size_t distinct_operations(const std::vector<GroupOperation>& ops) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const bool seen = std::any_of(reps.begin(), reps.end(),
                                  [&](std::size_t r) { return operations_equal(ops[r], ops[i]); });
    if (!seen) reps.push_back(i);
  }
  return reps.size();
}

std::vector<Elem> heisenberg_scaling(const GroupPtr& heisenberg, std::int64_t x) {
  if (heisenberg->backend() != Backend::Heisenberg)
    throw Error(ErrorKind::InvalidGroup, "scaling needs the Heisenberg backend");
  std::vector<Elem> out(heisenberg->order());
  for (std::uint32_t i = 0; i < heisenberg->order(); ++i) {
    const auto c = heisenberg->coordinates(Elem{i});
    const std::int64_t v[3] = {x * c[0], x * c[1], x * x % static_cast<std::int64_t>(heisenberg->modulus()) * c[2]};
    out[i] = heisenberg->from_coordinates(v);
  }
  return out;
}

QuotientEndo heisenberg_psi(const PairPtr& pair, std::int64_t x) {
  const auto map = heisenberg_scaling(pair->group(), x);
  return QuotientEndo::induced(pair, [&](Elem g) { return map[g.index]; });
}

CatalogEntry heisenberg_block(std::uint32_t modulus) {
  if (modulus < 2) throw Error(ErrorKind::InvalidGroup, "modulus must be at least 2");
  CatalogEntry entry;
  entry.name = "heisenberg";
  entry.group = FiniteGroup::heisenberg(modulus);
  entry.pair = class_two_pair(entry.group);
  const auto alpha = trivial_bilinear(entry.pair);
  for (std::uint32_t x = 0; x < modulus; ++x) {
    const std::string label = "o_" + std::to_string(x);
    entry.labels.push_back(label);
    entry.operations.push_back(deformed_operation(entry.pair, heisenberg_psi(entry.pair, x), alpha, label));
  }
  std::vector<std::size_t> nonzero(modulus - 1);
  for (std::size_t i = 0; i + 1 < modulus; ++i) nonzero[i] = i + 1;
  entry.expectations = {
      expect(ExpectationKind::GroupLaws, "every o_x is a group operation"),
      expect(ExpectationKind::BraceBlock, "every pair (o_x, o_y) is a bi-skew brace"),
      expect(ExpectationKind::DistinctCount, "the o_x are pairwise distinct", modulus),
      expect(ExpectationKind::EqualsDot, "o_0 is the group operation", 0, {0}),
      expect(ExpectationKind::DiffersFromDot, "o_x differs from . for x != 0", 0, nonzero),
  };
  return entry;
}

CatalogEntry class_two_power_block(const GroupPtr& group) {
  const auto e = derived_subgroup(group).exponent();
  std::vector<long long> exponents(e);
  for (std::uint64_t n = 0; n < e; ++n) exponents[n] = static_cast<long long>(n);
  return class_two_power_block(group, exponents);
}

CatalogEntry class_two_power_block(const GroupPtr& group, const std::vector<long long>& exponents) {
  CatalogEntry entry;
  entry.name = "power";
  entry.group = group;
  entry.pair = class_two_pair(group);
  const std::uint64_t e = derived_subgroup(group).exponent();
  const auto alpha = trivial_bilinear(entry.pair);
  // g -> g^n lifts gK -> g^n K; the lifting only matters up to K, which is central.
  auto op_for = [&](long long n) {
    std::vector<Elem> map(group->order());
    for (std::uint32_t g = 0; g < group->order(); ++g) {
      const std::uint64_t ord = group->element_order(Elem{g});
      const long long m = ((n % static_cast<long long>(ord)) + static_cast<long long>(ord)) % static_cast<long long>(ord);
      map[g] = power(*group, Elem{g}, static_cast<std::uint64_t>(m));
    }
    const std::string label = "o_" + std::to_string(n);
    return std::make_pair(label, deformed_operation(Lifting(power_endo(entry.pair, n), std::move(map)), alpha, label));
  };
  for (const long long n : exponents) {
    auto [label, op] = op_for(n);
    entry.labels.push_back(label);
    entry.operations.push_back(std::move(op));
  }
  entry.comparisons.push_back(
      {"o_" + std::to_string(e) + " = o_0", op_for(static_cast<long long>(e)).second, op_for(0).second});

  entry.expectations = {
      expect(ExpectationKind::GroupLaws, "every o_n is a group operation"),
      expect(ExpectationKind::BraceBlock, "every pair (o_m, o_n) is a bi-skew brace"),
      expect(ExpectationKind::Comparisons, "o_n has period exponent([G,G])"),
  };
  std::set<std::uint64_t> residues;
  std::vector<std::size_t> trivial;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const long long n = exponents[i];
    const auto r = static_cast<std::uint64_t>(((n % static_cast<long long>(e)) + static_cast<long long>(e)) %
                                              static_cast<long long>(e));
    residues.insert(r);
    if (r == 0) trivial.push_back(i);
  }
  if (group->order() <= GroupOperation::kMaterializeBound)
    entry.expectations.push_back(
        expect(ExpectationKind::DistinctCount, "distinct exactly modulo exponent([G,G])", residues.size()));
  if (!trivial.empty())
    entry.expectations.push_back(expect(ExpectationKind::EqualsDot, "o_n is . when exponent([G,G]) divides n", 0, trivial));
  return entry;
}

CatalogEntry endo_block_class_two(const GroupPtr& group, const std::vector<std::vector<Elem>>& endomorphisms) {
  CatalogEntry entry;
  entry.name = "endo";
  entry.group = group;
  entry.pair = class_two_pair(group);
  const auto alpha = trivial_bilinear(entry.pair);
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < endomorphisms.size(); ++i) {
    const auto& map = endomorphisms[i];
    if (map.size() != group->order()) throw Error(ErrorKind::NotAnEndomorphism, "map must list every image");
    const std::string label = "o_psi" + std::to_string(i);
    entry.labels.push_back(label);
    entry.operations.push_back(deformed_operation(lifting_from_endomorphism(entry.pair, map), alpha, label));
    if (std::all_of(map.begin(), map.end(), [](Elem x) { return x.index == 0; })) zeros.push_back(i);
  }
  entry.expectations = {
      expect(ExpectationKind::GroupLaws, "every o_psi is a group operation"),
      expect(ExpectationKind::BraceBlock, "every pair (o_psi, o_phi) is a bi-skew brace"),
  };
  if (!zeros.empty())
    entry.expectations.push_back(expect(ExpectationKind::EqualsDot, "the zero endomorphism gives .", 0, zeros));
  return entry;
}

std::vector<std::vector<Elem>> enumerate_endomorphisms(const GroupPtr& group) {
  const std::size_t n = group->order();
  if (n > 64) throw Error(ErrorKind::BoundExceeded, "endomorphism enumeration is limited to order 64");
  const auto& gens = group->generators();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> images(gens.size());

  // Extends generator images along a breadth-first walk; empty on conflict.
  auto extend = [&]() -> std::vector<Elem> {
    std::vector<Elem> map(n);
    std::vector<bool> known(n, false);
    known[0] = true;
    std::vector<Elem> frontier{Elem{0}};
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const Elem x = frontier[head];
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const Elem y = group->mul_nc(x, gens[s]);
        const Elem v = group->mul_nc(map[x.index], images[s]);
        if (!known[y.index]) {
          known[y.index] = true;
          map[y.index] = v;
          frontier.push_back(y);
        } else if (map[y.index] != v) {
          return {};
        }
      }
    }
    return map;
  };

  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    for (std::size_t s = 0; s < gens.size(); ++s) images[s] = elem(choice[s]);
    if (auto map = extend(); !map.empty()) out.push_back(std::move(map));
    std::size_t s = 0;
    while (s < gens.size() && ++choice[s] == n) choice[s++] = 0;
    if (s == gens.size()) break;
  }
  return out;
}

CatalogEntry koch_block(const GroupPtr& group, const std::vector<Elem>& endomorphism, std::size_t steps) {
  if (endomorphism.size() != group->order() || !is_endomorphism(*group, endomorphism))
    throw Error(ErrorKind::NotAnEndomorphism, "map is not an endomorphism of G");
  std::vector<Elem> image(endomorphism.begin(), endomorphism.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  for (const Elem a : image)
    for (const Elem b : image)
      if (group->mul_nc(a, b) != group->mul_nc(b, a))
        throw Error(ErrorKind::ImageNotAbelian, "image of the endomorphism is not abelian");

  CatalogEntry entry;
  entry.name = "koch";
  entry.group = group;
  entry.pair = make_central_pair(group, trivial_subgroup(group), Subgroup(group, image));
  const auto alpha = trivial_bilinear(entry.pair);
  const QuotientEndo psi = QuotientEndo::induced(entry.pair, [&](Elem g) { return endomorphism[g.index]; });

  auto add_family = [&](const QuotientEndo& step, const std::string& family) {
    const std::vector<BlockStep> block(steps, BlockStep{step, alpha});
    auto ops = iterate_block(entry.pair, block);
    std::vector<QuotientEndo> endos;
    for (std::size_t k = 1; k <= steps; ++k) {
      endos.push_back(step);
      const std::string label = family + " o_" + std::to_string(k);
      const QuotientEndo closed = binomial_endo(step, k);
      entry.endo_comparisons.push_back({label + ": q by recursion = binomial sum", qn_endo(endos), closed});
      entry.comparisons.push_back(
          {label + ": iterated = closed form", ops[k], closed_form_operation(entry.pair, closed, alpha)});
      entry.labels.push_back(label);
      entry.operations.push_back(std::move(ops[k]));
    }
  };

  entry.labels.push_back("o_0");
  entry.operations.push_back(GroupOperation::dot(group));
  add_family(ring_neg(psi), "koch");
  add_family(psi, "variation");

  entry.expectations = {
      expect(ExpectationKind::GroupLaws, "every iterate is a group operation"),
      expect(ExpectationKind::BraceBlock, "every pair of iterates is a bi-skew brace"),
      expect(ExpectationKind::Comparisons, "iterates match their binomial closed forms"),
  };
  if (psi.is_zero())
    entry.expectations.push_back(
        expect(ExpectationKind::EqualsDot, "a zero map leaves . unchanged", 0, all_indices(entry.operations.size())));
  return entry;
}

CatalogEntry koch_s3(std::size_t steps) {
  const GroupPtr g = FiniteGroup::permutation(3, {{1, 0, 2}, {1, 2, 0}});
  const std::int64_t swap[3] = {1, 0, 2};
  const Elem t = g->from_coordinates(swap);
  std::vector<Elem> map(g->order());
  for (std::uint32_t i = 0; i < g->order(); ++i) {
    const auto p = g->coordinates(Elem{i});
    int inversions = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) inversions += p[a] > p[b];
    map[i] = inversions % 2 ? t : Elem{0};
  }
  auto entry = koch_block(g, map, steps);
  entry.name = "koch-s3";
  return entry;
}

CatalogEntry koch_c9_c3(std::size_t steps) {
  const GroupPtr g = cyclic_semidirect(9, 3, 4);
  std::vector<Elem> map(g->order());
  for (std::uint32_t i = 0; i < g->order(); ++i) map[i] = Elem{9 * (i / 9)};
  auto entry = koch_block(g, map, steps);
  entry.name = "koch-c9c3";
  return entry;
}

std::vector<bool> heisenberg_convergence(std::uint32_t p, std::uint32_t k, std::uint32_t max_power) {
  std::uint64_t modulus = 1;
  for (std::uint32_t i = 0; i < k; ++i) modulus *= p;
  if (p < 2 || k < 1 || modulus > 64) throw Error(ErrorKind::BoundExceeded, "need 2 <= p^k <= 64");
  const GroupPtr g = FiniteGroup::heisenberg(static_cast<std::uint32_t>(modulus));
  const PairPtr pair = class_two_pair(g);
  const Subgroup z = centre(g);
  std::vector<bool> out;
  std::uint64_t x = 1 % modulus;
  for (std::uint32_t m = 0; m <= max_power; ++m) {
    // With trivial alpha, g o h = g h for all g, h iff every L(g) is central.
    const Lifting l = canonical_lifting(heisenberg_psi(pair, static_cast<std::int64_t>(x)));
    bool central = true;
    for (std::uint32_t i = 0; i < g->order() && central; ++i) central = z.contains(l(Elem{i}));
    out.push_back(central);
    x = x * p % modulus;
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> catalog_listing() {
  return {
      {"heisenberg", "o_x on Heisenberg(Z/n), x in Z/n"},
      {"power", "g o_n h = g h [g,h]^n on a class-two group"},
      {"endo", "one operation per endomorphism of a class-two group"},
      {"koch", "iterates of -psi and psi for an endomorphism with abelian image"},
  };
}

}  // namespace braceblock
