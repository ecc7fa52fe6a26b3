#include "braceblock/normgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "braceblock/brace.hpp"
#include "braceblock/error.hpp"
#include "braceblock/parallel.hpp"

namespace braceblock {

namespace {

Perm compose(const Perm& f, const Perm& g) {
  Perm out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[g[x]];
  return out;
}

Perm inverse(const Perm& f) {
  Perm out(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) out[f[x]] = x;
  return out;
}

bool is_permutation(const Perm& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (const auto v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

}  // namespace

RegularSubgroup::RegularSubgroup(std::vector<Perm> nu) : nu_(std::move(nu)) {
  const std::size_t n = nu_.size();
  if (n == 0) throw Error(ErrorKind::InvalidGroup, "empty pointed set");
  for (std::uint32_t g = 0; g < n; ++g) {
    if (!is_permutation(nu_[g], n)) throw Error(ErrorKind::InvalidGroup, "nu(g) is not a permutation");
    if (nu_[g][0] != g) throw Error(ErrorKind::InvalidGroup, "nu(g) must send 0 to g");
  }
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h)
      if (!contains(compose(nu_[g], nu_[h]))) throw Error(ErrorKind::InvalidGroup, "not closed under composition");
  pick_generators();
}

RegularSubgroup::RegularSubgroup(std::vector<Perm> nu, Trusted) : nu_(std::move(nu)) { pick_generators(); }

void RegularSubgroup::pick_generators() {
  // Greedy: add the least element outside the subgroup generated so far.
  const std::size_t n = nu_.size();
  std::vector<bool> in(n, false);
  std::vector<std::uint32_t> elements{0};
  in[0] = true;
  std::vector<std::uint32_t> gens;
  for (std::uint32_t g = 1; g < n; ++g) {
    if (in[g]) continue;
    gens.push_back(g);
    generators_.push_back(nu_[g]);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (const auto s : gens) {
        const std::uint32_t v = nu_[elements[i]][s];
        if (!in[v]) {
          in[v] = true;
          elements.push_back(v);
        }
      }
    }
  }
}

std::vector<Perm> RegularSubgroup::members() const {
  std::vector<Perm> out = nu_;
  std::sort(out.begin(), out.end());
  return out;
}

std::string RegularSubgroup::fingerprint() const {
  std::map<std::uint64_t, std::size_t> counts;
  for (std::uint32_t g = 0; g < nu_.size(); ++g) {
    std::uint64_t order = 1;
    for (std::uint32_t x = g; x != 0; x = nu_[g][x]) ++order;
    ++counts[order];
  }
  std::string out;
  for (const auto& [order, count] : counts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(order) + "^" + std::to_string(count);
  }
  return out;
}

RegularSubgroup lambda_of_operation(const GroupOperation& op) {
  if (!verify_group(op).ok()) throw Error(ErrorKind::NotAGroup, "operation is not a group law");
  const std::size_t n = op.order();
  std::vector<Perm> nu(n, Perm(n));
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h) nu[g][h] = op(Elem{g}, Elem{h}).index;
  return RegularSubgroup(std::move(nu));
}

GroupOperation operation_of_regular_subgroup(const RegularSubgroup& n, GroupPtr base) {
  const std::size_t d = n.degree();
  std::vector<Elem> table(d * d);
  for (std::uint32_t g = 0; g < d; ++g)
    for (std::uint32_t h = 0; h < d; ++h) table[g * d + h] = Elem{n.nu(g)[h]};
  if (!base) {
    std::vector<std::uint32_t> flat(d * d);
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = table[i].index;
    base = cayley_unchecked(std::move(flat), d, "regular subgroup " + n.fingerprint());
  } else if (base->order() != d) {
    throw Error(ErrorKind::CarrierMismatch, "base group and subgroup have different degrees");
  }
  return GroupOperation::from_table(std::move(base), std::move(table), TransportedProvenance{n.fingerprint()});
}

namespace {

// Backtracking state: the rows nu(g) known so far form a group H acting with
// trivial stabiliser at 0. Rows are indexed by their image of 0.
struct SearchState {
  std::size_t n = 0;
  std::vector<Perm> rows;
  std::vector<Perm> gens;
};

// Closes H with the new permutation; nullopt if some element of the closure
// would fix 0 without being the identity.
std::optional<SearchState> extend(const SearchState& state, const Perm& p) {
  SearchState next = state;
  next.gens.push_back(p);
  std::vector<std::uint32_t> known;
  for (std::uint32_t g = 0; g < state.n; ++g)
    if (!state.rows[g].empty()) known.push_back(g);
  std::vector<std::uint32_t> queue = known;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Perm& s : next.gens) {
      Perm e = compose(next.rows[queue[i]], s);
      Perm& slot = next.rows[e[0]];
      if (slot.empty()) {
        slot = std::move(e);
        queue.push_back(slot[0]);
      } else if (slot != e) {
        return std::nullopt;
      }
    }
  }
  return next;
}

// Calls emit(pi) for every permutation with pi(0) = g that avoids the values
// already used in each column by known rows.
template <typename Emit>
void latin_candidates(const SearchState& state, std::uint32_t g, Emit&& emit) {
  const std::size_t n = state.n;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (const Perm& row : state.rows)
    if (!row.empty())
      for (std::size_t h = 0; h < n; ++h) used[h][row[h]] = true;
  Perm pi(n);
  pi[0] = g;
  std::vector<bool> taken(n, false);
  taken[g] = true;
  std::function<void(std::size_t)> fill = [&](std::size_t h) {
    if (h == n) {
      emit(pi);
      return;
    }
    for (std::uint32_t v = 0; v < n; ++v) {
      if (taken[v] || used[h][v]) continue;
      taken[v] = true;
      pi[h] = v;
      fill(h + 1);
      taken[v] = false;
    }
  };
  fill(1);
}

void search(const SearchState& state, std::vector<std::vector<Perm>>& out) {
  std::uint32_t g = 0;
  while (g < state.n && !state.rows[g].empty()) ++g;
  if (g == state.n) {
    out.push_back(state.rows);
    return;
  }
  latin_candidates(state, g, [&](const Perm& pi) {
    if (auto next = extend(state, pi)) search(*next, out);
  });
}

}  // namespace

std::vector<RegularSubgroup> enumerate_regular_subgroups(std::size_t n, bool force) {
  if (n == 0) throw Error(ErrorKind::InvalidGroup, "pointed set must be nonempty");
  if (n > kRegularSubgroupBound && !force) {
    throw Error(ErrorKind::BoundExceeded, "regular subgroup enumeration is limited to degree " +
                                              std::to_string(kRegularSubgroupBound) + " without force");
  }
  SearchState root;
  root.n = n;
  root.rows.assign(n, Perm{});
  root.rows[0] = identity_perm(n);
  std::vector<std::vector<Perm>> found;
  if (n == 1) {
    found.push_back(root.rows);
  } else {
    // Parallel over the choices of nu(1).
    std::vector<Perm> first;
    latin_candidates(root, 1, [&](const Perm& pi) { first.push_back(pi); });
    std::vector<std::vector<std::vector<Perm>>> per(first.size());
    parallel_for(first.size(), [&](std::size_t i) {
      if (auto next = extend(root, first[i])) search(*next, per[i]);
    });
    for (auto& part : per)
      for (auto& rows : part) found.push_back(std::move(rows));
  }
  std::vector<RegularSubgroup> out;
  out.reserve(found.size());
  for (auto& rows : found) out.push_back(RegularSubgroup(std::move(rows), RegularSubgroup::Trusted{}));
  return out;
}

std::optional<std::pair<Perm, Perm>> normalisation_witness(const RegularSubgroup& n, const RegularSubgroup& m) {
  if (n.degree() != m.degree()) throw Error(ErrorKind::CarrierMismatch, "subgroups act on different sets");
  for (const Perm& eta : n.generators()) {
    const Perm eta_inv = inverse(eta);
    for (const Perm& mu : m.generators()) {
      if (!m.contains(compose(compose(eta, mu), eta_inv))) return std::make_pair(eta, mu);
    }
  }
  return std::nullopt;
}

bool normalises(const RegularSubgroup& n, const RegularSubgroup& m) { return !normalisation_witness(n, m); }

bool NormalisingGraph::adjacent(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

NormalisingGraph build_graph(std::vector<RegularSubgroup> vertices) {
  NormalisingGraph graph{std::move(vertices), {}};
  const std::size_t v = graph.vertices.size();
  std::vector<std::vector<std::size_t>> rows(v);
  parallel_for(v, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < v; ++j)
      if (normalises(graph.vertices[i], graph.vertices[j]) && normalises(graph.vertices[j], graph.vertices[i]))
        rows[i].push_back(j);
  });
  for (std::size_t i = 0; i < v; ++i)
    for (const auto j : rows[i]) graph.edges.emplace_back(i, j);
  return graph;
}

std::vector<std::vector<std::size_t>> cliques(const NormalisingGraph& graph) {
  const std::size_t v = graph.vertices.size();
  std::vector<std::vector<std::size_t>> adj(v);
  for (const auto& [a, b] : graph.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  auto neighbours_in = [&](std::size_t u, const std::vector<std::size_t>& set) {
    std::vector<std::size_t> out;
    std::set_intersection(set.begin(), set.end(), adj[u].begin(), adj[u].end(), std::back_inserter(out));
    return out;
  };

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> r;
  // Bron-Kerbosch with a pivot of maximal degree in P u X.
  std::function<void(std::vector<std::size_t>, std::vector<std::size_t>)> expand =
      [&](std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
          auto clique = r;
          std::sort(clique.begin(), clique.end());
          out.push_back(std::move(clique));
          return;
        }
        std::size_t pivot = p.empty() ? x.front() : p.front();
        std::size_t best = 0;
        for (const auto* set : {&p, &x})
          for (const auto u : *set) {
            const std::size_t d = neighbours_in(u, p).size();
            if (d > best) best = d, pivot = u;
          }
        std::vector<std::size_t> candidates;
        std::set_difference(p.begin(), p.end(), adj[pivot].begin(), adj[pivot].end(), std::back_inserter(candidates));
        for (const auto u : candidates) {
          r.push_back(u);
          expand(neighbours_in(u, p), neighbours_in(u, x));
          r.pop_back();
          p.erase(std::lower_bound(p.begin(), p.end(), u));
          x.insert(std::lower_bound(x.begin(), x.end(), u), u);
        }
      };
  std::vector<std::size_t> all(v);
  for (std::size_t i = 0; i < v; ++i) all[i] = i;
  if (v > 0) expand(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

EdgeValidation cross_validate(const NormalisingGraph& graph, std::size_t samples, std::uint64_t seed) {
  EdgeValidation out;
  const std::size_t v = graph.vertices.size();
  std::mt19937_64 rng(seed);
  auto biskew = [&](std::size_t i, std::size_t j) {
    const auto a = operation_of_regular_subgroup(graph.vertices[i]);
    const auto b = operation_of_regular_subgroup(graph.vertices[j]);
    return verify_skew_brace(a, b).biskew_ok;
  };

  std::vector<std::size_t> order(graph.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(std::min(order.size(), samples));
  std::sort(order.begin(), order.end());
  for (const auto e : order) {
    const auto [i, j] = graph.edges[e];
    ++out.edges_checked;
    if (!biskew(i, j)) out.mismatches.emplace_back(i, j);
  }

  if (v >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    std::set<std::pair<std::size_t, std::size_t>> tried;
    const std::size_t possible = v * (v - 1) / 2 - graph.edges.size();
    for (std::size_t attempt = 0; attempt < 100 * samples && out.non_edges_checked < std::min(samples, possible);
         ++attempt) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      if (graph.adjacent(i, j) || !tried.emplace(i, j).second) continue;
      ++out.non_edges_checked;
      if (biskew(i, j)) out.mismatches.emplace_back(i, j);
    }
  }
  return out;
}

std::string to_dot(const NormalisingGraph& graph, const std::vector<std::vector<std::size_t>>& clique_list) {
  std::string out = "graph normalising {\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=\"" + graph.vertices[i].fingerprint() + "\"];\n";
  for (const auto& [a, b] : graph.edges) out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  for (const auto& c : clique_list) {
    out += "  // clique";
    for (const auto u : c) out += " v" + std::to_string(u);
    out += "\n";
  }
  out += "}\n";
  return out;
}

}  // namespace braceblock
