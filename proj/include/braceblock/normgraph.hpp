#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braceblock/group.hpp"
#include "braceblock/operation.hpp"

namespace braceblock {

/// A subgroup N of Sym({0..n-1}) on which evaluation at 0 is a bijection.
/// nu(g) is the unique member sending 0 to g. Permutations compose right to
/// left: (f g)(x) = f(g(x)).
class RegularSubgroup {
 public:
  /// Validates closure and regularity from the table nu (InvalidGroup otherwise).
  explicit RegularSubgroup(std::vector<Perm> nu);

  std::size_t degree() const { return nu_.size(); }
  const Perm& nu(std::uint32_t g) const { return nu_.at(g); }
  const std::vector<Perm>& nu_table() const { return nu_; }
  /// Members sorted lexicographically.
  std::vector<Perm> members() const;
  const std::vector<Perm>& generators() const { return generators_; }
  bool contains(const Perm& p) const { return p.size() == nu_.size() && nu_[p[0]] == p; }
  /// Element orders as "order^count" terms, e.g. "1^1 2^3".
  std::string fingerprint() const;

  friend bool operator==(const RegularSubgroup& a, const RegularSubgroup& b) { return a.nu_ == b.nu_; }

 private:
  struct Trusted {};
  RegularSubgroup(std::vector<Perm> nu, Trusted);
  void pick_generators();

  std::vector<Perm> nu_;
  std::vector<Perm> generators_;

  friend std::vector<RegularSubgroup> enumerate_regular_subgroups(std::size_t, bool);
};

/// {lambda(g) : h -> g o h}. Errors: NotAGroup.
RegularSubgroup lambda_of_operation(const GroupOperation& op);

/// g o h = nu(g)(h). The base group defaults to the Cayley group of N's own
/// operation; a given base must have the same order (CarrierMismatch).
GroupOperation operation_of_regular_subgroup(const RegularSubgroup& n, GroupPtr base = nullptr);

inline constexpr std::size_t kRegularSubgroupBound = 8;

/// All regular subgroups of Sym(n), each exactly once, in a deterministic
/// order. BoundExceeded above kRegularSubgroupBound unless forced.
std::vector<RegularSubgroup> enumerate_regular_subgroups(std::size_t n, bool force = false);

/// A pair (eta in gens(N), mu in gens(M)) with eta mu eta^-1 outside M, if any.
/// Errors: CarrierMismatch.
std::optional<std::pair<Perm, Perm>> normalisation_witness(const RegularSubgroup& n, const RegularSubgroup& m);
bool normalises(const RegularSubgroup& n, const RegularSubgroup& m);

struct NormalisingGraph {
  std::vector<RegularSubgroup> vertices;
  /// Sorted pairs (i, j) with i < j.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool adjacent(std::size_t i, std::size_t j) const;
};

/// Edge {N, M} iff N and M normalise each other.
NormalisingGraph build_graph(std::vector<RegularSubgroup> vertices);

/// Maximal cliques, each sorted, in lexicographic order.
std::vector<std::vector<std::size_t>> cliques(const NormalisingGraph& graph);

struct EdgeValidation {
  std::size_t edges_checked = 0;
  std::size_t non_edges_checked = 0;
  /// Edges whose transported operations fail the bi-skew check, and non-edges that pass it.
  std::vector<std::pair<std::size_t, std::size_t>> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares up to `samples` edges and `samples` non-edges against the
/// bi-skew brace check of the transported operations.
EdgeValidation cross_validate(const NormalisingGraph& graph, std::size_t samples = 50, std::uint64_t seed = 1);

std::string to_dot(const NormalisingGraph& graph, const std::vector<std::vector<std::size_t>>& cliques = {});

}  // namespace braceblock
