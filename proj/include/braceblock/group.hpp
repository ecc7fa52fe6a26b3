#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace braceblock {

/// Canonical element token: the position of the element in its group's
/// carrier. Every backend numbers its carrier so that the identity is 0, and
/// the numeric order is the carrier's total order.
struct Elem {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

using Perm = std::vector<std::uint32_t>;

enum class Backend { CayleyTable, Heisenberg, Unitriangular, Permutation };

std::string to_string(Backend backend);

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group whose carrier is {0, ..., order-1}. Backends differ in
/// how products are computed and in their native element encodings.
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;

  /// Validates a Cayley table (row g, column h holds g*h). Element 0 must be
  /// the identity. Associativity is checked exhaustively up to order 1000 and
  /// on 10^5 random triples above that.
  static GroupPtr cayley(std::vector<std::vector<std::uint32_t>> table);
  /// Heisenberg group of triples over Z/nZ, (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  static GroupPtr heisenberg(std::uint32_t modulus);
  /// Upper unitriangular size x size matrices over Z/qZ.
  static GroupPtr unitriangular(std::uint32_t size, std::uint32_t modulus);
  /// Subgroup of Sym(degree) generated by the given permutations.
  static GroupPtr permutation(std::uint32_t degree, std::vector<Perm> generators);

  virtual Backend backend() const = 0;
  virtual std::size_t order() const = 0;

  Elem identity() const { return Elem{0}; }
  bool contains(Elem g) const { return g.index < order(); }

  /// Checked arithmetic; throws ElementNotInCarrier.
  Elem mul(Elem g, Elem h) const;
  Elem inv(Elem g) const;
  Elem pow(Elem g, long long n) const;
  /// g*h*g^-1*h^-1.
  Elem commutator(Elem g, Elem h) const;
  std::uint64_t element_order(Elem g) const;

  // Unchecked variants for inner loops.
  virtual Elem mul_nc(Elem g, Elem h) const = 0;
  virtual Elem inv_nc(Elem g) const = 0;
  Elem commutator_nc(Elem g, Elem h) const {
    return mul_nc(mul_nc(g, h), inv_nc(mul_nc(h, g)));
  }

  /// Backend-native encoding: a residue triple, the strictly upper
  /// entries in row-major order, the permutation images, or {index}.
  virtual std::vector<std::int64_t> coordinates(Elem g) const = 0;
  virtual Elem from_coordinates(std::span<const std::int64_t> coords) const = 0;

  /// A generating set for the whole group.
  virtual const std::vector<Elem>& generators() const = 0;

  /// Short human-readable description, e.g. "Heisenberg(Z/3)".
  virtual std::string name() const = 0;

  /// Backend parameters: modulus for Heisenberg, size/modulus for
  /// unitriangular, degree for permutation groups.
  virtual std::uint32_t modulus() const { return 0; }
  virtual std::uint32_t size_parameter() const { return 0; }

  std::string format(Elem g) const;

 protected:
  void check(Elem g) const;
};

/// Cayley table for a group the caller guarantees to be valid.
GroupPtr cayley_unchecked(std::vector<std::uint32_t> flat_table, std::size_t order,
                          std::string name);

/// C_m x| C_n with b a b^-1 = a^r. Element a^i b^j has index i + m*j.
GroupPtr cyclic_semidirect(std::uint32_t m, std::uint32_t n, std::uint32_t r);
GroupPtr cyclic_group(std::uint32_t n);
/// (a, b) has index a * |right| + b.
GroupPtr direct_product(const GroupPtr& left, const GroupPtr& right);

/// Flattened Cayley table of any backend (order^2 entries).
std::vector<std::uint32_t> materialize_table(const FiniteGroup& group);

/// Conjugation x -> g*x*g^-1.
class Conjugation {
 public:
  Conjugation(GroupPtr group, Elem g);
  Elem operator()(Elem x) const;

 private:
  GroupPtr group_;
  Elem g_;
  Elem g_inv_;
};

Conjugation conjugation_iota(const GroupPtr& group, Elem g);

class Subgroup {
 public:
  /// Closure of the given generators.
  Subgroup(GroupPtr parent, std::vector<Elem> generators);

  /// Validates that members form a subgroup.
  static Subgroup from_members(GroupPtr parent, std::vector<Elem> members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Elem g) const { return g.index < mask_.size() && mask_[g.index]; }
  bool is_subset_of(const Subgroup& other) const;
  bool is_trivial() const { return members_.size() == 1; }
  /// Least common multiple of the element orders.
  std::uint64_t exponent() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  Subgroup() = default;
  void add_generator(Elem g);

  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
  std::vector<bool> mask_;

  friend Subgroup normal_closure(const GroupPtr&, std::vector<Elem>);
};

Subgroup trivial_subgroup(const GroupPtr& group);
Subgroup whole_group(const GroupPtr& group);
Subgroup normal_closure(const GroupPtr& group, std::vector<Elem> elements);

Subgroup centre(const GroupPtr& group);
Subgroup derived_subgroup(const GroupPtr& group);
/// [H, G] for a normal subgroup H.
Subgroup commutator_with_group(const Subgroup& h);
/// gamma_1 = G, gamma_{i+1} = [gamma_i, G], until it stabilises.
std::vector<Subgroup> lower_central_series(const GroupPtr& group);
/// Z_0 = 1, Z_{i+1}/Z_i = Z(G/Z_i), until it stabilises.
std::vector<Subgroup> upper_central_series(const GroupPtr& group);

/// Nilpotency class (0 for the trivial group), or nullopt if not nilpotent.
std::optional<int> nilpotency_class(const GroupPtr& group);
/// True iff the nilpotency class is at most two.
bool is_nilpotent_of_class_two(const GroupPtr& group);
bool is_abelian(const GroupPtr& group);

}  // namespace braceblock
