#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "braceblock/group.hpp"

namespace braceblock {

/// G/K for a central subgroup K, as a Cayley-table group. Cosets are numbered
/// by their least member; the transversal picks that least member.
class Quotient {
 public:
  const GroupPtr& parent() const { return parent_; }
  const GroupPtr& group() const { return group_; }
  const Subgroup& kernel() const { return kernel_; }

  Elem project(Elem g) const { return projection_.at(g.index); }
  Elem transversal(Elem coset) const { return transversal_.at(coset.index); }
  std::size_t order() const { return transversal_.size(); }

 private:
  friend Quotient quotient(const Subgroup& k);
  Quotient(GroupPtr parent, Subgroup kernel) : parent_(std::move(parent)), kernel_(std::move(kernel)) {}

  GroupPtr parent_;
  GroupPtr group_;
  Subgroup kernel_;
  std::vector<Elem> projection_;
  std::vector<Elem> transversal_;
};

/// Throws KNotCentral unless K lies in the centre. Quotients of order above
/// 4096 throw BoundExceeded.
Quotient quotient(const Subgroup& k);

/// (G, K, A) with K central, K <= A and A/K abelian.
class CentralPair {
 public:
  const GroupPtr& group() const { return group_; }
  const Subgroup& k() const { return k_; }
  const Subgroup& a() const { return a_; }
  const Quotient& quotient() const { return quotient_; }
  /// Whether a coset of K lies in A/K.
  bool in_a_mod_k(Elem coset) const { return a_mod_k_.at(coset.index); }
  /// The ring of endomorphisms has a unity only when A = G.
  bool has_unity() const { return a_.order() == group_->order(); }

 private:
  friend std::shared_ptr<const CentralPair> make_central_pair(GroupPtr, Subgroup, Subgroup);
  CentralPair(GroupPtr g, Subgroup k, Subgroup a, Quotient q)
      : group_(std::move(g)), k_(std::move(k)), a_(std::move(a)), quotient_(std::move(q)) {}

  GroupPtr group_;
  Subgroup k_;
  Subgroup a_;
  Quotient quotient_;
  std::vector<bool> a_mod_k_;
};

using PairPtr = std::shared_ptr<const CentralPair>;

/// Errors: KNotCentral, KNotInA, AModKNotAbelian.
PairPtr make_central_pair(GroupPtr g, Subgroup k, Subgroup a);
/// K = [G,G], A = G on a group of class at most two (NotClassTwo otherwise).
PairPtr class_two_pair(const GroupPtr& g);

void require_same_pair(const PairPtr& a, const PairPtr& b);

/// An endomorphism of G/K with image in A/K, stored as a full coset table.
/// Composition is right-to-left: (psi * phi)(x) = psi(phi(x)).
class QuotientEndo {
 public:
  /// Validates homomorphism (NotAHomomorphism) and image (ImageEscapesA).
  QuotientEndo(PairPtr pair, std::vector<Elem> table);

  static QuotientEndo zero(PairPtr pair);
  /// Identity of G/K; only in the ring when A = G.
  static QuotientEndo identity(PairPtr pair);
  /// The endomorphism of G/K induced by a map on G that respects cosets.
  static QuotientEndo induced(PairPtr pair, const std::function<Elem(Elem)>& map_on_g);

  const PairPtr& pair() const { return pair_; }
  const std::vector<Elem>& table() const { return table_; }
  Elem operator()(Elem coset) const { return table_[coset.index]; }
  bool is_zero() const;

  friend bool operator==(const QuotientEndo& a, const QuotientEndo& b) {
    return a.pair_ == b.pair_ && a.table_ == b.table_;
  }

 private:
  struct Unchecked {};
  QuotientEndo(PairPtr pair, std::vector<Elem> table, Unchecked)
      : pair_(std::move(pair)), table_(std::move(table)) {}

  PairPtr pair_;
  std::vector<Elem> table_;

  friend QuotientEndo ring_add(const QuotientEndo&, const QuotientEndo&);
  friend QuotientEndo ring_mul(const QuotientEndo&, const QuotientEndo&);
  friend QuotientEndo ring_neg(const QuotientEndo&);
};

/// Extends images of generators of G/K by closure. Errors: NotAHomomorphism,
/// ImageEscapesA, GeneratorsIncomplete.
QuotientEndo endo_from_generator_images(const PairPtr& pair,
                                        const std::vector<std::pair<Elem, Elem>>& images);

QuotientEndo ring_add(const QuotientEndo& psi, const QuotientEndo& phi);
/// psi after phi.
QuotientEndo ring_mul(const QuotientEndo& psi, const QuotientEndo& phi);
QuotientEndo ring_neg(const QuotientEndo& psi);
QuotientEndo ring_sub(const QuotientEndo& psi, const QuotientEndo& phi);
/// psi + phi + psi*phi.
QuotientEndo jacobson_circle(const QuotientEndo& psi, const QuotientEndo& phi);
/// psi^k for k >= 1.
QuotientEndo ring_pow(const QuotientEndo& psi, unsigned k);
/// psi + ... + psi (k times); k = 0 gives zero.
QuotientEndo ring_scale(const QuotientEndo& psi, std::uint64_t k);

/// gK -> g^n K. Requires G/K abelian.
QuotientEndo power_endo(const PairPtr& pair, long long n);

/// All of the ring, by generator images. Refuses |G/K| > 64.
std::vector<QuotientEndo> enumerate_ring(const PairPtr& pair);

/// A set map G -> A covering an endomorphism of G/K.
class Lifting {
 public:
  /// Validates that map covers endo (NotAHomomorphism) and lands in A (ImageEscapesA).
  Lifting(QuotientEndo endo, std::vector<Elem> map);

  const QuotientEndo& endo() const { return endo_; }
  const PairPtr& pair() const { return endo_.pair(); }
  Elem operator()(Elem g) const { return (*map_)[g.index]; }
  const std::vector<Elem>& values() const { return *map_; }

 private:
  QuotientEndo endo_;
  std::shared_ptr<const std::vector<Elem>> map_;
};

/// g -> least member of the coset psi(gK).
Lifting canonical_lifting(const QuotientEndo& psi);
/// g -> L(g) * delta(g); DeltaEscapesK if some delta(g) is not in K.
Lifting perturb_lifting(const Lifting& lifting, const std::function<Elem(Elem)>& delta);
/// An endomorphism of G (given as images of every element) used directly as a
/// lifting of the endomorphism it induces on G/K. Errors: NotAnEndomorphism,
/// NotAHomomorphism if it does not respect cosets, ImageEscapesA.
Lifting lifting_from_endomorphism(const PairPtr& pair, std::vector<Elem> images);

/// Exact endomorphism test: map(x*s) = map(x)*map(s) for all x and generators s.
bool is_endomorphism(const FiniteGroup& group, std::span<const Elem> images);

}  // namespace braceblock
