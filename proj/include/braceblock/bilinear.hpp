#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "braceblock/error.hpp"
#include "braceblock/quotient.hpp"

namespace braceblock {

/// A map G x G -> K, multiplicative in each argument, trivial whenever
/// either argument lies in K. Dense table up to |G| = 1000, closed form above.
class CentralBilinearMap {
 public:
  static constexpr std::size_t kDenseBound = 1000;

  const PairPtr& pair() const { return pair_; }
  Elem operator()(Elem g, Elem h) const {
    if (trivial_) return Elem{0};
    if (table_) return (*table_)[std::size_t{g.index} * order_ + h.index];
    return fn_(g, h);
  }
  bool is_trivial() const { return trivial_; }
  bool is_dense() const { return table_ != nullptr; }

  /// Builds from a total candidate table without validation; use validate_bilinear.
  static CentralBilinearMap unchecked(PairPtr pair, std::vector<Elem> table);
  static CentralBilinearMap unchecked(PairPtr pair, std::function<Elem(Elem, Elem)> fn);

 private:
  explicit CentralBilinearMap(PairPtr pair);

  PairPtr pair_;
  std::size_t order_ = 0;
  bool trivial_ = false;
  std::shared_ptr<const std::vector<Elem>> table_;
  std::function<Elem(Elem, Elem)> fn_;

  friend CentralBilinearMap trivial_bilinear(PairPtr pair);
};

CentralBilinearMap trivial_bilinear(PairPtr pair);

/// alpha(g,h) = [g,h]^n. Errors: NotClassTwo, ValidationFailed.
CentralBilinearMap bilinear_from_commutator_power(const PairPtr& pair, long long n);

struct BilinearCheck {
  bool ok = true;
  std::optional<ErrorKind> failure;
  std::optional<std::tuple<Elem, Elem, Elem>> witness;
  bool sampled = false;
};

/// Checks values in K, vanishing on K and bilinearity. Up to |G| = 1000 the
/// check is exact: bilinearity is tested against every generator in each
/// slot, which covers all triples by induction on word length. Above that,
/// 10^5 random triples.
BilinearCheck check_bilinear(const CentralBilinearMap& map);

/// Throws NotBilinear, NonvanishingOnK or ValueOutsideK.
CentralBilinearMap validate_bilinear(const PairPtr& pair, std::vector<Elem> table);
CentralBilinearMap validate_bilinear(const CentralBilinearMap& candidate);

/// One step of the accumulated bilinear map of an iterated operation:
/// [L(g), Q(h)] * beta(L(g), h) * beta(h, L(g)^-1) * beta(g, h) * alpha(g, h)
/// with L the lifting of the new step and Q the lifting of the previous
/// accumulated endomorphism. Revalidated; ValidationFailed signals a bug.
CentralBilinearMap beta_step(const CentralBilinearMap& alpha, const CentralBilinearMap& beta_prev,
                             const Lifting& step_lifting, const Lifting& accumulated_lifting);

/// Random search over generator values in K, extended bilinearly through G/K.
/// Returns nullopt when no consistent choice is found in the given attempts.
std::optional<CentralBilinearMap> random_bilinear(const PairPtr& pair, std::uint64_t seed,
                                                  int attempts = 64);

/// Pointwise equality over G x G.
bool equal(const CentralBilinearMap& a, const CentralBilinearMap& b);

}  // namespace braceblock
