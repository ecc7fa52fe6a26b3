#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braceblock/bilinear.hpp"
#include "braceblock/operation.hpp"
#include "braceblock/quotient.hpp"
#include "braceblock/verify_options.hpp"

namespace braceblock {

/// A map r on X x X with X = {0, ..., n-1}, written r(x, y) = (sigma_x(y), tau_y(x)).
/// Materialized as a permutation of pair indices x*n + y when n <= 1000.
class YBMap {
 public:
  static constexpr std::size_t kMaterializeBound = 1000;
  using Forward = std::function<std::pair<Elem, Elem>(Elem, Elem)>;

  YBMap(std::size_t n, Forward forward, std::string label);

  static YBMap flip(std::size_t n);
  static YBMap identity(std::size_t n);
  /// Images of pair indices; any array of n*n values in range is accepted.
  static YBMap from_permutation(std::size_t n, std::vector<std::uint32_t> images, std::string label);

  std::pair<Elem, Elem> operator()(Elem x, Elem y) const {
    if (table_) {
      const std::uint32_t v = (*table_)[std::size_t{x.index} * n_ + y.index];
      return {Elem{static_cast<std::uint32_t>(v / n_)}, Elem{static_cast<std::uint32_t>(v % n_)}};
    }
    return forward_(x, y);
  }
  Elem sigma(Elem x, Elem y) const { return (*this)(x, y).first; }
  Elem tau(Elem y, Elem x) const { return (*this)(x, y).second; }

  std::size_t carrier_size() const { return n_; }
  const std::string& label() const { return label_; }
  bool is_materialized() const { return table_ != nullptr; }
  /// Pair-index images; BoundExceeded when not materialized.
  const std::vector<std::uint32_t>& permutation() const;

 private:
  std::size_t n_;
  Forward forward_;
  std::string label_;
  std::shared_ptr<const std::vector<std::uint32_t>> table_;
};

struct YBReport {
  CheckMode mode = CheckMode::Exhaustive;
  std::optional<std::uint64_t> seed;
  std::uint64_t triples_checked = 0;
  bool bijective = true;
  bool braid_ok = true;
  /// First triple where the two sides of the braid relation differ.
  std::optional<std::array<Elem, 3>> witness;

  bool ok() const { return bijective && braid_ok; }
};

/// (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r), exhaustive for n <= 125.
YBReport verify_ybe(const YBMap& r, const VerifyOptions& options = {});
bool is_bijective(const YBMap& r);
bool verify_nondegenerate(const YBMap& r);
bool is_involutive(const YBMap& r);
/// r r' = r' r = id on X x X.
bool inverse_pair(const YBMap& r, const YBMap& r_prime);
bool maps_equal(const YBMap& a, const YBMap& b);

struct SolutionPair {
  YBMap r;
  YBMap r_prime;
};

/// r(g,h) = (a, inv(a) o g o h) with a = g^-1 . (g o h), and
/// r'(g,h) = (b, inv(b) o g o h) with b = (g o h) . g^-1.
/// Throws NotASkewBrace unless (dot, circ) passes verify_skew_brace or force is set.
SolutionPair solutions_from_brace(const GroupOperation& dot, const GroupOperation& circ, bool force = false,
                                  const VerifyOptions& options = {});

struct Deformation {
  QuotientEndo endo;
  CentralBilinearMap alpha;
};

/// Closed forms for the brace (o_{phi,beta}, o_{psi,alpha}), given as
/// (psi, alpha) and (phi, beta). Errors: PairMismatch.
SolutionPair explicit_solutions_thm(const PairPtr& pair, const Deformation& circ, const Deformation& dot);

struct CorollarySolutions {
  YBMap r;
  YBMap r_prime;
  /// Roles reversed: "." as the circle operation.
  YBMap r_tilde;
  YBMap r_tilde_prime;
};

/// Closed forms for (., o_{psi,alpha}) and for the reversed brace.
CorollarySolutions explicit_solutions_cor(const PairPtr& pair, const Deformation& data);

}  // namespace braceblock
