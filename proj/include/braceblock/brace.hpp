#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braceblock/bilinear.hpp"
#include "braceblock/operation.hpp"
#include "braceblock/quotient.hpp"
#include "braceblock/verify_options.hpp"

namespace braceblock {

/// g * L(g) * h * L(g)^-1 * alpha(g,h) with L the canonical lifting of psi.
/// Errors: PairMismatch.
GroupOperation deformed_operation(const PairPtr& pair, const QuotientEndo& psi,
                                  const CentralBilinearMap& alpha, std::string label = {});
/// Same, with an explicit lifting.
GroupOperation deformed_operation(const Lifting& lifting, const CentralBilinearMap& alpha,
                                  std::string label = {});

/// Closed-form inverse of a deformed operation (or the base inverse for "dot").
/// Throws ValidationFailed for any other provenance.
Elem circle_inverse(const GroupOperation& op, Elem g);
/// Inverse by scanning the row of g. Throws NotAGroup if absent.
Elem search_inverse(const GroupOperation& op, Elem g);

/// Picks exhaustive or sampled for a triple scan over the carrier of `group`.
CheckMode triple_mode(const FiniteGroup& group, const VerifyOptions& options);

struct GroupReport {
  CheckMode mode = CheckMode::Exhaustive;
  std::optional<std::uint64_t> seed;
  std::uint64_t triples_checked = 0;
  bool identity_ok = true;
  bool inverses_ok = true;
  bool associative = true;
  /// Only for deformed operations: (g o h) o k against its expanded normal form.
  std::optional<bool> expansion_ok;
  /// "identity", "inverse", "closure", "associativity" or "expansion".
  std::string failure;
  std::optional<std::array<Elem, 3>> counterexample;

  bool ok() const { return failure.empty(); }
};

/// Identity, inverses and associativity (exhaustive for |G|^3 <= 10^9).
GroupReport verify_group(const GroupOperation& op, const VerifyOptions& options = {});

struct BraceCheckReport {
  GroupOperation left_operation;
  GroupOperation right_operation;
  bool skew_ok = false;
  bool biskew_ok = false;
  std::optional<std::array<Elem, 3>> counterexample;
  /// The counterexample was found with the roles of the operations swapped.
  bool counterexample_reversed = false;
  std::uint64_t triples_checked = 0;
  CheckMode mode = CheckMode::Exhaustive;
  std::optional<std::uint64_t> seed;
};

/// g o (h . k) == (g o h) . inv(g) . (g o k) with "." = dot and "o" = circ.
bool brace_identity_holds(const GroupOperation& dot, const GroupOperation& circ, Elem g, Elem h,
                          Elem k);

/// Checks (op1, op2) as (., o); then, if that passes, (op2, op1).
/// Errors: CarrierMismatch.
BraceCheckReport verify_skew_brace(const GroupOperation& op1, const GroupOperation& op2,
                                   const VerifyOptions& options = {});

/// True iff the stored counterexample really violates the brace identity.
bool recheck_counterexample(const BraceCheckReport& report);

struct BlockStep {
  QuotientEndo endo;
  CentralBilinearMap alpha;
};

enum class IterationInverse { ClosedForm, Search };

/// o_0 = ".", o_n(g,h) = g o L_n(g) o h o inv(L_n(g)) o alpha_n(g,h), all in
/// o_{n-1}. Returns o_0 .. o_n. Errors: PairMismatch.
std::vector<GroupOperation> iterate_block(const PairPtr& pair, const std::vector<BlockStep>& steps,
                                          IterationInverse inverse = IterationInverse::ClosedForm);

/// q_n by q_k = q_{k-1} + psi_k + q_{k-1} psi_k. Nonempty input.
QuotientEndo qn_endo(const std::vector<QuotientEndo>& endos);

struct AccumulatedStep {
  QuotientEndo q;
  CentralBilinearMap beta;
};

/// (q_k, beta_k) for k = 1..n, each beta_k revalidated as central bilinear.
std::vector<AccumulatedStep> accumulate_block(const PairPtr& pair, const std::vector<BlockStep>& steps);

/// deformed_operation(pair, q, beta).
GroupOperation closed_form_operation(const PairPtr& pair, const QuotientEndo& q,
                                     const CentralBilinearMap& beta);

/// x L(x) y L(x)^-1 L(y) x^-1 L(y)^-1 alpha(x,y) alpha(y,x^-1) for a deformed op.
Elem technical_conjugation(const GroupOperation& op, Elem x, Elem y);

/// Whether psi is an endomorphism of (G/K, induced o). False when o does not
/// descend to G/K.
bool endo_survives(const QuotientEndo& psi, const GroupOperation& op);
/// Same for an arbitrary coset map, which need not lie in the ring.
bool endo_survives(const PairPtr& pair, std::span<const Elem> coset_map, const GroupOperation& op);

}  // namespace braceblock
