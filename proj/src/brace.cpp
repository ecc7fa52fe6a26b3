#include "braceblock/brace.hpp"

#include <random>

#include "braceblock/error.hpp"
#include "braceblock/parallel.hpp"
#include "triple_scan.hpp"

namespace braceblock {

namespace {

constexpr std::uint64_t kTripleExhaustiveLimit = 1'000'000'000;
constexpr std::uint64_t kExpansionSamples = 10'000;

Elem elem(std::uint64_t i) { return Elem{static_cast<std::uint32_t>(i)}; }

}  // namespace

GroupOperation deformed_operation(const Lifting& lifting, const CentralBilinearMap& alpha,
                                  std::string label) {
  require_same_pair(lifting.pair(), alpha.pair());
  const GroupPtr base = lifting.pair()->group();
  const FiniteGroup* g = base.get();
  auto lift = std::make_shared<std::vector<Elem>>(lifting.values());
  auto lift_inv = std::make_shared<std::vector<Elem>>(lift->size());
  for (std::size_t i = 0; i < lift->size(); ++i) (*lift_inv)[i] = g->inv_nc((*lift)[i]);
  GroupOperation::Eval eval;
  if (alpha.is_trivial()) {
    eval = [g, lift, lift_inv](Elem x, Elem y) {
      return g->mul_nc(g->mul_nc(g->mul_nc(x, (*lift)[x.index]), y), (*lift_inv)[x.index]);
    };
  } else {
    eval = [g, lift, lift_inv, alpha](Elem x, Elem y) {
      const Elem v = g->mul_nc(g->mul_nc(g->mul_nc(x, (*lift)[x.index]), y), (*lift_inv)[x.index]);
      return g->mul_nc(v, alpha(x, y));
    };
  }
  return GroupOperation(base, std::move(eval), DeformedProvenance{std::move(label)},
                        DeformedData{lifting, alpha});
}

GroupOperation deformed_operation(const PairPtr& pair, const QuotientEndo& psi,
                                  const CentralBilinearMap& alpha, std::string label) {
  require_same_pair(pair, psi.pair());
  require_same_pair(pair, alpha.pair());
  return deformed_operation(canonical_lifting(psi), alpha, std::move(label));
}

Elem circle_inverse(const GroupOperation& op, Elem g) {
  if (!op.deformed() && !std::holds_alternative<DotProvenance>(op.provenance())) {
    throw Error(ErrorKind::ValidationFailed, "closed-form inverse needs a deformed operation");
  }
  return op.inverse(g);
}

Elem search_inverse(const GroupOperation& op, Elem g) {
  op.base()->inv(g);
  for (std::uint64_t h = 0; h < op.order(); ++h) {
    if (op(g, elem(h)).index == 0) return elem(h);
  }
  throw Error(ErrorKind::NotAGroup, "element has no inverse");
}

CheckMode triple_mode(const FiniteGroup& group, const VerifyOptions& options) {
  const std::uint64_t n = group.order();
  const std::uint64_t cube = n > 1'000'000 ? UINT64_MAX : n * n * n;
  if (group.backend() == Backend::Unitriangular && n > options.unitriangular_exhaustive_bound) {
    return CheckMode::Sampled;
  }
  return options.resolve(cube, kTripleExhaustiveLimit);
}

GroupReport verify_group(const GroupOperation& op, const VerifyOptions& options) {
  GroupReport report;
  const std::size_t n = op.order();
  const Elem e = op.identity();
  report.mode = triple_mode(*op.base(), options);
  if (report.mode == CheckMode::Sampled) report.seed = options.seed;

  for (std::uint64_t i = 0; i < n; ++i) {
    const Elem g = elem(i);
    const Elem left = op(e, g), right = op(g, e);
    if (left.index >= n || right.index >= n) {
      report.failure = "closure";
      report.counterexample = std::array<Elem, 3>{e, g, e};
      return report;
    }
    if (left != g || right != g) {
      report.identity_ok = false;
      report.failure = "identity";
      report.counterexample = std::array<Elem, 3>{e, g, e};
      return report;
    }
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    const Elem g = elem(i);
    std::optional<Elem> inv;
    try {
      inv = op.inverse(g);
    } catch (const Error&) {
    }
    if (!inv || op(g, *inv) != e || op(*inv, g) != e) {
      report.inverses_ok = false;
      report.failure = "inverse";
      report.counterexample = std::array<Elem, 3>{g, inv.value_or(e), e};
      return report;
    }
  }

  bool out_of_range = false;
  const auto scan = detail::scan_triples(n, report.mode, options.seed, options.samples,
                                         [&](Elem g, Elem h, Elem k) {
                                           const Elem gh = op(g, h), hk = op(h, k);
                                           if (gh.index >= n || hk.index >= n) {
                                             out_of_range = true;
                                             return false;
                                           }
                                           return op(gh, k) == op(g, hk);
                                         });
  report.triples_checked = scan.checked;
  if (scan.failure) {
    report.associative = false;
    report.failure = out_of_range ? "closure" : "associativity";
    report.counterexample = scan.failure;
    return report;
  }

  if (const auto& data = op.deformed()) {
    const FiniteGroup& b = *op.base();
    const Lifting& l = data->lifting;
    const CentralBilinearMap& a = data->alpha;
    const auto expansion = detail::scan_triples(
        n, CheckMode::Sampled, options.seed ^ 0x5eed, kExpansionSamples, [&](Elem g, Elem h, Elem k) {
          Elem v = b.mul_nc(b.mul_nc(g, l(g)), h);
          v = b.mul_nc(b.mul_nc(v, l(h)), k);
          v = b.mul_nc(b.mul_nc(v, b.inv_nc(l(h))), b.inv_nc(l(g)));
          v = b.mul_nc(b.mul_nc(b.mul_nc(v, a(g, h)), a(g, k)), a(h, k));
          return op(op(g, h), k) == v;
        });
    report.expansion_ok = !expansion.failure.has_value();
    if (expansion.failure) {
      report.failure = "expansion";
      report.counterexample = expansion.failure;
    }
  }
  return report;
}

bool brace_identity_holds(const GroupOperation& dot, const GroupOperation& circ, Elem g, Elem h,
                          Elem k) {
  return circ(g, dot(h, k)) == dot(dot(circ(g, h), dot.inverse(g)), circ(g, k));
}

namespace {

detail::TripleScan scan_brace(const GroupOperation& dot, const GroupOperation& circ, CheckMode mode,
                              const VerifyOptions& options) {
  const std::size_t n = dot.order();
  std::vector<Elem> inv(n);
  for (std::uint64_t i = 0; i < n; ++i) inv[i] = dot.inverse(elem(i));
  return detail::scan_triples(n, mode, options.seed, options.samples, [&](Elem g, Elem h, Elem k) {
    return circ(g, dot(h, k)) == dot(dot(circ(g, h), inv[g.index]), circ(g, k));
  });
}

}  // namespace

BraceCheckReport verify_skew_brace(const GroupOperation& op1, const GroupOperation& op2,
                                   const VerifyOptions& options) {
  if (op1.order() != op2.order()) {
    throw Error(ErrorKind::CarrierMismatch, "operations live on carriers of different size");
  }
  BraceCheckReport report{op1, op2, false, false, std::nullopt, false, 0, CheckMode::Exhaustive, std::nullopt};
  report.mode = triple_mode(*op1.base(), options);
  if (report.mode == CheckMode::Sampled) report.seed = options.seed;

  const auto forward = scan_brace(op1, op2, report.mode, options);
  report.triples_checked = forward.checked;
  if (forward.failure) {
    report.counterexample = forward.failure;
    return report;
  }
  report.skew_ok = true;
  const auto backward = scan_brace(op2, op1, report.mode, options);
  report.triples_checked += backward.checked;
  if (backward.failure) {
    report.counterexample = backward.failure;
    report.counterexample_reversed = true;
    return report;
  }
  report.biskew_ok = true;
  return report;
}

bool recheck_counterexample(const BraceCheckReport& report) {
  if (!report.counterexample) return false;
  const auto [g, h, k] = *report.counterexample;
  const GroupOperation& dot = report.counterexample_reversed ? report.right_operation : report.left_operation;
  const GroupOperation& circ = report.counterexample_reversed ? report.left_operation : report.right_operation;
  return !brace_identity_holds(dot, circ, g, h, k);
}

std::vector<GroupOperation> iterate_block(const PairPtr& pair, const std::vector<BlockStep>& steps,
                                          IterationInverse inverse) {
  std::vector<GroupOperation> ops{GroupOperation::dot(pair->group())};
  std::vector<std::string> history;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    require_same_pair(pair, steps[i].endo.pair());
    require_same_pair(pair, steps[i].alpha.pair());
    const GroupOperation prev = ops.back();
    const Lifting lift = canonical_lifting(steps[i].endo);
    const CentralBilinearMap alpha = steps[i].alpha;
    const std::size_t n = prev.order();

    // Inverses of L(g) in o_{n-1}, one per element.
    auto inv = std::make_shared<std::vector<Elem>>(n);
    for (std::uint64_t g = 0; g < n; ++g) {
      const Elem l = lift(elem(g));
      (*inv)[g] = (inverse == IterationInverse::ClosedForm &&
                   (prev.deformed() || std::holds_alternative<DotProvenance>(prev.provenance())))
                      ? circle_inverse(prev, l)
                      : search_inverse(prev, l);
    }
    history.push_back("step " + std::to_string(i + 1));
    ops.emplace_back(
        pair->group(),
        [prev, lift, alpha, inv](Elem g, Elem h) {
          Elem v = prev(g, lift(g));
          v = prev(v, h);
          v = prev(v, (*inv)[g.index]);
          return prev(v, alpha(g, h));
        },
        IteratedProvenance{i + 1, history});
  }
  return ops;
}

QuotientEndo qn_endo(const std::vector<QuotientEndo>& endos) {
  if (endos.empty()) throw Error(ErrorKind::ValidationFailed, "q_n needs at least one endomorphism");
  QuotientEndo q = endos.front();
  for (std::size_t i = 1; i < endos.size(); ++i) {
    require_same_pair(q.pair(), endos[i].pair());
    q = jacobson_circle(q, endos[i]);
  }
  return q;
}

std::vector<AccumulatedStep> accumulate_block(const PairPtr& pair, const std::vector<BlockStep>& steps) {
  std::vector<AccumulatedStep> out;
  QuotientEndo q = QuotientEndo::zero(pair);
  CentralBilinearMap beta = trivial_bilinear(pair);
  for (const BlockStep& step : steps) {
    require_same_pair(pair, step.endo.pair());
    require_same_pair(pair, step.alpha.pair());
    beta = beta_step(step.alpha, beta, canonical_lifting(step.endo), canonical_lifting(q));
    q = jacobson_circle(q, step.endo);
    out.push_back({q, beta});
  }
  return out;
}

GroupOperation closed_form_operation(const PairPtr& pair, const QuotientEndo& q,
                                     const CentralBilinearMap& beta) {
  return deformed_operation(pair, q, beta, "closed form");
}

Elem technical_conjugation(const GroupOperation& op, Elem x, Elem y) {
  if (!op.deformed()) throw Error(ErrorKind::ValidationFailed, "conjugation formula needs a deformed operation");
  const FiniteGroup& g = *op.base();
  const Lifting& l = op.deformed()->lifting;
  const CentralBilinearMap& a = op.deformed()->alpha;
  const Elem lx = l(x), ly = l(y);
  Elem v = g.mul(g.mul(x, lx), y);
  v = g.mul_nc(g.mul_nc(v, g.inv_nc(lx)), ly);
  v = g.mul_nc(g.mul_nc(v, g.inv_nc(x)), g.inv_nc(ly));
  return g.mul_nc(g.mul_nc(v, a(x, y)), a(y, g.inv_nc(x)));
}

bool endo_survives(const PairPtr& pair, std::span<const Elem> coset_map, const GroupOperation& op) {
  const Quotient& quo = pair->quotient();
  const std::size_t n = op.order();
  const std::size_t m = quo.order();
  if (coset_map.size() != m) throw Error(ErrorKind::CarrierMismatch, "coset map has the wrong size");

  // The induced operation on cosets, read off transversal products.
  std::vector<Elem> induced(m * m);
  for (std::uint64_t x = 0; x < m; ++x)
    for (std::uint64_t y = 0; y < m; ++y)
      induced[x * m + y] = quo.project(op(quo.transversal(elem(x)), quo.transversal(elem(y))));

  FirstFailure bad;
  parallel_for(n, [&](std::size_t g) {
    if (bad.found()) return;
    const Elem cg = quo.project(elem(g));
    for (std::uint64_t h = 0; h < n; ++h) {
      if (quo.project(op(elem(g), elem(h))) != induced[cg.index * m + quo.project(elem(h)).index]) {
        bad.record(g);
        return;
      }
    }
  });
  if (bad.found()) return false;

  for (std::uint64_t x = 0; x < m; ++x)
    for (std::uint64_t y = 0; y < m; ++y)
      if (coset_map[induced[x * m + y].index] != induced[coset_map[x].index * m + coset_map[y].index])
        return false;
  return true;
}

bool endo_survives(const QuotientEndo& psi, const GroupOperation& op) {
  return endo_survives(psi.pair(), psi.table(), op);
}

}  // namespace braceblock
