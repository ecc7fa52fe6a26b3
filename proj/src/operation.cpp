#include "braceblock/operation.hpp"

#include "braceblock/error.hpp"
#include "braceblock/parallel.hpp"

namespace braceblock {

std::string describe(const Provenance& provenance) {
  struct Visitor {
    std::string operator()(const DotProvenance&) const { return "dot"; }
    std::string operator()(const DeformedProvenance& p) const { return "deformed(" + p.label + ")"; }
    std::string operator()(const IteratedProvenance& p) const {
      std::string out = "iterated(step " + std::to_string(p.step);
      for (const auto& h : p.history) out += "; " + h;
      return out + ")";
    }
    std::string operator()(const TransportedProvenance& p) const { return "transported(" + p.label + ")"; }
    std::string operator()(const ExplicitProvenance& p) const { return "explicit(" + p.label + ")"; }
  };
  return std::visit(Visitor{}, provenance);
}

GroupOperation::GroupOperation(GroupPtr base, Eval eval, Provenance provenance,
                               std::optional<DeformedData> deformed)
    : base_(std::move(base)),
      order_(base_->order()),
      eval_(std::move(eval)),
      provenance_(std::move(provenance)),
      deformed_(std::move(deformed)) {
  is_dot_ = std::holds_alternative<DotProvenance>(provenance_);
  if (order_ > kMaterializeBound) return;
  auto table = std::make_shared<std::vector<Elem>>(order_ * order_);
  parallel_for(order_, [&](std::size_t g) {
    for (std::size_t h = 0; h < order_; ++h) {
      (*table)[g * order_ + h] =
          eval_(Elem{static_cast<std::uint32_t>(g)}, Elem{static_cast<std::uint32_t>(h)});
    }
  });
  table_ = std::move(table);
  if (is_dot_ || deformed_) return;
  // Inverses by row search; a row without the identity leaves a gap.
  auto inverses = std::make_shared<std::vector<Elem>>(order_, Elem{static_cast<std::uint32_t>(-1)});
  for (std::size_t g = 0; g < order_; ++g) {
    for (std::size_t h = 0; h < order_; ++h) {
      if ((*table_)[g * order_ + h].index == 0) {
        (*inverses)[g] = Elem{static_cast<std::uint32_t>(h)};
        break;
      }
    }
  }
  inverses_ = std::move(inverses);
}

GroupOperation GroupOperation::dot(GroupPtr base) {
  const FiniteGroup* g = base.get();
  return GroupOperation(base, [g](Elem x, Elem y) { return g->mul_nc(x, y); }, DotProvenance{});
}

GroupOperation GroupOperation::from_table(GroupPtr base, std::vector<Elem> table,
                                          Provenance provenance) {
  const std::size_t n = base->order();
  if (table.size() != n * n) throw Error(ErrorKind::CarrierMismatch, "table size does not match carrier");
  for (const Elem e : table) {
    if (e.index >= n) throw Error(ErrorKind::ElementNotInCarrier, "table value outside carrier");
  }
  auto shared = std::make_shared<const std::vector<Elem>>(std::move(table));
  return GroupOperation(
      std::move(base), [shared, n](Elem x, Elem y) { return (*shared)[std::size_t{x.index} * n + y.index]; },
      std::move(provenance));
}

Elem GroupOperation::inverse(Elem g) const {
  base_->inv(g);
  if (is_dot_) return base_->inv_nc(g);
  if (deformed_) {
    // L(g)^-1 * g^-1 * L(g) * alpha(g,g)
    const FiniteGroup& b = *base_;
    const Elem l = deformed_->lifting(g);
    return b.mul_nc(b.mul_nc(b.mul_nc(b.inv_nc(l), b.inv_nc(g)), l), deformed_->alpha(g, g));
  }
  if (inverses_) {
    const Elem v = (*inverses_)[g.index];
    if (v.index >= order_) throw Error(ErrorKind::NotAGroup, "element has no inverse");
    return v;
  }
  for (std::uint32_t h = 0; h < order_; ++h) {
    if ((*this)(g, Elem{h}).index == 0) return Elem{h};
  }
  throw Error(ErrorKind::NotAGroup, "element has no inverse");
}

std::vector<Elem> GroupOperation::table() const {
  if (table_) return *table_;
  if (order_ > 4096) throw Error(ErrorKind::BoundExceeded, "operation table too large to export");
  std::vector<Elem> out(order_ * order_);
  for (std::uint32_t g = 0; g < order_; ++g)
    for (std::uint32_t h = 0; h < order_; ++h) out[std::size_t{g} * order_ + h] = eval_(Elem{g}, Elem{h});
  return out;
}

std::optional<std::pair<Elem, Elem>> first_difference(const GroupOperation& a,
                                                      const GroupOperation& b) {
  if (a.order() != b.order()) throw Error(ErrorKind::CarrierMismatch, "operations on different carriers");
  const std::size_t n = a.order();
  FirstFailure first;
  parallel_for(n, [&](std::size_t g) {
    if (first.beyond(g * n)) return;
    const Elem eg{static_cast<std::uint32_t>(g)};
    for (std::uint32_t h = 0; h < n; ++h) {
      if (a(eg, Elem{h}) != b(eg, Elem{h})) {
        first.record(g * n + h);
        return;
      }
    }
  });
  if (!first.found()) return std::nullopt;
  return std::make_pair(Elem{static_cast<std::uint32_t>(first.index() / n)},
                        Elem{static_cast<std::uint32_t>(first.index() % n)});
}

bool operations_equal(const GroupOperation& a, const GroupOperation& b) {
  return !first_difference(a, b).has_value();
}

}  // namespace braceblock
