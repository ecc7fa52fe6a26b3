#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "braceblock/bilinear.hpp"
#include "braceblock/group.hpp"
#include "braceblock/quotient.hpp"

namespace braceblock {

struct DotProvenance {};
struct DeformedProvenance {
  std::string label;
};
struct IteratedProvenance {
  std::size_t step = 0;
  std::vector<std::string> history;
};
struct TransportedProvenance {
  std::string label;
};
/// Raw tables: imports, mutation controls.
struct ExplicitProvenance {
  std::string label;
};

using Provenance = std::variant<DotProvenance, DeformedProvenance, IteratedProvenance,
                                TransportedProvenance, ExplicitProvenance>;

std::string describe(const Provenance& provenance);

/// Data behind g*L(g)*h*L(g)^-1*alpha(g,h).
struct DeformedData {
  Lifting lifting;
  CentralBilinearMap alpha;
};

/// A binary operation on the carrier of a base group. Tables are
/// materialized for carriers up to kMaterializeBound; larger operations are
/// evaluated lazily.
class GroupOperation {
 public:
  static constexpr std::size_t kMaterializeBound = 1000;
  using Eval = std::function<Elem(Elem, Elem)>;

  GroupOperation(GroupPtr base, Eval eval, Provenance provenance,
                 std::optional<DeformedData> deformed = std::nullopt);

  /// The base group's own multiplication.
  static GroupOperation dot(GroupPtr base);
  static GroupOperation from_table(GroupPtr base, std::vector<Elem> table, Provenance provenance);

  Elem operator()(Elem g, Elem h) const {
    return table_ ? (*table_)[std::size_t{g.index} * order_ + h.index] : eval_(g, h);
  }

  /// Inverse with respect to this operation: the closed form for deformed
  /// operations, the base inverse for "dot", table lookup or linear search
  /// otherwise. Throws NotAGroup if none exists.
  Elem inverse(Elem g) const;

  Elem identity() const { return Elem{0}; }
  std::size_t order() const { return order_; }
  const GroupPtr& base() const { return base_; }
  const Provenance& provenance() const { return provenance_; }
  const std::optional<DeformedData>& deformed() const { return deformed_; }
  bool is_materialized() const { return table_ != nullptr; }

  /// Full table, row-major. BoundExceeded above 4096 elements.
  std::vector<Elem> table() const;

 private:
  GroupPtr base_;
  std::size_t order_ = 0;
  Eval eval_;
  Provenance provenance_;
  std::optional<DeformedData> deformed_;
  std::shared_ptr<const std::vector<Elem>> table_;
  std::shared_ptr<const std::vector<Elem>> inverses_;
  bool is_dot_ = false;
};

/// First (g, h) in row-major order where the tables differ.
std::optional<std::pair<Elem, Elem>> first_difference(const GroupOperation& a,
                                                      const GroupOperation& b);
bool operations_equal(const GroupOperation& a, const GroupOperation& b);

}  // namespace braceblock
