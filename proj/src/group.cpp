#include "braceblock/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "braceblock/error.hpp"

namespace braceblock {

std::string to_string(Backend backend) {
  switch (backend) {
    case Backend::CayleyTable: return "cayley";
    case Backend::Heisenberg: return "heisenberg";
    case Backend::Unitriangular: return "unitriangular";
    case Backend::Permutation: return "permutation";
  }
  return "unknown";
}

void FiniteGroup::check(Elem g) const {
  if (!contains(g)) {
    throw Error(ErrorKind::ElementNotInCarrier,
                "element " + std::to_string(g.index) + " not in " + name());
  }
}

Elem FiniteGroup::mul(Elem g, Elem h) const {
  check(g);
  check(h);
  return mul_nc(g, h);
}

Elem FiniteGroup::inv(Elem g) const {
  check(g);
  return inv_nc(g);
}

Elem FiniteGroup::pow(Elem g, long long n) const {
  check(g);
  Elem base = n < 0 ? inv_nc(g) : g;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1
                               : static_cast<unsigned long long>(n);
  Elem acc = identity();
  while (e > 0) {
    if (e & 1U) acc = mul_nc(acc, base);
    base = mul_nc(base, base);
    e >>= 1U;
  }
  return acc;
}

Elem FiniteGroup::commutator(Elem g, Elem h) const {
  check(g);
  check(h);
  return commutator_nc(g, h);
}

std::uint64_t FiniteGroup::element_order(Elem g) const {
  check(g);
  std::uint64_t k = 1;
  for (Elem x = g; x != identity(); x = mul_nc(x, g)) ++k;
  return k;
}

std::string FiniteGroup::format(Elem g) const {
  check(g);
  const auto c = coordinates(g);
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  out << ')';
  return out.str();
}

namespace {

std::vector<Elem> greedy_generators(const FiniteGroup& group) {
  std::vector<Elem> gens;
  std::vector<bool> in(group.order(), false);
  std::vector<Elem> members{group.identity()};
  in[0] = true;
  for (std::uint32_t i = 1; i < group.order(); ++i) {
    if (in[i]) continue;
    gens.push_back(Elem{i});
    // Re-close under all generators.
    std::deque<Elem> queue(members.begin(), members.end());
    while (!queue.empty()) {
      const Elem x = queue.front();
      queue.pop_front();
      for (const Elem s : gens) {
        const Elem y = group.mul_nc(x, s);
        if (!in[y.index]) {
          in[y.index] = true;
          members.push_back(y);
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

class CayleyTableGroup final : public FiniteGroup {
 public:
  CayleyTableGroup(std::vector<std::uint32_t> flat, std::size_t order, std::string name)
      : table_(std::move(flat)), order_(order), name_(std::move(name)) {
    inverse_.resize(order_);
    for (std::size_t g = 0; g < order_; ++g) {
      for (std::size_t h = 0; h < order_; ++h) {
        if (table_[g * order_ + h] == 0) {
          inverse_[g] = static_cast<std::uint32_t>(h);
          break;
        }
      }
    }
    generators_ = greedy_generators(*this);
  }

  Backend backend() const override { return Backend::CayleyTable; }
  std::size_t order() const override { return order_; }
  Elem mul_nc(Elem g, Elem h) const override {
    return Elem{table_[static_cast<std::size_t>(g.index) * order_ + h.index]};
  }
  Elem inv_nc(Elem g) const override { return Elem{inverse_[g.index]}; }
  std::vector<std::int64_t> coordinates(Elem g) const override { return {g.index}; }
  Elem from_coordinates(std::span<const std::int64_t> c) const override {
    if (c.size() != 1 || c[0] < 0 || static_cast<std::size_t>(c[0]) >= order_) {
      throw Error(ErrorKind::ElementNotInCarrier, "bad Cayley-table element encoding");
    }
    return Elem{static_cast<std::uint32_t>(c[0])};
  }
  const std::vector<Elem>& generators() const override { return generators_; }
  std::string name() const override { return name_; }

 private:
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::size_t order_;
  std::string name_;
  std::vector<Elem> generators_;
};

class HeisenbergGroup final : public FiniteGroup {
 public:
  explicit HeisenbergGroup(std::uint32_t n) : n_(n) {
    const std::uint64_t order = std::uint64_t{n} * n * n;
    if (n < 2 || order > (std::uint64_t{1} << 31)) {
      throw Error(ErrorKind::InvalidGroup, "Heisenberg modulus out of range");
    }
    order_ = static_cast<std::size_t>(order);
    a_.resize(order_);
    b_.resize(order_);
    c_.resize(order_);
    for (std::uint32_t i = 0; i < order_; ++i) {
      a_[i] = i / (n * n);
      b_[i] = (i / n) % n;
      c_[i] = i % n;
    }
    generators_ = {encode(1, 0, 0), encode(0, 1, 0)};
  }

  Backend backend() const override { return Backend::Heisenberg; }
  std::size_t order() const override { return order_; }
  std::uint32_t modulus() const override { return n_; }

  Elem mul_nc(Elem g, Elem h) const override {
    const std::uint64_t a = a_[g.index] + a_[h.index];
    const std::uint64_t b = b_[g.index] + b_[h.index];
    const std::uint64_t c = c_[g.index] + c_[h.index] +
                            std::uint64_t{a_[g.index]} * b_[h.index];
    return encode(a % n_, b % n_, c % n_);
  }
  Elem inv_nc(Elem g) const override {
    const std::uint64_t a = a_[g.index], b = b_[g.index], c = c_[g.index];
    // (-a, -b, -c + ab)
    return encode((n_ - a) % n_, (n_ - b) % n_, (n_ - c + (a * b) % n_) % n_);
  }
  std::vector<std::int64_t> coordinates(Elem g) const override {
    return {a_[g.index], b_[g.index], c_[g.index]};
  }
  Elem from_coordinates(std::span<const std::int64_t> c) const override {
    if (c.size() != 3) throw Error(ErrorKind::ElementNotInCarrier, "expected (a,b,c)");
    auto red = [this](std::int64_t v) {
      const std::int64_t m = n_;
      return static_cast<std::uint64_t>(((v % m) + m) % m);
    };
    return encode(red(c[0]), red(c[1]), red(c[2]));
  }
  const std::vector<Elem>& generators() const override { return generators_; }
  std::string name() const override { return "Heisenberg(Z/" + std::to_string(n_) + ")"; }

 private:
  Elem encode(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
    return Elem{static_cast<std::uint32_t>((a * n_ + b) * n_ + c)};
  }

  std::uint32_t n_;
  std::size_t order_ = 0;
  std::vector<std::uint32_t> a_, b_, c_;
  std::vector<Elem> generators_;
};

class UnitriangularGroup final : public FiniteGroup {
 public:
  UnitriangularGroup(std::uint32_t m, std::uint32_t q) : m_(m), q_(q) {
    if (m < 2 || q < 2) throw Error(ErrorKind::InvalidGroup, "UT(m,q) needs m,q >= 2");
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = i + 1; j < m; ++j) slots_.push_back({i, j});
    }
    std::uint64_t order = 1;
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      order *= q;
      if (order > (std::uint64_t{1} << 31)) {
        throw Error(ErrorKind::InvalidGroup, "UT(m,q) too large for this backend");
      }
    }
    order_ = static_cast<std::size_t>(order);
    slot_of_.assign(std::size_t{m} * m, -1);
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      slot_of_[slots_[s].first * m + slots_[s].second] = static_cast<int>(s);
    }
    for (std::uint32_t i = 0; i + 1 < m; ++i) {
      std::vector<std::uint32_t> e(slots_.size(), 0);
      e[static_cast<std::size_t>(slot_of_[i * m + i + 1])] = 1;
      generators_.push_back(encode(e));
    }
  }

  Backend backend() const override { return Backend::Unitriangular; }
  std::size_t order() const override { return order_; }
  std::uint32_t modulus() const override { return q_; }
  std::uint32_t size_parameter() const override { return m_; }

  Elem mul_nc(Elem g, Elem h) const override {
    const auto x = decode(g), y = decode(h);
    std::vector<std::uint32_t> z(slots_.size());
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      const auto [i, j] = slots_[s];
      std::uint64_t v = std::uint64_t{x[s]} + y[s];
      for (std::uint32_t k = i + 1; k < j; ++k) {
        v += std::uint64_t{x[at(i, k)]} * y[at(k, j)];
      }
      z[s] = static_cast<std::uint32_t>(v % q_);
    }
    return encode(z);
  }

  Elem inv_nc(Elem g) const override {
    // Solve (I+X)(I+Y) = I column by column: Y_ij = -X_ij - sum_k X_ik Y_kj.
    const auto x = decode(g);
    std::vector<std::uint32_t> y(slots_.size(), 0);
    for (std::uint32_t d = 1; d < m_; ++d) {
      for (std::uint32_t i = 0; i + d < m_; ++i) {
        const std::uint32_t j = i + d;
        std::uint64_t v = x[at(i, j)];
        for (std::uint32_t k = i + 1; k < j; ++k) {
          v += std::uint64_t{x[at(i, k)]} * y[at(k, j)];
        }
        y[at(i, j)] = static_cast<std::uint32_t>((q_ - v % q_) % q_);
      }
    }
    return encode(y);
  }

  std::vector<std::int64_t> coordinates(Elem g) const override {
    const auto x = decode(g);
    return {x.begin(), x.end()};
  }
  Elem from_coordinates(std::span<const std::int64_t> c) const override {
    if (c.size() != slots_.size()) {
      throw Error(ErrorKind::ElementNotInCarrier, "wrong number of matrix entries");
    }
    std::vector<std::uint32_t> e(c.size());
    for (std::size_t s = 0; s < c.size(); ++s) {
      const std::int64_t q = q_;
      e[s] = static_cast<std::uint32_t>(((c[s] % q) + q) % q);
    }
    return encode(e);
  }
  const std::vector<Elem>& generators() const override { return generators_; }
  std::string name() const override {
    return "UT(" + std::to_string(m_) + ",Z/" + std::to_string(q_) + ")";
  }

 private:
  std::size_t at(std::uint32_t i, std::uint32_t j) const {
    return static_cast<std::size_t>(slot_of_[i * m_ + j]);
  }
  // Slot 0 is the most significant digit.
  std::vector<std::uint32_t> decode(Elem g) const {
    std::vector<std::uint32_t> e(slots_.size());
    std::uint32_t v = g.index;
    for (std::size_t s = slots_.size(); s-- > 0;) {
      e[s] = v % q_;
      v /= q_;
    }
    return e;
  }
  Elem encode(const std::vector<std::uint32_t>& e) const {
    std::uint64_t v = 0;
    for (const auto d : e) v = v * q_ + d;
    return Elem{static_cast<std::uint32_t>(v)};
  }

  std::uint32_t m_, q_;
  std::size_t order_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> slots_;
  std::vector<int> slot_of_;
  std::vector<Elem> generators_;
};

Perm compose(const Perm& f, const Perm& g) {
  // (f*g)(x) = f(g(x))
  Perm out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

class PermutationGroup final : public FiniteGroup {
 public:
  static constexpr std::size_t kTableBound = 2048;

  PermutationGroup(std::uint32_t degree, const std::vector<Perm>& gens) : degree_(degree) {
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0U);
    for (const auto& p : gens) {
      if (p.size() != degree) throw Error(ErrorKind::InvalidGroup, "generator degree mismatch");
      std::vector<bool> seen(degree, false);
      for (const auto v : p) {
        if (v >= degree || seen[v]) throw Error(ErrorKind::InvalidGroup, "not a permutation");
        seen[v] = true;
      }
    }
    std::map<Perm, int> found{{id, 0}};
    std::deque<Perm> queue{id};
    while (!queue.empty()) {
      const Perm x = queue.front();
      queue.pop_front();
      for (const auto& s : gens) {
        Perm y = compose(x, s);
        if (found.emplace(y, 0).second) {
          queue.push_back(std::move(y));
          if (found.size() > (std::size_t{1} << 22)) {
            throw Error(ErrorKind::BoundExceeded, "permutation group too large");
          }
        }
      }
    }
    // std::map iterates lexicographically; the identity comes first.
    for (auto& [perm, idx] : found) {
      idx = static_cast<int>(elements_.size());
      elements_.push_back(perm);
    }
    index_ = std::move(found);
    const std::size_t n = elements_.size();
    inverse_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      Perm inv(degree);
      for (std::uint32_t x = 0; x < degree; ++x) inv[elements_[i][x]] = x;
      inverse_[i] = static_cast<std::uint32_t>(index_.at(inv));
    }
    if (n <= kTableBound) {
      table_.resize(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          table_[i * n + j] =
              static_cast<std::uint32_t>(index_.at(compose(elements_[i], elements_[j])));
        }
      }
    }
    for (const auto& s : gens) {
      const Elem e{static_cast<std::uint32_t>(index_.at(s))};
      if (e.index != 0 && std::find(generators_.begin(), generators_.end(), e) == generators_.end()) {
        generators_.push_back(e);
      }
    }
  }

  Backend backend() const override { return Backend::Permutation; }
  std::size_t order() const override { return elements_.size(); }
  std::uint32_t size_parameter() const override { return degree_; }

  Elem mul_nc(Elem g, Elem h) const override {
    if (!table_.empty()) return Elem{table_[std::size_t{g.index} * elements_.size() + h.index]};
    return Elem{static_cast<std::uint32_t>(
        index_.at(compose(elements_[g.index], elements_[h.index])))};
  }
  Elem inv_nc(Elem g) const override { return Elem{inverse_[g.index]}; }
  std::vector<std::int64_t> coordinates(Elem g) const override {
    const auto& p = elements_[g.index];
    return {p.begin(), p.end()};
  }
  Elem from_coordinates(std::span<const std::int64_t> c) const override {
    Perm p;
    for (const auto v : c) {
      if (v < 0) throw Error(ErrorKind::ElementNotInCarrier, "negative image");
      p.push_back(static_cast<std::uint32_t>(v));
    }
    const auto it = index_.find(p);
    if (it == index_.end()) throw Error(ErrorKind::ElementNotInCarrier, "permutation not in group");
    return Elem{static_cast<std::uint32_t>(it->second)};
  }
  const std::vector<Elem>& generators() const override { return generators_; }
  std::string name() const override {
    return "PermGroup(degree " + std::to_string(degree_) + ", order " +
           std::to_string(elements_.size()) + ")";
  }

 private:
  std::uint32_t degree_;
  std::vector<Perm> elements_;
  std::map<Perm, int> index_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> table_;
  std::vector<Elem> generators_;
};

}  // namespace

GroupPtr cayley_unchecked(std::vector<std::uint32_t> flat_table, std::size_t order,
                          std::string name) {
  return std::make_shared<CayleyTableGroup>(std::move(flat_table), order, std::move(name));
}

GroupPtr FiniteGroup::cayley(std::vector<std::vector<std::uint32_t>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::InvalidGroup, "empty table");
  std::vector<std::uint32_t> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::InvalidGroup, "table is not square");
    for (const auto v : row) {
      if (v >= n) throw Error(ErrorKind::InvalidGroup, "table entry out of range");
      flat.push_back(v);
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (flat[g] != g || flat[g * n] != g) {
      throw Error(ErrorKind::InvalidGroup, "element 0 must be the identity");
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t h = 0; h < n; ++h) {
      if (row[flat[g * n + h]] || col[flat[h * n + g]]) {
        throw Error(ErrorKind::InvalidGroup, "table is not a Latin square");
      }
      row[flat[g * n + h]] = true;
      col[flat[h * n + g]] = true;
    }
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return flat[flat[a * n + b] * n + c] == flat[a * n + flat[b * n + c]];
  };
  if (n <= 1000) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw Error(ErrorKind::InvalidGroup, "table is not associative");
  } else {
    std::mt19937_64 rng(0xCA11E7);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 100000; ++i) {
      if (!assoc(pick(rng), pick(rng), pick(rng))) {
        throw Error(ErrorKind::InvalidGroup, "table is not associative");
      }
    }
  }
  return cayley_unchecked(std::move(flat), n, "Cayley(" + std::to_string(n) + ")");
}

GroupPtr FiniteGroup::heisenberg(std::uint32_t modulus) {
  return std::make_shared<HeisenbergGroup>(modulus);
}

GroupPtr FiniteGroup::unitriangular(std::uint32_t size, std::uint32_t modulus) {
  return std::make_shared<UnitriangularGroup>(size, modulus);
}

GroupPtr FiniteGroup::permutation(std::uint32_t degree, std::vector<Perm> generators) {
  return std::make_shared<PermutationGroup>(degree, generators);
}

GroupPtr cyclic_semidirect(std::uint32_t m, std::uint32_t n, std::uint32_t r) {
  if (m == 0 || n == 0) throw Error(ErrorKind::InvalidGroup, "empty cyclic factor");
  std::vector<std::uint64_t> rpow(n + 1, 1);
  for (std::uint32_t j = 1; j <= n; ++j) rpow[j] = (rpow[j - 1] * r) % m;
  if (rpow[n] % m != 1 % m) {
    throw Error(ErrorKind::InvalidGroup, "r^n must be 1 mod m for C_m x| C_n");
  }
  const std::size_t order = std::size_t{m} * n;
  std::vector<std::uint32_t> flat(order * order);
  for (std::uint32_t j = 0; j < n; ++j)
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t l = 0; l < n; ++l)
        for (std::uint32_t k = 0; k < m; ++k) {
          // a^i b^j a^k b^l = a^{i + k r^j} b^{j+l}
          const auto ni = static_cast<std::uint32_t>((i + k * rpow[j]) % m);
          const std::uint32_t nj = (j + l) % n;
          flat[(i + std::size_t{m} * j) * order + (k + std::size_t{m} * l)] = ni + m * nj;
        }
  std::string name = n == 1 ? "C" + std::to_string(m)
                            : "C" + std::to_string(m) + "xC" + std::to_string(n) + "[r=" +
                                  std::to_string(r) + "]";
  return cayley_unchecked(std::move(flat), order, std::move(name));
}

GroupPtr cyclic_group(std::uint32_t n) { return cyclic_semidirect(n, 1, 1 % std::max(n, 1U)); }

std::vector<std::uint32_t> materialize_table(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<std::uint32_t> flat(n * n);
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h) flat[std::size_t{g} * n + h] = group.mul_nc(Elem{g}, Elem{h}).index;
  return flat;
}

GroupPtr direct_product(const GroupPtr& left, const GroupPtr& right) {
  const std::size_t l = left->order(), r = right->order(), n = l * r;
  if (n > 4096) throw Error(ErrorKind::BoundExceeded, "direct product too large for a Cayley table");
  std::vector<std::uint32_t> flat(n * n);
  for (std::uint32_t a = 0; a < l; ++a)
    for (std::uint32_t b = 0; b < r; ++b)
      for (std::uint32_t c = 0; c < l; ++c)
        for (std::uint32_t d = 0; d < r; ++d) {
          const auto x = left->mul_nc(Elem{a}, Elem{c}).index;
          const auto y = right->mul_nc(Elem{b}, Elem{d}).index;
          flat[(a * r + b) * n + (c * r + d)] = static_cast<std::uint32_t>(x * r + y);
        }
  return cayley_unchecked(std::move(flat), n, left->name() + "x" + right->name());
}

Conjugation::Conjugation(GroupPtr group, Elem g)
    : group_(std::move(group)), g_(g), g_inv_(group_->inv(g)) {}

Elem Conjugation::operator()(Elem x) const {
  return group_->mul_nc(group_->mul(g_, x), g_inv_);
}

Conjugation conjugation_iota(const GroupPtr& group, Elem g) { return Conjugation(group, g); }

// ---------------------------------------------------------------------------
// Subgroups

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> generators) : parent_(std::move(parent)) {
  mask_.assign(parent_->order(), false);
  mask_[0] = true;
  members_ = {parent_->identity()};
  for (const Elem g : generators) add_generator(g);
  std::sort(members_.begin(), members_.end());
}

void Subgroup::add_generator(Elem g) {
  parent_->inv(g);  // membership check
  if (mask_[g.index]) return;
  generators_.push_back(g);
  std::deque<Elem> queue(members_.begin(), members_.end());
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (const Elem s : generators_) {
      const Elem y = parent_->mul_nc(x, s);
      if (!mask_[y.index]) {
        mask_[y.index] = true;
        members_.push_back(y);
        queue.push_back(y);
      }
    }
  }
}

Subgroup Subgroup::from_members(GroupPtr parent, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup s(std::move(parent), members);
  if (s.members_ != members) {
    throw Error(ErrorKind::InvalidGroup, "member list is not closed under multiplication");
  }
  return s;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Elem g) { return other.contains(g); });
}

std::uint64_t Subgroup::exponent() const {
  std::uint64_t e = 1;
  for (const Elem g : members_) e = std::lcm(e, parent_->element_order(g));
  return e;
}

Subgroup trivial_subgroup(const GroupPtr& group) { return Subgroup(group, {}); }

Subgroup whole_group(const GroupPtr& group) { return Subgroup(group, group->generators()); }

Subgroup normal_closure(const GroupPtr& group, std::vector<Elem> elements) {
  Subgroup h(group, {});
  for (const Elem e : elements) h.add_generator(e);
  for (std::size_t i = 0; i < h.generators_.size(); ++i) {
    for (const Elem s : group->generators()) {
      const Elem c = group->mul_nc(group->mul_nc(s, h.generators_[i]), group->inv_nc(s));
      if (!h.contains(c)) h.add_generator(c);
    }
  }
  std::sort(h.members_.begin(), h.members_.end());
  return h;
}

Subgroup centre(const GroupPtr& group) {
  std::vector<Elem> members;
  for (std::uint32_t z = 0; z < group->order(); ++z) {
    const Elem e{z};
    const bool central = std::all_of(group->generators().begin(), group->generators().end(),
                                     [&](Elem s) { return group->mul_nc(e, s) == group->mul_nc(s, e); });
    if (central) members.push_back(e);
  }
  return Subgroup::from_members(group, std::move(members));
}

Subgroup derived_subgroup(const GroupPtr& group) {
  std::vector<Elem> comms;
  const auto& gens = group->generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(group->commutator_nc(gens[i], gens[j]));
  return normal_closure(group, std::move(comms));
}

Subgroup commutator_with_group(const Subgroup& h) {
  const auto& group = h.parent();
  std::vector<Elem> comms;
  for (const Elem x : h.generators())
    for (const Elem s : group->generators()) comms.push_back(group->commutator_nc(x, s));
  return normal_closure(group, std::move(comms));
}

std::vector<Subgroup> lower_central_series(const GroupPtr& group) {
  std::vector<Subgroup> series{whole_group(group)};
  while (true) {
    Subgroup next = commutator_with_group(series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> upper_central_series(const GroupPtr& group) {
  std::vector<Subgroup> series{trivial_subgroup(group)};
  while (true) {
    const Subgroup& prev = series.back();
    std::vector<Elem> members;
    for (std::uint32_t z = 0; z < group->order(); ++z) {
      const Elem e{z};
      const bool ok = std::all_of(group->generators().begin(), group->generators().end(),
                                  [&](Elem s) { return prev.contains(group->commutator_nc(e, s)); });
      if (ok) members.push_back(e);
    }
    Subgroup next = Subgroup::from_members(group, std::move(members));
    if (next == prev) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<int> nilpotency_class(const GroupPtr& group) {
  const auto series = lower_central_series(group);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

bool is_nilpotent_of_class_two(const GroupPtr& group) {
  const auto c = nilpotency_class(group);
  return c.has_value() && *c <= 2;
}

bool is_abelian(const GroupPtr& group) {
  const auto& gens = group->generators();
  for (const Elem s : gens)
    for (const Elem t : gens)
      if (group->mul_nc(s, t) != group->mul_nc(t, s)) return false;
  return true;
}

}  // namespace braceblock
