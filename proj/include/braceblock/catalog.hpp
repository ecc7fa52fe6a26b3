#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braceblock/brace.hpp"
#include "braceblock/group.hpp"
#include "braceblock/operation.hpp"
#include "braceblock/quotient.hpp"
#include "braceblock/verify_options.hpp"
#include "braceblock/yang_baxter.hpp"

namespace braceblock {

enum class ExpectationKind {
  GroupLaws,       // every operation is a group law
  BraceBlock,      // every pair of operations is a bi-skew brace
  DistinctCount,   // exactly `count` distinct tables
  EqualsDot,       // the listed operations equal "."
  DiffersFromDot,  // the listed operations differ from "."
  Comparisons,     // every listed pair of operations (and endomorphisms) agrees
};

std::string to_string(ExpectationKind kind);

struct Expectation {
  ExpectationKind kind;
  std::string description;
  std::size_t count = 0;
  std::vector<std::size_t> indices;
};

struct OperationComparison {
  std::string label;
  GroupOperation left;
  GroupOperation right;
};

struct EndoComparison {
  std::string label;
  QuotientEndo left;
  QuotientEndo right;
};

struct CatalogEntry {
  std::string name;
  GroupPtr group;
  PairPtr pair;
  std::vector<std::string> labels;
  std::vector<GroupOperation> operations;
  std::vector<OperationComparison> comparisons;
  std::vector<EndoComparison> endo_comparisons;
  std::vector<Expectation> expectations;
};

struct ExpectationResult {
  Expectation expectation;
  bool passed = false;
  std::string detail;
  std::uint64_t triples_checked = 0;
};

/// Runs every expectation of the entry through the verification modules.
std::vector<ExpectationResult> check_entry(const CatalogEntry& entry, const VerifyOptions& options = {});

/// Number of distinct tables among the operations.
std::size_t distinct_operations(const std::vector<GroupOperation>& ops);

/// (a,b,c) -> (xa, xb, x^2 c) as a full endomorphism of Heisenberg(Z/n).
std::vector<Elem> heisenberg_scaling(const GroupPtr& heisenberg, std::int64_t x);
/// Its induced endomorphism of G/[G,G] for the class-two pair of the group.
QuotientEndo heisenberg_psi(const PairPtr& pair, std::int64_t x);

/// The operations o_x, x in Z/n, on Heisenberg(Z/n) with trivial bilinear map.
CatalogEntry heisenberg_block(std::uint32_t modulus);

/// g o_n h = g h [g,h]^n for n = 0 .. exponent([G,G]) - 1. Errors: NotClassTwo.
CatalogEntry class_two_power_block(const GroupPtr& group);
/// Only the listed exponents; periodicity is still asserted.
CatalogEntry class_two_power_block(const GroupPtr& group, const std::vector<long long>& exponents);

/// One operation g h^... per endomorphism of a class-two group, each used
/// directly as a lifting. Errors: NotClassTwo, NotAnEndomorphism.
CatalogEntry endo_block_class_two(const GroupPtr& group, const std::vector<std::vector<Elem>>& endomorphisms);

/// All endomorphisms of G, by generator images. BoundExceeded above order 64.
std::vector<std::vector<Elem>> enumerate_endomorphisms(const GroupPtr& group);

/// Iterates the constant sequences -psi and psi for `steps` steps with K = 1
/// and asserts the binomial closed forms. Errors: NotAnEndomorphism, ImageNotAbelian.
CatalogEntry koch_block(const GroupPtr& group, const std::vector<Elem>& endomorphism, std::size_t steps);

/// S3 with the sign projection onto <(0 1)>.
CatalogEntry koch_s3(std::size_t steps);
/// C9 x| C3 with the projection onto the C3 factor.
CatalogEntry koch_c9_c3(std::size_t steps);

/// For m = 0 .. max_power: whether o_{p^m} equals "." on Heisenberg(Z/p^k).
std::vector<bool> heisenberg_convergence(std::uint32_t p, std::uint32_t k, std::uint32_t max_power);

/// Names accepted by the command-line catalog listing.
std::vector<std::pair<std::string, std::string>> catalog_listing();

}  // namespace braceblock
