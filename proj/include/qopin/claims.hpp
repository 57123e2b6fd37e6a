#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qopin/augment.hpp"
#include "qopin/endo.hpp"
#include "qopin/pinning.hpp"
#include "qopin/relation.hpp"

namespace qopin {

struct Instance {
  Relation relation;
  EndoFamily upsilon;
  EndoFamily theta;
  std::string provenance;
};

struct ClaimResult {
  std::string id;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;   // instances failing the claim's hypotheses
  std::uint64_t violations = 0;
  std::vector<std::string> violation_notes;  // at most three, for reports
  bool witness_found = false;  // counterexample searches only
  std::string witness;
};

struct RunLimits {
  int max_n = 3;                // 4 adds the sampled and lattice layers
  std::uint64_t seed = 1;
  std::uint64_t budget = 2000;  // sampled instances per claim when max_n >= 4
};

// All 2^(n*n) relations in increasing bit-pattern order.
std::vector<Relation> enumerate_relations(int n);
std::vector<Relation> enumerate_quasi_orders(int n);

struct BruteMinResult {
  std::optional<Relation> minimum;   // intersection of satisfying supersets
  bool intersection_satisfies = false;
};

// Enumerates every superset of r (optionally quasi orders only), keeps the
// ones satisfying the property, and intersects them.  Properties: the five
// parametric ids plus "transitive".
BruteMinResult brute_min_augmentation(const Relation& r,
                                      std::string_view property,
                                      const EndoFamily& upsilon,
                                      const EndoFamily& theta,
                                      bool quasi_orders_only);

// Registered statements whose conclusions must hold on every instance.
const std::vector<std::string>& claim_ids();
ClaimResult verify_claim(std::string_view claim_id, const RunLimits& limits);
std::vector<ClaimResult> verify_all(const RunLimits& limits);

// Registered non-implications: a pre-registered symbolic witness is
// re-verified, and a finite witness is searched for within the budget.
const std::vector<std::string>& separation_ids();
ClaimResult search_counterexample(std::string_view separation_id,
                                  const RunLimits& limits);
std::vector<ClaimResult> search_all(const RunLimits& limits);

// DOT rendering of the verified implication diagram: solid edges for the
// verified inclusion claims, dashed struck edges for refuted non-arrows.
std::string implication_graph(const std::vector<ClaimResult>& claims,
                              const std::vector<ClaimResult>& separations);

}  // namespace qopin
