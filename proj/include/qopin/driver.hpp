#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qopin/claims.hpp"

namespace qopin {

struct RunConfig {
  int max_n = 3;
  std::uint64_t seed = 1;
  std::uint64_t budget = 2000;
};

struct VerifyOutcome {
  std::string report;
  std::uint64_t violations = 0;
};

// Runs every registered claim and renders the line-oriented report.
VerifyOutcome run_verify(const RunConfig& config);

struct SearchOutcome {
  std::string report;
  int symbolic_failures = 0;
  int finite_found = 0;
};

SearchOutcome run_search(const RunConfig& config);

// Verifies the inclusion claims and refutations the diagram depends on,
// then renders it.
std::string figure1_dot(const RunConfig& config);

const std::vector<std::string>& baire_demo_ids();
std::string baire_demo(std::string_view id);

}  // namespace qopin
