#pragma once

#include <array>
#include <cstdint>

#include "qopin/endo.hpp"
#include "qopin/relation.hpp"

namespace qopin {

// Infimum and supremum sets per pair, as carrier bitmasks.
struct MeetJoinTable {
  int n = 0;
  std::array<std::uint8_t, kMaxCarrier * kMaxCarrier> meet{};
  std::array<std::uint8_t, kMaxCarrier * kMaxCarrier> join{};

  std::uint8_t meet_set(int p, int q) const { return meet[p * n + q]; }
  std::uint8_t join_set(int p, int q) const { return join[p * n + q]; }
  bool all_nonempty() const;
};

// Infimums are lower bounds above every lower bound; dually for supremums.
// Quasi orders only.
MeetJoinTable meet_join(const Relation& r);

// All pairs have nonempty infimum and supremum sets; additionally
// cross-checked against the antisymmetric quotient being a lattice.
bool is_quasi_lattice(const Relation& r);

// f carries members of infimum/supremum sets into infimum/supremum sets of
// the images; implies order preservation.  Quasi lattices only.
bool is_ql_endomorphism(const Relation& r, const EndoFn& f);

EndoFamily ql_endomorphisms(const Relation& r, int guard = 5);

// Middle element of the corrective pair (p, q): r in the infimum set with
// p strictive-related to r and r strictive-related to q, both verified
// against the strictive augmentation.  Picks the least such r.
int two_step_decompose(const Relation& r, const EndoFamily& lambda,
                       const EndoFamily& pi, int p, int q);

}  // namespace qopin
