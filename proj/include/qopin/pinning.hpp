#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qopin/endo.hpp"
#include "qopin/relation.hpp"

namespace qopin {

// Inequalities derived from a base relation that a function can pin.
enum class Ineq { le, ge, lt, nleq, nless };

bool holds(Ineq ineq, const Relation& r, int p, int q);

struct PinQuery {
  Ineq ineq = Ineq::lt;
  Relation base;
  EndoFamily upsilon;
  EndoFamily theta;
};

// sigma pins "p ineq q" when every tau in theta preserves the inequality
// of the composed images.
bool pins(const EndoFn& sigma, Ineq ineq, int p, int q, const EndoFamily& theta,
          const Relation& r);

struct PairWitness {
  int p = 0;
  int q = 0;
  char side = 's';   // 's' = first family member, 't' = second family member
  int fn_index = 0;  // index into the respective family
};

struct PropertyVerdict {
  bool holds = false;
  std::vector<PairWitness> witnesses;                // populated when holds
  std::optional<std::pair<int, int>> refutation;     // populated otherwise
};

// For every (p, q) with p ineq q, find a pinning sigma in upsilon.
PropertyVerdict family_pins(const EndoFamily& upsilon, Ineq ineq,
                            const EndoFamily& theta, const Relation& r);

PropertyVerdict family_pins(const PinQuery& query);

enum class PropertyId { linear, strict_linear, strict, correct, neg_strict };

PropertyId parse_property_id(std::string_view id);
std::string_view property_id_name(PropertyId id);

// Evaluates the defining quantifier string of the property on r with the
// parameter pair (upsilon, theta).  For endomorphic parameters the
// equivalent reformulations of strictness and negative strictness are also
// evaluated and agreement is checked.
PropertyVerdict check_property(PropertyId id, const Relation& r,
                               const EndoFamily& upsilon,
                               const EndoFamily& theta);

}  // namespace qopin
