#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "qopin/endo.hpp"
#include "qopin/relation.hpp"

namespace qopin {

enum class AugKind {
  linear,
  strict_linear,
  strictive,
  strictive_transitive,
  corrective,
  negative_strictive,
};

AugKind parse_aug_kind(std::string_view id);
std::string_view aug_kind_name(AugKind kind);

struct AugSpec {
  AugKind kind = AugKind::corrective;
  EndoFamily upsilon;
  EndoFamily theta;
};

// p related to q exactly when f(p) is below f(q) in cod.
Relation homomorphic_aug(std::span<const std::uint8_t> f, const Relation& cod,
                         int base_carrier);

// Order by inclusion of down-sets cut to the subset (bit i of subset_mask
// selects carrier element i).  Quasi orders only.
Relation restrictive_aug(const Relation& r, std::uint8_t subset_mask);

// Order by inclusion of compatibility sets.  Quasi orders only.
Relation separative_aug(const Relation& r);

// Keep only equality and strictly-below pairs.  Quasi orders only.
Relation antisymmetric_dim(const Relation& r);

// Plain transitive closure (chains of one or more steps).
Relation transitive_aug(const Relation& r);

Relation parametric_aug(const AugSpec& spec, const Relation& r);

}  // namespace qopin
