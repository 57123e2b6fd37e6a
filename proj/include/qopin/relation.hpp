#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qopin/error.hpp"

namespace qopin {

inline constexpr int kMaxCarrier = 8;

struct PropertyReport {
  bool reflexive = false;
  bool transitive = false;
  bool antisymmetric = false;
  bool linear = false;
  bool complete = false;

  bool is_quasi_order() const { return reflexive && transitive; }
  bool is_poset() const { return is_quasi_order() && antisymmetric; }

  bool operator==(const PropertyReport&) const = default;
};

// A relation on the carrier {0..n-1}, stored as an n x n boolean
// adjacency matrix packed into one 64-bit word: bit p*n+q holds p <= q.
// Values are immutable; the classification flags are computed once at
// construction and cached.
class Relation {
 public:
  Relation() = default;

  static Relation from_bits(int n, std::uint64_t bits);
  static Relation from_pairs(int n, std::span<const std::pair<int, int>> pairs,
                             bool reflexive_closure);
  static Relation diagonal(int n);
  static Relation complete(int n);
  static Relation empty_relation(int n);

  static std::uint64_t full_mask(int n) {
    return n * n == 64 ? ~0ull : (1ull << (n * n)) - 1;
  }

  int size() const { return n_; }
  std::uint64_t bits() const { return bits_; }

  bool le(int p, int q) const { return bits_ >> (p * n_ + q) & 1u; }
  bool nleq(int p, int q) const { return !le(p, q); }
  bool lt(int p, int q) const { return le(p, q) && !le(q, p); }
  bool nless(int p, int q) const { return !lt(p, q); }
  bool equiv(int p, int q) const { return le(p, q) && le(q, p); }

  const PropertyReport& props() const { return props_; }
  bool is_quasi_order() const { return props_.is_quasi_order(); }

  // True when this relation is a subset of `other` (same carrier required).
  bool subset_of(const Relation& other) const;

  bool operator==(const Relation& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  Relation(int n, std::uint64_t bits);

  int n_ = 0;
  std::uint64_t bits_ = 0;
  PropertyReport props_;
};

// Fresh scan of the adjacency matrix; Relation caches the same result.
PropertyReport classify(const Relation& r);

Relation strict_part(const Relation& r);
Relation symmetric_part(const Relation& r);

// p and q have a common extension r <= p,q.  Quasi orders only.
bool compatible(const Relation& r, int p, int q);

struct SeparativityResult {
  bool separative = false;
  std::optional<std::pair<int, int>> counterexample;  // failing (p, q)
};

SeparativityResult is_separative(const Relation& r);

struct Quotient {
  std::vector<std::vector<int>> classes;  // partition, sorted by least member
  std::vector<int> class_of;              // carrier -> class index
  Relation relation;                      // relation on the classes
};

Quotient antisymmetric_quotient(const Relation& r);
Quotient separative_quotient(const Relation& r);

// f maps carrier(dom) into carrier(cod); order preserving map check.
bool is_homomorphism(std::span<const std::uint8_t> f, const Relation& dom,
                     const Relation& cod);

}  // namespace qopin
