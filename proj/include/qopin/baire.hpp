#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "qopin/error.hpp"
#include "qopin/rng.hpp"

namespace qopin {

class UPSet;

// Eventually periodic sequence of naturals: value(i) is prefix[i] for
// i < |prefix|, after which the period repeats forever.  Held in normal
// form (minimal period, then minimal prefix), so equal values mean equal
// representations.
class UPSeq {
 public:
  UPSeq() : period_{0} {}
  UPSeq(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> period);

  static UPSeq constant(std::uint64_t v);
  static UPSeq zero() { return UPSeq(); }
  static UPSeq characteristic(const UPSet& s);

  std::uint64_t value(std::uint64_t i) const;
  const std::vector<std::uint64_t>& prefix() const { return prefix_; }
  const std::vector<std::uint64_t>& period() const { return period_; }

  bool operator==(const UPSeq&) const = default;

 private:
  void normalize();

  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> period_;
};

// Eventually periodic subset of the naturals, as a characteristic
// prefix/period mask pair in the same normal form as UPSeq.
class UPSet {
 public:
  UPSet() : period_{0} {}
  UPSet(std::vector<std::uint8_t> prefix_mask,
        std::vector<std::uint8_t> period_mask);

  static UPSet empty_set() { return UPSet(); }
  static UPSet naturals() { return UPSet({}, {1}); }
  static UPSet evens() { return UPSet({}, {1, 0}); }
  static UPSet odds() { return UPSet({}, {0, 1}); }
  static UPSet singleton(std::uint64_t i);

  bool contains(std::uint64_t i) const;
  bool is_infinite() const;
  bool is_empty() const;
  const std::vector<std::uint8_t>& prefix_mask() const { return prefix_; }
  const std::vector<std::uint8_t>& period_mask() const { return period_; }

  bool operator==(const UPSet&) const = default;

 private:
  void normalize();

  std::vector<std::uint8_t> prefix_;
  std::vector<std::uint8_t> period_;
};

bool subset_of(const UPSet& a, const UPSet& b);
// a \ b finite
bool subset_star(const UPSet& a, const UPSet& b);

struct CompareFlags {
  bool eq = false;       // equal sequences
  bool le = false;       // pointwise everywhere
  bool lt = false;       // le and not ge
  bool ge = false;
  bool gt = false;
  bool le_star = false;  // pointwise with finitely many exceptions
  bool lt_star = false;  // le_star and not ge_star
  bool ge_star = false;
  bool gt_star = false;
  bool eq_star = false;  // equal with finitely many exceptions
  bool ll_star = false;  // strictly below with finitely many exceptions
  bool gg_star = false;
};

// Total decision procedure: the prefix region plus one common period of
// both tails settles every flag.
CompareFlags compare(const UPSeq& x, const UPSeq& y);

UPSet where_gt(const UPSeq& x, const UPSeq& y);
UPSet support(const UPSeq& x);

// Injection of the naturals into themselves that is block-affine past a
// finite exceptional prefix:
//   apply(k) = exceptions[k]                 for k < N
//   apply(N + q*m + i) = offsets[i] + q*d    for q >= 0, i < m.
// Injectivity is checked on construction.
class BAInj {
 public:
  BAInj() : m_(1), d_(1), offsets_{0} {}
  BAInj(std::vector<std::uint64_t> exceptions, std::uint64_t block_len,
        std::uint64_t stride, std::vector<std::uint64_t> offsets);

  static BAInj identity() { return BAInj(); }
  static BAInj shift(std::uint64_t c) { return BAInj({}, 1, 1, {c}); }
  // k -> a*k + b with a >= 1
  static BAInj affine(std::uint64_t a, std::uint64_t b) {
    return BAInj({}, 1, a, {b});
  }

  std::uint64_t apply(std::uint64_t k) const;
  const std::vector<std::uint64_t>& exceptions() const { return exceptions_; }
  std::uint64_t block_len() const { return m_; }
  std::uint64_t stride() const { return d_; }
  const std::vector<std::uint64_t>& offsets() const { return offsets_; }

  // Value equality (decided from the slopes plus a finite window).
  bool operator==(const BAInj& other) const;

 private:
  void validate() const;
  void normalize();

  std::vector<std::uint64_t> exceptions_;
  std::uint64_t m_ = 1;
  std::uint64_t d_ = 1;
  std::vector<std::uint64_t> offsets_{0};
};

// Increasing enumeration of an infinite eventually periodic set.
BAInj enum_injection(const UPSet& a);

// g after h: compose(g, h).apply(k) = g.apply(h.apply(k)).
BAInj compose(const BAInj& g, const BAInj& h);

// x composed with h; projections are contravariant in h.
UPSeq project(const BAInj& h, const UPSeq& x);

UPSeq even_part(const UPSeq& x);
UPSeq odd_part(const UPSeq& x);
UPSeq interleave(const UPSeq& evens, const UPSeq& odds);

// Endomorphism acting separately on even and odd coordinates: the even
// coordinates carry a projection with even range, the odd coordinates are
// permuted by a finite-support permutation of the odd numbers.
struct Pi0Endo {
  BAInj even_map;  // range inside the evens
  std::vector<std::pair<std::uint64_t, std::uint64_t>> odd_swaps;  // odd -> odd

  std::uint64_t odd_image(std::uint64_t i) const;
};

// Either the identity or a projection whose range lies inside the evens.
struct Pi1Endo {
  bool is_identity = true;
  BAInj map;
};

UPSeq apply_pi0(const Pi0Endo& e, const UPSeq& x);
UPSeq apply_pi1(const Pi1Endo& e, const UPSeq& x);

// Closed forms of the parametric augmentations on this fragment.
bool closed_form(std::string_view form_id, const UPSeq& x, const UPSeq& y);

// For x nleq-star y: the enumeration of the coordinates where x exceeds y;
// composed with any further projection it keeps x strictly above y.
BAInj pin_witness_nleq_star(const UPSeq& x, const UPSeq& y);

// For x le-star y: a shift g with x.f.g pointwise below y.f.g; the shift
// clears every anomaly of x.f against y.f and the inequality is checked
// before returning.
BAInj correct_witness_tau(const UPSeq& x, const UPSeq& y, const BAInj& f);

UPSeq meet(const UPSeq& x, const UPSeq& y);
UPSeq join(const UPSeq& x, const UPSeq& y);

// For x le-star y: the middle element of the two-step decomposition; both
// strictive hops are checked against the closed form before returning.
UPSeq two_step_witness(const UPSeq& x, const UPSeq& y);

std::vector<BAInj> sample_proj(std::uint64_t seed, std::size_t count);
std::vector<Pi0Endo> sample_pi0(std::uint64_t seed, std::size_t count);
std::vector<Pi1Endo> sample_pi1(std::uint64_t seed, std::size_t count);

UPSeq sample_upseq(SplitMix64& rng);
// Mix of correlated and independent pairs so both eventual-dominance
// outcomes show up with useful frequency.
std::pair<UPSeq, UPSeq> sample_upseq_pair(SplitMix64& rng);

}  // namespace qopin
