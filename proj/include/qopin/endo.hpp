#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qopin/relation.hpp"

namespace qopin {

// A total self-map of {0..n-1} given by its value table.
class EndoFn {
 public:
  EndoFn() = default;
  EndoFn(int n, std::span<const std::uint8_t> table);

  static EndoFn identity(int n);
  static EndoFn constant(int n, int value);

  int carrier() const { return n_; }
  int operator()(int x) const { return tab_[x]; }
  std::span<const std::uint8_t> table() const { return {tab_.data(), static_cast<std::size_t>(n_)}; }

  bool is_injective() const;
  bool is_surjective() const;

  auto operator<=>(const EndoFn&) const = default;

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxCarrier> tab_{};
};

// f after g: (f . g)(x) = f(g(x)).
EndoFn compose(const EndoFn& f, const EndoFn& g);

// A finite set of endofunctions on a shared carrier, deduplicated and kept
// in lexicographic table order.  The closure flags are computed once.
class EndoFamily {
 public:
  EndoFamily() = default;
  EndoFamily(int n, std::vector<EndoFn> members);

  int carrier() const { return n_; }
  const std::vector<EndoFn>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  bool contains(const EndoFn& f) const;

  bool contains_identity() const { return contains_identity_; }
  bool closed_under_composition() const { return closed_; }
  bool is_subsemigroup() const { return closed_; }
  bool is_submonoid() const { return closed_ && contains_identity_; }

  bool operator==(const EndoFamily&) const = default;

 private:
  int n_ = 0;
  std::vector<EndoFn> members_;
  bool contains_identity_ = false;
  bool closed_ = false;
};

// All order preserving self-maps of r, by n^n enumeration.
EndoFamily endomorphisms(const Relation& r, int guard = 5);

EndoFamily close_under_composition(const EndoFamily& generators,
                                   bool include_identity,
                                   std::size_t cap = 10000);

bool is_endofamily_of(const EndoFamily& family, const Relation& r);

// Algebraic side conditions hypothesized by the verified statements.  The
// first family fills the Lambda/Upsilon slot and the second the Pi/Theta
// slot of the condition's name.
enum class SideCondition {
  pi_lambda_in_lambda,     // composing on the left by Pi stays in Lambda
  lambda_pi_in_lambda,     // composing on the right by Pi stays in Lambda
  pi_lambda_pi_eq_lambda,  // Pi . Lambda . Pi equals Lambda
  pi_sigma_in_pi,          // some sigma in Lambda has Pi . sigma inside Pi
  sigma_pi_in_pi,          // some sigma in Lambda has sigma . Pi inside Pi
  pi_sigma_in_lambda,      // some sigma in Lambda has Pi . sigma inside Lambda
};

SideCondition parse_side_condition(std::string_view id);

struct SideConditionResult {
  bool holds = false;
  std::string witness;  // violating composition when the condition fails
};

SideConditionResult check_side_condition(SideCondition cond,
                                         const EndoFamily& lambda,
                                         const EndoFamily& pi);

}  // namespace qopin
