#include "qopin/endo.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qopin {

EndoFn::EndoFn(int n, std::span<const std::uint8_t> table) : n_(n) {
  require(n >= 0 && n <= kMaxCarrier, Errc::range_error,
          "carrier size out of range");
  require(static_cast<int>(table.size()) == n, Errc::range_error,
          "table length does not match carrier");
  for (int i = 0; i < n; ++i) {
    require(table[i] < n, Errc::range_error, "table entry out of range");
    tab_[i] = table[i];
  }
}

EndoFn EndoFn::identity(int n) {
  std::array<std::uint8_t, kMaxCarrier> t{};
  for (int i = 0; i < n; ++i) t[i] = static_cast<std::uint8_t>(i);
  return EndoFn(n, {t.data(), static_cast<std::size_t>(n)});
}

EndoFn EndoFn::constant(int n, int value) {
  require(value >= 0 && value < n, Errc::range_error, "value out of range");
  std::array<std::uint8_t, kMaxCarrier> t{};
  for (int i = 0; i < n; ++i) t[i] = static_cast<std::uint8_t>(value);
  return EndoFn(n, {t.data(), static_cast<std::size_t>(n)});
}

bool EndoFn::is_injective() const {
  std::uint32_t seen = 0;
  for (int i = 0; i < n_; ++i) {
    if (seen >> tab_[i] & 1u) return false;
    seen |= 1u << tab_[i];
  }
  return true;
}

bool EndoFn::is_surjective() const {
  std::uint32_t seen = 0;
  for (int i = 0; i < n_; ++i) seen |= 1u << tab_[i];
  return seen == (1u << n_) - 1;
}

EndoFn compose(const EndoFn& f, const EndoFn& g) {
  require(f.carrier() == g.carrier(), Errc::carrier_mismatch,
          "composition across different carriers");
  std::array<std::uint8_t, kMaxCarrier> t{};
  for (int i = 0; i < f.carrier(); ++i)
    t[i] = static_cast<std::uint8_t>(f(g(i)));
  return EndoFn(f.carrier(), {t.data(), static_cast<std::size_t>(f.carrier())});
}

EndoFamily::EndoFamily(int n, std::vector<EndoFn> members)
    : n_(n), members_(std::move(members)) {
  for (const EndoFn& f : members_)
    require(f.carrier() == n_, Errc::carrier_mismatch,
            "family member on a different carrier");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  contains_identity_ = contains(EndoFn::identity(n_));
  closed_ = true;
  for (const EndoFn& f : members_) {
    for (const EndoFn& g : members_)
      if (!contains(compose(f, g))) {
        closed_ = false;
        break;
      }
    if (!closed_) break;
  }
}

bool EndoFamily::contains(const EndoFn& f) const {
  return std::binary_search(members_.begin(), members_.end(), f);
}

EndoFamily endomorphisms(const Relation& r, int guard) {
  const int n = r.size();
  require(n <= guard, Errc::guard_exceeded,
          "carrier exceeds the enumeration guard");
  std::vector<EndoFn> found;
  std::array<std::uint8_t, kMaxCarrier> t{};
  // odometer over all n^n tables
  while (true) {
    if (is_homomorphism({t.data(), static_cast<std::size_t>(n)}, r, r))
      found.emplace_back(n, std::span<const std::uint8_t>{
                                t.data(), static_cast<std::size_t>(n)});
    int i = 0;
    while (i < n && t[i] == n - 1) t[i++] = 0;
    if (i == n) break;
    ++t[i];
  }
  return EndoFamily(n, std::move(found));
}

EndoFamily close_under_composition(const EndoFamily& generators,
                                   bool include_identity, std::size_t cap) {
  const int n = generators.carrier();
  std::set<EndoFn> closure(generators.members().begin(),
                           generators.members().end());
  if (include_identity) closure.insert(EndoFn::identity(n));
  require(closure.size() <= cap, Errc::guard_exceeded,
          "composition closure exceeds cap");
  std::vector<EndoFn> worklist(closure.begin(), closure.end());
  while (!worklist.empty()) {
    EndoFn f = worklist.back();
    worklist.pop_back();
    std::vector<EndoFn> snapshot(closure.begin(), closure.end());
    for (const EndoFn& g : snapshot) {
      for (const EndoFn& h : {compose(f, g), compose(g, f)}) {
        if (closure.insert(h).second) {
          require(closure.size() <= cap, Errc::guard_exceeded,
                  "composition closure exceeds cap");
          worklist.push_back(h);
        }
      }
    }
  }
  return EndoFamily(n, std::vector<EndoFn>(closure.begin(), closure.end()));
}

bool is_endofamily_of(const EndoFamily& family, const Relation& r) {
  require(family.carrier() == r.size() || family.empty(),
          Errc::carrier_mismatch, "family carrier does not match relation");
  for (const EndoFn& f : family.members())
    if (!is_homomorphism(f.table(), r, r)) return false;
  return true;
}

SideCondition parse_side_condition(std::string_view id) {
  if (id == "pi-lambda-in-lambda" || id == "Π∘Λ⊆Λ")
    return SideCondition::pi_lambda_in_lambda;
  if (id == "lambda-pi-in-lambda" || id == "Λ∘Π⊆Λ")
    return SideCondition::lambda_pi_in_lambda;
  if (id == "pi-lambda-pi-eq-lambda" || id == "Π∘Λ∘Π=Λ")
    return SideCondition::pi_lambda_pi_eq_lambda;
  if (id == "pi-sigma-in-pi" || id == "Θ∘σ⊆Θ for some σ∈Υ")
    return SideCondition::pi_sigma_in_pi;
  if (id == "sigma-pi-in-pi" || id == "σ∘Θ⊆Θ for some σ∈Υ")
    return SideCondition::sigma_pi_in_pi;
  if (id == "pi-sigma-in-lambda" || id == "Π∘σ⊆Λ for some σ∈Λ")
    return SideCondition::pi_sigma_in_lambda;
  fail(Errc::unknown_id, "unknown side condition id: " + std::string(id));
}

namespace {

std::string describe(const EndoFn& f) {
  std::ostringstream os;
  os << "f:";
  for (int i = 0; i < f.carrier(); ++i) os << ' ' << f(i);
  return os.str();
}

}  // namespace

SideConditionResult check_side_condition(SideCondition cond,
                                         const EndoFamily& lambda,
                                         const EndoFamily& pi) {
  require(lambda.carrier() == pi.carrier() || lambda.empty() || pi.empty(),
          Errc::carrier_mismatch, "families on different carriers");
  auto violation = [](const EndoFn& f) {
    return SideConditionResult{false, "composition escapes: " + describe(f)};
  };
  switch (cond) {
    case SideCondition::pi_lambda_in_lambda:
      for (const EndoFn& p : pi.members())
        for (const EndoFn& l : lambda.members())
          if (!lambda.contains(compose(p, l))) return violation(compose(p, l));
      return {true, {}};
    case SideCondition::lambda_pi_in_lambda:
      for (const EndoFn& l : lambda.members())
        for (const EndoFn& p : pi.members())
          if (!lambda.contains(compose(l, p))) return violation(compose(l, p));
      return {true, {}};
    case SideCondition::pi_lambda_pi_eq_lambda: {
      std::set<EndoFn> produced;
      for (const EndoFn& p1 : pi.members())
        for (const EndoFn& l : lambda.members())
          for (const EndoFn& p2 : pi.members()) {
            EndoFn h = compose(p1, compose(l, p2));
            if (!lambda.contains(h)) return violation(h);
            produced.insert(h);
          }
      for (const EndoFn& l : lambda.members())
        if (!produced.count(l))
          return {false, "member not produced: " + describe(l)};
      return {true, {}};
    }
    case SideCondition::pi_sigma_in_pi:
    case SideCondition::sigma_pi_in_pi:
    case SideCondition::pi_sigma_in_lambda: {
      for (const EndoFn& sigma : lambda.members()) {
        bool ok = true;
        for (const EndoFn& p : pi.members()) {
          EndoFn h = cond == SideCondition::sigma_pi_in_pi ? compose(sigma, p)
                                                           : compose(p, sigma);
          const EndoFamily& target =
              cond == SideCondition::pi_sigma_in_lambda ? lambda : pi;
          if (!target.contains(h)) {
            ok = false;
            break;
          }
        }
        if (ok) return {true, {}};
      }
      return {false, "no absorbing sigma exists"};
    }
  }
  fail(Errc::unknown_id, "unhandled side condition");
}

}  // namespace qopin
