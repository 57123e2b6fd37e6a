#include "qopin/pinning.hpp"

namespace qopin {

bool holds(Ineq ineq, const Relation& r, int p, int q) {
  switch (ineq) {
    case Ineq::le: return r.le(p, q);
    case Ineq::ge: return r.le(q, p);
    case Ineq::lt: return r.lt(p, q);
    case Ineq::nleq: return r.nleq(p, q);
    case Ineq::nless: return r.nless(p, q);
  }
  return false;
}

bool pins(const EndoFn& sigma, Ineq ineq, int p, int q, const EndoFamily& theta,
          const Relation& r) {
  for (const EndoFn& tau : theta.members())
    if (!holds(ineq, r, tau(sigma(p)), tau(sigma(q)))) return false;
  return true;
}

PropertyVerdict family_pins(const EndoFamily& upsilon, Ineq ineq,
                            const EndoFamily& theta, const Relation& r) {
  PropertyVerdict verdict;
  verdict.holds = true;
  for (int p = 0; p < r.size(); ++p)
    for (int q = 0; q < r.size(); ++q) {
      if (!holds(ineq, r, p, q)) continue;
      bool pinned = false;
      for (std::size_t i = 0; i < upsilon.size() && !pinned; ++i)
        if (pins(upsilon.members()[i], ineq, p, q, theta, r)) {
          verdict.witnesses.push_back({p, q, 's', static_cast<int>(i)});
          pinned = true;
        }
      if (!pinned) return {false, {}, std::make_pair(p, q)};
    }
  return verdict;
}

PropertyVerdict family_pins(const PinQuery& query) {
  return family_pins(query.upsilon, query.ineq, query.theta, query.base);
}

PropertyId parse_property_id(std::string_view id) {
  if (id == "linear") return PropertyId::linear;
  if (id == "strict-linear") return PropertyId::strict_linear;
  if (id == "strict") return PropertyId::strict;
  if (id == "correct") return PropertyId::correct;
  if (id == "neg-strict") return PropertyId::neg_strict;
  fail(Errc::unknown_id, "unknown property id: " + std::string(id));
}

std::string_view property_id_name(PropertyId id) {
  switch (id) {
    case PropertyId::linear: return "linear";
    case PropertyId::strict_linear: return "strict-linear";
    case PropertyId::strict: return "strict";
    case PropertyId::correct: return "correct";
    case PropertyId::neg_strict: return "neg-strict";
  }
  return "?";
}

namespace {

PropertyVerdict check_linearity(const Relation& r, const EndoFamily& upsilon,
                                const EndoFamily& theta, bool strict_tau) {
  PropertyVerdict verdict;
  verdict.holds = true;
  for (int p = 0; p < r.size(); ++p)
    for (int q = 0; q < r.size(); ++q) {
      bool done = false;
      for (std::size_t i = 0; i < upsilon.size() && !done; ++i) {
        const EndoFn& s = upsilon.members()[i];
        if (r.le(s(p), s(q))) {
          verdict.witnesses.push_back({p, q, 's', static_cast<int>(i)});
          done = true;
        }
      }
      for (std::size_t i = 0; i < theta.size() && !done; ++i) {
        const EndoFn& t = theta.members()[i];
        bool ok = strict_tau ? r.lt(t(q), t(p)) : r.le(t(q), t(p));
        if (ok) {
          verdict.witnesses.push_back({p, q, 't', static_cast<int>(i)});
          done = true;
        }
      }
      if (!done) return {false, {}, std::make_pair(p, q)};
    }
  return verdict;
}

}  // namespace

PropertyVerdict check_property(PropertyId id, const Relation& r,
                               const EndoFamily& upsilon,
                               const EndoFamily& theta) {
  switch (id) {
    case PropertyId::linear:
      return check_linearity(r, upsilon, theta, /*strict_tau=*/false);
    case PropertyId::strict_linear:
      return check_linearity(r, upsilon, theta, /*strict_tau=*/true);
    case PropertyId::strict: {
      PropertyVerdict v = family_pins(upsilon, Ineq::lt, theta, r);
      if (is_endofamily_of(upsilon, r) && is_endofamily_of(theta, r)) {
        // Equivalent formulation for endomorphic parameters: pin the failure
        // of the reversed inequality instead of the strict inequality.
        bool alt = true;
        for (int p = 0; p < r.size() && alt; ++p)
          for (int q = 0; q < r.size() && alt; ++q) {
            if (!r.lt(p, q)) continue;
            bool pinned = false;
            for (const EndoFn& s : upsilon.members()) {
              bool all = true;
              for (const EndoFn& t : theta.members())
                if (r.le(t(s(q)), t(s(p)))) {
                  all = false;
                  break;
                }
              if (all) {
                pinned = true;
                break;
              }
            }
            if (!pinned) alt = false;
          }
        require(alt == v.holds, Errc::precondition,
                "strictness reformulation disagrees with the definition");
      }
      return v;
    }
    case PropertyId::correct:
      return family_pins(upsilon, Ineq::nleq, theta, r);
    case PropertyId::neg_strict: {
      PropertyVerdict v = family_pins(upsilon, Ineq::nless, theta, r);
      if (!upsilon.empty() && is_endofamily_of(upsilon, r) &&
          is_endofamily_of(theta, r)) {
        // Equivalent formulation: it suffices to pin the pairs with p nleq q.
        bool alt = true;
        for (int p = 0; p < r.size() && alt; ++p)
          for (int q = 0; q < r.size() && alt; ++q) {
            if (r.le(p, q)) continue;
            bool pinned = false;
            for (const EndoFn& s : upsilon.members())
              if (pins(s, Ineq::nless, p, q, theta, r)) {
                pinned = true;
                break;
              }
            if (!pinned) alt = false;
          }
        require(alt == v.holds, Errc::precondition,
                "negative strictness reformulation disagrees");
      }
      return v;
    }
  }
  fail(Errc::unknown_id, "unhandled property id");
}

}  // namespace qopin
