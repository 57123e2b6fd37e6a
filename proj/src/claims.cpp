#include "qopin/claims.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "qopin/baire.hpp"
#include "qopin/lattice.hpp"
#include "qopin/rng.hpp"
#include "qopin/text.hpp"

namespace qopin {

std::vector<Relation> enumerate_relations(int n) {
  require(n >= 0 && n <= 4, Errc::guard_exceeded,
          "relation enumeration is limited to four points");
  std::vector<Relation> out;
  const std::uint64_t total = 1ull << (n * n);
  out.reserve(total);
  for (std::uint64_t bits = 0; bits < total; ++bits)
    out.push_back(Relation::from_bits(n, bits));
  return out;
}

std::vector<Relation> enumerate_quasi_orders(int n) {
  std::vector<Relation> out;
  for (const Relation& r : enumerate_relations(n))
    if (r.is_quasi_order()) out.push_back(r);
  return out;
}

namespace {

bool property_holds(std::string_view property, const Relation& r,
                    const EndoFamily& u, const EndoFamily& t) {
  if (property == "transitive") return r.props().transitive;
  return check_property(parse_property_id(property), r, u, t).holds;
}

template <typename Visit>
void for_each_superset(const Relation& r, bool quasi_orders_only,
                       Visit visit) {
  const std::uint64_t missing = Relation::full_mask(r.size()) & ~r.bits();
  std::uint64_t sub = missing;
  while (true) {
    Relation candidate = Relation::from_bits(r.size(), r.bits() | sub);
    if (!quasi_orders_only || candidate.is_quasi_order()) visit(candidate);
    if (sub == 0) break;
    sub = (sub - 1) & missing;
  }
}

}  // namespace

BruteMinResult brute_min_augmentation(const Relation& r,
                                      std::string_view property,
                                      const EndoFamily& upsilon,
                                      const EndoFamily& theta,
                                      bool quasi_orders_only) {
  const int missing =
      __builtin_popcountll(Relation::full_mask(r.size()) & ~r.bits());
  require(missing <= 12, Errc::guard_exceeded,
          "too many absent pairs for the superset scan");
  std::optional<std::uint64_t> meet_bits;
  for_each_superset(r, quasi_orders_only, [&](const Relation& candidate) {
    if (!property_holds(property, candidate, upsilon, theta)) return;
    meet_bits = meet_bits ? (*meet_bits & candidate.bits()) : candidate.bits();
  });
  BruteMinResult out;
  if (meet_bits) {
    out.minimum = Relation::from_bits(r.size(), *meet_bits);
    out.intersection_satisfies =
        (!quasi_orders_only || out.minimum->is_quasi_order()) &&
        property_holds(property, *out.minimum, upsilon, theta);
  }
  return out;
}

namespace {

constexpr std::size_t kClosureCap = 40;
constexpr int kMixedPairs = 8;
constexpr int kArbitraryFamilies = 8;
constexpr int kSampledGeneratorPairs = 40;

EndoFamily id_family(int n) { return EndoFamily(n, {EndoFn::identity(n)}); }

std::uint64_t fnv(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ull;
  return h;
}

struct Pools {
  std::vector<EndoFamily> same;               // generated endo families
  std::vector<std::pair<int, int>> mixed;     // index pairs into `same`
  std::vector<EndoFamily> arb;                // arbitrary function families
  std::vector<std::pair<int, int>> arb_mixed;
};

Pools build_pools(const Relation& r, const EndoFamily& base,
                  std::uint64_t seed) {
  Pools pools;
  const int n = r.size();
  std::set<std::vector<EndoFn>> seen;
  auto add = [&](const EndoFamily& f) {
    if (seen.insert(f.members()).second) pools.same.push_back(f);
  };
  auto closure_of = [&](std::vector<EndoFn> gens, bool with_id) {
    try {
      add(close_under_composition(EndoFamily(n, std::move(gens)), with_id,
                                  kClosureCap));
    } catch (const Error&) {
      // oversized closures are simply not part of the pool
    }
  };
  add(EndoFamily(n, {}));
  add(id_family(n));
  const auto& fns = base.members();
  for (const EndoFn& f : fns) {
    closure_of({f}, false);
    closure_of({f}, true);
  }
  SplitMix64 rng(seed);
  if (n <= 3) {
    for (std::size_t i = 0; i < fns.size(); ++i)
      for (std::size_t j = i + 1; j < fns.size(); ++j) {
        closure_of({fns[i], fns[j]}, false);
        closure_of({fns[i], fns[j]}, true);
      }
  } else {
    for (int k = 0; k < kSampledGeneratorPairs && fns.size() >= 2; ++k) {
      const EndoFn& f = fns[rng.below(fns.size())];
      const EndoFn& g = fns[rng.below(fns.size())];
      closure_of({f, g}, rng.coin());
    }
  }
  for (int k = 0; k < kMixedPairs && pools.same.size() >= 2; ++k) {
    int i = static_cast<int>(rng.below(pools.same.size()));
    int j = static_cast<int>(rng.below(pools.same.size()));
    if (i != j) pools.mixed.emplace_back(i, j);
  }

  std::set<std::vector<EndoFn>> arb_seen;
  auto add_arb = [&](const EndoFamily& f) {
    if (arb_seen.insert(f.members()).second) pools.arb.push_back(f);
  };
  add_arb(EndoFamily(n, {}));
  add_arb(id_family(n));
  add_arb(EndoFamily(n, {EndoFn::constant(n, 0)}));
  for (int k = 0; k < kArbitraryFamilies; ++k) {
    std::vector<EndoFn> members;
    const int size = 1 + static_cast<int>(rng.below(3));
    for (int s = 0; s < size; ++s) {
      std::array<std::uint8_t, kMaxCarrier> tab{};
      for (int i = 0; i < n; ++i)
        tab[i] = static_cast<std::uint8_t>(rng.below(n));
      members.emplace_back(n, std::span<const std::uint8_t>{
                                  tab.data(), static_cast<std::size_t>(n)});
    }
    add_arb(EndoFamily(n, std::move(members)));
  }
  for (int k = 0; k < kMixedPairs && pools.arb.size() >= 2; ++k) {
    int i = static_cast<int>(rng.below(pools.arb.size()));
    int j = static_cast<int>(rng.below(pools.arb.size()));
    if (i != j) pools.arb_mixed.emplace_back(i, j);
  }
  return pools;
}

struct Ctx {
  RunLimits limits;
  std::map<std::tuple<int, std::uint64_t, int>, Pools> cache;

  Pools& pools(const Relation& r, bool ql) {
    auto key = std::make_tuple(r.size(), r.bits(), ql ? 1 : 0);
    auto it = cache.find(key);
    if (it == cache.end()) {
      EndoFamily base = ql ? ql_endomorphisms(r) : endomorphisms(r);
      std::uint64_t seed = limits.seed ^ (r.bits() * 0x9E3779B97F4A7C15ull) ^
                           static_cast<std::uint64_t>(r.size());
      it = cache.emplace(key, build_pools(r, base, seed)).first;
    }
    return it->second;
  }
};

enum class RelClass { any, quasi_order, poset, quasi_lattice };
enum class FamMode {
  none,
  endo_same,
  endo_pairs,
  arbitrary_pairs,
  all_pairs,
  all_same,
  ql_same,
  ql_pairs,
};
enum class N4 { none, sampled, lattice_exhaustive };

using CheckFn = std::function<void(Ctx&, const Relation&, const EndoFamily&,
                                   const EndoFamily&, ClaimResult&)>;

struct ClaimDef {
  std::string id;
  RelClass rel_class;
  FamMode fam_mode;
  N4 n4;
  CheckFn check;
};

bool class_matches(const Relation& r, RelClass cls) {
  switch (cls) {
    case RelClass::any: return true;
    case RelClass::quasi_order: return r.is_quasi_order();
    case RelClass::poset: return r.props().is_poset();
    case RelClass::quasi_lattice:
      return r.is_quasi_order() && is_quasi_lattice(r);
  }
  return false;
}

std::string format_instance(const Instance& inst) {
  std::ostringstream os;
  os << "n=" << inst.relation.size() << " bits=" << inst.relation.bits()
     << " |U|=" << inst.upsilon.size() << " |T|=" << inst.theta.size();
  if (!inst.provenance.empty()) os << " (" << inst.provenance << ")";
  return os.str();
}

void note_violation(ClaimResult& res, const Relation& r, const EndoFamily& u,
                    const EndoFamily& t, const std::string& what) {
  ++res.violations;
  if (res.violation_notes.size() < 3)
    res.violation_notes.push_back(format_instance({r, u, t, {}}) + ": " +
                                  what);
}

void visit_families(Ctx& ctx, const ClaimDef& def, const Relation& r,
                    ClaimResult& res) {
  auto run = [&](const EndoFamily& u, const EndoFamily& t) {
    def.check(ctx, r, u, t, res);
  };
  switch (def.fam_mode) {
    case FamMode::none: {
      EndoFamily empty(r.size(), {});
      run(empty, empty);
      return;
    }
    case FamMode::endo_same: {
      Pools& p = ctx.pools(r, false);
      for (const EndoFamily& m : p.same) run(m, m);
      return;
    }
    case FamMode::endo_pairs: {
      Pools& p = ctx.pools(r, false);
      for (const EndoFamily& m : p.same) run(m, m);
      for (auto [i, j] : p.mixed) run(p.same[i], p.same[j]);
      return;
    }
    case FamMode::arbitrary_pairs: {
      Pools& p = ctx.pools(r, false);
      for (const EndoFamily& m : p.arb) run(m, m);
      for (auto [i, j] : p.arb_mixed) run(p.arb[i], p.arb[j]);
      return;
    }
    case FamMode::all_pairs: {
      Pools& p = ctx.pools(r, false);
      for (const EndoFamily& m : p.same) run(m, m);
      for (auto [i, j] : p.mixed) run(p.same[i], p.same[j]);
      for (const EndoFamily& m : p.arb) run(m, m);
      for (auto [i, j] : p.arb_mixed) run(p.arb[i], p.arb[j]);
      return;
    }
    case FamMode::all_same: {
      Pools& p = ctx.pools(r, false);
      for (const EndoFamily& m : p.same) run(m, m);
      for (const EndoFamily& m : p.arb) run(m, m);
      return;
    }
    case FamMode::ql_same: {
      Pools& p = ctx.pools(r, true);
      for (const EndoFamily& m : p.same) run(m, m);
      return;
    }
    case FamMode::ql_pairs: {
      Pools& p = ctx.pools(r, true);
      for (const EndoFamily& m : p.same) run(m, m);
      for (auto [i, j] : p.mixed) run(p.same[i], p.same[j]);
      return;
    }
  }
}

Relation sample_relation(SplitMix64& rng, int n, RelClass cls) {
  while (true) {
    std::uint64_t bits = rng.next() & Relation::full_mask(n);
    for (int p = 0; p < n; ++p)
      if (rng.below(4) < 3) bits |= 1ull << (p * n + p);
    Relation r = Relation::from_bits(n, bits);
    switch (cls) {
      case RelClass::any:
        return r;
      case RelClass::quasi_order: {
        Relation q = transitive_aug(
            Relation::from_bits(n, bits | Relation::diagonal(n).bits()));
        return q;
      }
      case RelClass::poset: {
        Relation q = transitive_aug(
            Relation::from_bits(n, bits | Relation::diagonal(n).bits()));
        return antisymmetric_dim(q);
      }
      case RelClass::quasi_lattice: {
        Relation q = transitive_aug(
            Relation::from_bits(n, bits | Relation::diagonal(n).bits()));
        if (is_quasi_lattice(q)) return q;
        break;  // retry
      }
    }
  }
}

std::optional<EndoFamily> sample_generated_family(const Relation& r,
                                                  const EndoFamily& endos,
                                                  SplitMix64& rng) {
  for (int tries = 0; tries < 6; ++tries) {
    std::vector<EndoFn> gens;
    const std::size_t count = 1 + rng.below(2);
    for (std::size_t i = 0; i < count && !endos.empty(); ++i)
      gens.push_back(endos.members()[rng.below(endos.size())]);
    try {
      return close_under_composition(EndoFamily(r.size(), std::move(gens)),
                                     rng.coin(), 24);
    } catch (const Error&) {
    }
  }
  return id_family(r.size());
}

EndoFamily sample_arbitrary_family(int n, SplitMix64& rng) {
  std::vector<EndoFn> members;
  const int size = static_cast<int>(rng.below(4));
  for (int s = 0; s < size; ++s) {
    std::array<std::uint8_t, kMaxCarrier> tab{};
    for (int i = 0; i < n; ++i)
      tab[i] = static_cast<std::uint8_t>(rng.below(n));
    members.emplace_back(
        n, std::span<const std::uint8_t>{tab.data(),
                                         static_cast<std::size_t>(n)});
  }
  if (rng.coin()) members.push_back(EndoFn::identity(n));
  return EndoFamily(n, std::move(members));
}

void sample_n4_instances(Ctx& ctx, const ClaimDef& def, ClaimResult& res) {
  SplitMix64 rng(ctx.limits.seed ^ fnv(def.id));
  const std::uint64_t target = ctx.limits.budget;
  const std::uint64_t attempt_cap = target * 50 + 100;
  const std::uint64_t before = res.checked;
  for (std::uint64_t a = 0;
       a < attempt_cap && res.checked - before < target; ++a) {
    Relation r = sample_relation(rng, 4, def.rel_class);
    const bool arbitrary = def.fam_mode == FamMode::arbitrary_pairs ||
                           ((def.fam_mode == FamMode::all_pairs ||
                             def.fam_mode == FamMode::all_same) &&
                            rng.coin());
    EndoFamily u(4, {}), t(4, {});
    if (def.fam_mode == FamMode::none) {
      def.check(ctx, r, u, t, res);
      continue;
    }
    if (arbitrary) {
      t = sample_arbitrary_family(4, rng);
      u = rng.coin() ? t : sample_arbitrary_family(4, rng);
    } else {
      EndoFamily endos = endomorphisms(r, 4);
      auto mt = sample_generated_family(r, endos, rng);
      if (!mt) continue;
      t = *mt;
      const bool same = def.fam_mode == FamMode::endo_same ||
                        def.fam_mode == FamMode::all_same || rng.below(10) < 7;
      if (same) {
        u = t;
      } else {
        auto mu = sample_generated_family(r, endos, rng);
        u = mu ? *mu : t;
      }
    }
    def.check(ctx, r, u, t, res);
  }
}

// ---------------------------------------------------------------------
// shared predicate helpers

Relation aug(AugKind kind, const Relation& r, const EndoFamily& u,
             const EndoFamily& t) {
  return parametric_aug({kind, u, t}, r);
}

bool prop(PropertyId id, const Relation& r, const EndoFamily& u,
          const EndoFamily& t) {
  return check_property(id, r, u, t).holds;
}

bool endo_families(const Relation& r, const EndoFamily& u,
                   const EndoFamily& t) {
  return is_endofamily_of(u, r) && is_endofamily_of(t, r);
}

// exists sigma in u with a.sigma inside a and b.sigma inside b
bool exists_absorbing(const EndoFamily& u, const EndoFamily& a,
                      const EndoFamily& b) {
  for (const EndoFn& s : u.members()) {
    bool ok = true;
    for (const EndoFn& f : a.members())
      if (!a.contains(compose(f, s))) {
        ok = false;
        break;
      }
    if (ok)
      for (const EndoFn& g : b.members())
        if (!b.contains(compose(g, s))) {
          ok = false;
          break;
        }
    if (ok) return true;
  }
  return false;
}

// t.u inside t
bool right_absorbs(const EndoFamily& t, const EndoFamily& u) {
  for (const EndoFn& f : t.members())
    for (const EndoFn& g : u.members())
      if (!t.contains(compose(f, g))) return false;
  return true;
}

bool side(SideCondition cond, const EndoFamily& lambda, const EndoFamily& pi) {
  return check_side_condition(cond, lambda, pi).holds;
}

bool cycles_bidirectional(const Relation& r) {
  Relation closure = transitive_aug(r);
  for (int p = 0; p < r.size(); ++p)
    for (int q = 0; q < r.size(); ++q)
      if (r.le(p, q) && closure.le(q, p) && !r.le(q, p)) return false;
  return true;
}

bool endos_of(const EndoFamily& fam, const Relation& r) {
  for (const EndoFn& f : fam.members())
    if (!is_homomorphism(f.table(), r, r)) return false;
  return true;
}

// ---------------------------------------------------------------------
// claim registry

const std::vector<ClaimDef>& claim_defs() {
  static const std::vector<ClaimDef> defs = [] {
    std::vector<ClaimDef> d;
    auto add = [&](std::string id, RelClass rc, FamMode fm, N4 n4,
                   CheckFn fn) {
      d.push_back({std::move(id), rc, fm, n4, std::move(fn)});
    };

    add("l-16", RelClass::any, FamMode::all_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!exists_absorbing(u, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation lin = aug(AugKind::linear, r, u, t);
          if (!r.subset_of(lin) || !prop(PropertyId::linear, lin, u, t))
            note_violation(res, r, u, t, "linear augmentation not linear");
        });

    add("lem:lin-qo-aug", RelClass::quasi_order, FamMode::endo_same, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily&, const EndoFamily& t,
           ClaimResult& res) {
          if (!t.is_subsemigroup() || !is_endofamily_of(t, r) ||
              !prop(PropertyId::linear, r, t, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation lin = aug(AugKind::linear, r, id_family(r.size()), t);
          if (!r.subset_of(lin) || !lin.is_quasi_order())
            note_violation(res, r, t, t, "not a quasi order augmentation");
        });

    add("l-17", RelClass::poset, FamMode::endo_same, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily&, const EndoFamily& t,
           ClaimResult& res) {
          if (!t.is_subsemigroup() || !is_endofamily_of(t, r) ||
              !prop(PropertyId::linear, r, t, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation lin = aug(AugKind::linear, r, id_family(r.size()), t);
          if (!r.subset_of(lin) || !lin.props().is_poset())
            note_violation(res, r, t, t, "not a partial order augmentation");
        });

    add("l-18", RelClass::any, FamMode::all_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!exists_absorbing(u, u, t) ||
              !t.contains(EndoFn::identity(r.size()))) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation slin = aug(AugKind::strict_linear, r, u, t);
          if (!r.subset_of(slin) ||
              !prop(PropertyId::strict_linear, slin, u, t))
            note_violation(res, r, u, t,
                           "strict linear augmentation not strictly linear");
        });

    add("lem:p<str-q", RelClass::any, FamMode::all_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!t.is_submonoid() || !side(SideCondition::pi_sigma_in_pi, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation str = aug(AugKind::strictive, r, u, t);
          for (int p = 0; p < r.size(); ++p)
            for (int q = 0; q < r.size(); ++q) {
              bool everywhere = true;
              for (const EndoFn& tau : t.members())
                if (!r.lt(tau(p), tau(q))) {
                  everywhere = false;
                  break;
                }
              if (everywhere && !str.lt(p, q))
                note_violation(res, r, u, t,
                               "pointwise strict pair not strict afterwards");
            }
        });

    add("l-19", RelClass::any, FamMode::all_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!t.is_submonoid() || !side(SideCondition::pi_sigma_in_pi, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation str = aug(AugKind::strictive, r, u, t);
          if (!r.subset_of(str) || !prop(PropertyId::strict, str, u, t))
            note_violation(res, r, u, t,
                           "strictive augmentation is not strict");
        });

    add("l-22", RelClass::any, FamMode::endo_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!endo_families(r, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation str = aug(AugKind::strictive, r, u, t);
          BruteMinResult brute =
              brute_min_augmentation(r, "strict", u, t, false);
          if (!brute.minimum || !str.subset_of(*brute.minimum))
            note_violation(res, r, u, t,
                           "a strict augmentation below the strictive one");
        });

    add("p-35", RelClass::any, FamMode::endo_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!endo_families(r, u, t) || !u.is_subsemigroup() ||
              !side(SideCondition::lambda_pi_in_lambda, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation str = aug(AugKind::strictive, r, u, t);
          if (!endos_of(u, str) || !endos_of(t, str))
            note_violation(res, r, u, t,
                           "parameters stop being endomorphisms");
        });

    add("l-20", RelClass::quasi_order, FamMode::endo_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!endo_families(r, u, t) ||
              !side(SideCondition::pi_lambda_in_lambda, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (!cycles_bidirectional(aug(AugKind::strictive, r, u, t)))
            note_violation(res, r, u, t, "one-way cycle in the augmentation");
        });

    add("l-21", RelClass::quasi_order, FamMode::endo_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!endo_families(r, u, t) || !u.is_subsemigroup() ||
              !t.is_submonoid() ||
              !side(SideCondition::pi_lambda_pi_eq_lambda, u, t) ||
              !side(SideCondition::pi_sigma_in_pi, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation st = aug(AugKind::strictive_transitive, r, u, t);
          if (!r.subset_of(st) || !st.is_quasi_order() ||
              !prop(PropertyId::strict, st, u, t))
            note_violation(res, r, u, t,
                           "not a strict quasi order augmentation");
        });

    add("o-12", RelClass::quasi_order, FamMode::endo_same, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily&, const EndoFamily& t,
           ClaimResult& res) {
          if (!t.is_submonoid() || !is_endofamily_of(t, r)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation st = aug(AugKind::strictive_transitive, r, t, t);
          BruteMinResult brute = brute_min_augmentation(r, "strict", t, t, true);
          if (!st.is_quasi_order() || !prop(PropertyId::strict, st, t, t) ||
              !brute.minimum || !(st == *brute.minimum))
            note_violation(res, r, t, t,
                           "not the minimum strict quasi order augmentation");
        });

    add("p-14", RelClass::any, FamMode::all_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!t.is_subsemigroup() ||
              (!side(SideCondition::pi_sigma_in_pi, u, t) &&
               !side(SideCondition::sigma_pi_in_pi, u, t))) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation cor = aug(AugKind::corrective, r, u, t);
          if (!r.subset_of(cor) || !prop(PropertyId::correct, cor, u, t))
            note_violation(res, r, u, t,
                           "corrective augmentation is not correct");
        });

    add("l-30", RelClass::any, FamMode::all_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          ++res.checked;
          Relation cor = aug(AugKind::corrective, r, u, t);
          BruteMinResult brute =
              brute_min_augmentation(r, "correct", u, t, false);
          if (!brute.minimum || !cor.subset_of(*brute.minimum))
            note_violation(res, r, u, t,
                           "a correct augmentation below the corrective one");
        });

    add("lem:cor-quasi-order", RelClass::quasi_order, FamMode::endo_pairs,
        N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!endo_families(r, u, t) || !t.is_subsemigroup() ||
              !side(SideCondition::pi_lambda_in_lambda, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation cor = aug(AugKind::corrective, r, u, t);
          if (!r.subset_of(cor) || !cor.is_quasi_order())
            note_violation(res, r, u, t,
                           "corrective augmentation not a quasi order");
        });

    add("o-15", RelClass::quasi_order, FamMode::endo_same, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily&, const EndoFamily& t,
           ClaimResult& res) {
          if (!t.is_subsemigroup() || !is_endofamily_of(t, r)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation cor = aug(AugKind::corrective, r, t, t);
          BruteMinResult brute =
              brute_min_augmentation(r, "correct", t, t, true);
          if (!cor.is_quasi_order() || !prop(PropertyId::correct, cor, t, t) ||
              !brute.minimum || !(cor == *brute.minimum))
            note_violation(res, r, t, t,
                           "not the minimum correct quasi order augmentation");
        });

    add("pro:complete", RelClass::any, FamMode::all_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          bool has_endo = false;
          for (const EndoFn& f : t.members())
            if (is_homomorphism(f.table(), r, r)) {
              has_endo = true;
              break;
            }
          bool collapses = true;
          for (int p = 0; p < r.size() && collapses; ++p)
            for (int q = 0; q < r.size() && collapses; ++q) {
              if (r.le(p, q)) continue;
              bool found = false;
              for (const EndoFn& f : t.members())
                if (r.le(f(p), f(q))) {
                  found = true;
                  break;
                }
              if (!found) collapses = false;
            }
          if (!has_endo || !collapses) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (!(aug(AugKind::corrective, r, u, t) ==
                Relation::complete(r.size())))
            note_violation(res, r, u, t, "corrective augmentation incomplete");
        });

    add("l-1", RelClass::poset, FamMode::all_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          bool reverses = true;
          for (int p = 0; p < r.size() && reverses; ++p)
            for (int q = 0; q < r.size() && reverses; ++q) {
              if (r.le(p, q)) continue;
              bool found = false;
              for (const EndoFn& f : u.members())
                if (r.lt(f(q), f(p))) {
                  found = true;
                  break;
                }
              if (!found) reverses = false;
            }
          bool mono = true;
          for (const EndoFn& f : t.members())
            if (!f.is_injective() || !is_homomorphism(f.table(), r, r))
              mono = false;
          if (!reverses || !mono) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (!(aug(AugKind::corrective, r, u, t) == r))
            note_violation(res, r, u, t, "corrective augmentation not trivial");
        });

    add("p-15", RelClass::any, FamMode::endo_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          auto reflecting = [&](const EndoFamily& fam) {
            for (const EndoFn& f : fam.members()) {
              if (!is_homomorphism(f.table(), r, r)) return false;
              for (int p = 0; p < r.size(); ++p)
                for (int q = 0; q < r.size(); ++q)
                  if (r.le(f(p), f(q)) && !r.le(p, q)) return false;
            }
            return true;
          };
          if (u.empty() || !reflecting(u) || !reflecting(t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (!(aug(AugKind::corrective, r, u, t) == r))
            note_violation(res, r, u, t, "corrective augmentation not trivial");
        });

    add("l-26", RelClass::any, FamMode::endo_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!endo_families(r, u, t) || !u.is_subsemigroup() ||
              !side(SideCondition::lambda_pi_in_lambda, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation neg = aug(AugKind::negative_strictive, r, u, t);
          if (!endos_of(u, neg) || !endos_of(t, neg))
            note_violation(res, r, u, t,
                           "parameters stop being endomorphisms");
        });

    add("o-16", RelClass::any, FamMode::endo_same, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily&, const EndoFamily& t,
           ClaimResult& res) {
          if (!t.is_subsemigroup() || !is_endofamily_of(t, r)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (!endos_of(t, aug(AugKind::negative_strictive, r, t, t)))
            note_violation(res, r, t, t,
                           "parameters stop being endomorphisms");
        });

    add("l-27", RelClass::any, FamMode::endo_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!endo_families(r, u, t) || !u.is_subsemigroup() ||
              !t.is_subsemigroup() ||
              !side(SideCondition::pi_sigma_in_pi, u, t) ||
              !side(SideCondition::lambda_pi_in_lambda, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation neg = aug(AugKind::negative_strictive, r, u, t);
          if (!prop(PropertyId::neg_strict, neg, u, t))
            note_violation(res, r, u, t,
                           "augmentation is not negatively strict");
        });

    add("l-28", RelClass::any, FamMode::endo_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!endo_families(r, u, t) ||
              !side(SideCondition::pi_sigma_in_lambda, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation neg = aug(AugKind::negative_strictive, r, u, t);
          for (int p = 0; p < r.size(); ++p)
            for (int q = 0; q < r.size(); ++q) {
              bool neg_equiv = neg.le(p, q) && neg.le(q, p);
              bool base_equiv = r.le(p, q) && r.le(q, p);
              if (neg_equiv != base_equiv)
                note_violation(res, r, u, t,
                               "symmetric part differs from the base classes");
            }
        });

    add("l-29", RelClass::any, FamMode::endo_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!endo_families(r, u, t) ||
              !side(SideCondition::pi_sigma_in_lambda, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          Relation neg = aug(AugKind::negative_strictive, r, u, t);
          const std::uint64_t room = neg.bits() & ~r.bits();
          std::uint64_t sub = room;
          while (true) {
            Relation middle = Relation::from_bits(r.size(), r.bits() | sub);
            if (prop(PropertyId::neg_strict, middle, u, t) &&
                !(middle == neg))
              note_violation(res, r, u, t,
                             "negatively strict relation strictly between");
            if (sub == 0) break;
            sub = (sub - 1) & room;
          }
        });

    add("p-22", RelClass::quasi_order, FamMode::none, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          ++res.checked;
          Relation sep = separative_aug(r);
          if (!r.subset_of(sep) || !sep.is_quasi_order() ||
              !is_separative(sep).separative) {
            note_violation(res, r, u, t,
                           "separative augmentation is not separative");
            return;
          }
          for_each_superset(r, true, [&](const Relation& cand) {
            if (!is_separative(cand).separative) return;
            for (int p = 0; p < r.size(); ++p)
              for (int q = 0; q < r.size(); ++q)
                if (compatible(r, p, q) != compatible(cand, p, q)) return;
            if (!sep.subset_of(cand))
              note_violation(res, r, u, t,
                             "smaller separative augmentation exists");
          });
        });

    add("p-26", RelClass::any, FamMode::all_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          ++res.checked;
          if (prop(PropertyId::strict_linear, r, u, t) &&
              !prop(PropertyId::linear, r, u, t))
            note_violation(res, r, u, t, "strictly linear but not linear");
        });

    add("p-28", RelClass::any, FamMode::all_same, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily&, const EndoFamily& t,
           ClaimResult& res) {
          ++res.checked;
          if (prop(PropertyId::strict_linear, r, t, t) !=
              prop(PropertyId::linear, r, t, t))
            note_violation(res, r, t, t,
                           "strict linearity differs from linearity");
        });

    add("l-23", RelClass::any, FamMode::all_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!right_absorbs(t, u) || !prop(PropertyId::linear, r, t, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (prop(PropertyId::correct, r, u, t) &&
              !prop(PropertyId::strict_linear, r, id_family(r.size()), t))
            note_violation(res, r, u, t,
                           "correct but not strictly linear with identity");
        });

    add("p-40", RelClass::any, FamMode::endo_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!endo_families(r, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (prop(PropertyId::correct, r, u, t) &&
              !prop(PropertyId::strict, r, u, t))
            note_violation(res, r, u, t, "correct but not strict");
        });

    add("u-1", RelClass::quasi_lattice, FamMode::ql_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          ++res.checked;
          if (prop(PropertyId::strict, r, u, t) &&
              !prop(PropertyId::correct, r, u, t))
            note_violation(res, r, u, t, "strict but not correct");
        });

    add("p-39", RelClass::any, FamMode::endo_pairs, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (u.empty() || !endo_families(r, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (prop(PropertyId::correct, r, u, t) &&
              !prop(PropertyId::neg_strict, r, u, t))
            note_violation(res, r, u, t, "correct but not negatively strict");
        });

    add("p-46", RelClass::any, FamMode::endo_same, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily&, const EndoFamily& t,
           ClaimResult& res) {
          if (t.empty() || !t.is_subsemigroup() || !is_endofamily_of(t, r)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (prop(PropertyId::linear, r, id_family(r.size()), t) &&
              !prop(PropertyId::neg_strict, r, t, t))
            note_violation(res, r, t, t,
                           "identity-linear but not negatively strict");
        });

    add("l-24a", RelClass::any, FamMode::all_pairs, N4::sampled,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          ++res.checked;
          EndoFamily id = id_family(r.size());
          Relation lin = aug(AugKind::linear, r, u, t);
          Relation lin_id = aug(AugKind::linear, r, id, t);
          Relation slin_id = aug(AugKind::strict_linear, r, id, t);
          if (!r.subset_of(lin) || !lin.subset_of(lin_id) ||
              !lin_id.subset_of(slin_id))
            note_violation(res, r, u, t, "linear chain inclusion fails");
        });

    add("l-24b", RelClass::any, FamMode::all_same, N4::sampled,
        [](Ctx&, const Relation& r, const EndoFamily&, const EndoFamily& t,
           ClaimResult& res) {
          ++res.checked;
          if (!(aug(AugKind::linear, r, t, t) ==
                aug(AugKind::strict_linear, r, t, t)))
            note_violation(res, r, t, t,
                           "symmetric linear and strict linear differ");
        });

    add("l-24c", RelClass::any, FamMode::all_pairs, N4::sampled,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!right_absorbs(t, u) || !prop(PropertyId::linear, r, t, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (!aug(AugKind::strict_linear, r, id_family(r.size()), t)
                   .subset_of(aug(AugKind::corrective, r, u, t)))
            note_violation(res, r, u, t,
                           "strict linear exceeds the corrective");
        });

    add("l-24d", RelClass::any, FamMode::endo_pairs, N4::sampled,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!endo_families(r, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (!aug(AugKind::strictive, r, u, t)
                   .subset_of(aug(AugKind::corrective, r, u, t)))
            note_violation(res, r, u, t, "strictive exceeds the corrective");
        });

    add("l-24e", RelClass::quasi_order, FamMode::endo_pairs, N4::sampled,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!endo_families(r, u, t) || !t.is_subsemigroup() ||
              !side(SideCondition::pi_lambda_in_lambda, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (!aug(AugKind::strictive_transitive, r, u, t)
                   .subset_of(aug(AugKind::corrective, r, u, t)))
            note_violation(res, r, u, t,
                           "transitive strictive exceeds the corrective");
        });

    add("l-24f", RelClass::any, FamMode::all_pairs, N4::sampled,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          ++res.checked;
          if (!aug(AugKind::negative_strictive, r, u, t)
                   .subset_of(aug(AugKind::corrective, r, u, t)))
            note_violation(res, r, u, t,
                           "negative strictive exceeds the corrective");
        });

    add("l-24g", RelClass::any, FamMode::endo_same, N4::sampled,
        [](Ctx&, const Relation& r, const EndoFamily&, const EndoFamily& t,
           ClaimResult& res) {
          if (!t.is_subsemigroup() || !is_endofamily_of(t, r)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (!aug(AugKind::negative_strictive, r, t, t)
                   .subset_of(aug(AugKind::linear, r, id_family(r.size()), t)))
            note_violation(res, r, t, t,
                           "negative strictive exceeds the identity-linear");
        });

    add("u-2", RelClass::quasi_lattice, FamMode::ql_pairs,
        N4::lattice_exhaustive,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          ++res.checked;
          Relation cor = aug(AugKind::corrective, r, u, t);
          Relation str = aug(AugKind::strictive, r, u, t);
          Relation st = aug(AugKind::strictive_transitive, r, u, t);
          MeetJoinTable table = meet_join(r);
          bool first_pair = true;
          for (int p = 0; p < r.size(); ++p)
            for (int q = 0; q < r.size(); ++q) {
              if (!cor.le(p, q)) continue;
              bool found = false;
              for (int c = 0; c < r.size() && !found; ++c)
                if ((table.meet_set(p, q) >> c & 1u) && str.le(p, c) &&
                    str.le(c, q))
                  found = true;
              if (!found) {
                note_violation(res, r, u, t, "no two-step middle element");
                continue;
              }
              if (first_pair) {
                first_pair = false;
                int mid = two_step_decompose(r, u, t, p, q);
                if (!str.le(p, mid) || !str.le(mid, q))
                  note_violation(res, r, u, t, "decomposition hop unverified");
              }
            }
          if (!cor.subset_of(st))
            note_violation(res, r, u, t,
                           "corrective exceeds the transitive strictive");
        });

    add("o-1", RelClass::quasi_lattice, FamMode::ql_pairs,
        N4::lattice_exhaustive,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          if (!t.is_subsemigroup() ||
              !side(SideCondition::pi_lambda_in_lambda, u, t)) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (!(aug(AugKind::corrective, r, u, t) ==
                aug(AugKind::strictive_transitive, r, u, t)))
            note_violation(res, r, u, t,
                           "corrective differs from transitive strictive");
        });

    add("o-2", RelClass::quasi_lattice, FamMode::ql_same,
        N4::lattice_exhaustive,
        [](Ctx&, const Relation& r, const EndoFamily&, const EndoFamily& t,
           ClaimResult& res) {
          if (!t.is_subsemigroup()) {
            ++res.skipped;
            return;
          }
          ++res.checked;
          if (!(aug(AugKind::corrective, r, t, t) ==
                aug(AugKind::strictive_transitive, r, t, t)))
            note_violation(res, r, t, t,
                           "corrective differs from transitive strictive");
        });

    add("p-32", RelClass::any, FamMode::none, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          ++res.checked;
          Relation closure = transitive_aug(r);
          BruteMinResult brute =
              brute_min_augmentation(r, "transitive", u, t, false);
          if (!closure.props().transitive || !r.subset_of(closure) ||
              !brute.minimum || !(closure == *brute.minimum) ||
              !brute.intersection_satisfies)
            note_violation(res, r, u, t,
                           "closure is not the minimum transitive superset");
        });

    add("p-33", RelClass::any, FamMode::none, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          ++res.checked;
          const int n = r.size();
          Relation closure = transitive_aug(r);
          // reach along a chain containing at least one strict step
          auto reach0 = [&](int a, int b) { return a == b || closure.le(a, b); };
          bool stmt_a = true;
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
              bool strict_chain = false;
              for (int a = 0; a < n && !strict_chain; ++a)
                for (int b = 0; b < n && !strict_chain; ++b)
                  if (r.lt(a, b) && reach0(p, a) && reach0(b, q))
                    strict_chain = true;
              if (closure.lt(p, q) != strict_chain) stmt_a = false;
            }
          bool stmt_b = true;
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              if (r.lt(p, q) && !closure.lt(p, q)) stmt_b = false;
          bool stmt_c = cycles_bidirectional(r);
          if (stmt_a != stmt_b || stmt_b != stmt_c)
            note_violation(res, r, u, t, "the three statements disagree");
        });

    add("p-36", RelClass::any, FamMode::none, N4::none,
        [](Ctx&, const Relation& r, const EndoFamily& u, const EndoFamily& t,
           ClaimResult& res) {
          ++res.checked;
          const int n = r.size();
          Relation closure = transitive_aug(r);
          // independent reachability: repeated relational join to a fixed point
          std::array<std::uint8_t, kMaxCarrier> reach{};
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              if (r.le(p, q)) reach[p] |= static_cast<std::uint8_t>(1u << q);
          for (bool changed = true; changed;) {
            changed = false;
            for (int p = 0; p < n; ++p)
              for (int q = 0; q < n; ++q)
                if ((reach[p] >> q & 1u)) {
                  std::uint8_t merged = reach[p] | reach[q];
                  if (merged != reach[p]) {
                    reach[p] = merged;
                    changed = true;
                  }
                }
          }
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
              bool equiv = closure.le(p, q) && closure.le(q, p);
              bool walk = (reach[p] >> q & 1u) && (reach[q] >> p & 1u);
              if (equiv != walk)
                note_violation(res, r, u, t,
                               "cycle membership differs from reachability");
            }
        });

    return d;
  }();
  return defs;
}

ClaimResult run_claim(Ctx& ctx, const ClaimDef& def) {
  ClaimResult res;
  res.id = def.id;
  const int exhaustive_to = std::min(3, ctx.limits.max_n);
  for (int n = 1; n <= exhaustive_to; ++n)
    for (const Relation& r : enumerate_relations(n))
      if (class_matches(r, def.rel_class)) visit_families(ctx, def, r, res);
  if (ctx.limits.max_n >= 4) {
    if (def.n4 == N4::lattice_exhaustive) {
      for (const Relation& r : enumerate_quasi_orders(4))
        if (class_matches(r, def.rel_class)) visit_families(ctx, def, r, res);
    } else if (def.n4 == N4::sampled) {
      sample_n4_instances(ctx, def, res);
    }
  }
  return res;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const ClaimDef& def : claim_defs()) out.push_back(def.id);
    return out;
  }();
  return ids;
}

ClaimResult verify_claim(std::string_view claim_id, const RunLimits& limits) {
  Ctx ctx{limits, {}};
  for (const ClaimDef& def : claim_defs())
    if (def.id == claim_id) return run_claim(ctx, def);
  fail(Errc::unknown_id, "unknown claim id: " + std::string(claim_id));
}

std::vector<ClaimResult> verify_all(const RunLimits& limits) {
  Ctx ctx{limits, {}};
  std::vector<ClaimResult> out;
  for (const ClaimDef& def : claim_defs()) out.push_back(run_claim(ctx, def));
  return out;
}

// ---------------------------------------------------------------------
// non-implications

namespace {

struct SepDef {
  std::string id;
  int bullet;
  std::string blocked;      // "lhs -x-> rhs" rendering for the diagram
  const char* lhs_form;
  const char* rhs_form;
  const char* wx;
  const char* wy;
  AugKind lhs_kind;
  bool lhs_identity_upsilon;
  AugKind rhs_kind;
  bool rhs_identity_upsilon;
};

const std::vector<SepDef>& sep_defs() {
  static const std::vector<SepDef> defs = {
      {"str-nsub-slin", 1, "strictive -> strict-linear", "str_proj",
       "slin_id_proj", "[1|0]", "[|0]", AugKind::strictive, false,
       AugKind::strict_linear, true},
      {"str-nsub-negstr", 1, "strictive -> negative-strictive", "str_proj",
       "negstr_proj", "[1|0]", "[|0]", AugKind::strictive, false,
       AugKind::negative_strictive, false},
      {"negstr-nsub-str", 2, "negative-strictive -> strictive", "negstr_proj",
       "str_proj", "[9|0]", "[|1]", AugKind::negative_strictive, false,
       AugKind::strictive, false},
      {"negstr-nsub-lin", 2, "negative-strictive -> linear", "negstr_proj",
       "le", "[9|0]", "[|1]", AugKind::negative_strictive, false,
       AugKind::linear, false},
      {"lin-nsub-str", 3, "linear -> strictive", "lin_pi0", "str_pi0",
       "[0,1|0]", "[0,0,0,1|0]", AugKind::linear, false, AugKind::strictive,
       false},
      {"lin-nsub-negstr", 3, "linear -> negative-strictive", "lin_pi0",
       "negstr_pi0", "[0,1|0]", "[0,0,0,1|0]", AugKind::linear, false,
       AugKind::negative_strictive, false},
      {"lin-id-nsub-lin", 4, "linear -> linear", "lin_id_proj", "le", "[9|0]",
       "[|1]", AugKind::linear, true, AugKind::linear, false},
      {"slin-nsub-lin", 5, "strict-linear -> linear", "slin_id_pi1",
       "lin_id_pi1", "[0,1|0]", "[0,0,0,1|0]", AugKind::strict_linear, true,
       AugKind::linear, true},
      {"strtrn-nsub-slin", 6, "strictive-transitive -> strict-linear",
       "strtrn_two_step", "slin_id_proj", "[2,0|1]", "[0,2|1]",
       AugKind::strictive_transitive, false, AugKind::strict_linear, true},
      {"strtrn-nsub-str", 6, "strictive-transitive -> strictive",
       "strtrn_two_step", "str_proj", "[2,0|1]", "[0,2|1]",
       AugKind::strictive_transitive, false, AugKind::strictive, false},
      {"strtrn-nsub-negstr", 6, "strictive-transitive -> negative-strictive",
       "strtrn_two_step", "negstr_proj", "[2,0|1]", "[0,2|1]",
       AugKind::strictive_transitive, false, AugKind::negative_strictive,
       false},
  };
  return defs;
}

// Open search: is the negative strictive augmentation ever above some other
// negatively strict augmentation of the same relation?  No symbolic witness
// is registered; only the finite search reports.
ClaimResult run_negstr_minimality_search(const RunLimits& limits) {
  ClaimResult res;
  res.id = "negstr-not-minimum";
  Ctx ctx{limits, {}};
  std::uint64_t budget = limits.budget;
  for (int n = 1; n <= std::min(3, limits.max_n) && budget > 0; ++n) {
    for (const Relation& r : enumerate_relations(n)) {
      if (budget == 0) break;
      Pools& pools = ctx.pools(r, false);
      for (const EndoFamily& m : pools.same) {
        if (budget == 0) break;
        if (!is_endofamily_of(m, r)) continue;
        --budget;
        ++res.checked;
        Relation neg = parametric_aug({AugKind::negative_strictive, m, m}, r);
        bool done = false;
        for_each_superset(r, false, [&](const Relation& cand) {
          if (done || neg.subset_of(cand)) return;
          if (!check_property(PropertyId::neg_strict, cand, m, m).holds)
            return;
          done = true;
          res.witness_found = true;
          if (res.witness.empty())
            res.witness = format_instance({r, m, m, "open search"}) +
                          " other=" + std::to_string(cand.bits());
        });
      }
    }
  }
  return res;
}

bool eval_sep_form(std::string_view form, const UPSeq& x, const UPSeq& y) {
  if (form == "le") return compare(x, y).le;
  if (form == "strtrn_two_step") {
    UPSeq m = meet(x, y);
    return closed_form("str_proj", x, m) && closed_form("str_proj", m, y);
  }
  return closed_form(form, x, y);
}

ClaimResult run_separation(const SepDef& def, const RunLimits& limits) {
  ClaimResult res;
  res.id = def.id;
  // the registered symbolic witness must still exhibit the separation
  UPSeq wx = parse_upseq(def.wx);
  UPSeq wy = parse_upseq(def.wy);
  const bool lhs = eval_sep_form(def.lhs_form, wx, wy);
  const bool rhs = eval_sep_form(def.rhs_form, wx, wy);
  ++res.checked;
  if (!lhs || rhs) {
    ++res.violations;
    res.violation_notes.push_back(
        std::string("registered witness failed: lhs ") + def.lhs_form + "=" +
        (lhs ? "true" : "false") + " rhs " + def.rhs_form + "=" +
        (rhs ? "true" : "false"));
  } else {
    res.witness = std::string("x=") + def.wx + " y=" + def.wy + " " +
                  def.lhs_form + "=true " + def.rhs_form + "=false";
    res.witness_found = true;
  }
  // supplementary finite search
  Ctx ctx{limits, {}};
  std::uint64_t budget = limits.budget;
  for (int n = 1; n <= std::min(3, limits.max_n) && budget > 0; ++n) {
    for (const Relation& r : enumerate_relations(n)) {
      if (budget == 0) break;
      Pools& pools = ctx.pools(r, false);
      for (const EndoFamily& m : pools.same) {
        if (budget == 0) break;
        --budget;
        EndoFamily id = id_family(r.size());
        Relation lhs_rel = parametric_aug(
            {def.lhs_kind, def.lhs_identity_upsilon ? id : m, m}, r);
        Relation rhs_rel = parametric_aug(
            {def.rhs_kind, def.rhs_identity_upsilon ? id : m, m}, r);
        for (int p = 0; p < r.size(); ++p)
          for (int q = 0; q < r.size(); ++q)
            if (lhs_rel.le(p, q) && !rhs_rel.le(p, q) &&
                res.witness.find("finite") == std::string::npos) {
              res.witness += " | finite " +
                             format_instance({r, m, m, "pool scan"}) +
                             " pair=(" + std::to_string(p) + "," +
                             std::to_string(q) + ")";
            }
      }
    }
  }
  return res;
}

}  // namespace

const std::vector<std::string>& separation_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const SepDef& def : sep_defs()) out.push_back(def.id);
    out.push_back("negstr-not-minimum");
    return out;
  }();
  return ids;
}

ClaimResult search_counterexample(std::string_view separation_id,
                                  const RunLimits& limits) {
  if (separation_id == "negstr-not-minimum")
    return run_negstr_minimality_search(limits);
  for (const SepDef& def : sep_defs())
    if (def.id == separation_id) return run_separation(def, limits);
  fail(Errc::unknown_id,
       "unknown separation id: " + std::string(separation_id));
}

std::vector<ClaimResult> search_all(const RunLimits& limits) {
  std::vector<ClaimResult> out;
  for (const SepDef& def : sep_defs()) out.push_back(run_separation(def, limits));
  out.push_back(run_negstr_minimality_search(limits));
  return out;
}

// ---------------------------------------------------------------------
// diagram

namespace {

const ClaimResult* find_result(const std::vector<ClaimResult>& results,
                               std::string_view id) {
  for (const ClaimResult& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace

std::string implication_graph(const std::vector<ClaimResult>& claims,
                              const std::vector<ClaimResult>& separations) {
  std::ostringstream out;
  out << "digraph implications {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  out << "  base [label=\"base relation\"];\n";
  out << "  linear [label=\"linear\"];\n";
  out << "  strict_linear [label=\"strict-linear\"];\n";
  out << "  strictive [label=\"strictive\"];\n";
  out << "  strictive_transitive [label=\"strictive-transitive\"];\n";
  out << "  negative_strictive [label=\"negative-strictive\"];\n";
  out << "  corrective [label=\"corrective\"];\n";

  struct Edge {
    const char* claim;
    const char* from;
    const char* to;
    const char* label;
  };
  const Edge solid[] = {
      {"l-24a", "base", "linear", "l-24a: any parameters"},
      {"l-24a", "linear", "strict_linear", "l-24a: identity first slot"},
      {"l-24c", "strict_linear", "corrective",
       "l-24c: T-linear base, T after U inside T"},
      {"l-24d", "strictive", "corrective", "l-24d: endomorphic parameters"},
      {"p-32", "strictive", "strictive_transitive",
       "p-32: transitive closure"},
      {"l-24e", "strictive_transitive", "corrective",
       "l-24e: quasi order, P after L inside L, P subsemigroup"},
      {"l-24f", "negative_strictive", "corrective", "l-24f: any parameters"},
      {"l-24g", "negative_strictive", "linear",
       "l-24g: identity first slot, P subsemigroup"},
  };
  for (const Edge& e : solid) {
    const ClaimResult* res = find_result(claims, e.claim);
    if (res && res->violations == 0 && res->checked > 0)
      out << "  " << e.from << " -> " << e.to << " [label=\"" << e.label
          << "\"];\n";
  }
  // l-24b: the two linearity augmentations coincide for a shared parameter
  if (const ClaimResult* b = find_result(claims, "l-24b");
      b && b->violations == 0 && b->checked > 0)
    out << "  linear -> strict_linear [dir=none, style=bold, "
           "label=\"l-24b: equal when the parameters coincide\"];\n";

  struct Struck {
    const char* sep;
    const char* from;
    const char* to;
  };
  const Struck struck[] = {
      {"str-nsub-slin", "strictive", "strict_linear"},
      {"str-nsub-negstr", "strictive", "negative_strictive"},
      {"negstr-nsub-str", "negative_strictive", "strictive"},
      {"negstr-nsub-lin", "negative_strictive", "linear"},
      {"lin-nsub-str", "linear", "strictive"},
      {"lin-nsub-negstr", "linear", "negative_strictive"},
      {"lin-id-nsub-lin", "linear", "linear"},
      {"slin-nsub-lin", "strict_linear", "linear"},
      {"strtrn-nsub-slin", "strictive_transitive", "strict_linear"},
      {"strtrn-nsub-str", "strictive_transitive", "strictive"},
      {"strtrn-nsub-negstr", "strictive_transitive", "negative_strictive"},
  };
  for (const Struck& s : struck) {
    const ClaimResult* res = find_result(separations, s.sep);
    if (res && res->witness_found && res->violations == 0)
      out << "  " << s.from << " -> " << s.to
          << " [style=dashed, color=red, label=\"no: " << s.sep << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qopin
