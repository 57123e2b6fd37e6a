#include "qopin/augment.hpp"

#include <array>

namespace qopin {

AugKind parse_aug_kind(std::string_view id) {
  if (id == "linear") return AugKind::linear;
  if (id == "strict-linear") return AugKind::strict_linear;
  if (id == "strictive") return AugKind::strictive;
  if (id == "strictive-transitive") return AugKind::strictive_transitive;
  if (id == "corrective") return AugKind::corrective;
  if (id == "negative-strictive") return AugKind::negative_strictive;
  fail(Errc::unknown_id, "unknown augmentation kind: " + std::string(id));
}

std::string_view aug_kind_name(AugKind kind) {
  switch (kind) {
    case AugKind::linear: return "linear";
    case AugKind::strict_linear: return "strict-linear";
    case AugKind::strictive: return "strictive";
    case AugKind::strictive_transitive: return "strictive-transitive";
    case AugKind::corrective: return "corrective";
    case AugKind::negative_strictive: return "negative-strictive";
  }
  return "?";
}

Relation homomorphic_aug(std::span<const std::uint8_t> f, const Relation& cod,
                         int base_carrier) {
  require(static_cast<int>(f.size()) == base_carrier, Errc::range_error,
          "function table does not cover the base carrier");
  for (std::uint8_t v : f)
    require(v < cod.size(), Errc::range_error, "value outside the codomain");
  std::uint64_t bits = 0;
  for (int p = 0; p < base_carrier; ++p)
    for (int q = 0; q < base_carrier; ++q)
      if (cod.le(f[p], f[q])) bits |= 1ull << (p * base_carrier + q);
  return Relation::from_bits(base_carrier, bits);
}

Relation restrictive_aug(const Relation& r, std::uint8_t subset_mask) {
  require(r.is_quasi_order(), Errc::precondition,
          "restrictive augmentation needs a quasi order");
  const int n = r.size();
  std::array<std::uint8_t, kMaxCarrier> down{};
  for (int p = 0; p < n; ++p)
    for (int s = 0; s < n; ++s)
      if (r.le(s, p)) down[p] |= static_cast<std::uint8_t>(1u << s);
  std::uint64_t bits = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      std::uint8_t dp = down[p] & subset_mask;
      std::uint8_t dq = down[q] & subset_mask;
      if ((dp & ~dq) == 0) bits |= 1ull << (p * n + q);
    }
  return Relation::from_bits(n, bits);
}

Relation separative_aug(const Relation& r) {
  require(r.is_quasi_order(), Errc::precondition,
          "separative augmentation needs a quasi order");
  const int n = r.size();
  std::array<std::uint8_t, kMaxCarrier> comp{};
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (compatible(r, p, q)) comp[p] |= static_cast<std::uint8_t>(1u << q);
  std::uint64_t bits = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if ((comp[p] & ~comp[q]) == 0) bits |= 1ull << (p * n + q);
  return Relation::from_bits(n, bits);
}

Relation antisymmetric_dim(const Relation& r) {
  require(r.is_quasi_order(), Errc::precondition,
          "antisymmetric diminishment needs a quasi order");
  const int n = r.size();
  std::uint64_t bits = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p == q || r.lt(p, q)) bits |= 1ull << (p * n + q);
  return Relation::from_bits(n, bits);
}

Relation transitive_aug(const Relation& r) {
  // Iterated boolean-matrix squaring to a fixed point; rows are bitmasks.
  const int n = r.size();
  std::array<std::uint8_t, kMaxCarrier> row{};
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (r.le(p, q)) row[p] |= static_cast<std::uint8_t>(1u << q);
  while (true) {
    std::array<std::uint8_t, kMaxCarrier> next = row;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (row[p] >> q & 1u) next[p] |= row[q];
    if (next == row) break;
    row = next;
  }
  std::uint64_t bits = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (row[p] >> q & 1u) bits |= 1ull << (p * n + q);
  return Relation::from_bits(n, bits);
}

namespace {

// forall sigma in u exists tau in t: tau(sigma(p)) inner tau(sigma(q))
template <typename Inner>
bool forall_exists(const EndoFamily& u, const EndoFamily& t, int p, int q,
                   Inner inner) {
  for (const EndoFn& s : u.members()) {
    bool found = false;
    for (const EndoFn& tau : t.members())
      if (inner(tau(s(p)), tau(s(q)))) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

Relation build(const Relation& r, auto related) {
  const int n = r.size();
  std::uint64_t bits = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (related(p, q)) bits |= 1ull << (p * n + q);
  return Relation::from_bits(n, bits);
}

}  // namespace

Relation parametric_aug(const AugSpec& spec, const Relation& r) {
  const EndoFamily& u = spec.upsilon;
  const EndoFamily& t = spec.theta;
  require((u.empty() || u.carrier() == r.size()) &&
              (t.empty() || t.carrier() == r.size()),
          Errc::carrier_mismatch, "families on a different carrier");
  auto le = [&](int a, int b) { return r.le(a, b); };
  auto lt = [&](int a, int b) { return r.lt(a, b); };

  switch (spec.kind) {
    case AugKind::linear:
      return build(r, [&](int p, int q) {
        if (r.le(p, q)) return true;
        for (const EndoFn& s : u.members())
          if (r.le(s(p), s(q))) return false;
        for (const EndoFn& tau : t.members())
          if (r.le(tau(q), tau(p))) return false;
        return true;
      });
    case AugKind::strict_linear:
      return build(r, [&](int p, int q) {
        if (r.le(p, q)) return true;
        for (const EndoFn& s : u.members())
          if (r.le(s(p), s(q))) return false;
        for (const EndoFn& tau : t.members())
          if (r.lt(tau(q), tau(p))) return false;
        return true;
      });
    case AugKind::strictive: {
      Relation out = build(r, [&](int p, int q) {
        if (r.le(p, q)) return true;
        if (!r.lt(q, p)) return false;
        return forall_exists(u, t, p, q,
                             [&](int a, int b) { return !lt(b, a); });
      });
      if (is_endofamily_of(u, r) && is_endofamily_of(t, r)) {
        Relation simple = build(r, [&](int p, int q) {
          if (r.le(p, q)) return true;
          if (!r.lt(q, p)) return false;
          return forall_exists(u, t, p, q, le);
        });
        require(simple == out, Errc::precondition,
                "strictive reformulation disagrees for endomorphic families");
      }
      return out;
    }
    case AugKind::strictive_transitive: {
      AugSpec inner = spec;
      inner.kind = AugKind::strictive;
      return transitive_aug(parametric_aug(inner, r));
    }
    case AugKind::corrective: {
      Relation out = build(r, [&](int p, int q) {
        if (r.le(p, q)) return true;
        return forall_exists(u, t, p, q, le);
      });
      if ((u.empty() || !t.empty()) && is_endofamily_of(u, r) &&
          is_endofamily_of(t, r)) {
        Relation simple =
            build(r, [&](int p, int q) { return forall_exists(u, t, p, q, le); });
        require(simple == out, Errc::precondition,
                "corrective reformulation disagrees for endomorphic families");
      }
      return out;
    }
    case AugKind::negative_strictive:
      return build(r, [&](int p, int q) {
        if (r.le(p, q)) return true;
        return forall_exists(u, t, p, q, lt);
      });
  }
  fail(Errc::unknown_id, "unhandled augmentation kind");
}

}  // namespace qopin
