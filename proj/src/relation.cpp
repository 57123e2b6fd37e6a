#include "qopin/relation.hpp"

#include <algorithm>
#include <map>

namespace qopin {

namespace {

PropertyReport scan(int n, std::uint64_t bits) {
  auto at = [&](int p, int q) -> bool { return bits >> (p * n + q) & 1u; };
  PropertyReport rep;
  rep.reflexive = true;
  rep.transitive = true;
  rep.antisymmetric = true;
  rep.linear = true;
  rep.complete = true;
  for (int p = 0; p < n; ++p) {
    if (!at(p, p)) rep.reflexive = false;
    for (int q = 0; q < n; ++q) {
      if (!at(p, q)) rep.complete = false;
      if (!at(p, q) && !at(q, p)) rep.linear = false;
      if (p != q && at(p, q) && at(q, p)) rep.antisymmetric = false;
      for (int r = 0; r < n; ++r)
        if (at(p, q) && at(q, r) && !at(p, r)) rep.transitive = false;
    }
  }
  return rep;
}

}  // namespace

Relation::Relation(int n, std::uint64_t bits)
    : n_(n), bits_(bits), props_(scan(n, bits)) {}

Relation Relation::from_bits(int n, std::uint64_t bits) {
  require(n >= 0 && n <= kMaxCarrier, Errc::range_error,
          "carrier size out of range");
  require((bits & ~full_mask(n)) == 0, Errc::range_error,
          "adjacency bits exceed carrier");
  return Relation(n, bits);
}

Relation Relation::from_pairs(int n, std::span<const std::pair<int, int>> pairs,
                              bool reflexive_closure) {
  require(n >= 0 && n <= kMaxCarrier, Errc::range_error,
          "carrier size out of range");
  std::uint64_t bits = 0;
  for (auto [p, q] : pairs) {
    require(p >= 0 && p < n && q >= 0 && q < n, Errc::range_error,
            "pair index out of range");
    bits |= 1ull << (p * n + q);
  }
  if (reflexive_closure)
    for (int p = 0; p < n; ++p) bits |= 1ull << (p * n + p);
  return Relation(n, bits);
}

Relation Relation::diagonal(int n) {
  return from_pairs(n, {}, /*reflexive_closure=*/true);
}

Relation Relation::complete(int n) {
  require(n >= 0 && n <= kMaxCarrier, Errc::range_error,
          "carrier size out of range");
  return Relation(n, full_mask(n));
}

Relation Relation::empty_relation(int n) {
  return from_pairs(n, {}, /*reflexive_closure=*/false);
}

bool Relation::subset_of(const Relation& other) const {
  require(n_ == other.n_, Errc::carrier_mismatch, "carrier mismatch");
  return (bits_ & ~other.bits_) == 0;
}

PropertyReport classify(const Relation& r) { return scan(r.size(), r.bits()); }

Relation strict_part(const Relation& r) {
  const int n = r.size();
  std::uint64_t bits = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (r.le(p, q) && !r.le(q, p)) bits |= 1ull << (p * n + q);
  return Relation::from_bits(n, bits);
}

Relation symmetric_part(const Relation& r) {
  const int n = r.size();
  std::uint64_t bits = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (r.le(p, q) && r.le(q, p)) bits |= 1ull << (p * n + q);
  return Relation::from_bits(n, bits);
}

bool compatible(const Relation& r, int p, int q) {
  require(r.is_quasi_order(), Errc::precondition,
          "compatibility is defined for quasi orders only");
  require(p >= 0 && p < r.size() && q >= 0 && q < r.size(), Errc::range_error,
          "element out of range");
  for (int c = 0; c < r.size(); ++c)
    if (r.le(c, p) && r.le(c, q)) return true;
  return false;
}

SeparativityResult is_separative(const Relation& r) {
  require(r.is_quasi_order(), Errc::precondition,
          "separativity is defined for quasi orders only");
  const int n = r.size();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (r.le(p, q)) continue;
      bool witnessed = false;
      for (int c = 0; c < n && !witnessed; ++c)
        if (r.le(c, p) && !compatible(r, c, q)) witnessed = true;
      if (!witnessed) return {false, std::make_pair(p, q)};
    }
  return {true, std::nullopt};
}

namespace {

Quotient quotient_by_classes(const Relation& r, const std::vector<int>& key) {
  // key[p] == key[q] holds exactly when p and q share a class; classes are
  // ordered by least member so the output is deterministic.
  const int n = r.size();
  Quotient out;
  out.class_of.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    if (out.class_of[p] >= 0) continue;
    int idx = static_cast<int>(out.classes.size());
    out.classes.emplace_back();
    for (int q = p; q < n; ++q)
      if (out.class_of[q] < 0 && key[q] == key[p]) {
        out.class_of[q] = idx;
        out.classes[idx].push_back(q);
      }
  }
  return out;
}

}  // namespace

Quotient antisymmetric_quotient(const Relation& r) {
  require(r.is_quasi_order(), Errc::precondition,
          "antisymmetric quotient is defined for quasi orders only");
  const int n = r.size();
  // For a quasi order the symmetric part is an equivalence; use the least
  // equivalent element as the class key.
  std::vector<int> key(n);
  for (int p = 0; p < n; ++p) {
    int least = p;
    for (int q = 0; q < n; ++q)
      if (r.equiv(p, q) && q < least) least = q;
    key[p] = least;
  }
  Quotient out = quotient_by_classes(r, key);
  const int k = static_cast<int>(out.classes.size());
  std::uint64_t bits = 0;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (r.le(out.classes[a][0], out.classes[b][0])) bits |= 1ull << (a * k + b);
  out.relation = Relation::from_bits(k, bits);
  return out;
}

Quotient separative_quotient(const Relation& r) {
  require(r.is_quasi_order(), Errc::precondition,
          "separative quotient is defined for quasi orders only");
  const int n = r.size();
  std::vector<std::uint32_t> comp(n, 0);  // compatibility set of each element
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (compatible(r, p, q)) comp[p] |= 1u << q;
  std::vector<int> key(n);
  for (int p = 0; p < n; ++p) {
    int least = p;
    for (int q = 0; q < p; ++q)
      if (comp[q] == comp[p] && q < least) least = q;
    key[p] = least;
  }
  Quotient out = quotient_by_classes(r, key);
  const int k = static_cast<int>(out.classes.size());
  std::uint64_t bits = 0;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      std::uint32_t ca = comp[out.classes[a][0]];
      std::uint32_t cb = comp[out.classes[b][0]];
      if ((ca & ~cb) == 0) bits |= 1ull << (a * k + b);
    }
  out.relation = Relation::from_bits(k, bits);
  return out;
}

bool is_homomorphism(std::span<const std::uint8_t> f, const Relation& dom,
                     const Relation& cod) {
  require(static_cast<int>(f.size()) == dom.size(), Errc::carrier_mismatch,
          "function table does not match the domain carrier");
  for (std::uint8_t v : f)
    require(v < cod.size(), Errc::range_error,
            "function value outside the codomain carrier");
  for (int p = 0; p < dom.size(); ++p)
    for (int q = 0; q < dom.size(); ++q)
      if (dom.le(p, q) && !cod.le(f[p], f[q])) return false;
  return true;
}

}  // namespace qopin
