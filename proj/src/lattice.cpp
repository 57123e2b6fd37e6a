#include "qopin/lattice.hpp"

#include "qopin/augment.hpp"

namespace qopin {

bool MeetJoinTable::all_nonempty() const {
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (meet_set(p, q) == 0 || join_set(p, q) == 0) return false;
  return true;
}

MeetJoinTable meet_join(const Relation& r) {
  require(r.is_quasi_order(), Errc::precondition,
          "infimum/supremum sets are defined for quasi orders only");
  const int n = r.size();
  MeetJoinTable table;
  table.n = n;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      std::uint8_t lower = 0, upper = 0;
      for (int s = 0; s < n; ++s) {
        if (r.le(s, p) && r.le(s, q)) lower |= static_cast<std::uint8_t>(1u << s);
        if (r.le(p, s) && r.le(q, s)) upper |= static_cast<std::uint8_t>(1u << s);
      }
      std::uint8_t meets = 0, joins = 0;
      for (int c = 0; c < n; ++c) {
        if (lower >> c & 1u) {
          bool greatest = true;
          for (int s = 0; s < n && greatest; ++s)
            if ((lower >> s & 1u) && !r.le(s, c)) greatest = false;
          if (greatest) meets |= static_cast<std::uint8_t>(1u << c);
        }
        if (upper >> c & 1u) {
          bool least = true;
          for (int s = 0; s < n && least; ++s)
            if ((upper >> s & 1u) && !r.le(c, s)) least = false;
          if (least) joins |= static_cast<std::uint8_t>(1u << c);
        }
      }
      table.meet[p * n + q] = meets;
      table.join[p * n + q] = joins;
    }
  return table;
}

bool is_quasi_lattice(const Relation& r) {
  require(r.is_quasi_order(), Errc::precondition,
          "quasi lattices are quasi orders");
  bool direct = meet_join(r).all_nonempty();

  // Second route: the antisymmetric quotient must be a lattice, meaning all
  // of its infimum/supremum sets exist and are singletons.
  Quotient q = antisymmetric_quotient(r);
  MeetJoinTable qt = meet_join(q.relation);
  bool via_quotient = true;
  for (int a = 0; a < q.relation.size() && via_quotient; ++a)
    for (int b = 0; b < q.relation.size() && via_quotient; ++b) {
      int meets = __builtin_popcount(qt.meet_set(a, b));
      int joins = __builtin_popcount(qt.join_set(a, b));
      if (meets != 1 || joins != 1) via_quotient = false;
    }
  require(direct == via_quotient, Errc::precondition,
          "quasi lattice check disagrees with the quotient-lattice check");
  return direct;
}

bool is_ql_endomorphism(const Relation& r, const EndoFn& f) {
  require(is_quasi_lattice(r), Errc::precondition,
          "quasi lattice endomorphisms need a quasi lattice");
  require(f.carrier() == r.size(), Errc::carrier_mismatch, "carrier mismatch");
  MeetJoinTable table = meet_join(r);
  const int n = r.size();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int s = 0; s < n; ++s) {
        if ((table.meet_set(p, q) >> s & 1u) &&
            !(table.meet_set(f(p), f(q)) >> f(s) & 1u))
          return false;
        if ((table.join_set(p, q) >> s & 1u) &&
            !(table.join_set(f(p), f(q)) >> f(s) & 1u))
          return false;
      }
  // Preserving infimum sets entails order preservation.
  require(is_homomorphism(f.table(), r, r), Errc::precondition,
          "infimum-preserving map fails order preservation");
  return true;
}

EndoFamily ql_endomorphisms(const Relation& r, int guard) {
  EndoFamily all = endomorphisms(r, guard);
  std::vector<EndoFn> kept;
  for (const EndoFn& f : all.members())
    if (is_ql_endomorphism(r, f)) kept.push_back(f);
  return EndoFamily(r.size(), std::move(kept));
}

int two_step_decompose(const Relation& r, const EndoFamily& lambda,
                       const EndoFamily& pi, int p, int q) {
  require(is_quasi_lattice(r), Errc::precondition,
          "two-step decomposition needs a quasi lattice");
  for (const EndoFn& f : lambda.members())
    require(is_ql_endomorphism(r, f), Errc::precondition,
            "first family member is not a quasi lattice endomorphism");
  for (const EndoFn& f : pi.members())
    require(is_ql_endomorphism(r, f), Errc::precondition,
            "second family member is not a quasi lattice endomorphism");
  Relation cor = parametric_aug({AugKind::corrective, lambda, pi}, r);
  require(cor.le(p, q), Errc::precondition,
          "p is not corrective-related to q");
  Relation str = parametric_aug({AugKind::strictive, lambda, pi}, r);
  MeetJoinTable table = meet_join(r);
  for (int c = 0; c < r.size(); ++c) {
    if (!(table.meet_set(p, q) >> c & 1u)) continue;
    if (str.le(p, c) && str.le(c, q)) return c;
  }
  fail(Errc::precondition, "no infimum completes the two-step decomposition");
}

}  // namespace qopin
