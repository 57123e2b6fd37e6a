#include "qopin/relation.hpp"

#include <vector>

#include "doctest.h"

using namespace qopin;

namespace {

Relation rel(int n, std::vector<std::pair<int, int>> pairs, bool refl = true) {
  return Relation::from_pairs(n, pairs, refl);
}

// 0 == 1 below 2
Relation three_collapsed() { return rel(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("construction") {
  Relation d = rel(2, {});
  CHECK(d == Relation::diagonal(2));
  Relation chain = rel(2, {{0, 1}});
  CHECK(chain.le(0, 1));
  CHECK(!chain.le(1, 0));
  Relation q = three_collapsed();
  CHECK(q.props().reflexive);
  CHECK(q.props().transitive);
  CHECK(q.is_quasi_order());
  CHECK_THROWS_AS(rel(2, {{0, 2}}), Error);
}

TEST_CASE("strict and symmetric parts") {
  CHECK(strict_part(Relation::complete(2)) == Relation::empty_relation(2));
  CHECK(strict_part(rel(2, {{0, 1}})) ==
        Relation::from_pairs(2, std::vector<std::pair<int, int>>{{0, 1}}, false));
  CHECK(strict_part(three_collapsed()) ==
        rel(3, {{0, 2}, {1, 2}}, false));
  CHECK(symmetric_part(rel(2, {{0, 1}})) == Relation::diagonal(2));
  CHECK(symmetric_part(Relation::complete(2)) == Relation::complete(2));
  CHECK(symmetric_part(three_collapsed()) == rel(3, {{0, 1}, {1, 0}}));
}

TEST_CASE("classify") {
  PropertyReport d = classify(Relation::diagonal(2));
  CHECK(d.reflexive);
  CHECK(d.transitive);
  CHECK(d.antisymmetric);
  CHECK(!d.linear);
  PropertyReport c = classify(Relation::complete(2));
  CHECK(c.is_quasi_order());
  CHECK(c.linear);
  CHECK(c.complete);
  CHECK(!c.antisymmetric);
  CHECK(!classify(rel(3, {{0, 1}, {1, 2}})).transitive);
}

TEST_CASE("compatibility") {
  Relation v = rel(3, {{2, 0}, {2, 1}});
  CHECK(compatible(v, 0, 1));
  CHECK(!compatible(Relation::diagonal(2), 0, 1));
  // nonempty subsets of a 2-set ordered by inclusion: 0={x}, 1={y}, 2={x,y}
  Relation power = rel(3, {{0, 2}, {1, 2}});
  CHECK(!compatible(power, 0, 1));
  CHECK_THROWS_AS(compatible(rel(3, {{0, 1}, {1, 2}}), 0, 1), Error);
}

TEST_CASE("separativity") {
  Relation power = rel(3, {{0, 2}, {1, 2}});
  CHECK(is_separative(power).separative);
  // minimum element plus an incomparable pair
  Relation v = rel(3, {{2, 0}, {2, 1}});
  SeparativityResult res = is_separative(v);
  CHECK(!res.separative);
  CHECK(res.counterexample.has_value());
  CHECK(is_separative(Relation::complete(3)).separative);
}

TEST_CASE("antisymmetric quotient") {
  Quotient one = antisymmetric_quotient(Relation::complete(2));
  CHECK(one.classes.size() == 1);
  CHECK(one.relation.props().is_poset());
  Quotient chain = antisymmetric_quotient(rel(2, {{0, 1}}));
  CHECK(chain.classes.size() == 2);
  CHECK(chain.relation == rel(2, {{0, 1}}));
  Quotient q = antisymmetric_quotient(three_collapsed());
  CHECK(q.classes.size() == 2);
  CHECK(q.relation == rel(2, {{0, 1}}));
  CHECK(q.class_of[0] == q.class_of[1]);
}

TEST_CASE("separative quotient") {
  CHECK(separative_quotient(Relation::complete(2)).classes.size() == 1);
  Quotient anti = separative_quotient(Relation::diagonal(2));
  CHECK(anti.classes.size() == 2);
  CHECK(anti.relation == Relation::diagonal(2));
  CHECK(separative_quotient(rel(3, {{2, 0}, {2, 1}})).classes.size() == 1);
}

TEST_CASE("homomorphism check") {
  Relation chain = rel(2, {{0, 1}});
  std::vector<std::uint8_t> id{0, 1}, swap{1, 0}, zero{0, 0};
  CHECK(is_homomorphism(id, chain, chain));
  CHECK(is_homomorphism(zero, chain, chain));
  CHECK(!is_homomorphism(swap, chain, chain));
}

TEST_CASE("part decomposition laws on all small relations") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t total = 1ull << (n * n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Relation r = Relation::from_bits(n, bits);
      Relation strict = strict_part(r);
      Relation sym = symmetric_part(r);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          CHECK(!(strict.le(p, q) && strict.le(q, p)));
          CHECK(sym.le(p, q) == sym.le(q, p));
          if (r.is_quasi_order()) {
            CHECK(r.le(p, q) == (strict.le(p, q) || sym.le(p, q)));
            CHECK(!(strict.le(p, q) && sym.le(p, q)));
          }
        }
      if (r.is_quasi_order()) {
        CHECK(antisymmetric_quotient(r).relation.props().is_poset());
        // brute-force triple-loop oracle for separativity
        bool brute = true;
        for (int p = 0; p < n && brute; ++p)
          for (int q = 0; q < n && brute; ++q) {
            if (r.le(p, q)) continue;
            bool found = false;
            for (int c = 0; c < n && !found; ++c) {
              if (!r.le(c, p)) continue;
              bool incompat = true;
              for (int s = 0; s < n; ++s)
                if (r.le(s, c) && r.le(s, q)) incompat = false;
              if (incompat) found = true;
            }
            if (!found) brute = false;
          }
        CHECK(is_separative(r).separative == brute);
      }
    }
  }
}

TEST_CASE("quotient order does not depend on representatives") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    Relation r = Relation::from_bits(3, bits);
    if (!r.is_quasi_order()) continue;
    Quotient q = antisymmetric_quotient(r);
    for (int p = 0; p < 3; ++p)
      for (int s = 0; s < 3; ++s)
        CHECK(q.relation.le(q.class_of[p], q.class_of[s]) == r.le(p, s));
  }
}

TEST_CASE("a minimum element forces completeness or nonseparativity") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t total = 1ull << (n * n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Relation r = Relation::from_bits(n, bits);
      if (!r.is_quasi_order()) continue;
      bool has_minimum = false;
      for (int m = 0; m < n && !has_minimum; ++m) {
        bool below_all = true;
        for (int q = 0; q < n; ++q)
          if (!r.le(m, q)) below_all = false;
        has_minimum = below_all;
      }
      if (has_minimum)
        CHECK((r.props().complete || !is_separative(r).separative));
    }
  }
}

TEST_CASE("cached flags agree with a fresh scan") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    Relation r = Relation::from_bits(3, bits);
    CHECK(r.props() == classify(r));
  }
}
