#include "qopin/pinning.hpp"

#include "doctest.h"

using namespace qopin;

namespace {

EndoFn fn(std::vector<std::uint8_t> t) {
  return EndoFn(static_cast<int>(t.size()), t);
}

Relation chain2() {
  return Relation::from_pairs(2, std::vector<std::pair<int, int>>{{0, 1}},
                              true);
}

}  // namespace

TEST_CASE("single pin checks") {
  EndoFamily just_id(2, {EndoFn::identity(2)});
  CHECK(pins(EndoFn::identity(2), Ineq::lt, 0, 1, just_id, chain2()));
  EndoFamily consts(2, {fn({0, 0})});
  CHECK(!pins(EndoFn::identity(2), Ineq::nleq, 1, 0, consts, chain2()));
}

TEST_CASE("endomorphisms always pin the base inequality") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    Relation r = Relation::from_bits(3, bits);
    EndoFamily endos = endomorphisms(r);
    for (const EndoFn& sigma : endos.members())
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
          if (r.le(p, q)) CHECK(pins(sigma, Ineq::le, p, q, endos, r));
  }
}

TEST_CASE("family pinning") {
  // no strict pairs: vacuous
  EndoFamily empty(2, {});
  CHECK(family_pins(empty, Ineq::lt, empty, Relation::complete(2)).holds);

  EndoFamily endos = endomorphisms(Relation::diagonal(2));
  PropertyVerdict v = family_pins(endos, Ineq::nleq, endos,
                                  Relation::diagonal(2));
  CHECK(!v.holds);
  CHECK(v.refutation.has_value());
}

TEST_CASE("pinning a relation extends to its converse") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    Relation r = Relation::from_bits(3, bits);
    EndoFamily endos = endomorphisms(r);
    bool le_pinned = family_pins(endos, Ineq::le, endos, r).holds;
    bool ge_pinned = family_pins(endos, Ineq::ge, endos, r).holds;
    CHECK(le_pinned == ge_pinned);
  }
}

TEST_CASE("property checks") {
  EndoFamily just_id(2, {EndoFn::identity(2)});
  CHECK(check_property(PropertyId::linear, Relation::complete(2), just_id,
                       just_id)
            .holds);
  EndoFamily endos = endomorphisms(Relation::diagonal(2));
  PropertyVerdict v = check_property(PropertyId::correct,
                                     Relation::diagonal(2), endos, endos);
  CHECK(!v.holds);
  CHECK_THROWS_AS(parse_property_id("bogus"), Error);
  CHECK(parse_property_id("neg-strict") == PropertyId::neg_strict);
}

TEST_CASE("linearity is symmetric in its parameters") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    Relation r = Relation::from_bits(3, bits);
    EndoFamily endos = endomorphisms(r);
    EndoFamily just_id(3, {EndoFn::identity(3)});
    CHECK(check_property(PropertyId::linear, r, endos, just_id).holds ==
          check_property(PropertyId::linear, r, just_id, endos).holds);
  }
}

TEST_CASE("strict linearity entails linearity and matches it when symmetric") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    Relation r = Relation::from_bits(3, bits);
    EndoFamily endos = endomorphisms(r);
    EndoFamily just_id(3, {EndoFn::identity(3)});
    for (const EndoFamily* u : {&just_id, &endos})
      for (const EndoFamily* t : {&just_id, &endos}) {
        if (check_property(PropertyId::strict_linear, r, *u, *t).holds)
          CHECK(check_property(PropertyId::linear, r, *u, *t).holds);
      }
    CHECK(check_property(PropertyId::strict_linear, r, endos, endos).holds ==
          check_property(PropertyId::linear, r, endos, endos).holds);
  }
}

TEST_CASE("enlarging the families never breaks linearity") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    Relation r = Relation::from_bits(3, bits);
    EndoFamily just_id(3, {EndoFn::identity(3)});
    EndoFamily with_const(3, {EndoFn::identity(3), EndoFn::constant(3, 0)});
    EndoFamily endos = endomorphisms(r);
    auto join = [&](const EndoFamily& a, const EndoFamily& b) {
      std::vector<EndoFn> members = a.members();
      members.insert(members.end(), b.members().begin(), b.members().end());
      return EndoFamily(3, members);
    };
    for (PropertyId id : {PropertyId::linear, PropertyId::strict_linear}) {
      if (check_property(id, r, just_id, just_id).holds) {
        CHECK(check_property(id, r, with_const, with_const).holds);
        CHECK(check_property(id, r, join(just_id, endos),
                             join(just_id, endos))
                  .holds);
      }
      if (check_property(id, r, with_const, just_id).holds)
        CHECK(check_property(id, r, join(with_const, endos),
                             join(just_id, with_const))
                  .holds);
    }
  }
}

TEST_CASE("witnesses come back for holding verdicts") {
  Relation r = chain2();
  EndoFamily just_id(2, {EndoFn::identity(2)});
  PropertyVerdict v = check_property(PropertyId::correct, r, just_id, just_id);
  CHECK(v.holds);
  CHECK(!v.witnesses.empty());
  CHECK(!v.refutation.has_value());
}
