#include "qopin/endo.hpp"

#include "doctest.h"
#include "qopin/augment.hpp"

using namespace qopin;

namespace {

EndoFn fn(std::vector<std::uint8_t> t) {
  return EndoFn(static_cast<int>(t.size()), t);
}

}  // namespace

TEST_CASE("endomorphism enumeration") {
  CHECK(endomorphisms(Relation::diagonal(2)).size() == 4);
  Relation chain = Relation::from_pairs(
      2, std::vector<std::pair<int, int>>{{0, 1}}, true);
  EndoFamily e = endomorphisms(chain);
  CHECK(e.size() == 3);
  CHECK(e.contains(fn({0, 0})));
  CHECK(e.contains(fn({0, 1})));
  CHECK(e.contains(fn({1, 1})));
  CHECK(!e.contains(fn({1, 0})));
  CHECK(endomorphisms(Relation::complete(2)).size() == 4);
  CHECK_THROWS_AS(endomorphisms(Relation::diagonal(6)), Error);
}

TEST_CASE("composition closure") {
  EndoFamily swap_only(2, {fn({1, 0})});
  EndoFamily closed = close_under_composition(swap_only, false);
  CHECK(closed.size() == 2);
  CHECK(closed.contains(EndoFn::identity(2)));
  CHECK(closed.is_submonoid());

  EndoFamily constant(2, {fn({0, 0})});
  CHECK(close_under_composition(constant, false).size() == 1);

  EndoFamily succ(3, {fn({1, 2, 0})});
  EndoFamily rotations = close_under_composition(succ, false);
  CHECK(rotations.size() == 3);

  CHECK_THROWS_AS(
      close_under_composition(endomorphisms(Relation::diagonal(3)), true, 5),
      Error);
}

TEST_CASE("closure is idempotent and extensive") {
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    Relation r = Relation::from_bits(2, bits);
    EndoFamily endos = endomorphisms(r);
    CHECK(endos.closed_under_composition());
    CHECK(endos.contains_identity());
    for (const EndoFn& f : endos.members())
      for (const EndoFn& g : endos.members()) {
        EndoFamily gens(2, {f, g});
        EndoFamily once = close_under_composition(gens, false);
        EndoFamily twice = close_under_composition(once, false);
        CHECK(once == twice);
        for (const EndoFn& h : gens.members()) CHECK(once.contains(h));
      }
  }
}

TEST_CASE("endomorphisms survive the transitive augmentation") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    Relation r = Relation::from_bits(3, bits);
    Relation closure = transitive_aug(r);
    EndoFamily endos = endomorphisms(r);
    for (const EndoFn& f : endos.members())
      CHECK(is_homomorphism(f.table(), closure, closure));
  }
}

TEST_CASE("side conditions") {
  EndoFamily just_id(2, {EndoFn::identity(2)});
  CHECK(check_side_condition(SideCondition::pi_lambda_in_lambda, just_id,
                             just_id)
            .holds);
  EndoFamily any(2, {fn({0, 0}), fn({1, 1})});
  CHECK(check_side_condition(SideCondition::pi_sigma_in_pi, just_id, any)
            .holds);

  EndoFamily lambda(2, {fn({0, 0})});
  EndoFamily pi(2, {EndoFn::identity(2), fn({1, 0})});
  SideConditionResult res = check_side_condition(
      SideCondition::pi_lambda_pi_eq_lambda, lambda, pi);
  CHECK(!res.holds);
  CHECK(res.witness.find("1 1") != std::string::npos);

  CHECK(parse_side_condition("pi-lambda-in-lambda") ==
        SideCondition::pi_lambda_in_lambda);
  CHECK(parse_side_condition("Π∘Λ⊆Λ") == SideCondition::pi_lambda_in_lambda);
  CHECK_THROWS_AS(parse_side_condition("nonsense"), Error);
}

TEST_CASE("endofamily membership") {
  Relation chain = Relation::from_pairs(
      2, std::vector<std::pair<int, int>>{{0, 1}}, true);
  CHECK(is_endofamily_of(endomorphisms(chain), chain));
  CHECK(!is_endofamily_of(EndoFamily(2, {fn({1, 0})}), chain));
  CHECK(is_endofamily_of(EndoFamily(2, {}), chain));
}

TEST_CASE("injectivity and surjectivity") {
  CHECK(fn({1, 0}).is_injective());
  CHECK(fn({1, 0}).is_surjective());
  CHECK(!fn({0, 0}).is_injective());
  CHECK(!fn({0, 0}).is_surjective());
}
