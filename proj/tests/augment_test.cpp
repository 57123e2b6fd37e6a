#include "qopin/augment.hpp"

#include "doctest.h"
#include "qopin/pinning.hpp"

using namespace qopin;

namespace {

Relation rel(int n, std::vector<std::pair<int, int>> pairs, bool refl = true) {
  return Relation::from_pairs(n, pairs, refl);
}

Relation chain(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return transitive_aug(rel(n, pairs));
}

}  // namespace

TEST_CASE("homomorphic augmentation") {
  Relation r = chain(3);
  std::vector<std::uint8_t> id{0, 1, 2};
  CHECK(homomorphic_aug(id, r, 3) == r);
  std::vector<std::uint8_t> constant{1, 1, 1};
  CHECK(homomorphic_aug(constant, r, 3) == Relation::complete(3));
  std::vector<std::uint8_t> inclusion{0, 1};
  CHECK(homomorphic_aug(inclusion, r, 2) == chain(2));
}

TEST_CASE("restrictive augmentation") {
  Relation r = chain(3);
  CHECK(restrictive_aug(r, 0b111) == r);
  CHECK(restrictive_aug(r, 0) == Relation::complete(3));
  CHECK(restrictive_aug(r, 0b001) == Relation::complete(3));
  // shrinking the subset only augments
  for (std::uint8_t x = 0; x < 8; ++x)
    for (std::uint8_t y = 0; y < 8; ++y)
      if ((x & ~y) == 0) CHECK(restrictive_aug(r, y).subset_of(restrictive_aug(r, x)));
}

TEST_CASE("separative augmentation") {
  Relation power = rel(3, {{0, 2}, {1, 2}});
  CHECK(separative_aug(power) == power);
  CHECK(separative_aug(rel(3, {{2, 0}, {2, 1}})) == Relation::complete(3));
  CHECK(separative_aug(Relation::complete(3)) == Relation::complete(3));
}

TEST_CASE("antisymmetric diminishment") {
  CHECK(antisymmetric_dim(Relation::complete(3)) == Relation::diagonal(3));
  Relation poset = chain(3);
  CHECK(antisymmetric_dim(poset) == poset);
  Relation q = rel(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}});
  CHECK(antisymmetric_dim(q) == rel(3, {{0, 2}, {1, 2}}));
}

TEST_CASE("transitive augmentation") {
  Relation r = rel(3, {{0, 1}, {1, 2}});
  Relation closed = transitive_aug(r);
  CHECK(closed.le(0, 2));
  CHECK(closed == chain(3));
  CHECK(transitive_aug(closed) == closed);
  // transitivity alone is preserved exactly, even without reflexivity
  Relation empty = Relation::empty_relation(3);
  CHECK(transitive_aug(empty) == empty);
  Relation cycle = rel(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(transitive_aug(cycle) == Relation::complete(3));
}

TEST_CASE("parametric augmentations with the identity family") {
  EndoFamily just_id(3, {EndoFn::identity(3)});
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    Relation r = Relation::from_bits(3, bits);
    CHECK(parametric_aug({AugKind::strictive, just_id, just_id}, r) == r);
    CHECK(parametric_aug({AugKind::negative_strictive, just_id, just_id}, r) ==
          r);
  }
  EndoFamily id2(2, {EndoFn::identity(2)});
  CHECK(parametric_aug({AugKind::linear, id2, id2}, Relation::diagonal(2)) ==
        Relation::complete(2));
}

TEST_CASE("corrective extremes") {
  EndoFamily endos = endomorphisms(Relation::diagonal(2));
  CHECK(parametric_aug({AugKind::corrective, endos, endos},
                       Relation::diagonal(2)) == Relation::complete(2));
  // order reflecting parameters leave the relation alone
  Relation r = chain(2);
  EndoFamily reflecting(2, {EndoFn::identity(2)});
  CHECK(parametric_aug({AugKind::corrective, reflecting, reflecting}, r) == r);
}

TEST_CASE("empty families evaluate by vacuity") {
  Relation r = chain(2);
  EndoFamily none(2, {});
  // for all sigma over the empty family is true, so everything is related
  CHECK(parametric_aug({AugKind::corrective, none, none}, r) ==
        Relation::complete(2));
  CHECK(parametric_aug({AugKind::linear, none, none}, r) ==
        Relation::complete(2));
  // exists tau over the empty family is false
  EndoFamily just_id(2, {EndoFn::identity(2)});
  CHECK(parametric_aug({AugKind::corrective, just_id, none}, r) == r);
}

TEST_CASE("fixed point laws on small instances") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    Relation r = Relation::from_bits(3, bits);
    EndoFamily endos = endomorphisms(r);
    AugSpec lin{AugKind::linear, endos, endos};
    if (check_property(PropertyId::linear, r, endos, endos).holds)
      CHECK(parametric_aug(lin, r) == r);
    AugSpec cor{AugKind::corrective, endos, endos};
    if (check_property(PropertyId::correct, r, endos, endos).holds)
      CHECK(parametric_aug(cor, r) == r);
    if (r.props().transitive) CHECK(transitive_aug(r) == r);
  }
}

TEST_CASE("augmentation direction") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    Relation r = Relation::from_bits(3, bits);
    EndoFamily endos = endomorphisms(r);
    for (AugKind kind : {AugKind::linear, AugKind::strict_linear,
                         AugKind::strictive, AugKind::strictive_transitive,
                         AugKind::corrective, AugKind::negative_strictive})
      CHECK(r.subset_of(parametric_aug({kind, endos, endos}, r)));
    if (r.is_quasi_order()) CHECK(antisymmetric_dim(r).subset_of(r));
  }
}

TEST_CASE("homomorphic augmentation laws") {
  // augmentation exactly for order preserving maps; quasi orders and
  // posets transfer along the map
  for (std::uint64_t rb = 0; rb < 512; rb += 7) {
    Relation r = Relation::from_bits(3, rb);
    for (std::uint64_t sb = 0; sb < 512; sb += 11) {
      Relation s = Relation::from_bits(3, sb);
      std::array<std::uint8_t, 3> f{};
      for (f[0] = 0; f[0] < 3; ++f[0])
        for (f[1] = 0; f[1] < 3; ++f[1])
          for (f[2] = 0; f[2] < 3; ++f[2]) {
            Relation induced = homomorphic_aug(f, s, 3);
            CHECK(r.subset_of(induced) == is_homomorphism(f, r, s));
            if (s.is_quasi_order()) CHECK(induced.is_quasi_order());
            bool injective = f[0] != f[1] && f[0] != f[2] && f[1] != f[2];
            if (injective && s.props().is_poset())
              CHECK(induced.props().is_poset());
          }
    }
  }
}

TEST_CASE("kind names parse") {
  CHECK(parse_aug_kind("strictive-transitive") ==
        AugKind::strictive_transitive);
  CHECK(aug_kind_name(AugKind::negative_strictive) == "negative-strictive");
  CHECK_THROWS_AS(parse_aug_kind("nope"), Error);
}
