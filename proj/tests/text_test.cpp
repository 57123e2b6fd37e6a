#include "qopin/text.hpp"

#include "doctest.h"
#include "qopin/rng.hpp"

using namespace qopin;

TEST_CASE("relation format") {
  Relation chain = parse_relation("n 2\nreflexive\n0 1\n");
  CHECK(chain.le(0, 0));
  CHECK(chain.le(0, 1));
  CHECK(!chain.le(1, 0));
  CHECK(parse_relation(serialize_relation(chain)) == chain);
  CHECK_THROWS_AS(parse_relation("2\n0 1"), Error);
  CHECK_THROWS_AS(parse_relation("n 2\n0 5"), Error);
  CHECK_THROWS_AS(parse_relation("n 2\n0 1 junk"), Error);
  CHECK_THROWS_AS(parse_relation(""), Error);
}

TEST_CASE("family format") {
  EndoFamily swap = parse_family("f: 1 0\n");
  CHECK(swap.carrier() == 2);
  CHECK(swap.size() == 1);
  CHECK(parse_family(serialize_family(swap), 2) == swap);
  CHECK(parse_family("", 3).empty());
  CHECK_THROWS_AS(parse_family(""), Error);
  CHECK_THROWS_AS(parse_family("f: 0 2\n"), Error);
  CHECK_THROWS_AS(parse_family("g: 0 1\n"), Error);
}

TEST_CASE("sequence literals") {
  UPSeq x = parse_upseq("[2|1]");
  CHECK(x.prefix() == std::vector<std::uint64_t>{2});
  CHECK(x.period() == std::vector<std::uint64_t>{1});
  CHECK(parse_upseq("[|0]") == UPSeq::zero());
  CHECK(serialize_upseq(x) == "[2|1]");
  CHECK_THROWS_AS(parse_upseq("[2|]"), Error);
  CHECK_THROWS_AS(parse_upseq("[2|1] extra"), Error);
  CHECK_THROWS_AS(parse_upseq("2|1"), Error);
}

TEST_CASE("set literals") {
  UPSet evens = parse_upset("[|1,0]");
  CHECK(evens == UPSet::evens());
  CHECK(serialize_upset(evens) == "[|1,0]");
  CHECK_THROWS_AS(parse_upset("[|2]"), Error);
}

TEST_CASE("injection literals") {
  BAInj e = parse_bainj("exc=[0]; block=(1,3;4)");
  CHECK(e.apply(0) == 0);
  CHECK(e.apply(1) == 4);
  CHECK(e.apply(2) == 7);
  CHECK(parse_bainj(serialize_bainj(e)) == e);
  CHECK(parse_bainj("exc=[]; block=(1,1;0)") == BAInj::identity());
  CHECK_THROWS_AS(parse_bainj("exc=[0]; block=(2,2;0,2)"), Error);
  CHECK_THROWS_AS(parse_bainj("exc=[]; block=(1,0;0)"), Error);
}

TEST_CASE("round trips on random values") {
  SplitMix64 rng(99);
  for (int i = 0; i < 300; ++i) {
    int n = 1 + static_cast<int>(rng.below(4));
    Relation r = Relation::from_bits(n, rng.next() & Relation::full_mask(n));
    CHECK(parse_relation(serialize_relation(r)) == r);

    EndoFamily endos = endomorphisms(r, 4);
    CHECK(parse_family(serialize_family(endos), n) == endos);

    UPSeq x = sample_upseq(rng);
    CHECK(parse_upseq(serialize_upseq(x)) == x);

    std::vector<std::uint8_t> pre(rng.below(4)), per(1 + rng.below(3));
    for (auto& b : pre) b = rng.coin();
    for (auto& b : per) b = rng.coin();
    UPSet s(pre, per);
    CHECK(parse_upset(serialize_upset(s)) == s);

    std::vector<BAInj> h = sample_proj(rng.next(), 1);
    CHECK(parse_bainj(serialize_bainj(h[0])) == h[0]);
  }
}
