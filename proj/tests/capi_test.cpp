#include "qopin.h"

#include <string>

#include "doctest.h"

namespace {

std::string take(char* ptr) {
  std::string out = ptr ? ptr : "";
  qop_string_free(ptr);
  return out;
}

}  // namespace

TEST_CASE("relation lifecycle through the C surface") {
  qop_relation* rel = nullptr;
  REQUIRE(qop_relation_parse("n 2\nreflexive\n0 1\n", &rel) == QOP_OK);
  CHECK(qop_relation_size(rel) == 2);
  CHECK(qop_relation_le(rel, 0, 1) == 1);
  CHECK(qop_relation_le(rel, 1, 0) == 0);
  qop_props props{};
  REQUIRE(qop_relation_classify(rel, &props) == QOP_OK);
  CHECK(props.quasi_order == 1);
  CHECK(props.poset == 1);
  CHECK(props.linear == 1);

  char* text = nullptr;
  REQUIRE(qop_relation_serialize(rel, &text) == QOP_OK);
  qop_relation* again = nullptr;
  REQUIRE(qop_relation_parse(text, &again) == QOP_OK);
  CHECK(qop_relation_le(again, 0, 1) == 1);
  qop_string_free(text);
  qop_relation_free(again);
  qop_relation_free(rel);

  qop_relation* bad = nullptr;
  CHECK(qop_relation_parse("nonsense", &bad) == QOP_ERR_PARSE);
  CHECK(std::string(qop_last_error()).find("line") != std::string::npos);
}

TEST_CASE("augment and check through the C surface") {
  qop_relation* rel = nullptr;
  REQUIRE(qop_relation_make(2, nullptr, 0, 1, &rel) == QOP_OK);  // antichain
  qop_family* endos = nullptr;
  REQUIRE(qop_family_endomorphisms(rel, 5, &endos) == QOP_OK);
  CHECK(qop_family_size(endos) == 4);

  qop_relation* cor = nullptr;
  REQUIRE(qop_relation_augment(rel, "corrective", endos, endos, &cor) ==
          QOP_OK);
  qop_props props{};
  qop_relation_classify(cor, &props);
  CHECK(props.complete == 1);

  int holds = -1;
  char* cert = nullptr;
  REQUIRE(qop_check_property(rel, "correct", endos, endos, &holds, &cert) ==
          QOP_OK);
  CHECK(holds == 0);
  CHECK(take(cert).find("refuted") != std::string::npos);

  qop_relation* bad = nullptr;
  CHECK(qop_relation_augment(rel, "no-such-kind", endos, endos, &bad) ==
        QOP_ERR_UNKNOWN_ID);

  qop_relation_free(cor);
  qop_family_free(endos);
  qop_relation_free(rel);
}

TEST_CASE("sequences through the C surface") {
  qop_upseq* x = nullptr;
  qop_upseq* y = nullptr;
  REQUIRE(qop_upseq_parse("[2|1]", &x) == QOP_OK);
  REQUIRE(qop_upseq_parse("[|1]", &y) == QOP_OK);
  qop_compare_flags flags{};
  REQUIRE(qop_upseq_compare(x, y, &flags) == QOP_OK);
  CHECK(flags.le == 0);
  CHECK(flags.le_star == 1);
  CHECK(flags.eq_star == 1);
  int holds = 0;
  REQUIRE(qop_closed_form("le_star_cor", x, y, &holds) == QOP_OK);
  CHECK(holds == 1);
  char* text = nullptr;
  REQUIRE(qop_upseq_serialize(x, &text) == QOP_OK);
  CHECK(take(text) == "[2|1]");
  qop_upseq_free(x);
  qop_upseq_free(y);
}

TEST_CASE("demos and suites through the C surface") {
  char* demo = nullptr;
  REQUIRE(qop_baire_demo("x15", &demo) == QOP_OK);
  std::string text = take(demo);
  CHECK(text.find("not transitive") != std::string::npos);
  char* other = nullptr;
  REQUIRE(qop_baire_demo("nontransitive-triple", &other) == QOP_OK);
  CHECK(take(other) == text);
  CHECK(qop_baire_demo("no-such-demo", &other) == QOP_ERR_UNKNOWN_ID);

  char* report = nullptr;
  int64_t violations = -1;
  REQUIRE(qop_verify(2, 7, 0, &report, &violations) == QOP_OK);
  std::string body = take(report);
  CHECK(violations == 0);
  CHECK(body.find("CLAIM l-16 ") != std::string::npos);
  CHECK(body.find("TOTAL claims=44") != std::string::npos);

  char* dot = nullptr;
  REQUIRE(qop_figure1(2, 7, 20, &dot) == QOP_OK);
  CHECK(take(dot).find("digraph implications") != std::string::npos);
}
