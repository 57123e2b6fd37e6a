// Command line front end; talks to the shared library through its C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qopin.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { qop_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

int report_error(qop_status status) {
  std::cerr << "error: " << qop_status_name(status) << ": " << qop_last_error()
            << "\n";
  return status == QOP_ERR_PARSE || status == QOP_ERR_UNKNOWN_ID ||
                 status == QOP_ERR_BAD_ARGUMENT
             ? kExitUsage
             : kExitViolation;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(path);
  if (!out) return false;
  out << text;
  return true;
}

struct RelationHandle {
  qop_relation* ptr = nullptr;
  ~RelationHandle() { qop_relation_free(ptr); }
};

struct FamilyHandle {
  qop_family* ptr = nullptr;
  ~FamilyHandle() { qop_family_free(ptr); }
};

int load_relation(const std::string& path, RelationHandle& rel) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read relation file: " << path << "\n";
    return kExitUsage;
  }
  if (qop_status s = qop_relation_parse(text.c_str(), &rel.ptr); s != QOP_OK)
    return report_error(s);
  return kExitOk;
}

int load_family(const std::string& path, int carrier, bool endomorphisms,
                const RelationHandle& rel, FamilyHandle& fam) {
  if (path.empty()) {
    qop_status s = endomorphisms
                       ? qop_family_endomorphisms(rel.ptr, 5, &fam.ptr)
                       : qop_family_parse("", carrier, &fam.ptr);
    return s == QOP_OK ? kExitOk : report_error(s);
  }
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read family file: " << path << "\n";
    return kExitUsage;
  }
  if (qop_status s = qop_family_parse(text.c_str(), carrier, &fam.ptr);
      s != QOP_OK)
    return report_error(s);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for quasi order augmentations and pinning"};
  app.require_subcommand(1);

  std::string check_relation, check_prop, check_upsilon, check_theta;
  bool check_endos = false;
  CLI::App* check = app.add_subcommand(
      "check", "classify a relation and test a pinning property");
  check->add_option("relation", check_relation, "relation file")->required();
  check->add_option("--prop", check_prop,
                    "linear, strict-linear, strict, correct or neg-strict");
  check->add_option("--upsilon", check_upsilon, "first family file");
  check->add_option("--theta", check_theta, "second family file");
  check->add_flag("--endomorphisms", check_endos,
                  "use the full endomorphism monoid for absent families");

  std::string aug_relation, aug_kind, aug_upsilon, aug_theta, aug_out;
  bool aug_endos = false;
  CLI::App* augment =
      app.add_subcommand("augment", "apply an augmentation operator");
  augment->add_option("relation", aug_relation, "relation file")->required();
  augment->add_option("--kind", aug_kind, "operator kind")->required();
  augment->add_option("--upsilon", aug_upsilon, "first family file");
  augment->add_option("--theta", aug_theta, "second family file");
  augment->add_flag("--endomorphisms", aug_endos,
                    "use the full endomorphism monoid for absent families");
  augment->add_option("--out", aug_out, "output file (default stdout)");

  int verify_max_n = 3;
  std::uint64_t verify_seed = 1, verify_budget = 2000;
  std::string verify_out;
  CLI::App* verify =
      app.add_subcommand("verify", "run the registered claim suite");
  verify->add_option("--max-n", verify_max_n, "largest carrier (3 or 4)");
  verify->add_option("--seed", verify_seed, "sampling seed");
  verify->add_option("--budget", verify_budget, "sampled instances per claim");
  verify->add_option("--out", verify_out, "report file (default stdout)");

  int search_max_n = 3;
  std::uint64_t search_seed = 1, search_budget = 2000;
  std::string search_out;
  CLI::App* search =
      app.add_subcommand("search", "re-verify and search the non-arrows");
  search->add_option("--max-n", search_max_n, "largest carrier for the scan");
  search->add_option("--seed", search_seed, "sampling seed");
  search->add_option("--budget", search_budget, "instances per separation");
  search->add_option("--out", search_out, "report file (default stdout)");

  int fig_max_n = 3;
  std::uint64_t fig_seed = 1, fig_budget = 2000;
  std::string fig_out;
  CLI::App* figure1 =
      app.add_subcommand("figure1", "emit the implication diagram as DOT");
  figure1->add_option("--max-n", fig_max_n, "largest carrier");
  figure1->add_option("--seed", fig_seed, "sampling seed");
  figure1->add_option("--budget", fig_budget, "instances per claim");
  figure1->add_option("--out", fig_out, "DOT file (default stdout)");

  std::string demo;
  CLI::App* baire =
      app.add_subcommand("baire", "symbolic demonstrations on sequences");
  baire->add_option("--demo", demo,
                    "nontransitive-triple, eventual-dominance or two-step")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (check->parsed()) {
    RelationHandle rel;
    if (int code = load_relation(check_relation, rel); code != kExitOk)
      return code;
    qop_props props{};
    qop_relation_classify(rel.ptr, &props);
    std::cout << "carrier " << qop_relation_size(rel.ptr) << "\n"
              << "reflexive " << (props.reflexive ? "yes" : "no") << "\n"
              << "transitive " << (props.transitive ? "yes" : "no") << "\n"
              << "antisymmetric " << (props.antisymmetric ? "yes" : "no")
              << "\n"
              << "linear " << (props.linear ? "yes" : "no") << "\n"
              << "complete " << (props.complete ? "yes" : "no") << "\n"
              << "quasi-order " << (props.quasi_order ? "yes" : "no") << "\n"
              << "poset " << (props.poset ? "yes" : "no") << "\n";
    if (check_prop.empty()) return kExitOk;
    FamilyHandle upsilon, theta;
    const int carrier = qop_relation_size(rel.ptr);
    if (int code =
            load_family(check_upsilon, carrier, check_endos, rel, upsilon);
        code != kExitOk)
      return code;
    if (int code = load_family(check_theta, carrier, check_endos, rel, theta);
        code != kExitOk)
      return code;
    int holds = 0;
    OwnedString certificate;
    if (qop_status s =
            qop_check_property(rel.ptr, check_prop.c_str(), upsilon.ptr,
                               theta.ptr, &holds, &certificate.ptr);
        s != QOP_OK)
      return report_error(s);
    std::cout << "property " << check_prop << " "
              << (holds ? "holds" : "fails") << "\n"
              << certificate.str();
    return holds ? kExitOk : kExitViolation;
  }

  if (augment->parsed()) {
    RelationHandle rel;
    if (int code = load_relation(aug_relation, rel); code != kExitOk)
      return code;
    FamilyHandle upsilon, theta;
    const int carrier = qop_relation_size(rel.ptr);
    if (int code = load_family(aug_upsilon, carrier, aug_endos, rel, upsilon);
        code != kExitOk)
      return code;
    if (int code = load_family(aug_theta, carrier, aug_endos, rel, theta);
        code != kExitOk)
      return code;
    qop_relation* result = nullptr;
    if (qop_status s = qop_relation_augment(rel.ptr, aug_kind.c_str(),
                                            upsilon.ptr, theta.ptr, &result);
        s != QOP_OK)
      return report_error(s);
    RelationHandle owned{result};
    OwnedString text;
    qop_relation_serialize(result, &text.ptr);
    if (!write_output(aug_out, text.str())) {
      std::cerr << "error: cannot write output file: " << aug_out << "\n";
      return kExitUsage;
    }
    return kExitOk;
  }

  if (verify->parsed()) {
    OwnedString report;
    int64_t violations = 0;
    if (qop_status s = qop_verify(verify_max_n, verify_seed, verify_budget,
                                  &report.ptr, &violations);
        s != QOP_OK)
      return report_error(s);
    if (!write_output(verify_out, report.str())) {
      std::cerr << "error: cannot write output file: " << verify_out << "\n";
      return kExitUsage;
    }
    return violations == 0 ? kExitOk : kExitViolation;
  }

  if (search->parsed()) {
    OwnedString report;
    int64_t failures = 0;
    if (qop_status s = qop_search(search_max_n, search_seed, search_budget,
                                  &report.ptr, &failures);
        s != QOP_OK)
      return report_error(s);
    if (!write_output(search_out, report.str())) {
      std::cerr << "error: cannot write output file: " << search_out << "\n";
      return kExitUsage;
    }
    return failures == 0 ? kExitOk : kExitViolation;
  }

  if (figure1->parsed()) {
    OwnedString dot;
    if (qop_status s = qop_figure1(fig_max_n, fig_seed, fig_budget, &dot.ptr);
        s != QOP_OK)
      return report_error(s);
    if (!write_output(fig_out, dot.str())) {
      std::cerr << "error: cannot write output file: " << fig_out << "\n";
      return kExitUsage;
    }
    return kExitOk;
  }

  if (baire->parsed()) {
    OwnedString text;
    if (qop_status s = qop_baire_demo(demo.c_str(), &text.ptr); s != QOP_OK)
      return report_error(s);
    std::cout << text.str();
    return kExitOk;
  }

  return kExitUsage;
}
