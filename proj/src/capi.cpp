#include "qopin.h"

#include <cstring>
#include <sstream>
#include <string>

#include "qopin/augment.hpp"
#include "qopin/baire.hpp"
#include "qopin/driver.hpp"
#include "qopin/endo.hpp"
#include "qopin/pinning.hpp"
#include "qopin/relation.hpp"
#include "qopin/text.hpp"

using namespace qopin;

struct qop_relation {
  Relation value;
};
struct qop_family {
  EndoFamily value;
};
struct qop_upseq {
  UPSeq value;
};

namespace {

thread_local std::string g_last_error;

qop_status status_of(const Error& e) {
  g_last_error = e.what();
  switch (e.code()) {
    case Errc::parse_error: return QOP_ERR_PARSE;
    case Errc::precondition: return QOP_ERR_PRECONDITION;
    case Errc::carrier_mismatch: return QOP_ERR_CARRIER;
    case Errc::guard_exceeded: return QOP_ERR_GUARD;
    case Errc::range_error: return QOP_ERR_RANGE;
    case Errc::unknown_id: return QOP_ERR_UNKNOWN_ID;
  }
  return QOP_ERR_BAD_ARGUMENT;
}

qop_status bad_argument(const char* what) {
  g_last_error = what;
  return QOP_ERR_BAD_ARGUMENT;
}

template <typename Fn>
qop_status guarded(Fn&& fn) {
  try {
    fn();
    return QOP_OK;
  } catch (const Error& e) {
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QOP_ERR_BAD_ARGUMENT;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* qop_status_name(qop_status status) {
  switch (status) {
    case QOP_OK: return "ok";
    case QOP_ERR_PARSE: return "parse error";
    case QOP_ERR_PRECONDITION: return "precondition violated";
    case QOP_ERR_CARRIER: return "carrier mismatch";
    case QOP_ERR_GUARD: return "guard exceeded";
    case QOP_ERR_RANGE: return "value out of range";
    case QOP_ERR_UNKNOWN_ID: return "unknown identifier";
    case QOP_ERR_BAD_ARGUMENT: return "bad argument";
  }
  return "unknown status";
}

const char* qop_last_error(void) { return g_last_error.c_str(); }

void qop_string_free(char* text) { delete[] text; }

qop_status qop_relation_parse(const char* text, qop_relation** out) {
  if (!text || !out) return bad_argument("null argument");
  return guarded([&] { *out = new qop_relation{parse_relation(text)}; });
}

qop_status qop_relation_make(int carrier, const int* pairs, int pair_count,
                             int reflexive_closure, qop_relation** out) {
  if (!out || (pair_count > 0 && !pairs)) return bad_argument("null argument");
  return guarded([&] {
    std::vector<std::pair<int, int>> list;
    for (int i = 0; i < pair_count; ++i)
      list.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = new qop_relation{
        Relation::from_pairs(carrier, list, reflexive_closure != 0)};
  });
}

qop_status qop_relation_serialize(const qop_relation* relation, char** out) {
  if (!relation || !out) return bad_argument("null argument");
  return guarded([&] { *out = dup_string(serialize_relation(relation->value)); });
}

void qop_relation_free(qop_relation* relation) { delete relation; }

int qop_relation_size(const qop_relation* relation) {
  return relation ? relation->value.size() : 0;
}

int qop_relation_le(const qop_relation* relation, int p, int q) {
  if (!relation) return 0;
  const Relation& r = relation->value;
  if (p < 0 || q < 0 || p >= r.size() || q >= r.size()) return 0;
  return r.le(p, q) ? 1 : 0;
}

qop_status qop_relation_classify(const qop_relation* relation,
                                 qop_props* out) {
  if (!relation || !out) return bad_argument("null argument");
  const PropertyReport& p = relation->value.props();
  *out = qop_props{p.reflexive,     p.transitive, p.antisymmetric,
                   p.linear,        p.complete,   p.is_quasi_order(),
                   p.is_poset()};
  return QOP_OK;
}

qop_status qop_family_parse(const char* text, int carrier, qop_family** out) {
  if (!text || !out) return bad_argument("null argument");
  return guarded([&] { *out = new qop_family{parse_family(text, carrier)}; });
}

qop_status qop_family_serialize(const qop_family* family, char** out) {
  if (!family || !out) return bad_argument("null argument");
  return guarded([&] { *out = dup_string(serialize_family(family->value)); });
}

void qop_family_free(qop_family* family) { delete family; }

int qop_family_size(const qop_family* family) {
  return family ? static_cast<int>(family->value.size()) : 0;
}

qop_status qop_family_endomorphisms(const qop_relation* relation, int guard,
                                    qop_family** out) {
  if (!relation || !out) return bad_argument("null argument");
  return guarded([&] {
    *out = new qop_family{endomorphisms(relation->value, guard)};
  });
}

qop_status qop_relation_augment(const qop_relation* relation, const char* kind,
                                const qop_family* upsilon,
                                const qop_family* theta, qop_relation** out) {
  if (!relation || !kind || !out) return bad_argument("null argument");
  return guarded([&] {
    const Relation& r = relation->value;
    std::string_view id(kind);
    if (id == "separative") {
      *out = new qop_relation{separative_aug(r)};
      return;
    }
    if (id == "antisymmetric") {
      *out = new qop_relation{antisymmetric_dim(r)};
      return;
    }
    if (id == "transitive") {
      *out = new qop_relation{transitive_aug(r)};
      return;
    }
    AugSpec spec;
    spec.kind = parse_aug_kind(id);
    spec.upsilon = upsilon ? upsilon->value : EndoFamily(r.size(), {});
    spec.theta = theta ? theta->value : EndoFamily(r.size(), {});
    *out = new qop_relation{parametric_aug(spec, r)};
  });
}

qop_status qop_check_property(const qop_relation* relation, const char* prop,
                              const qop_family* upsilon,
                              const qop_family* theta, int* holds,
                              char** certificate) {
  if (!relation || !prop || !holds) return bad_argument("null argument");
  return guarded([&] {
    const Relation& r = relation->value;
    EndoFamily u = upsilon ? upsilon->value : EndoFamily(r.size(), {});
    EndoFamily t = theta ? theta->value : EndoFamily(r.size(), {});
    PropertyVerdict verdict =
        check_property(parse_property_id(prop), r, u, t);
    *holds = verdict.holds ? 1 : 0;
    if (!certificate) return;
    std::ostringstream os;
    if (verdict.holds) {
      for (const PairWitness& w : verdict.witnesses)
        os << "pair (" << w.p << "," << w.q << ") pinned by "
           << (w.side == 's' ? "first" : "second") << " family member "
           << w.fn_index << "\n";
    } else if (verdict.refutation) {
      os << "refuted at (" << verdict.refutation->first << ","
         << verdict.refutation->second << ")\n";
    }
    *certificate = dup_string(os.str());
  });
}

qop_status qop_upseq_parse(const char* text, qop_upseq** out) {
  if (!text || !out) return bad_argument("null argument");
  return guarded([&] { *out = new qop_upseq{parse_upseq(text)}; });
}

qop_status qop_upseq_serialize(const qop_upseq* sequence, char** out) {
  if (!sequence || !out) return bad_argument("null argument");
  return guarded([&] { *out = dup_string(serialize_upseq(sequence->value)); });
}

void qop_upseq_free(qop_upseq* sequence) { delete sequence; }

qop_status qop_upseq_compare(const qop_upseq* x, const qop_upseq* y,
                             qop_compare_flags* out) {
  if (!x || !y || !out) return bad_argument("null argument");
  return guarded([&] {
    CompareFlags f = compare(x->value, y->value);
    *out = qop_compare_flags{f.eq,      f.le,      f.lt,      f.ge,
                             f.gt,      f.le_star, f.lt_star, f.ge_star,
                             f.gt_star, f.eq_star, f.ll_star, f.gg_star};
  });
}

qop_status qop_closed_form(const char* form, const qop_upseq* x,
                           const qop_upseq* y, int* holds) {
  if (!form || !x || !y || !holds) return bad_argument("null argument");
  return guarded(
      [&] { *holds = closed_form(form, x->value, y->value) ? 1 : 0; });
}

qop_status qop_baire_demo(const char* demo, char** out_text) {
  if (!demo || !out_text) return bad_argument("null argument");
  return guarded([&] { *out_text = dup_string(baire_demo(demo)); });
}

qop_status qop_verify(int max_n, uint64_t seed, uint64_t budget, char** report,
                      int64_t* violations) {
  if (!report || !violations) return bad_argument("null argument");
  return guarded([&] {
    VerifyOutcome outcome = run_verify({max_n, seed, budget});
    *report = dup_string(outcome.report);
    *violations = static_cast<int64_t>(outcome.violations);
  });
}

qop_status qop_search(int max_n, uint64_t seed, uint64_t budget, char** report,
                      int64_t* symbolic_failures) {
  if (!report || !symbolic_failures) return bad_argument("null argument");
  return guarded([&] {
    SearchOutcome outcome = run_search({max_n, seed, budget});
    *report = dup_string(outcome.report);
    *symbolic_failures = outcome.symbolic_failures;
  });
}

qop_status qop_figure1(int max_n, uint64_t seed, uint64_t budget, char** dot) {
  if (!dot) return bad_argument("null argument");
  return guarded(
      [&] { *dot = dup_string(figure1_dot({max_n, seed, budget})); });
}

}  // extern "C"
