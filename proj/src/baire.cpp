#include "qopin/baire.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qopin {

namespace {

std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) {
  return std::lcm(a, b);
}

}  // namespace

UPSeq::UPSeq(std::vector<std::uint64_t> prefix,
             std::vector<std::uint64_t> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  require(!period_.empty(), Errc::precondition, "period must be nonempty");
  normalize();
}

UPSeq UPSeq::constant(std::uint64_t v) { return UPSeq({}, {v}); }

UPSeq UPSeq::characteristic(const UPSet& s) {
  std::vector<std::uint64_t> pre(s.prefix_mask().begin(),
                                 s.prefix_mask().end());
  std::vector<std::uint64_t> per(s.period_mask().begin(),
                                 s.period_mask().end());
  return UPSeq(std::move(pre), std::move(per));
}

std::uint64_t UPSeq::value(std::uint64_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

void UPSeq::normalize() {
  // Minimal period: the least divisor that reproduces the period word.
  const std::size_t len = period_.size();
  for (std::size_t div = 1; div < len; ++div) {
    if (len % div != 0) continue;
    bool ok = true;
    for (std::size_t i = div; i < len && ok; ++i)
      if (period_[i] != period_[i % div]) ok = false;
    if (ok) {
      period_.resize(div);
      break;
    }
  }
  // Minimal prefix: absorb a trailing prefix value that already obeys the
  // period law, rotating the period right each time.
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

UPSet::UPSet(std::vector<std::uint8_t> prefix_mask,
             std::vector<std::uint8_t> period_mask)
    : prefix_(std::move(prefix_mask)), period_(std::move(period_mask)) {
  require(!period_.empty(), Errc::precondition, "period mask must be nonempty");
  for (auto& b : prefix_) b = b ? 1 : 0;
  for (auto& b : period_) b = b ? 1 : 0;
  normalize();
}

UPSet UPSet::singleton(std::uint64_t i) {
  std::vector<std::uint8_t> pre(i + 1, 0);
  pre[i] = 1;
  return UPSet(std::move(pre), {0});
}

bool UPSet::contains(std::uint64_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

bool UPSet::is_infinite() const {
  return std::find(period_.begin(), period_.end(), 1) != period_.end();
}

bool UPSet::is_empty() const {
  return !is_infinite() &&
         std::find(prefix_.begin(), prefix_.end(), 1) == prefix_.end();
}

void UPSet::normalize() {
  const std::size_t len = period_.size();
  for (std::size_t div = 1; div < len; ++div) {
    if (len % div != 0) continue;
    bool ok = true;
    for (std::size_t i = div; i < len && ok; ++i)
      if (period_[i] != period_[i % div]) ok = false;
    if (ok) {
      period_.resize(div);
      break;
    }
  }
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

bool subset_of(const UPSet& a, const UPSet& b) {
  const std::uint64_t k =
      std::max(a.prefix_mask().size(), b.prefix_mask().size());
  const std::uint64_t l =
      lcm64(a.period_mask().size(), b.period_mask().size());
  for (std::uint64_t n = 0; n < k + l; ++n)
    if (a.contains(n) && !b.contains(n)) return false;
  return true;
}

bool subset_star(const UPSet& a, const UPSet& b) {
  const std::uint64_t k =
      std::max(a.prefix_mask().size(), b.prefix_mask().size());
  const std::uint64_t l =
      lcm64(a.period_mask().size(), b.period_mask().size());
  for (std::uint64_t n = k; n < k + l; ++n)
    if (a.contains(n) && !b.contains(n)) return false;
  return true;
}

CompareFlags compare(const UPSeq& x, const UPSeq& y) {
  const std::uint64_t k = std::max(x.prefix().size(), y.prefix().size());
  const std::uint64_t l = lcm64(x.period().size(), y.period().size());
  CompareFlags f;
  f.eq = x == y;
  f.le = f.ge = true;
  f.le_star = f.ge_star = true;
  f.ll_star = f.gg_star = true;
  for (std::uint64_t n = 0; n < k + l; ++n) {
    const std::uint64_t a = x.value(n), b = y.value(n);
    if (a > b) f.le = false;
    if (a < b) f.ge = false;
    if (n >= k) {
      if (a > b) f.le_star = false;
      if (a < b) f.ge_star = false;
      if (a >= b) f.ll_star = false;
      if (a <= b) f.gg_star = false;
    }
  }
  f.lt = f.le && !f.ge;
  f.gt = f.ge && !f.le;
  f.eq_star = f.le_star && f.ge_star;
  f.lt_star = f.le_star && !f.ge_star;
  f.gt_star = f.ge_star && !f.le_star;
  return f;
}

UPSet where_gt(const UPSeq& x, const UPSeq& y) {
  const std::uint64_t k = std::max(x.prefix().size(), y.prefix().size());
  const std::uint64_t l = lcm64(x.period().size(), y.period().size());
  std::vector<std::uint8_t> pre, per;
  for (std::uint64_t n = 0; n < k; ++n)
    pre.push_back(x.value(n) > y.value(n) ? 1 : 0);
  for (std::uint64_t n = k; n < k + l; ++n)
    per.push_back(x.value(n) > y.value(n) ? 1 : 0);
  return UPSet(std::move(pre), std::move(per));
}

UPSet support(const UPSeq& x) { return where_gt(x, UPSeq::zero()); }

BAInj::BAInj(std::vector<std::uint64_t> exceptions, std::uint64_t block_len,
             std::uint64_t stride, std::vector<std::uint64_t> offsets)
    : exceptions_(std::move(exceptions)),
      m_(block_len),
      d_(stride),
      offsets_(std::move(offsets)) {
  validate();
  normalize();
}

std::uint64_t BAInj::apply(std::uint64_t k) const {
  if (k < exceptions_.size()) return exceptions_[k];
  const std::uint64_t t = k - exceptions_.size();
  return offsets_[t % m_] + (t / m_) * d_;
}

void BAInj::validate() const {
  require(m_ >= 1 && d_ >= 1, Errc::precondition,
          "block length and stride must be positive");
  require(offsets_.size() == m_, Errc::precondition,
          "offset count must equal the block length");
  for (std::size_t i = 0; i < offsets_.size(); ++i)
    for (std::size_t j = i + 1; j < offsets_.size(); ++j)
      require(offsets_[i] % d_ != offsets_[j] % d_, Errc::precondition,
              "offsets must be distinct modulo the stride");
  std::set<std::uint64_t> seen(exceptions_.begin(), exceptions_.end());
  require(seen.size() == exceptions_.size(), Errc::precondition,
          "exception values must be distinct");
  for (std::uint64_t e : exceptions_)
    for (std::uint64_t o : offsets_)
      require(e < o || (e - o) % d_ != 0, Errc::precondition,
              "exception value collides with the block image");
}

void BAInj::normalize() {
  // Find the least usable prefix length and, for it, the least block that
  // reproduces the tail; always succeeds with the current representation.
  const std::uint64_t n = exceptions_.size();
  auto val = [this](std::uint64_t k) { return apply(k); };
  for (std::uint64_t nstar = 0; nstar <= n; ++nstar)
    for (std::uint64_t mstar = 1; mstar <= m_; ++mstar) {
      if ((mstar * d_) % m_ != 0) continue;
      const std::uint64_t dstar = mstar * d_ / m_;
      bool ok = true;
      for (std::uint64_t t = nstar; t < n + m_ && ok; ++t)
        if (val(t + mstar) != val(t) + dstar) ok = false;
      if (!ok) continue;
      std::vector<std::uint64_t> exc, offs;
      for (std::uint64_t k = 0; k < nstar; ++k) exc.push_back(val(k));
      for (std::uint64_t j = 0; j < mstar; ++j) offs.push_back(val(nstar + j));
      exceptions_ = std::move(exc);
      m_ = mstar;
      d_ = dstar;
      offsets_ = std::move(offs);
      return;
    }
}

bool BAInj::operator==(const BAInj& other) const {
  if (d_ * other.m_ != other.d_ * m_) return false;  // different slopes
  const std::uint64_t bound =
      std::max(exceptions_.size(), other.exceptions_.size()) +
      lcm64(m_, other.m_);
  for (std::uint64_t k = 0; k < bound; ++k)
    if (apply(k) != other.apply(k)) return false;
  return true;
}

BAInj enum_injection(const UPSet& a) {
  require(a.is_infinite(), Errc::precondition,
          "enumeration needs an infinite set");
  const std::uint64_t k = a.prefix_mask().size();
  const std::uint64_t l = a.period_mask().size();
  std::vector<std::uint64_t> exc;
  for (std::uint64_t i = 0; i < k; ++i)
    if (a.prefix_mask()[i]) exc.push_back(i);
  std::vector<std::uint64_t> offs;
  for (std::uint64_t j = 0; j < l; ++j)
    if (a.period_mask()[j]) offs.push_back(k + j);
  const std::uint64_t block = offs.size();
  return BAInj(std::move(exc), block, l, std::move(offs));
}

BAInj compose(const BAInj& g, const BAInj& h) {
  const std::uint64_t nh = h.exceptions().size();
  const std::uint64_t mh = h.block_len(), dh = h.stride();
  const std::uint64_t ng = g.exceptions().size();
  const std::uint64_t mg = g.block_len(), dg = g.stride();
  // First argument index past which every h value lands in g's block zone.
  std::uint64_t qmax = 0;
  for (std::uint64_t o : h.offsets())
    if (o < ng) qmax = std::max(qmax, (ng - o + dh - 1) / dh);
  const std::uint64_t k0 = nh + qmax * mh;
  const std::uint64_t shared = std::gcd(dh, mg);
  const std::uint64_t m = mh * (mg / shared);
  const std::uint64_t d = (dh / shared) * dg;
  std::vector<std::uint64_t> exc, offs;
  for (std::uint64_t k = 0; k < k0; ++k) exc.push_back(g.apply(h.apply(k)));
  for (std::uint64_t j = 0; j < m; ++j)
    offs.push_back(g.apply(h.apply(k0 + j)));
  return BAInj(std::move(exc), m, d, std::move(offs));
}

UPSeq project(const BAInj& h, const UPSeq& x) {
  const std::uint64_t nh = h.exceptions().size();
  const std::uint64_t mh = h.block_len(), dh = h.stride();
  const std::uint64_t kx = x.prefix().size(), lx = x.period().size();
  std::uint64_t qmax = 0;
  for (std::uint64_t o : h.offsets())
    if (o < kx) qmax = std::max(qmax, (kx - o + dh - 1) / dh);
  const std::uint64_t k1 = nh + qmax * mh;
  const std::uint64_t l = mh * (lx / std::gcd(dh, lx));
  std::vector<std::uint64_t> pre, per;
  for (std::uint64_t k = 0; k < k1; ++k) pre.push_back(x.value(h.apply(k)));
  for (std::uint64_t j = 0; j < l; ++j)
    per.push_back(x.value(h.apply(k1 + j)));
  return UPSeq(std::move(pre), std::move(per));
}

UPSeq even_part(const UPSeq& x) { return project(BAInj::affine(2, 0), x); }
UPSeq odd_part(const UPSeq& x) { return project(BAInj::affine(2, 1), x); }

UPSeq interleave(const UPSeq& evens, const UPSeq& odds) {
  const std::uint64_t k =
      2 * std::max(evens.prefix().size(), odds.prefix().size());
  const std::uint64_t l =
      2 * lcm64(evens.period().size(), odds.period().size());
  auto at = [&](std::uint64_t i) {
    return i % 2 ? odds.value(i / 2) : evens.value(i / 2);
  };
  std::vector<std::uint64_t> pre, per;
  for (std::uint64_t i = 0; i < k; ++i) pre.push_back(at(i));
  for (std::uint64_t j = 0; j < l; ++j) per.push_back(at(k + j));
  return UPSeq(std::move(pre), std::move(per));
}

std::uint64_t Pi0Endo::odd_image(std::uint64_t i) const {
  for (const auto& [from, to] : odd_swaps)
    if (from == i) return to;
  return i;
}

namespace {

bool all_even(const BAInj& h) {
  for (std::uint64_t e : h.exceptions())
    if (e % 2) return false;
  for (std::uint64_t o : h.offsets())
    if (o % 2) return false;
  return h.stride() % 2 == 0;
}

void validate_pi0(const Pi0Endo& e) {
  require(all_even(e.even_map), Errc::precondition,
          "even map must have even range");
  std::set<std::uint64_t> froms, tos;
  for (const auto& [from, to] : e.odd_swaps) {
    require(from % 2 == 1 && to % 2 == 1, Errc::precondition,
            "odd permutation entries must be odd");
    froms.insert(from);
    tos.insert(to);
  }
  require(froms.size() == e.odd_swaps.size() && froms == tos,
          Errc::precondition, "odd entries must form a permutation");
}

}  // namespace

UPSeq apply_pi0(const Pi0Endo& e, const UPSeq& x) {
  validate_pi0(e);
  UPSeq even_seq = project(e.even_map, x);
  UPSeq ox = odd_part(x);
  std::uint64_t kbound = 0;
  for (const auto& [from, to] : e.odd_swaps)
    kbound = std::max({kbound, (from + 1) / 2, (to + 1) / 2});
  const std::uint64_t k = std::max<std::uint64_t>(kbound, ox.prefix().size());
  std::vector<std::uint64_t> pre, per;
  for (std::uint64_t i = 0; i < k; ++i)
    pre.push_back(x.value(e.odd_image(2 * i + 1)));
  for (std::uint64_t j = 0; j < ox.period().size(); ++j)
    per.push_back(x.value(e.odd_image(2 * (k + j) + 1)));
  UPSeq odd_seq(std::move(pre), std::move(per));
  return interleave(even_seq, odd_seq);
}

UPSeq apply_pi1(const Pi1Endo& e, const UPSeq& x) {
  if (e.is_identity) return x;
  require(all_even(e.map), Errc::precondition,
          "non-identity member must have even range");
  return project(e.map, x);
}

bool closed_form(std::string_view form_id, const UPSeq& x, const UPSeq& y) {
  const CompareFlags c = compare(x, y);
  if (form_id == "le_star_cor") return c.le_star;
  if (form_id == "lin_id_proj") return c.le || c.ll_star;
  if (form_id == "lin_proj_id") return c.le || (c.gg_star && !c.ge);
  if (form_id == "slin_id_proj") return c.le || c.ll_star;
  if (form_id == "str_proj") return c.le || (c.gt && c.eq_star);
  if (form_id == "negstr_proj") return c.le || c.ll_star;
  if (form_id == "asym_le_star") return c.eq || c.lt_star;
  if (form_id == "sep_c00plus") {
    UPSet sx = support(x), sy = support(y);
    require(sx.is_infinite() && sy.is_infinite(), Errc::precondition,
            "the separative form is restricted to infinite support");
    return subset_star(sx, sy);
  }
  const CompareFlags ce = compare(even_part(x), even_part(y));
  const CompareFlags co = compare(odd_part(x), odd_part(y));
  if (form_id == "lin_pi0")
    return c.le || ((ce.gg_star || !co.le) && (ce.ll_star || !co.ge));
  if (form_id == "str_pi0") return c.le || (c.gt && co.eq && ce.eq_star);
  if (form_id == "negstr_pi0")
    return c.le || (ce.ll_star && co.le) || (ce.le_star && co.lt);
  if (form_id == "lin_id_pi1") return c.le || ce.ll_star;
  if (form_id == "slin_id_pi1") return !c.gt && (ce.le || ce.ll_star);
  fail(Errc::unknown_id, "unknown closed form id: " + std::string(form_id));
}

BAInj pin_witness_nleq_star(const UPSeq& x, const UPSeq& y) {
  require(!compare(x, y).le_star, Errc::precondition,
          "pin witness requires x nleq-star y");
  BAInj e = enum_injection(where_gt(x, y));
  require(where_gt(project(e, x), project(e, y)) == UPSet::naturals(),
          Errc::precondition, "pin witness fails pointwise domination");
  return e;
}

BAInj correct_witness_tau(const UPSeq& x, const UPSeq& y, const BAInj& f) {
  require(compare(x, y).le_star, Errc::precondition,
          "correctness witness requires x le-star y");
  const UPSeq u = project(f, x);
  const UPSeq v = project(f, y);
  const UPSet anomalies = where_gt(u, v);
  require(!anomalies.is_infinite(), Errc::precondition,
          "anomaly set must be finite for le-star inputs");
  std::uint64_t c = 0;
  for (std::uint64_t i = 0; i < anomalies.prefix_mask().size(); ++i)
    if (anomalies.prefix_mask()[i]) c = i + 1;
  BAInj g = BAInj::shift(c);
  require(compare(project(g, u), project(g, v)).le, Errc::precondition,
          "shift fails to clear every anomaly");
  return g;
}

namespace {

UPSeq pointwise(const UPSeq& x, const UPSeq& y,
                std::uint64_t (*op)(std::uint64_t, std::uint64_t)) {
  const std::uint64_t k = std::max(x.prefix().size(), y.prefix().size());
  const std::uint64_t l = lcm64(x.period().size(), y.period().size());
  std::vector<std::uint64_t> pre, per;
  for (std::uint64_t n = 0; n < k; ++n) pre.push_back(op(x.value(n), y.value(n)));
  for (std::uint64_t n = k; n < k + l; ++n)
    per.push_back(op(x.value(n), y.value(n)));
  return UPSeq(std::move(pre), std::move(per));
}

}  // namespace

UPSeq meet(const UPSeq& x, const UPSeq& y) {
  return pointwise(x, y, [](std::uint64_t a, std::uint64_t b) {
    return a < b ? a : b;
  });
}

UPSeq join(const UPSeq& x, const UPSeq& y) {
  return pointwise(x, y, [](std::uint64_t a, std::uint64_t b) {
    return a > b ? a : b;
  });
}

UPSeq two_step_witness(const UPSeq& x, const UPSeq& y) {
  require(compare(x, y).le_star, Errc::precondition,
          "two-step witness requires x le-star y");
  UPSeq r = meet(x, y);
  require(closed_form("str_proj", x, r), Errc::precondition,
          "first strictive hop fails");
  require(closed_form("str_proj", r, y), Errc::precondition,
          "second strictive hop fails");
  return r;
}

namespace {

UPSet random_infinite_upset(SplitMix64& rng) {
  std::vector<std::uint8_t> pre(rng.below(4)), per(1 + rng.below(4));
  for (auto& b : pre) b = rng.coin();
  for (auto& b : per) b = rng.coin();
  per[rng.below(per.size())] = 1;
  return UPSet(std::move(pre), std::move(per));
}

BAInj random_bainj(SplitMix64& rng) {
  switch (rng.below(5)) {
    case 0:
      return enum_injection(random_infinite_upset(rng));
    case 1:
      return BAInj::shift(rng.below(7));
    case 2:
      return BAInj::affine(1 + rng.below(4), rng.below(6));
    case 3: {
      // a few scattered exceptions, then an affine tail above them
      std::size_t count = 1 + rng.below(3);
      std::set<std::uint64_t> picked;
      while (picked.size() < count) picked.insert(rng.below(10));
      std::vector<std::uint64_t> exc(picked.begin(), picked.end());
      if (exc.size() > 1 && rng.coin()) std::swap(exc.front(), exc.back());
      return BAInj(std::move(exc), 1, 1 + rng.below(3), {10 + rng.below(4)});
    }
    default: {
      const std::uint64_t d = 2 + rng.below(4);
      const std::uint64_t o0 = rng.below(d);
      const std::uint64_t o1 = (o0 + 1 + rng.below(d - 1)) % d;
      const std::uint64_t base = rng.below(5);
      return BAInj({}, 2, d, {base + o0, base + o1});
    }
  }
}

BAInj doubled(const BAInj& h) {
  std::vector<std::uint64_t> exc, offs;
  for (std::uint64_t e : h.exceptions()) exc.push_back(2 * e);
  for (std::uint64_t o : h.offsets()) offs.push_back(2 * o);
  return BAInj(std::move(exc), h.block_len(), 2 * h.stride(), std::move(offs));
}

}  // namespace

std::vector<BAInj> sample_proj(std::uint64_t seed, std::size_t count) {
  SplitMix64 rng(seed);
  std::vector<BAInj> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_bainj(rng));
  return out;
}

std::vector<Pi0Endo> sample_pi0(std::uint64_t seed, std::size_t count) {
  SplitMix64 rng(seed);
  std::vector<Pi0Endo> out;
  for (std::size_t i = 0; i < count; ++i) {
    Pi0Endo e;
    e.even_map = doubled(random_bainj(rng));
    const std::size_t moved = rng.below(4);
    std::vector<std::uint64_t> odds;
    for (std::size_t j = 0; j < moved; ++j) odds.push_back(2 * j + 1);
    std::vector<std::uint64_t> images = odds;
    for (std::size_t j = images.size(); j > 1; --j)
      std::swap(images[j - 1], images[rng.below(j)]);
    for (std::size_t j = 0; j < odds.size(); ++j)
      e.odd_swaps.emplace_back(odds[j], images[j]);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Pi1Endo> sample_pi1(std::uint64_t seed, std::size_t count) {
  SplitMix64 rng(seed);
  std::vector<Pi1Endo> out;
  for (std::size_t i = 0; i < count; ++i) {
    Pi1Endo e;
    if (!rng.coin()) {
      e.is_identity = false;
      e.map = doubled(random_bainj(rng));
    }
    out.push_back(std::move(e));
  }
  return out;
}

UPSeq sample_upseq(SplitMix64& rng) {
  std::vector<std::uint64_t> pre(rng.below(4)), per(1 + rng.below(3));
  for (auto& v : pre) v = rng.below(5);
  for (auto& v : per) v = rng.below(5);
  return UPSeq(std::move(pre), std::move(per));
}

namespace {

UPSeq plus(const UPSeq& x, const UPSeq& y) {
  return pointwise(x, y, [](std::uint64_t a, std::uint64_t b) {
    return a + b;
  });
}

// Rebuild x with position pos forced to v.
UPSeq with_value(const UPSeq& x, std::uint64_t pos, std::uint64_t v) {
  const std::uint64_t k = std::max<std::uint64_t>(pos + 1, x.prefix().size());
  std::vector<std::uint64_t> pre;
  for (std::uint64_t i = 0; i < k; ++i)
    pre.push_back(i == pos ? v : x.value(i));
  std::vector<std::uint64_t> per;
  for (std::uint64_t j = 0; j < x.period().size(); ++j)
    per.push_back(x.value(k + j));
  return UPSeq(std::move(pre), std::move(per));
}

}  // namespace

std::pair<UPSeq, UPSeq> sample_upseq_pair(SplitMix64& rng) {
  UPSeq x = sample_upseq(rng);
  switch (rng.below(3)) {
    case 0: {
      // x le-star y by construction, with optional finite violations
      UPSeq y = plus(x, sample_upseq(rng));
      if (rng.coin()) {
        const std::uint64_t pos = rng.below(4);
        x = with_value(x, pos, y.value(pos) + 1 + rng.below(3));
      }
      return {x, y};
    }
    case 1: {
      // x exceeds y on an infinite set
      UPSeq y = sample_upseq(rng);
      std::vector<std::uint64_t> bump(1 + rng.below(2), 0);
      bump[0] = 1 + rng.below(2);
      return {plus(y, UPSeq({}, std::move(bump))), y};
    }
    default:
      return {x, sample_upseq(rng)};
  }
}

}  // namespace qopin
