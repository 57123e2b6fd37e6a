#include "qopin/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace qopin {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void error(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(Errc::parse_error, "line " + std::to_string(line) + ", column " +
                                std::to_string(col) + ": " + what);
  }

  void skip_blanks() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_blanks();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }

  bool at_end() {
    skip_blanks();
    return pos >= text.size();
  }

  std::uint64_t number() {
    skip_blanks();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      error("expected a number");
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
    }
    return v;
  }

  std::vector<std::uint64_t> number_list(char close) {
    std::vector<std::uint64_t> out;
    skip_blanks();
    if (pos < text.size() && text[pos] == close) return out;
    out.push_back(number());
    while (eat(',')) out.push_back(number());
    return out;
  }
};

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
    if (end == text.size()) break;
  }
  return lines;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void line_error(std::size_t lineno, const std::string& what) {
  fail(Errc::parse_error,
       "line " + std::to_string(lineno + 1) + ": " + what);
}

}  // namespace

Relation parse_relation(std::string_view text) {
  auto lines = lines_of(text);
  int n = -1;
  bool reflexive = false;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = trimmed(lines[i]);
    if (line.empty()) continue;
    std::istringstream in{std::string(line)};
    std::string head;
    in >> head;
    if (n < 0) {
      std::uint64_t size = 0;
      if (head != "n" || !(in >> size) || size > kMaxCarrier)
        line_error(i, "expected header 'n <size>' with size at most " +
                          std::to_string(kMaxCarrier));
      n = static_cast<int>(size);
      continue;
    }
    if (head == "reflexive") {
      reflexive = true;
      continue;
    }
    int p = 0, q = 0;
    std::istringstream pair_in{std::string(line)};
    if (!(pair_in >> p >> q) || p < 0 || q < 0 || p >= n || q >= n)
      line_error(i, "expected a pair 'p q' inside the carrier");
    std::string rest;
    if (pair_in >> rest) line_error(i, "trailing tokens after the pair");
    pairs.emplace_back(p, q);
  }
  if (n < 0) fail(Errc::parse_error, "line 1: missing 'n <size>' header");
  return Relation::from_pairs(n, pairs, reflexive);
}

std::string serialize_relation(const Relation& r) {
  std::ostringstream out;
  out << "n " << r.size() << "\n";
  for (int p = 0; p < r.size(); ++p)
    for (int q = 0; q < r.size(); ++q)
      if (r.le(p, q)) out << p << ' ' << q << "\n";
  return out.str();
}

EndoFamily parse_family(std::string_view text, int carrier) {
  auto lines = lines_of(text);
  std::vector<EndoFn> members;
  int n = carrier;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = trimmed(lines[i]);
    if (line.empty()) continue;
    if (line.substr(0, 2) != "f:") line_error(i, "expected 'f: v0 v1 ...'");
    std::istringstream in{std::string(line.substr(2))};
    std::vector<std::uint8_t> table;
    int v = 0;
    while (in >> v) {
      if (v < 0 || v >= kMaxCarrier) line_error(i, "value out of range");
      table.push_back(static_cast<std::uint8_t>(v));
    }
    if (!in.eof()) line_error(i, "malformed function table");
    if (n < 0) n = static_cast<int>(table.size());
    if (static_cast<int>(table.size()) != n)
      line_error(i, "function table length does not match the carrier");
    for (std::uint8_t value : table)
      if (value >= n) line_error(i, "value outside the carrier");
    members.emplace_back(n, std::span<const std::uint8_t>{table});
  }
  if (n < 0)
    fail(Errc::parse_error, "line 1: cannot infer the carrier of an empty family");
  return EndoFamily(n, std::move(members));
}

std::string serialize_family(const EndoFamily& family) {
  std::ostringstream out;
  for (const EndoFn& f : family.members()) {
    out << "f:";
    for (int i = 0; i < f.carrier(); ++i) out << ' ' << f(i);
    out << "\n";
  }
  return out.str();
}

namespace {

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
parse_seq_literal(Cursor& c) {
  c.expect('[');
  std::vector<std::uint64_t> prefix = c.number_list('|');
  c.expect('|');
  std::vector<std::uint64_t> period = c.number_list(']');
  c.expect(']');
  if (period.empty()) c.error("period must be nonempty");
  return {std::move(prefix), std::move(period)};
}

}  // namespace

UPSeq parse_upseq(std::string_view text) {
  Cursor c{text};
  auto [prefix, period] = parse_seq_literal(c);
  if (!c.at_end()) c.error("trailing characters after the literal");
  return UPSeq(std::move(prefix), std::move(period));
}

std::string serialize_upseq(const UPSeq& x) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < x.prefix().size(); ++i)
    out << (i ? "," : "") << x.prefix()[i];
  out << '|';
  for (std::size_t i = 0; i < x.period().size(); ++i)
    out << (i ? "," : "") << x.period()[i];
  out << ']';
  return out.str();
}

UPSet parse_upset(std::string_view text) {
  Cursor c{text};
  auto [prefix, period] = parse_seq_literal(c);
  if (!c.at_end()) c.error("trailing characters after the literal");
  auto to_mask = [&](const std::vector<std::uint64_t>& vals) {
    std::vector<std::uint8_t> mask;
    for (std::uint64_t v : vals) {
      if (v > 1) c.error("characteristic values must be 0 or 1");
      mask.push_back(static_cast<std::uint8_t>(v));
    }
    return mask;
  };
  return UPSet(to_mask(prefix), to_mask(period));
}

std::string serialize_upset(const UPSet& s) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < s.prefix_mask().size(); ++i)
    out << (i ? "," : "") << static_cast<int>(s.prefix_mask()[i]);
  out << '|';
  for (std::size_t i = 0; i < s.period_mask().size(); ++i)
    out << (i ? "," : "") << static_cast<int>(s.period_mask()[i]);
  out << ']';
  return out.str();
}

BAInj parse_bainj(std::string_view text) {
  Cursor c{text};
  for (char ch : std::string_view("exc=")) c.expect(ch);
  c.expect('[');
  std::vector<std::uint64_t> exceptions = c.number_list(']');
  c.expect(']');
  c.expect(';');
  for (char ch : std::string_view("block=")) c.expect(ch);
  c.expect('(');
  std::uint64_t m = c.number();
  c.expect(',');
  std::uint64_t d = c.number();
  c.expect(';');
  std::vector<std::uint64_t> offsets = c.number_list(')');
  c.expect(')');
  if (!c.at_end()) c.error("trailing characters after the literal");
  return BAInj(std::move(exceptions), m, d, std::move(offsets));
}

std::string serialize_bainj(const BAInj& h) {
  std::ostringstream out;
  out << "exc=[";
  for (std::size_t i = 0; i < h.exceptions().size(); ++i)
    out << (i ? "," : "") << h.exceptions()[i];
  out << "]; block=(" << h.block_len() << ',' << h.stride() << ';';
  for (std::size_t i = 0; i < h.offsets().size(); ++i)
    out << (i ? "," : "") << h.offsets()[i];
  out << ')';
  return out.str();
}

}  // namespace qopin
