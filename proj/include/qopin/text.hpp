#pragma once

#include <string>
#include <string_view>

#include "qopin/baire.hpp"
#include "qopin/endo.hpp"
#include "qopin/relation.hpp"

namespace qopin {

// Line format: "n <size>", then one "p q" pair per line, with an optional
// "reflexive" directive.  Serialization lists the pairs sorted.
Relation parse_relation(std::string_view text);
std::string serialize_relation(const Relation& r);

// One function per line: "f: v0 v1 ... v(n-1)".  Pass the carrier when the
// text may be empty; -1 infers it from the first line.
EndoFamily parse_family(std::string_view text, int carrier = -1);
std::string serialize_family(const EndoFamily& family);

// "[a0,a1,...|p0,p1,...]" with the prefix before the bar.
UPSeq parse_upseq(std::string_view text);
std::string serialize_upseq(const UPSeq& x);

// Characteristic literal: a UPSeq literal whose values are 0 or 1.
UPSet parse_upset(std::string_view text);
std::string serialize_upset(const UPSet& s);

// "exc=[...]; block=(m,d;b0,...)"
BAInj parse_bainj(std::string_view text);
std::string serialize_bainj(const BAInj& h);

}  // namespace qopin
