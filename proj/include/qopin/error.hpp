#pragma once

#include <stdexcept>
#include <string>

namespace qopin {

enum class Errc {
  parse_error,
  precondition,
  carrier_mismatch,
  guard_exceeded,
  range_error,
  unknown_id,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace qopin
