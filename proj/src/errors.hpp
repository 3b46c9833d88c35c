#pragma once

#include <stdexcept>
#include <string>

namespace qecost {

// Error taxonomy shared by the whole library; mirrored by the C API status
// codes.
enum class errc {
  ok = 0,
  invalid_argument,
  out_of_regime,
  resource_limit,
  infeasible,
  parse_error,
  io_error,
  internal,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

} // namespace qecost
