#pragma once

#include <stdexcept>
#include <string>

namespace qhit {

enum class errc {
  invalid_size,
  invalid_marking,
  invalid_chain,
  nothing_removed,
  dimension_mismatch,
  numeric,
  degenerate_angle,
  no_crossing,
  domain,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::invalid_size: return "invalid-size";
    case errc::invalid_marking: return "invalid-marking";
    case errc::invalid_chain: return "invalid-chain";
    case errc::nothing_removed: return "nothing-removed";
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::numeric: return "numeric";
    case errc::degenerate_angle: return "degenerate-angle";
    case errc::no_crossing: return "no-crossing";
    case errc::domain: return "domain";
  }
  return "unknown";
}

/// Single exception type for the library; `code()` tells callers what went wrong.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace qhit
