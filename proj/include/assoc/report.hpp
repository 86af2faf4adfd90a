#pragma once

#include <cstdlib>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace assoc {

inline constexpr const char* kSchemaVersion = "assoc/1";

/// Outcome of an exhaustive check. On failure `failure` names the violated
/// property and `witness` holds data that replays it.
struct CheckReport {
  bool ok = true;
  std::string failure;
  nlohmann::json witness;
  std::uint64_t instances = 0;

  void fail(std::string what, nlohmann::json w) {
    if (!ok) return;  // keep the first failure
    ok = false;
    failure = std::move(what);
    witness = std::move(w);
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"ok", ok}, {"instances", instances}};
    if (!ok) {
      j["failure"] = failure;
      j["witness"] = witness;
    }
    return j;
  }
};

/// Size caps for exhaustive enumeration. ASSOC_MAX_M overrides both.
struct Caps {
  int enumerate = 9;
  int checks = 7;

  static Caps from_env() {
    Caps c;
    if (const char* v = std::getenv("ASSOC_MAX_M")) {
      char* end = nullptr;
      long n = std::strtol(v, &end, 10);
      if (end != v && n > 0) {
        c.enumerate = static_cast<int>(n);
        c.checks = static_cast<int>(n);
      }
    }
    return c;
  }
};

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_cap(int m, int cap, const char* what) {
  if (m > cap)
    throw CapExceeded(std::string(what) + ": m=" + std::to_string(m) + " exceeds cap " + std::to_string(cap) +
                      " (set ASSOC_MAX_M to raise it)");
}

}  // namespace assoc
