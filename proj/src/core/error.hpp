#pragma once

#include <stdexcept>
#include <string>

namespace cc {

// Error taxonomy mirrored by the C API status codes and the CLI exit codes:
// usage (bad arguments / unknown keys), data (malformed or inconsistent
// input), runtime (I/O and internal failures). Contract violations are
// programming errors surfaced as runtime failures.

struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct data_error : std::runtime_error {
  explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct contract_error : std::logic_error {
  explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_contract(bool ok, const std::string& msg) {
  if (!ok) throw contract_error(msg);
}

}  // namespace cc
