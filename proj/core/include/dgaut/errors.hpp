#pragma once

#include <stdexcept>
#include <string>

namespace dgaut {

// Exit-code-bearing error categories used across the library and CLI.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string &msg) : std::runtime_error(msg) {}
};

struct size_limit_error : std::runtime_error {
  explicit size_limit_error(const std::string &msg) : std::runtime_error(msg) {}
};

struct invariant_error : std::runtime_error {
  explicit invariant_error(const std::string &msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const char *msg) {
  if (!cond) throw invariant_error(msg);
}

}  // namespace dgaut
