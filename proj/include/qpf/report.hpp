#pragma once

#include <string>
#include <vector>

namespace qpf {

/// One verified statement: an equality or a boolean fact, with both sides
/// rendered for the report.
struct Claim {
  std::string claim;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct Report {
  std::string name;
  std::vector<Claim> claims;

  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string what, long lhs, long rhs) {
    claims.push_back({std::move(what), std::to_string(lhs), std::to_string(rhs), lhs == rhs});
  }
  void add_bool(std::string what, bool ok) {
    claims.push_back({std::move(what), ok ? "true" : "false", "true", ok});
  }
  void merge(const Report& other) {
    claims.insert(claims.end(), other.claims.begin(), other.claims.end());
  }
};

} // namespace qpf
