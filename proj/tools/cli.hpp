#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace eqmf::cli {

enum class Status { pass, fail, empirical };

std::string to_string(Status s);

struct Check {
  std::string name;
  Status status;
  std::string detail;
};

struct RunReport {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  std::string version;
  std::int64_t elapsed_us = 0;  // not part of the canonical form

  bool failed() const;
  /// Canonical JSON; timing is added only when asked for.
  nlohmann::ordered_json to_json(bool with_timing = false) const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

RunReport cmd_expand(unsigned depth, int weight, std::size_t terms);
RunReport cmd_screen(unsigned depth);
RunReport cmd_verify(const std::string& suite, std::size_t order);
RunReport cmd_report(std::size_t order);

/// Full command line, argv[0] included. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqmf::cli
