#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qsw/json_io.hpp"

namespace qsw::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  int n = 2;
  int k = 2;
  std::optional<std::string> r;
  std::optional<std::string> s;
  bool symbolic = false;
  std::optional<std::string> lambda;
  std::optional<std::string> out;
  std::string format = "json";
  std::string check = "all";
  std::optional<std::string> module_path;
  std::uint64_t seed = 0;
  bool verbose = false;
};

/// Symbolic unless both r and s are given; throws qsw::Error on bad values.
ParamSpec make_param(const RunConfig& cfg);
/// Parses "2,1,0".
Weight parse_weight(const std::string& text);

struct Outcome {
  int code = kOk;
  Json report;
};
/// Runs one command. Input errors raise qsw::Error.
Outcome run(const RunConfig& cfg);

/// Renders a report: pretty JSON, or "key,value" rows with dotted paths.
std::string render(const Json& report, const std::string& format);

/// run + render, writing to cfg.out or `out`; usage errors go to `err`.
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qsw::cli
