#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tcx/io.hpp"

namespace tcx::cli {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::string command;
  io::Json inputs = io::Json::array();
  io::Json result = io::Json::object();
  std::vector<Check> verdicts;
  std::optional<std::string> error_code;
  std::string error_message;

  io::Json to_json() const;
  /// 0 when every verdict passes, 1 otherwise, 2 on input errors.
  int exit_code() const;
};

struct Subcommand {
  std::string name;
  std::string description;
  std::vector<std::string> operations;  // library operations reachable through it
};

const std::vector<Subcommand>& dispatch_table();
/// Every public library operation, each of which appears in exactly one entry
/// of the dispatch table.
const std::vector<std::string>& library_operations();

/// Hex SHA-256 of a file's bytes.
std::string file_digest(const std::string& path);

/// Runs one command. `args` excludes the program name. The JSON report goes to
/// `out` followed by a newline, a one-line summary per verdict to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcx::cli
