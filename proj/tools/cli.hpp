#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qfock/quaternion.hpp"

namespace qfock::cli {

enum class OutputFormat { json, csv };

/// Parsed command line: the subcommand, its key-value parameters, output format
/// and destination ("" for stdout).
struct CliConfig {
  std::string command;
  std::map<std::string, std::string> params;
  OutputFormat output = OutputFormat::json;
  std::string outfile;
};

enum ExitCode : int { kPass = 0, kNumericFailure = 1, kUsageError = 2 };

/// "w,x1,x2,x3" with 1 to 4 components; missing trailing components are 0.
/// Throws std::invalid_argument.
Quaternion parse_quaternion(const std::string& text);

/// Parses argv into a config. Returns kPass on success, otherwise writes the
/// message and usage to err and returns kUsageError (or kPass for --help).
int parse(int argc, const char* const* argv, CliConfig& config, std::ostream& out, std::ostream& err);

/// Executes a parsed config, writing the report to config.outfile or out.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse then run.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qfock::cli
