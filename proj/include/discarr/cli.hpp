#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace discarr::cli {

/// Exit statuses of `run`.
enum Status : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Arguments naming an
/// arrangement accept a file path or a bundled fixture name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One line of the verify-paper table.
struct CheckRow {
  std::string fixture;
  std::string check;
  std::string expected;
  std::string actual;
  bool pass() const { return expected == actual; }
};

/// Evaluates every fixture expectation plus the very generic polynomial.
std::vector<CheckRow> verify_paper(unsigned threads = 1);

}  // namespace discarr::cli
