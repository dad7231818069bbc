#pragma once

#include <string>
#include <utility>
#include <vector>

#include "discarr/arrangement.hpp"

namespace discarr {

/// A bundled arrangement with the values the checks in `verify-paper` expect.
/// Expected values are exact strings.
struct Fixture {
  std::string name;
  std::string description;
  Arrangement arrangement;
  std::vector<std::pair<std::string, std::string>> expectations;
};

std::vector<std::string> fixture_names();

/// Throws std::out_of_range listing the available names.
Fixture load_fixture(const std::string& name);

/// The arrangement document with a leading "description" field.
std::string fixture_document(const Fixture& f);

}  // namespace discarr
