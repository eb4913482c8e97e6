#pragma once

#include <string>
#include <vector>

#include "gicbound/sweep.hpp"

namespace gicb {

// Parses "a+bi", "a-bi", "bi", "i", "a" (whitespace ignored).
cd parse_complex_text(const std::string& s);

struct RunOutput {
  std::vector<NamedTable> tables;
  std::string report_json;  // verb-specific summary
};

// Runs one CLI verb (eval, sweep, surface, largek, reproduce) from a JSON
// object whose keys mirror the command-line flags. Throws ConfigError for
// malformed or unknown keys.
RunOutput run_verb(const std::string& verb, const std::string& config_json);

const std::vector<std::string>& verbs();

}  // namespace gicb
