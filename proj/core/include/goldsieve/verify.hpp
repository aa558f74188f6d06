#ifndef GOLDSIEVE_VERIFY_HPP
#define GOLDSIEVE_VERIFY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "goldsieve/types.hpp"

namespace goldsieve {

// Checks are classified as data so the split between hard guarantees and
// informational observations can be audited without reading check code.
enum class CheckClass { must_pass, report_only };

struct GridRange {
    Int lo;
    Int hi;
};

struct SuiteSpec {
    std::string name;
    std::string description;
    std::map<std::string, GridRange> grid;  // keys like "a", "b", "k", "j", "y", "z"
    std::map<std::string, Int> horizons;    // keys like "n", "steps", "word_length"
    std::vector<std::pair<std::string, CheckClass>> checks;
};

struct CheckResult {
    std::string name;
    CheckClass classification = CheckClass::must_pass;
    bool passed = false;
    bool skipped = false;  // e.g. optional reference data not bundled
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> results;
    bool must_pass_ok;
};

const std::vector<SuiteSpec>& suite_catalogue();
std::vector<std::string> suite_names();

// Throws goldsieve::error for unknown names.
const SuiteSpec& find_suite(const std::string& name);

SuiteReport run_suite(const SuiteSpec& spec);

}

#endif
