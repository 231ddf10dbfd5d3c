#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qhpp::cli {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;  ///< first counterexample on failure, or extra info
};

enum class Suite { Hjcf, Kollar, Families, All };

std::optional<Suite> parse_suite(std::string_view s);

std::vector<CheckResult> verify_hjcf();
std::vector<CheckResult> verify_kollar();
std::vector<CheckResult> verify_families();
std::vector<CheckResult> run_suite(Suite suite);

/// One line per check, then a summary line. Returns true when all passed.
bool print_results(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace qhpp::cli
