#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhpp/cli/report_io.hpp"
#include "qhpp/families.hpp"

namespace qhpp::cli {

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

/// "lo..hi" (inclusive) or a single integer. Throws std::invalid_argument.
IntRange parse_range(std::string_view text);

struct SweepSpec {
    FamilyId family = FamilyId::T;
    std::vector<IntRange> ranges;  ///< one per family parameter
    TableOptions table;
    std::optional<std::string> output;
    unsigned threads = 0;  ///< 0: hardware concurrency
};

/// Checks range count, lo <= hi and the builder minimums.
void validate(const SweepSpec& spec);

/// Parameter tuples in lexicographic order.
std::vector<std::vector<std::int64_t>> sweep_tuples(const SweepSpec& spec);

/// Builds and classifies every tuple. Work is spread over threads; the result
/// order is always that of sweep_tuples.
std::vector<ReportRecord> run_sweep(const SweepSpec& spec);

}  // namespace qhpp::cli
