#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qhpp/contraction.hpp"
#include "qhpp/families.hpp"

namespace qhpp::cli {

/// A classified family member, as emitted by `family` and `sweep`.
struct ReportRecord {
    std::string family;
    std::vector<std::int64_t> params;
    QhppReport report;
};

ReportRecord make_record(const FamilyBuild& build, QhppReport report);

/*
 * JSON shape:
 *
 *   {"family": "S3", "params": [6],
 *    "singularities": [{"q": 2, "q1": 1, "chain": [2]}, ...],
 *    "rho": 1, "k_class": "Ample", "k_value": {"num": 1, "den": 47},
 *    "test_curve": "E"}
 *
 * Integers that do not fit in 64 bits are written as decimal strings.
 */
nlohmann::json to_json(const ReportRecord& r);
/// Throws std::invalid_argument (or nlohmann::json::exception) on malformed input.
ReportRecord record_from_json(const nlohmann::json& j);

enum class TableFormat { Csv, Json, Markdown };

struct TableOptions {
    TableFormat format = TableFormat::Csv;
    bool decimal = false;  ///< add an approximate k_value column
};

/// Rows in the given order; parameter columns are named after the family.
void write_table(std::ostream& os, FamilyId id, const std::vector<ReportRecord>& rows, const TableOptions& opts);

/// RFC 4180 quoting: wrap in quotes if the field has a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace qhpp::cli
