#include "qhpp/cli/report_io.hpp"

#include <limits>
#include <sstream>

namespace qhpp::cli {

namespace {

nlohmann::json integer_json(const Integer& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
        return n.convert_to<std::int64_t>();
    }
    return n.str();
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

std::string orders(const ReportRecord& r) {
    std::string out;
    for (const auto& s : r.report.singularities) {
        if (!out.empty()) out += ' ';
        out += s.type.q().str();
    }
    return out;
}

}  // namespace

ReportRecord make_record(const FamilyBuild& build, QhppReport report) {
    return {std::string(to_string(build.id)), build.params, std::move(report)};
}

nlohmann::json to_json(const ReportRecord& r) {
    nlohmann::json sing = nlohmann::json::array();
    for (const auto& s : r.report.singularities) {
        nlohmann::json chain = nlohmann::json::array();
        for (const auto& n : s.chain.entries()) chain.push_back(integer_json(n));
        sing.push_back({{"q", integer_json(s.type.q())}, {"q1", integer_json(s.type.q1())}, {"chain", chain}});
    }
    return {
        {"family", r.family},
        {"params", r.params},
        {"singularities", sing},
        {"rho", r.report.rho},
        {"k_class", std::string(to_string(r.report.k_class))},
        {"k_value",
         {{"num", integer_json(numerator_of(r.report.k_value))},
          {"den", integer_json(denominator_of(r.report.k_value))}}},
        {"test_curve", r.report.test_curve},
    };
}

ReportRecord record_from_json(const nlohmann::json& j) {
    ReportRecord r;
    r.family = j.at("family").get<std::string>();
    r.params = j.at("params").get<std::vector<std::int64_t>>();
    for (const auto& s : j.at("singularities")) {
        std::vector<Integer> entries;
        for (const auto& n : s.at("chain")) entries.push_back(integer_from_json(n));
        r.report.singularities.push_back(
            {CyclicSingularity(integer_from_json(s.at("q")), integer_from_json(s.at("q1"))),
             HJFraction(std::move(entries)),
             {}});
    }
    r.report.rho = j.at("rho").get<std::int64_t>();
    r.report.k_class = parse_kclass(j.at("k_class").get<std::string>());
    const Integer den = integer_from_json(j.at("k_value").at("den"));
    if (den <= 0) throw std::invalid_argument("k_value denominator must be positive");
    r.report.k_value = Rational(integer_from_json(j.at("k_value").at("num")), den);
    if (kclass_of(r.report.k_value) != r.report.k_class) {
        throw std::invalid_argument("k_class disagrees with the sign of k_value");
    }
    if (j.contains("test_curve")) r.report.test_curve = j.at("test_curve").get<std::string>();
    return r;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_table(std::ostream& os, FamilyId id, const std::vector<ReportRecord>& rows, const TableOptions& opts) {
    if (opts.format == TableFormat::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        os << arr.dump(2) << '\n';
        return;
    }

    std::vector<std::string> header = parameter_names(id);
    for (const char* h : {"orders", "rho", "k_class", "k_value"}) header.emplace_back(h);
    if (opts.decimal) header.emplace_back("k_value_approx");

    auto cells = [&](const ReportRecord& r) {
        std::vector<std::string> c;
        for (auto p : r.params) c.push_back(std::to_string(p));
        c.push_back(orders(r));
        c.push_back(std::to_string(r.report.rho));
        c.emplace_back(to_string(r.report.k_class));
        c.push_back(to_string(r.report.k_value));
        if (opts.decimal) c.push_back("~" + to_decimal_string(r.report.k_value));
        return c;
    };

    if (opts.format == TableFormat::Csv) {
        auto line = [&os](const std::vector<std::string>& c) {
            for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << csv_field(c[i]);
            os << "\r\n";
        };
        line(header);
        for (const auto& r : rows) line(cells(r));
        return;
    }

    auto line = [&os](const std::vector<std::string>& c) {
        os << '|';
        for (const auto& x : c) os << ' ' << x << " |";
        os << '\n';
    };
    line(header);
    os << '|';
    for (std::size_t i = 0; i < header.size(); ++i) os << " --- |";
    os << '\n';
    for (const auto& r : rows) line(cells(r));
}

}  // namespace qhpp::cli
