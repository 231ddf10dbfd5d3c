#include "qhpp/cli/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qhpp/cli/report_io.hpp"
#include "qhpp/cli/sweep.hpp"
#include "qhpp/cli/verify.hpp"
#include "qhpp/families.hpp"
#include "qhpp/hjcf.hpp"
#include "qhpp/kollar.hpp"

namespace qhpp::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class Range, class F>
std::string joined(const Range& xs, F&& fmt, const char* sep = ",") {
    std::string s;
    bool first = true;
    for (const auto& x : xs) {
        if (!first) s += sep;
        s += fmt(x);
        first = false;
    }
    return s;
}

Integer parse_integer(const std::string& text) {
    const bool digits = !text.empty() && text.find_first_not_of("0123456789", text[0] == '-' ? 1 : 0) == std::string::npos &&
                        text != "-";
    if (!digits) throw UsageError("not an integer: '" + text + "'");
    return Integer(text);
}

std::int64_t parse_int64(const std::string& text) {
    const Integer n = parse_integer(text);
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
        throw UsageError("out of range: '" + text + "'");
    }
    return to_int64(n);
}

void cmd_eval(const std::vector<std::string>& raw, std::ostream& out) {
    std::vector<Integer> entries;
    for (const auto& r : raw) entries.push_back(parse_integer(r));
    const HJFraction w(std::move(entries));
    const auto po = partial_orders(w);
    auto str = [](const auto& x) { return to_string(x); };
    out << to_fraction_string(evaluate(w)) << ", |w|=" << determinant(w) << ", d=("
        << joined(discrepancy_coefficients(w), str) << ")\n";
    out << "u=(" << joined(po.u, str) << ")\n";
    out << "v=(" << joined(po.v, str) << ")\n";
    out << "type " << singularity_of(w).str() << '\n';
}

void cmd_expand(const std::string& q, const std::string& q1, std::ostream& out) {
    out << expand(parse_integer(q), parse_integer(q1)).str() << '\n';
}

void cmd_kollar(const std::vector<std::string>& raw, std::ostream& out) {
    if (raw.size() != 4) throw UsageError("kollar needs four exponents a1 a2 a3 a4");
    const KollarParams p(parse_integer(raw[0]), parse_integer(raw[1]), parse_integer(raw[2]), parse_integer(raw[3]));
    const auto kw = weights(p);
    auto str = [](const Integer& x) { return to_string(x); };
    out << "w=(" << joined(kw.w, str) << "), d=" << kw.d << ", w*=" << kw.wstar << '\n';
    out << "s1=" << kw.s1 << ", s2=" << kw.s2;
    if (kw.t1 && kw.t2) out << ", t1=" << *kw.t1 << ", t2=" << *kw.t2;
    out << '\n';
    if (!kw.applicable()) {
        out << "w*=" << kw.wstar << "; singularity types not applicable (need w*=1)\n";
        return;
    }
    const auto [x, y] = singularity_types(p);
    out << "types " << x.type.str() << ", " << y.type.str() << '\n';
    out << "chain1=" << x.chain.str() << '\n';
    out << "chain2=" << y.chain.str() << '\n';
}

FamilyId family_id(const std::string& name) {
    const auto id = parse_family_id(name);
    if (!id) {
        std::string known = joined(all_families(), [](FamilyId f) { return std::string(to_string(f)); }, ", ");
        throw UsageError("unknown family '" + name + "' (known: " + known + ")");
    }
    return *id;
}

struct FamilyOptions {
    std::string id;
    std::vector<std::string> params;
    bool json = false;
    bool decimal = false;
    std::string graph;
    std::string graph_format = "dot";
};

void cmd_family(const FamilyOptions& o, std::ostream& out) {
    const FamilyId id = family_id(o.id);
    std::vector<std::int64_t> params;
    for (const auto& p : o.params) params.push_back(parse_int64(p));
    const auto build = build_family(id, params);
    const auto record = make_record(build, evaluate_build(build));

    if (!o.graph.empty()) {
        std::ofstream f(o.graph);
        if (!f) throw std::runtime_error("cannot write '" + o.graph + "'");
        const auto g = dual_graph(build.model, build.model.names());
        if (o.graph_format == "text") {
            g.write_text(f);
        } else {
            g.write_dot(f, std::string(to_string(id)));
        }
    }

    if (o.json) {
        out << to_json(record).dump(2) << '\n';
        return;
    }
    const auto& r = record.report;
    out << "family " << record.family << '(' << joined(record.params, [](auto v) { return std::to_string(v); }) << ")\n";
    for (const auto& s : r.singularities) out << "singularity " << s.type.str() << ' ' << s.chain.str() << '\n';
    out << "rho=" << r.rho << '\n';
    out << "k_class=" << to_string(r.k_class) << '\n';
    out << "k_value=" << to_string(r.k_value) << '\n';
    if (o.decimal) out << "k_value~" << to_decimal_string(r.k_value) << '\n';
    out << "test_curve=" << r.test_curve << '\n';
}

TableFormat table_format(const std::string& s) {
    if (s == "csv") return TableFormat::Csv;
    if (s == "json") return TableFormat::Json;
    if (s == "markdown" || s == "md") return TableFormat::Markdown;
    throw UsageError("unknown format '" + s + "'");
}

struct SweepOptions {
    std::string id;
    std::vector<std::string> ranges;
    std::string format = "csv";
    std::string output;
    unsigned threads = 0;
    bool decimal = false;
};

void cmd_sweep(const SweepOptions& o, std::ostream& out) {
    SweepSpec spec;
    spec.family = family_id(o.id);
    for (const auto& r : o.ranges) spec.ranges.push_back(parse_range(r));
    spec.table = {table_format(o.format), o.decimal};
    if (!o.output.empty()) spec.output = o.output;
    spec.threads = o.threads;
    validate(spec);
    const auto rows = run_sweep(spec);
    if (spec.output) {
        std::ofstream f(*spec.output, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + *spec.output + "'");
        write_table(f, spec.family, rows, spec.table);
    } else {
        write_table(out, spec.family, rows, spec.table);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hirzebruch-Jung strings, Kollar weights and rational surfaces of Picard number one", "qhpp"};
    app.require_subcommand(1);

    std::vector<std::string> eval_entries;
    auto* eval = app.add_subcommand("eval", "evaluate [n1,...,nl]: q/q1, determinant, partial orders, discrepancies");
    eval->add_option("entries", eval_entries, "chain entries, each >= 2")->required();

    std::string q, q1;
    auto* exp = app.add_subcommand("expand", "continued fraction of q/q1");
    exp->add_option("q", q)->required();
    exp->add_option("q1", q1)->required();

    std::vector<std::string> exponents;
    auto* kol = app.add_subcommand("kollar", "weights and singularity types for exponents a1 a2 a3 a4");
    kol->add_option("a", exponents, "four exponents, each >= 2")->required()->expected(4);

    FamilyOptions fam;
    auto* family = app.add_subcommand("family", "build and classify one family member");
    family->add_option("id", fam.id, "T, S1, S1-Pp, S1-Ppp, S3, V or Y")->required();
    family->add_option("params", fam.params, "family parameters");
    family->add_flag("--json", fam.json, "print a JSON record");
    family->add_flag("--decimal", fam.decimal, "also print an approximate k_value");
    family->add_option("--graph", fam.graph, "write the dual graph of all tracked curves to FILE");
    family->add_option("--graph-format", fam.graph_format, "dot or text")
        ->check(CLI::IsMember({"dot", "text"}));

    SweepOptions sw;
    auto* sweep = app.add_subcommand("sweep", "classify every tuple in the given ranges");
    sweep->add_option("id", sw.id)->required();
    sweep->add_option("ranges", sw.ranges, "one lo..hi range (or integer) per parameter");
    sweep->add_option("--format", sw.format, "csv, json or markdown")
        ->check(CLI::IsMember({"csv", "json", "markdown", "md"}));
    sweep->add_option("--output,-o", sw.output, "write the table to FILE");
    sweep->add_option("--threads,-j", sw.threads, "worker threads (0: all cores)");
    sweep->add_flag("--decimal", sw.decimal, "add an approximate k_value column");

    std::string suite_name = "all";
    auto* ver = app.add_subcommand("verify", "run invariant suites");
    ver->add_option("suite", suite_name, "hjcf, kollar, families or all")
        ->check(CLI::IsMember({"hjcf", "kollar", "families", "all"}));

    std::vector<const char*> argv{"qhpp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval) {
            cmd_eval(eval_entries, out);
        } else if (*exp) {
            cmd_expand(q, q1, out);
        } else if (*kol) {
            cmd_kollar(exponents, out);
        } else if (*family) {
            cmd_family(fam, out);
        } else if (*sweep) {
            cmd_sweep(sw, out);
        } else if (*ver) {
            return print_results(out, run_suite(*parse_suite(suite_name))) ? kExitOk : kExitVerifyFailed;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace qhpp::cli
