#include "qhpp/cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <thread>

namespace qhpp::cli {

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end || s.empty()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

IntRange parse_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = parse_int(text);
        return {v, v};
    }
    IntRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
    return r;
}

void validate(const SweepSpec& spec) {
    const auto names = parameter_names(spec.family);
    const auto mins = parameter_minimums(spec.family);
    if (spec.ranges.size() != names.size()) {
        throw std::invalid_argument("family " + std::string(to_string(spec.family)) + " needs " +
                                    std::to_string(names.size()) + " ranges, got " +
                                    std::to_string(spec.ranges.size()));
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto& r = spec.ranges[i];
        if (r.lo > r.hi) throw std::invalid_argument("empty range for " + names[i]);
        if (r.lo < mins[i]) {
            throw std::invalid_argument(names[i] + " must be >= " + std::to_string(mins[i]) + ", range starts at " +
                                        std::to_string(r.lo));
        }
    }
}

std::vector<std::vector<std::int64_t>> sweep_tuples(const SweepSpec& spec) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    for (const auto& r : spec.ranges) cur.push_back(r.lo);
    if (spec.ranges.empty()) return out;
    while (true) {
        out.push_back(cur);
        // Odometer, last parameter fastest.
        std::size_t i = spec.ranges.size();
        while (i > 0) {
            --i;
            if (cur[i] < spec.ranges[i].hi) {
                ++cur[i];
                break;
            }
            cur[i] = spec.ranges[i].lo;
            if (i == 0) return out;
        }
    }
}

std::vector<ReportRecord> run_sweep(const SweepSpec& spec) {
    validate(spec);
    const auto tuples = sweep_tuples(spec);
    std::vector<std::optional<ReportRecord>> slots(tuples.size());

    unsigned workers = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tuples.size(), 1)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < tuples.size(); i = next++) {
            try {
                auto build = build_family(spec.family, tuples[i]);
                slots[i] = make_record(build, evaluate_build(build));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
        work();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<ReportRecord> rows;
    rows.reserve(slots.size());
    for (auto& s : slots) rows.push_back(std::move(*s));
    return rows;
}

}  // namespace qhpp::cli
