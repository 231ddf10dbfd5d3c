#include "qhpp/hjcf.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qhpp {

namespace {

void require_entries(const std::vector<Integer>& entries) {
    for (const auto& n : entries) {
        if (n < 2) {
            throw std::invalid_argument("continued fraction entry " + n.str() + " is < 2");
        }
    }
}

void require_index(const HJFraction& w, std::size_t j) {
    if (j < 1 || j > w.length()) {
        throw std::out_of_range("index " + std::to_string(j) + " outside 1.." + std::to_string(w.length()));
    }
}

// Runs in make_pattern are materialized, so keep them to a sane length.
std::size_t run_length(const Integer& count) {
    constexpr long long kMaxRun = 1'000'000;
    if (count < 0 || count > kMaxRun) {
        throw std::invalid_argument("run length " + count.str() + " out of range");
    }
    return count.convert_to<std::size_t>();
}

}  // namespace

HJFraction::HJFraction(std::vector<Integer> entries) : entries_(std::move(entries)) {
    require_entries(entries_);
}

HJFraction::HJFraction(std::initializer_list<long long> entries) {
    entries_.reserve(entries.size());
    for (long long n : entries) entries_.emplace_back(n);
    require_entries(entries_);
}

HJFraction HJFraction::from_ints(std::span<const std::int64_t> entries) {
    std::vector<Integer> values;
    values.reserve(entries.size());
    for (auto n : entries) values.emplace_back(n);
    return HJFraction(std::move(values));
}

const Integer& HJFraction::at(std::size_t j) const {
    require_index(*this, j);
    return entries_[j - 1];
}

HJFraction HJFraction::bumped(std::size_t j) const {
    require_index(*this, j);
    HJFraction out = *this;
    out.entries_[j - 1] += 1;
    return out;
}

std::string HJFraction::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << ']';
    return os.str();
}

CyclicSingularity::CyclicSingularity(Integer q, Integer q1) : q_(std::move(q)), q1_(std::move(q1)) {
    if (q_ < 2) throw std::invalid_argument("singularity order " + q_.str() + " is < 2");
    if (q1_ < 1 || q1_ >= q_) {
        throw std::invalid_argument("q1 = " + q1_.str() + " outside [1, " + q_.str() + ")");
    }
    if (gcd(q_, q1_) != 1) {
        throw std::invalid_argument("gcd(" + q_.str() + ", " + q1_.str() + ") != 1");
    }
}

CyclicSingularity CyclicSingularity::reversed() const { return {q_, mod_inverse(q1_, q_)}; }

HJFraction CyclicSingularity::chain() const { return expand(q_, q1_); }

bool CyclicSingularity::matches(const Integer& q, const Integer& t) const {
    if (q != q_) return false;
    const Integer r = mod(t, q_);
    return r == q1_ || r == mod_inverse(q1_, q_);
}

std::string CyclicSingularity::str() const { return "1/" + q_.str() + "(1," + q1_.str() + ")"; }

Integer determinant(const HJFraction& w) {
    Integer prev = 0, cur = 1;
    for (const auto& n : w.entries()) {
        Integer next = n * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

PartialOrders partial_orders(const HJFraction& w) {
    const auto& n = w.entries();
    const std::size_t l = n.size();
    PartialOrders po;
    po.u.resize(l + 2);
    po.v.resize(l + 2);
    po.u[0] = 0;
    po.u[1] = 1;
    for (std::size_t j = 1; j <= l; ++j) po.u[j + 1] = n[j - 1] * po.u[j] - po.u[j - 1];
    po.v[l + 1] = 0;
    po.v[l] = 1;
    for (std::size_t j = l; j >= 1; --j) po.v[j - 1] = n[j - 1] * po.v[j] - po.v[j + 1];
    return po;
}

Rational evaluate(const HJFraction& w) {
    if (w.empty()) throw std::invalid_argument("the empty chain has no rational value");
    // q = |[n_1..n_l]|, q1 = |[n_2..n_l]| = v_1.
    const auto po = partial_orders(w);
    return Rational(po.v[0], po.v[1]);
}

HJFraction expand(const Integer& q, const Integer& q1) {
    if (q < 2 || q1 < 1 || q1 >= q) {
        throw std::invalid_argument("expand needs q >= 2 and 1 <= q1 < q, got " + q.str() + "/" + q1.str());
    }
    if (gcd(q, q1) != 1) throw std::invalid_argument("expand needs gcd(q, q1) = 1");
    std::vector<Integer> entries;
    Integer num = q, den = q1;
    while (den != 0) {
        const Integer n = (num + den - 1) / den;
        entries.push_back(n);
        Integer rest = n * den - num;
        num = std::move(den);
        den = std::move(rest);
    }
    return HJFraction(std::move(entries));
}

Integer bump_determinant(const HJFraction& w, std::size_t j) {
    require_index(w, j);
    const auto po = partial_orders(w);
    return po.v[j] * po.u[j] + po.u[w.length() + 1];
}

HJFraction make_pattern(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    if (a < 1 || d < 1) throw std::invalid_argument("pattern needs a, d >= 1");
    if (b < 2 || c < 2) throw std::invalid_argument("pattern needs b, c >= 2");
    std::vector<Integer> entries(run_length(a - 1), Integer(2));
    entries.push_back(b);
    entries.push_back(c);
    entries.insert(entries.end(), run_length(d - 1), Integer(2));
    return HJFraction(std::move(entries));
}

Integer pattern_determinant(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    if (a < 1 || d < 1) throw std::invalid_argument("pattern needs a, d >= 1");
    if (b < 2 || c < 2) throw std::invalid_argument("pattern needs b, c >= 2");
    return a * b * c * d - a * b * d - a * c * d + a * b + c * d - a - d + 1;
}

HJFraction reverse(const HJFraction& w) {
    std::vector<Integer> entries(w.entries().rbegin(), w.entries().rend());
    return HJFraction(std::move(entries));
}

std::vector<Rational> discrepancy_coefficients(const HJFraction& w) {
    if (w.empty()) throw std::invalid_argument("discrepancies of the empty chain are undefined");
    const auto po = partial_orders(w);
    const std::size_t l = w.length();
    const Integer& order = po.u[l + 1];
    std::vector<Rational> out;
    out.reserve(l);
    for (std::size_t j = 1; j <= l; ++j) out.emplace_back(Rational(1) - Rational(po.v[j] + po.u[j], order));
    return out;
}

CyclicSingularity normalize_type(const Integer& q, const Integer& wa, const Integer& wb) {
    if (q < 2) throw std::invalid_argument("singularity order must be >= 2");
    const Integer inv = mod_inverse(wa, q);
    if (inv == 0) throw std::invalid_argument(wa.str() + " is not invertible mod " + q.str());
    if (gcd(wb, q) != 1) throw std::invalid_argument(wb.str() + " is not coprime to " + q.str());
    return {q, mod(wb * inv, q)};
}

CyclicSingularity singularity_of(const HJFraction& w) {
    const Rational r = evaluate(w);
    return {numerator_of(r), denominator_of(r)};
}

}  // namespace qhpp
