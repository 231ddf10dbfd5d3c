#include "qhpp/numbers.hpp"

#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qhpp {

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& r) {
    const Integer den = denominator_of(r);
    if (den == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + den.str();
}

std::string to_fraction_string(const Rational& r) {
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

std::string to_decimal_string(const Rational& r, int digits) {
    // Scale, round half away from zero, then place the decimal point.
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const Integer num = numerator_of(r) * scale;
    const Integer den = denominator_of(r);
    const bool negative = num < 0;
    const Integer abs_num = negative ? Integer(-num) : num;
    Integer q = (2 * abs_num + den) / (2 * den);
    std::string digits_str = q.str();
    if (digits > 0) {
        if (static_cast<int>(digits_str.size()) <= digits) {
            digits_str.insert(0, static_cast<std::size_t>(digits + 1) - digits_str.size(), '0');
        }
        digits_str.insert(digits_str.size() - static_cast<std::size_t>(digits), ".");
    }
    if (negative && q != 0) digits_str.insert(0, "-");
    return digits_str;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
    if (m <= 1) return 0;
    // Extended Euclid on (a mod m, m).
    Integer old_r = mod(a, m), r = m;
    Integer old_s = 1, s = 0;
    while (r != 0) {
        const Integer quotient = old_r / r;
        Integer tmp = old_r - quotient * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quotient * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) return 0;
    return mod(old_s, m);
}

std::int64_t to_int64(const Integer& n) {
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("integer does not fit in 64 bits: " + n.str());
    }
    return n.convert_to<std::int64_t>();
}

}  // namespace qhpp
