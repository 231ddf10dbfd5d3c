#include "qhpp/kollar.hpp"

namespace qhpp {

namespace {

std::optional<Integer> try_normalize(const Integer& s, const Integer& wa, const Integer& wb) {
    if (s < 2 || gcd(wa, s) != 1 || gcd(wb, s) != 1) return std::nullopt;
    return normalize_type(s, wa, wb).q1();
}

void check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("weight identity failed: ") + what);
}

}  // namespace

KollarParams::KollarParams(Integer a1, Integer a2, Integer a3, Integer a4)
    : a{std::move(a1), std::move(a2), std::move(a3), std::move(a4)} {
    for (const auto& ai : a) {
        if (ai < 2) throw std::invalid_argument("exponent " + ai.str() + " is < 2");
    }
}

KollarNotApplicable::KollarNotApplicable(Integer wstar)
    : std::domain_error("w*=" + wstar.str() + "; singularity types need w*=1"), wstar_(std::move(wstar)) {}

KollarWeights weights(const KollarParams& p) {
    const Integer &a1 = p.a1(), &a2 = p.a2(), &a3 = p.a3(), &a4 = p.a4();
    const std::array<Integer, 4> raw{
        a2 * a3 * a4 - a3 * a4 + a4 - 1,
        a1 * a3 * a4 - a1 * a4 + a1 - 1,
        a1 * a2 * a4 - a1 * a2 + a2 - 1,
        a1 * a2 * a3 - a2 * a3 + a3 - 1,
    };
    const Integer raw_d = a1 * a2 * a3 * a4 - 1;

    KollarWeights kw;
    kw.wstar = gcd(gcd(raw[0], raw[1]), gcd(raw[2], raw[3]));
    for (std::size_t i = 0; i < 4; ++i) kw.w[i] = raw[i] / kw.wstar;
    kw.d = raw_d / kw.wstar;
    const auto &w1 = kw.w[0], &w2 = kw.w[1], &w3 = kw.w[2], &w4 = kw.w[3];

    check(a1 * w1 + w2 == kw.d && a2 * w2 + w3 == kw.d && a3 * w3 + w4 == kw.d && a4 * w4 + w1 == kw.d,
          "a_i w_i + w_{i+1} = d");

    kw.s1 = a4 * w4 - w3;
    kw.s2 = a3 * w3 - w2;
    check(kw.s1 == a2 * w2 - w1, "a4 w4 - w3 = a2 w2 - w1");
    check(kw.s2 == a1 * w1 - w4, "a3 w3 - w2 = a1 w1 - w4");

    kw.t1 = try_normalize(kw.s1, w2, w4);
    kw.t2 = try_normalize(kw.s2, w1, w3);
    return kw;
}

HJFraction first_chain(const KollarParams& p) { return make_pattern(p.a4(), p.a3(), p.a1(), p.a2()); }

HJFraction second_chain(const KollarParams& p) { return make_pattern(p.a3(), p.a2(), p.a4(), p.a1()); }

std::pair<TypedChain, TypedChain> singularity_types(const KollarParams& p) {
    const KollarWeights kw = weights(p);
    if (!kw.applicable()) throw KollarNotApplicable(kw.wstar);
    check(kw.t1.has_value() && kw.t2.has_value(), "types normalize when w* = 1");

    const auto &w1 = kw.w[0], &w2 = kw.w[1], &w3 = kw.w[2], &w4 = kw.w[3];
    const Integer &a1 = p.a1(), &a2 = p.a2(), &a3 = p.a3(), &a4 = p.a4();

    HJFraction chain1 = first_chain(p);
    HJFraction chain2 = second_chain(p);
    check(kw.s1 == pattern_determinant(a4, a3, a1, a2), "s1 = |[2*(a4-1),a3,a1,2*(a2-1)]|");
    check(kw.s2 == pattern_determinant(a3, a2, a4, a1), "s2 = |[2*(a3-1),a2,a4,2*(a1-1)]|");

    // t is the determinant of the chain with one leading 2 removed.
    const Integer t1 = pattern_determinant(a4 - 1, a3, a1, a2);
    const Integer t2 = pattern_determinant(a3 - 1, a2, a4, a1);
    check(mod(t1 * w2 - w4, kw.s1) == 0, "t1 w2 = w4 mod s1");
    check(mod(t2 * w1 - w3, kw.s2) == 0, "t2 w1 = w3 mod s2");

    CyclicSingularity type1(kw.s1, *kw.t1);
    CyclicSingularity type2(kw.s2, *kw.t2);
    check(type1.q1() == t1 && type2.q1() == t2, "normalized t matches the truncated chain");
    check(type1.matches(kw.s1, denominator_of(evaluate(chain1))), "chain 1 evaluates to s1/t1");
    check(type2.matches(kw.s2, denominator_of(evaluate(chain2))), "chain 2 evaluates to s2/t2");

    return {TypedChain{std::move(type1), std::move(chain1)}, TypedChain{std::move(type2), std::move(chain2)}};
}

}  // namespace qhpp
