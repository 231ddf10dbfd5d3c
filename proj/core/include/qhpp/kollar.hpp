#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qhpp/hjcf.hpp"
#include "qhpp/numbers.hpp"

namespace qhpp {

/// Exponents of x1^a1 x2 + x2^a2 x3 + x3^a3 x4 + x4^a4 x1, each a_i >= 2.
struct KollarParams {
    std::array<Integer, 4> a;

    KollarParams(Integer a1, Integer a2, Integer a3, Integer a4);

    const Integer& a1() const { return a[0]; }
    const Integer& a2() const { return a[1]; }
    const Integer& a3() const { return a[2]; }
    const Integer& a4() const { return a[3]; }
};

/*
 * Weights of the hypersurface in P(w1, w2, w3, w4):
 *
 *     a1 w1 + w2 = a2 w2 + w3 = a3 w3 + w4 = a4 w4 + w1 = d.
 *
 * s1 = a4 w4 - w3 and s2 = a3 w3 - w2 are the orders of the two points
 * obtained by contracting the curves (x1 = x3 = 0) and (x2 = x4 = 0);
 * t1 and t2 normalize their types to 1/s(1, t).
 */
struct KollarWeights {
    std::array<Integer, 4> w;  ///< divided by wstar
    Integer d;
    Integer wstar;  ///< gcd of the raw weights
    Integer s1, s2;
    /// Present only when the type normalizes (s >= 2 and the weights are units mod s).
    std::optional<Integer> t1, t2;

    bool applicable() const { return wstar == 1; }
};

/// Thrown by singularity_types when the raw weights share a factor.
class KollarNotApplicable : public std::domain_error {
public:
    explicit KollarNotApplicable(Integer wstar);
    const Integer& wstar() const noexcept { return wstar_; }

private:
    Integer wstar_;
};

struct TypedChain {
    CyclicSingularity type;
    HJFraction chain;
};

KollarWeights weights(const KollarParams& p);

/// 1/s1(w2, w4) and 1/s2(w1, w3) as 1/s(1, t) with their resolution chains.
/// Every identity linking the weights, the chains and the types is checked;
/// a violation throws std::logic_error.
std::pair<TypedChain, TypedChain> singularity_types(const KollarParams& p);

/// Chain of the point 1/s1(w2, w4): [2*(a4-1), a3, a1, 2*(a2-1)].
HJFraction first_chain(const KollarParams& p);
/// Chain of the point 1/s2(w1, w3): [2*(a3-1), a2, a4, 2*(a1-1)].
HJFraction second_chain(const KollarParams& p);

}  // namespace qhpp
