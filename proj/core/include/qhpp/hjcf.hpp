#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qhpp/numbers.hpp"

namespace qhpp {

/*
 * Hirzebruch-Jung continued fractions.
 *
 *     [n_1, ..., n_l] = n_1 - 1/(n_2 - 1/(... - 1/n_l)),  every n_j >= 2.
 *
 * A chain of smooth rational curves with self-intersections -n_1, ..., -n_l
 * resolves the cyclic quotient singularity 1/q(1, q_1) where
 * [n_1, ..., n_l] = q/q_1. The empty chain stands for a smooth point and has
 * determinant 1 but no rational value.
 */
class HJFraction {
public:
    HJFraction() = default;

    /// Throws std::invalid_argument if some entry is < 2.
    explicit HJFraction(std::vector<Integer> entries);
    HJFraction(std::initializer_list<long long> entries);

    static HJFraction from_ints(std::span<const std::int64_t> entries);

    const std::vector<Integer>& entries() const noexcept { return entries_; }
    std::size_t length() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// 1-based, as in the usual notation n_1..n_l.
    const Integer& at(std::size_t j) const;

    /// Copy with n_j replaced by n_j + 1 (1-based).
    HJFraction bumped(std::size_t j) const;

    /// "[3,2,2]"
    std::string str() const;

    friend bool operator==(const HJFraction&, const HJFraction&) = default;

private:
    std::vector<Integer> entries_;
};

/// u_0..u_{l+1} and v_0..v_{l+1}: determinants of the head and tail sub-chains.
struct PartialOrders {
    std::vector<Integer> u;  ///< u_0 = 0, u_1 = 1, u_j = |[n_1..n_{j-1}]|
    std::vector<Integer> v;  ///< v_l = 1, v_{l+1} = 0, v_j = |[n_{j+1}..n_l]|
};

/// Normalized cyclic quotient singularity 1/q(1, q1).
class CyclicSingularity {
public:
    /// Requires q >= 2, 1 <= q1 < q, gcd(q, q1) = 1.
    CyclicSingularity(Integer q, Integer q1);

    const Integer& q() const noexcept { return q_; }
    const Integer& q1() const noexcept { return q1_; }

    /// The same singularity with the chain read from the other end, 1/q(1, q1^-1).
    CyclicSingularity reversed() const;

    /// Resolution chain in the orientation fixed by expand(q, q1).
    HJFraction chain() const;

    /// True when t is q1 or its inverse mod q.
    bool matches(const Integer& q, const Integer& t) const;
    bool matches(const CyclicSingularity& other) const { return matches(other.q(), other.q1()); }

    /// "1/7(1,3)"
    std::string str() const;

    friend bool operator==(const CyclicSingularity&, const CyclicSingularity&) = default;

private:
    Integer q_;
    Integer q1_;
};

/// |w| by the forward recurrence u_{j+1} = n_j u_j - u_{j-1}. Empty chain gives 1.
Integer determinant(const HJFraction& w);

/// q/q1 in lowest terms. Throws std::invalid_argument for the empty chain.
Rational evaluate(const HJFraction& w);

PartialOrders partial_orders(const HJFraction& w);

/// Inverse of evaluate by ceiling division. Rejects q < 2, q1 out of [1, q), gcd != 1.
HJFraction expand(const Integer& q, const Integer& q1);

/// |w with n_j -> n_j + 1| computed as v_j u_j + |w|, without re-evaluating.
Integer bump_determinant(const HJFraction& w, std::size_t j);

/// [2*(a-1), b, c, 2*(d-1)]: a-1 twos, then b, c, then d-1 twos.
HJFraction make_pattern(const Integer& a, const Integer& b, const Integer& c, const Integer& d);

/// abcd - abd - acd + ab + cd - a - d + 1, which equals |make_pattern(a, b, c, d)|.
Integer pattern_determinant(const Integer& a, const Integer& b, const Integer& c, const Integer& d);

HJFraction reverse(const HJFraction& w);

/// d_j = 1 - (v_j + u_j)/|w| for j = 1..l. Empty chain rejected.
std::vector<Rational> discrepancy_coefficients(const HJFraction& w);

/// 1/q(wa, wb) rewritten as 1/q(1, t) with t * wa = wb (mod q).
CyclicSingularity normalize_type(const Integer& q, const Integer& wa, const Integer& wb);

/// Singularity resolved by a nonempty chain: q = |w|, q1 from evaluate(w).
CyclicSingularity singularity_of(const HJFraction& w);

}  // namespace qhpp
