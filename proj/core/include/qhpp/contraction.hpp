#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qhpp/hjcf.hpp"
#include "qhpp/lattice.hpp"
#include "qhpp/numbers.hpp"

namespace qhpp {

/// Chains of curves to contract, each listed end to end.
struct ContractionPlan {
    std::vector<std::vector<std::string>> chains;

    std::size_t curve_count() const;
};

struct ContractedPoint {
    CyclicSingularity type;
    HJFraction chain;
    std::vector<std::string> curves;
};

struct ContractionResult {
    std::vector<ContractedPoint> singularities;
    std::int64_t rho = 0;  ///< Picard rank after contraction
};

enum class KClass { Ample, NumericallyTrivial, AntiAmple };

std::string_view to_string(KClass k);
/// Throws std::invalid_argument on an unknown label.
KClass parse_kclass(std::string_view s);

class ContractionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by classify when the contraction is not of Picard rank 1.
class NotRankOne : public ContractionError {
public:
    explicit NotRankOne(std::int64_t rho);
    std::int64_t rho() const noexcept { return rho_; }

private:
    std::int64_t rho_;
};

struct QhppReport {
    std::vector<ContractedPoint> singularities;
    std::int64_t rho = 0;
    KClass k_class = KClass::NumericallyTrivial;
    Rational k_value;  ///< E . f^*(K) for the test curve E
    std::string test_curve;
};

/// Checks every chain and their mutual disjointness, then reads off the
/// singular points and the Picard rank of the contracted surface.
ContractionResult contract(const SurfaceModel& s, const ContractionPlan& plan);

/*
 * E . f^*(K_X) for a curve E outside the contracted locus. Pulling back K_X
 * adds the discrepancy divisor to K of the resolution,
 *
 *     f^*(K_X) = K + sum_j (1 - (v_j + u_j)/|w|) A_j    over every chain,
 *
 * so the result is E.K + sum_j d_j (E.A_j). For a (-1)-curve E.K = -1.
 */
Rational pullback_k_dot(const SurfaceModel& s, const ContractionPlan& plan, const std::string& curve);

/// Sign of pullback_k_dot at Picard rank 1. Throws NotRankOne otherwise.
QhppReport classify(const SurfaceModel& s, const ContractionPlan& plan, const std::string& test_curve);

KClass kclass_of(const Rational& k_value);

}  // namespace qhpp
