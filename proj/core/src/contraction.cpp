#include "qhpp/contraction.hpp"

#include <set>

namespace qhpp {

namespace {

// Leading principal minors by fraction-free elimination (Bareiss); exact.
std::vector<Integer> leading_minors(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    std::vector<Integer> minors;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // Without pivoting the k-th pivot is the ratio of consecutive minors; a
        // zero pivot means the matrix is not definite, which is reported as such.
        minors.push_back(m[k][k]);
        if (m[k][k] == 0) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return minors;
}

void require_negative_definite(const SurfaceModel& s, const std::vector<std::string>& chain) {
    const std::size_t n = chain.size();
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = s.intersect(chain[i], chain[j]);
    }
    const auto minors = leading_minors(std::move(m));
    for (std::size_t k = 0; k < n; ++k) {
        // (-1)^(k+1) * minor_{k+1} > 0 for a negative definite form.
        const bool ok = k < minors.size() && (k % 2 == 0 ? minors[k] < 0 : minors[k] > 0);
        if (!ok) throw ContractionError("chain starting at '" + chain.front() + "' is not negative definite");
    }
}

}  // namespace

std::size_t ContractionPlan::curve_count() const {
    std::size_t n = 0;
    for (const auto& c : chains) n += c.size();
    return n;
}

std::string_view to_string(KClass k) {
    switch (k) {
        case KClass::Ample: return "Ample";
        case KClass::NumericallyTrivial: return "NumericallyTrivial";
        case KClass::AntiAmple: return "AntiAmple";
    }
    return "?";
}

KClass parse_kclass(std::string_view s) {
    if (s == "Ample") return KClass::Ample;
    if (s == "NumericallyTrivial") return KClass::NumericallyTrivial;
    if (s == "AntiAmple") return KClass::AntiAmple;
    throw std::invalid_argument("unknown K class '" + std::string(s) + "'");
}

NotRankOne::NotRankOne(std::int64_t rho)
    : ContractionError("Picard rank after contraction is " + std::to_string(rho) +
                       ", not a Q-homology projective plane"),
      rho_(rho) {}

KClass kclass_of(const Rational& k_value) {
    if (k_value > 0) return KClass::Ample;
    if (k_value < 0) return KClass::AntiAmple;
    return KClass::NumericallyTrivial;
}

ContractionResult contract(const SurfaceModel& s, const ContractionPlan& plan) {
    std::map<std::string, std::size_t> owner;
    for (std::size_t c = 0; c < plan.chains.size(); ++c) {
        for (const auto& name : plan.chains[c]) {
            if (!owner.emplace(name, c).second) {
                throw ContractionError("curve '" + name + "' belongs to more than one chain");
            }
        }
    }

    ContractionResult result;
    for (const auto& chain : plan.chains) {
        HJFraction w;
        try {
            w = extract_chain(s, chain);
        } catch (const LatticeError& e) {
            throw ContractionError(e.what());
        }
        require_negative_definite(s, chain);
        result.singularities.push_back({singularity_of(w), std::move(w), chain});
    }

    for (std::size_t c = 0; c < plan.chains.size(); ++c) {
        for (std::size_t d = c + 1; d < plan.chains.size(); ++d) {
            for (const auto& a : plan.chains[c]) {
                for (const auto& b : plan.chains[d]) {
                    if (s.intersect(a, b) != 0) {
                        throw ContractionError("chains meet: '" + a + "' . '" + b + "' = " +
                                               std::to_string(s.intersect(a, b)));
                    }
                }
            }
        }
    }

    result.rho = static_cast<std::int64_t>(s.picard_rank()) - static_cast<std::int64_t>(plan.curve_count());
    return result;
}

Rational pullback_k_dot(const SurfaceModel& s, const ContractionPlan& plan, const std::string& curve) {
    if (!s.has(curve)) throw LatticeError("unknown curve '" + curve + "'");
    Rational value = s.k_dot(curve);
    for (const auto& chain : plan.chains) {
        for (const auto& name : chain) {
            if (name == curve) throw ContractionError("curve '" + curve + "' is contracted");
        }
        const auto coeffs = discrepancy_coefficients(extract_chain(s, chain));
        for (std::size_t j = 0; j < chain.size(); ++j) value += coeffs[j] * s.intersect(curve, chain[j]);
    }
    return value;
}

QhppReport classify(const SurfaceModel& s, const ContractionPlan& plan, const std::string& test_curve) {
    auto contracted = contract(s, plan);
    if (contracted.rho != 1) throw NotRankOne(contracted.rho);
    QhppReport report;
    report.k_value = pullback_k_dot(s, plan, test_curve);
    report.k_class = kclass_of(report.k_value);
    report.singularities = std::move(contracted.singularities);
    report.rho = contracted.rho;
    report.test_curve = test_curve;
    return report;
}

}  // namespace qhpp
