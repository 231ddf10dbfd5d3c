#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qhpp/contraction.hpp"
#include "qhpp/hjcf.hpp"
#include "qhpp/lattice.hpp"

namespace qhpp {

/*
 * Rational surfaces of Picard number one obtained by blowing up curve
 * configurations in the plane and contracting chains:
 *
 *   T     four general lines, two chains            params a1 a2 a3 a4 (>= 2)
 *   S1    four lines and a nodal cubic, one chain   params b (>= 2)
 *   S1-Pp   S1 also blown up at P'                  params b c (>= 2)
 *   S1-Ppp  S1 also blown up at P''                 params b c (>= 2)
 *   S3    three concurrent lines and a conic        params b (>= 2)
 *   V     S3 also blown up at P''                   params b (>= 2) c (>= 0)
 *   Y     V also blown up once at P'                params b (>= 2) c (>= 0)
 */
enum class FamilyId { T, S1, S1Pp, S1Ppp, S3, V, Y };

std::string_view to_string(FamilyId id);
std::optional<FamilyId> parse_family_id(std::string_view s);
std::vector<FamilyId> all_families();

/// Parameter names in CLI order, e.g. {"b", "c"}.
std::vector<std::string> parameter_names(FamilyId id);
/// Smallest admissible value per parameter.
std::vector<std::int64_t> parameter_minimums(FamilyId id);

struct FamilyBuild {
    FamilyId id;
    std::vector<std::int64_t> params;
    SurfaceModel model;
    ContractionPlan plan;
    /// (-1)-curve used to read the sign of K: the last exceptional curve over
    /// the deep point (E1 for T, the last blow-up at P otherwise).
    std::string test_curve;
    /// Another curve outside the contracted locus, to cross-check the sign.
    std::string second_curve;
    /// Strings stated for the construction, in plan order.
    std::vector<HJFraction> expected_chains;
};

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

FamilyBuild build_T(std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t a4);
FamilyBuild build_S1(std::int64_t b);

enum class S1Variant { PPrime, PDoublePrime };
FamilyBuild build_S1_variant(std::int64_t b, std::int64_t c, S1Variant which);

FamilyBuild build_S3(std::int64_t b);

enum class S3Variant { V, Y };
FamilyBuild build_S3_variant(std::int64_t b, std::int64_t c, S3Variant which);

/// Dispatch by id; throws FamilyError on a wrong parameter count or range.
FamilyBuild build_family(FamilyId id, std::span<const std::int64_t> params);

/// Equal as chains, allowing either orientation.
bool same_chain(const HJFraction& a, const HJFraction& b);

/// Extracts every planned chain and compares with expected_chains.
bool chains_match_expected(const FamilyBuild& build);

/// Contract and classify with the build's test curve.
QhppReport evaluate_build(const FamilyBuild& build);

/// The twelve curves of the four-line configuration after the eight initial blow-ups.
std::vector<std::string> t_figure_curves();

/// The twelve-curve dual graph as drawn for T(2,2,2,2), entered by hand with
/// the drawing's names (T*, B* for the unnamed top/bottom (-2)-curves).
DualGraph t_figure_graph();

}  // namespace qhpp
