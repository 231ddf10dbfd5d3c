#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhpp/hjcf.hpp"

namespace qhpp {

/*
 * Divisor classes on the plane blown up n times, in the basis H, E_1..E_n:
 *
 *     C = d H - sum m_i E_i,    H^2 = 1,  E_i^2 = -1,  H.E_i = E_i.E_j = 0.
 *
 * A proper transform keeps its multiplicities in mults; the exceptional curve
 * E_k itself is (d = 0, m_k = -1). Shorter mults vectors are zero-padded.
 */
struct CurveClass {
    std::int64_t degree = 0;
    std::vector<std::int64_t> mults;

    std::int64_t mult(std::size_t i) const { return i < mults.size() ? mults[i] : 0; }

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

std::int64_t dot(const CurveClass& a, const CurveClass& b);

/// -3H + E_1 + ... + E_n
CurveClass canonical_class(std::size_t blowup_count);

/// Raised for unknown names, bad incidences and shape violations.
class LatticeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Incidence {
    std::string curve;
    std::int64_t multiplicity = 1;
};

/// One blow-up: the tracked curves through the center, with their
/// multiplicities there. The new exceptional curve is tracked as `exceptional`.
struct BlowupStep {
    std::vector<Incidence> incidences;
    std::string exceptional;
};

/*
 * Immutable model of a blown-up plane with named curves. Every tracked curve
 * is an irreducible curve, so blow_up rejects any step that would make two of
 * them meet negatively or push an arithmetic genus below zero.
 */
class SurfaceModel {
public:
    static SurfaceModel plane() { return SurfaceModel{}; }

    /// Adds a plane curve of the given degree. `smooth_rational` declares that the
    /// final proper transform is a smooth rational curve (see genus_violations).
    SurfaceModel with_curve(const std::string& name, std::int64_t degree, bool smooth_rational = true) const;

    SurfaceModel blow_up(const BlowupStep& step) const;

    std::size_t blowup_count() const noexcept { return blowups_; }
    std::size_t picard_rank() const noexcept { return blowups_ + 1; }

    bool has(const std::string& name) const { return index_.contains(name); }
    const CurveClass& curve(const std::string& name) const;
    bool declared_smooth_rational(const std::string& name) const;
    /// Names in the order the curves were introduced.
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::int64_t intersect(const std::string& a, const std::string& b) const;
    std::int64_t self_int(const std::string& name) const { return intersect(name, name); }
    std::int64_t k_dot(const std::string& name) const;
    CurveClass canonical() const { return canonical_class(blowups_); }

    /// Declared smooth rational curves with C^2 + C.K != -2.
    std::vector<std::string> genus_violations() const;

private:
    struct Tracked {
        CurveClass cls;
        bool smooth_rational = true;
    };

    const Tracked& tracked(const std::string& name) const;

    std::size_t blowups_ = 0;
    std::vector<std::string> names_;
    std::vector<Tracked> curves_;
    std::map<std::string, std::size_t> index_;
};

struct DualVertex {
    std::string name;
    std::int64_t self_int = 0;
};

struct DualEdge {
    std::size_t a = 0;  ///< vertex indices, a < b
    std::size_t b = 0;
    std::int64_t weight = 0;
};

/// Curves as vertices labelled by self-intersection; edges carry positive intersection numbers.
struct DualGraph {
    std::vector<DualVertex> vertices;
    std::vector<DualEdge> edges;

    /// Line format: "name self_int" per vertex, then "nameA nameB weight" per edge.
    void write_text(std::ostream& os) const;
    void write_dot(std::ostream& os, const std::string& graph_name = "dual") const;
};

DualGraph dual_graph(const SurfaceModel& s, const std::vector<std::string>& names);

/// Whether some bijection of vertices preserves labels and edge weights.
bool isomorphic(const DualGraph& g, const DualGraph& h);

/// [-C_1^2, ..., -C_l^2] after checking that the curves form a chain in this order.
HJFraction extract_chain(const SurfaceModel& s, const std::vector<std::string>& names);

}  // namespace qhpp
