#include "qhpp/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qhpp {

std::int64_t dot(const CurveClass& a, const CurveClass& b) {
    std::int64_t value = a.degree * b.degree;
    const std::size_t n = std::max(a.mults.size(), b.mults.size());
    for (std::size_t i = 0; i < n; ++i) value -= a.mult(i) * b.mult(i);
    return value;
}

CurveClass canonical_class(std::size_t blowup_count) {
    return CurveClass{-3, std::vector<std::int64_t>(blowup_count, -1)};
}

SurfaceModel SurfaceModel::with_curve(const std::string& name, std::int64_t degree, bool smooth_rational) const {
    if (name.empty()) throw LatticeError("curve name must not be empty");
    if (has(name)) throw LatticeError("curve '" + name + "' already tracked");
    if (degree < 1) throw LatticeError("plane curve '" + name + "' needs degree >= 1");
    SurfaceModel out = *this;
    CurveClass cls{degree, std::vector<std::int64_t>(blowups_, 0)};
    // A plane curve added after blow-ups is assumed to miss every center.
    out.index_.emplace(name, out.curves_.size());
    out.names_.push_back(name);
    out.curves_.push_back(Tracked{std::move(cls), smooth_rational});
    return out;
}

SurfaceModel SurfaceModel::blow_up(const BlowupStep& step) const {
    if (step.exceptional.empty()) throw LatticeError("exceptional curve needs a name");
    if (has(step.exceptional)) throw LatticeError("curve '" + step.exceptional + "' already tracked");

    std::set<std::string> seen;
    for (const auto& inc : step.incidences) {
        if (!has(inc.curve)) throw LatticeError("unknown curve '" + inc.curve + "' in blow-up");
        if (inc.multiplicity < 1) {
            throw LatticeError("multiplicity of '" + inc.curve + "' must be >= 1");
        }
        if (!seen.insert(inc.curve).second) throw LatticeError("curve '" + inc.curve + "' listed twice");
    }

    SurfaceModel out = *this;
    const std::size_t k = out.blowups_++;
    for (auto& c : out.curves_) c.cls.mults.resize(out.blowups_, 0);
    for (const auto& inc : step.incidences) {
        out.curves_[out.index_.at(inc.curve)].cls.mults[k] = inc.multiplicity;
    }
    CurveClass exc{0, std::vector<std::int64_t>(out.blowups_, 0)};
    exc.mults[k] = -1;
    out.index_.emplace(step.exceptional, out.curves_.size());
    out.names_.push_back(step.exceptional);
    out.curves_.push_back(Tracked{std::move(exc), true});

    // Only pairs with an incident curve changed; the new exceptional meets everything non-negatively.
    const CurveClass K = out.canonical();
    for (const auto& inc : step.incidences) {
        const std::size_t i = out.index_.at(inc.curve);
        const auto& ci = out.curves_[i].cls;
        if (dot(ci, ci) + dot(ci, K) < -2) {
            throw LatticeError("blow-up at '" + step.exceptional + "' gives '" + inc.curve +
                               "' negative arithmetic genus");
        }
        for (std::size_t j = 0; j < out.curves_.size(); ++j) {
            if (j != i && dot(ci, out.curves_[j].cls) < 0) {
                throw LatticeError("blow-up at '" + step.exceptional + "' makes '" + inc.curve + "' and '" +
                                   out.names_[j] + "' meet negatively");
            }
        }
    }
    return out;
}

const SurfaceModel::Tracked& SurfaceModel::tracked(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw LatticeError("unknown curve '" + name + "'");
    return curves_[it->second];
}

const CurveClass& SurfaceModel::curve(const std::string& name) const { return tracked(name).cls; }

bool SurfaceModel::declared_smooth_rational(const std::string& name) const { return tracked(name).smooth_rational; }

std::int64_t SurfaceModel::intersect(const std::string& a, const std::string& b) const {
    return dot(curve(a), curve(b));
}

std::int64_t SurfaceModel::k_dot(const std::string& name) const { return dot(curve(name), canonical()); }

std::vector<std::string> SurfaceModel::genus_violations() const {
    std::vector<std::string> bad;
    const CurveClass K = canonical();
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        if (!curves_[i].smooth_rational) continue;
        const auto& c = curves_[i].cls;
        if (dot(c, c) + dot(c, K) != -2) bad.push_back(names_[i]);
    }
    return bad;
}

void DualGraph::write_text(std::ostream& os) const {
    for (const auto& v : vertices) os << v.name << ' ' << v.self_int << '\n';
    for (const auto& e : edges) os << vertices[e.a].name << ' ' << vertices[e.b].name << ' ' << e.weight << '\n';
}

void DualGraph::write_dot(std::ostream& os, const std::string& graph_name) const {
    os << "graph \"" << graph_name << "\" {\n";
    for (const auto& v : vertices) {
        // (-1)-curves drawn filled, like the usual black vertices.
        os << "  \"" << v.name << "\" [label=\"" << v.name << "\\n" << v.self_int << "\"";
        if (v.self_int == -1) os << ", style=filled, fillcolor=black, fontcolor=white";
        os << "];\n";
    }
    for (const auto& e : edges) {
        os << "  \"" << vertices[e.a].name << "\" -- \"" << vertices[e.b].name << "\"";
        if (e.weight != 1) os << " [label=\"" << e.weight << "\"]";
        os << ";\n";
    }
    os << "}\n";
}

DualGraph dual_graph(const SurfaceModel& s, const std::vector<std::string>& names) {
    DualGraph g;
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second) throw LatticeError("curve '" + n + "' listed twice");
        g.vertices.push_back({n, s.self_int(n)});
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            const auto w = s.intersect(names[i], names[j]);
            if (w > 0) g.edges.push_back({i, j, w});
        }
    }
    return g;
}

bool isomorphic(const DualGraph& g, const DualGraph& h) {
    const std::size_t n = g.vertices.size();
    if (n != h.vertices.size() || g.edges.size() != h.edges.size()) return false;

    auto weights = [n](const DualGraph& x) {
        std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
        for (const auto& e : x.edges) m[e.a][e.b] = m[e.b][e.a] = e.weight;
        return m;
    };
    const auto wg = weights(g), wh = weights(h);

    // Vertex invariant: label plus sorted incident weights.
    auto signature = [n](const DualGraph& x, const std::vector<std::vector<std::int64_t>>& m, std::size_t v) {
        std::vector<std::int64_t> sig{x.vertices[v].self_int};
        std::vector<std::int64_t> inc;
        for (std::size_t u = 0; u < n; ++u) {
            if (m[v][u] > 0) inc.push_back(m[v][u]);
        }
        std::sort(inc.begin(), inc.end());
        sig.insert(sig.end(), inc.begin(), inc.end());
        return sig;
    };
    std::vector<std::vector<std::int64_t>> sg(n), sh(n);
    for (std::size_t v = 0; v < n; ++v) {
        sg[v] = signature(g, wg, v);
        sh[v] = signature(h, wh, v);
    }
    {
        auto a = sg, b = sh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }

    std::vector<std::size_t> image(n, n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t v) -> bool {
        if (v == n) return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || sg[v] != sh[c]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) ok = wg[v][u] == wh[c][image[u]];
            if (!ok) continue;
            used[c] = true;
            image[v] = c;
            if (extend(v + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    return extend(0);
}

HJFraction extract_chain(const SurfaceModel& s, const std::vector<std::string>& names) {
    if (names.empty()) throw LatticeError("a chain needs at least one curve");
    std::set<std::string> seen;
    std::vector<Integer> entries;
    entries.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!seen.insert(names[i]).second) throw LatticeError("curve '" + names[i] + "' repeated in chain");
        const auto self = s.self_int(names[i]);
        if (self > -2) {
            throw LatticeError("chain curve '" + names[i] + "' has self-intersection " + std::to_string(self) +
                               ", need <= -2");
        }
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            const auto w = s.intersect(names[i], names[j]);
            const std::int64_t want = (j == i + 1) ? 1 : 0;
            if (w != want) {
                throw LatticeError("chain curves '" + names[i] + "' and '" + names[j] + "' meet in " +
                                   std::to_string(w) + ", need " + std::to_string(want));
            }
        }
        entries.emplace_back(-self);
    }
    return HJFraction(std::move(entries));
}

}  // namespace qhpp
