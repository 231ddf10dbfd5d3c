#include "qhpp/families.hpp"

#include <algorithm>
#include <array>

namespace qhpp {

namespace {

constexpr std::int64_t kMaxParam = 10'000;

void require_range(std::string_view what, std::int64_t value, std::int64_t lo) {
    if (value < lo || value > kMaxParam) {
        throw FamilyError(std::string(what) + " = " + std::to_string(value) + " outside [" + std::to_string(lo) +
                          ", " + std::to_string(kMaxParam) + "]");
    }
}

std::vector<Integer> twos(std::int64_t count) { return std::vector<Integer>(static_cast<std::size_t>(count), 2); }

HJFraction concat(std::initializer_list<std::vector<Integer>> parts) {
    std::vector<Integer> all;
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return HJFraction(std::move(all));
}

// Incidence scripts are written as a sequence of blow-ups on a growing model.
class Script {
public:
    Script& curve(const std::string& name, std::int64_t degree, bool smooth_rational = true) {
        model_ = model_.with_curve(name, degree, smooth_rational);
        return *this;
    }

    Script& blow(const std::string& exceptional, std::vector<Incidence> through) {
        model_ = model_.blow_up(BlowupStep{std::move(through), exceptional});
        return *this;
    }

    /// Blows up `count` times, first at start ∩ fixed and then each time at
    /// (previous exceptional) ∩ fixed. The created curves get names[0..count).
    Script& tower(const std::string& start, const std::string& fixed, const std::vector<std::string>& names) {
        std::string previous = start;
        for (const auto& n : names) {
            blow(n, {{previous, 1}, {fixed, 1}});
            previous = n;
        }
        return *this;
    }

    SurfaceModel take() { return std::move(model_); }

private:
    SurfaceModel model_ = SurfaceModel::plane();
};

/// count curves: prefix1..prefix{count-1}, then last.
std::vector<std::string> tower_names(const std::string& prefix, std::int64_t count, const std::string& last) {
    std::vector<std::string> names;
    for (std::int64_t k = 1; k < count; ++k) names.push_back(prefix + std::to_string(k));
    if (count > 0) names.push_back(last);
    return names;
}

/// The (-2)-curves of a tower, i.e. every created curve but the last.
std::vector<std::string> tower_body(const std::vector<std::string>& names) {
    if (names.empty()) return {};
    return {names.begin(), names.end() - 1};
}

template <class... Parts>
std::vector<std::string> join(const Parts&... parts) {
    std::vector<std::string> all;
    (all.insert(all.end(), parts.begin(), parts.end()), ...);
    return all;
}

std::vector<std::string> reversed(std::vector<std::string> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

// Four-line configuration. The four chosen double points are L1∩L4, L1∩L2,
// L2∩L3, L3∩L4; the second blow-up over the point of index i sits on L_i.
// The towers E_i then continue r_i = a_i - 2 times at E_i ∩ L_i.
struct FourLines {
    SurfaceModel model;
    std::array<std::vector<std::string>, 4> towers;  // created curves, last one is E_i
};

FourLines four_lines(const std::array<std::int64_t, 4>& r) {
    static constexpr std::array<std::array<int, 2>, 4> kPoints{{{1, 4}, {2, 1}, {3, 2}, {4, 3}}};
    Script s;
    for (int i = 1; i <= 4; ++i) s.curve("L" + std::to_string(i), 1);
    FourLines out;
    for (int i = 1; i <= 4; ++i) {
        const auto [own, other] = kPoints[static_cast<std::size_t>(i - 1)];
        const std::string f = "F" + std::to_string(i);
        const std::string line = "L" + std::to_string(own);
        s.blow(f, {{line, 1}, {"L" + std::to_string(other), 1}});
        auto& tower = out.towers[static_cast<std::size_t>(i - 1)];
        tower = tower_names("E" + std::to_string(i) + "_", r[static_cast<std::size_t>(i - 1)] + 1,
                            "E" + std::to_string(i));
        // Only the first curve of each tower now; the rest follow below.
        s.tower(f, line, {tower.front()});
    }
    for (int i = 1; i <= 4; ++i) {
        const auto& tower = out.towers[static_cast<std::size_t>(i - 1)];
        s.tower(tower.front(), "L" + std::to_string(i), {tower.begin() + 1, tower.end()});
    }
    out.model = s.take();
    return out;
}

// Four lines and a nodal cubic C. L1 joins the node to p1; L2, L3, L4 are
// tangent to C at p1, p2, p3 and meet it again at p2, p3, p1. So p1 lies on
// C, L1, L2, L4; p2 on C, L2, L3; p3 on C, L3, L4.
struct NodalCubic {
    Script script;
    std::vector<std::string> core_chain;  // C .. Z1, before the tail
};

NodalCubic nodal_cubic() {
    NodalCubic out;
    auto& s = out.script;
    s.curve("C", 3).curve("L1", 1).curve("L2", 1).curve("L3", 1).curve("L4", 1);
    s.blow("N", {{"C", 2}, {"L1", 1}});
    s.blow("X1", {{"C", 1}, {"L1", 1}, {"L2", 1}, {"L4", 1}})
        .blow("X2", {{"X1", 1}, {"C", 1}, {"L2", 1}})
        .blow("X3", {{"X2", 1}, {"C", 1}});
    s.blow("Y1", {{"C", 1}, {"L2", 1}, {"L3", 1}})
        .blow("Y2", {{"Y1", 1}, {"C", 1}, {"L3", 1}})
        .blow("Y3", {{"Y2", 1}, {"C", 1}});
    s.blow("Z1", {{"C", 1}, {"L3", 1}, {"L4", 1}})
        .blow("A", {{"Z1", 1}, {"C", 1}, {"L4", 1}})
        .blow("G", {{"Z1", 1}, {"A", 1}});
    out.core_chain = {"C", "A", "L4", "X1", "X2", "L2", "Y1", "Y2", "L3", "Z1"};
    return out;
}

// Three lines through R, and a conic C tangent to L1 at Q and to L3 at p3;
// L2 crosses C transversally at p2 (and once more elsewhere).
Script conic_and_lines() {
    Script s;
    s.curve("C", 2).curve("L1", 1).curve("L2", 1).curve("L3", 1);
    s.blow("F1", {{"C", 1}, {"L1", 1}})
        .blow("F2", {{"F1", 1}, {"C", 1}, {"L1", 1}})
        .blow("F3", {{"F2", 1}, {"L1", 1}});
    s.blow("G1", {{"L1", 1}, {"L2", 1}, {"L3", 1}}).blow("G2", {{"G1", 1}, {"L2", 1}});
    s.blow("H1", {{"C", 1}, {"L3", 1}}).blow("H2", {{"H1", 1}, {"C", 1}, {"L3", 1}});
    s.blow("K1", {{"C", 1}, {"L2", 1}}).blow("K2", {{"K1", 1}, {"C", 1}});
    return s;
}

FamilyBuild s1_build(FamilyId id, std::int64_t b, std::int64_t c) {
    auto nc = nodal_cubic();
    auto& s = nc.script;
    // P = G ∩ A; blowing up there b-2 times lengthens the tail and deepens A.
    const auto p_tower = tower_names("P", b - 2, "E");
    s.tower("G", "A", p_tower);
    const auto tail = p_tower.empty() ? std::vector<std::string>{}
                                      : join(std::vector<std::string>{"G"}, tower_body(p_tower));

    std::vector<std::string> head;
    std::vector<Integer> middle{2, 2, 2, 2, 2, 2, 2};
    if (id == FamilyId::S1Pp || id == FamilyId::S1Ppp) {
        // P' = X3 ∩ X2, P'' = Y3 ∩ Y2.
        const bool prime = id == FamilyId::S1Pp;
        const std::string spur = prime ? "X3" : "Y3";
        const std::string deep = prime ? "X2" : "Y2";
        const auto names = tower_names(prime ? "Pp" : "Ppp", c - 2, prime ? "E'" : "E''");
        s.tower(spur, deep, names);
        head = reversed(join(std::vector<std::string>{spur}, tower_body(names)));
        middle[prime ? 2 : 5] = c;
        if (c == 2) head.clear();
    }

    FamilyBuild fb{.id = id, .params = {b}, .model = s.take(), .plan = {}, .test_curve = b > 2 ? "E" : "G",
                   .second_curve = "L1", .expected_chains = {}};
    if (id != FamilyId::S1) fb.params.push_back(c);
    fb.plan.chains.push_back(join(head, nc.core_chain, tail));
    const std::int64_t head_twos = id == FamilyId::S1 ? 0 : c - 2;
    fb.expected_chains.push_back(concat({twos(head_twos), {3, b}, middle, {3}, twos(b - 2)}));
    return fb;
}

FamilyBuild s3_build(FamilyId id, std::int64_t b, std::int64_t c) {
    Script s = conic_and_lines();
    // P = K2 ∩ C.
    const auto p_tower = tower_names("P", b - 2, "E");
    s.tower("K2", "C", p_tower);
    const auto tail = p_tower.empty() ? std::vector<std::string>{}
                                      : join(std::vector<std::string>{"K2"}, tower_body(p_tower));
    const std::vector<std::string> third_core{"F1", "F2", "C", "L2", "K1"};

    std::vector<std::string> head;
    if (id == FamilyId::V || id == FamilyId::Y) {
        // P'' = F3 ∩ F2, blown up c times.
        const auto names = tower_names("R", c, "E''");
        s.tower("F3", "F2", names);
        if (c > 0) head = reversed(join(std::vector<std::string>{"F3"}, tower_body(names)));
    }
    if (id == FamilyId::Y) {
        // P' = H2 ∩ C, blown up once: H2 joins H1 to the chain through L3.
        s.blow("E'", {{"H2", 1}, {"C", 1}});
    }

    FamilyBuild fb{.id = id, .params = {b}, .model = s.take(), .plan = {}, .test_curve = b > 2 ? "E" : "K2",
                   .second_curve = "G2", .expected_chains = {}};
    if (id != FamilyId::S3) fb.params.push_back(c);
    const std::vector<std::string> middle{"L1", "G1", "L3"};
    const Integer cc = c;
    if (id == FamilyId::Y) {
        fb.plan.chains = {join(head, middle, std::vector<std::string>{"H2", "H1"}), join(third_core, tail)};
        fb.expected_chains = {concat({twos(c), {3, 2, 2, 2, 2}}), concat({{2, 2 + cc, b + 1}, twos(b)})};
    } else {
        fb.plan.chains = {{"H1"}, join(head, middle), join(third_core, tail)};
        fb.expected_chains = {HJFraction{2}, concat({twos(c), {3, 2, 2}}), concat({{2, 2 + cc, b}, twos(b)})};
    }
    return fb;
}

}  // namespace

std::string_view to_string(FamilyId id) {
    switch (id) {
        case FamilyId::T: return "T";
        case FamilyId::S1: return "S1";
        case FamilyId::S1Pp: return "S1-Pp";
        case FamilyId::S1Ppp: return "S1-Ppp";
        case FamilyId::S3: return "S3";
        case FamilyId::V: return "V";
        case FamilyId::Y: return "Y";
    }
    return "?";
}

std::optional<FamilyId> parse_family_id(std::string_view s) {
    for (auto id : all_families()) {
        if (to_string(id) == s) return id;
    }
    return std::nullopt;
}

std::vector<FamilyId> all_families() {
    return {FamilyId::T, FamilyId::S1, FamilyId::S1Pp, FamilyId::S1Ppp, FamilyId::S3, FamilyId::V, FamilyId::Y};
}

std::vector<std::string> parameter_names(FamilyId id) {
    switch (id) {
        case FamilyId::T: return {"a1", "a2", "a3", "a4"};
        case FamilyId::S1:
        case FamilyId::S3: return {"b"};
        default: return {"b", "c"};
    }
}

std::vector<std::int64_t> parameter_minimums(FamilyId id) {
    switch (id) {
        case FamilyId::T: return {2, 2, 2, 2};
        case FamilyId::S1:
        case FamilyId::S3: return {2};
        case FamilyId::S1Pp:
        case FamilyId::S1Ppp: return {2, 2};
        case FamilyId::V:
        case FamilyId::Y: return {2, 0};
    }
    return {};
}

FamilyBuild build_T(std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t a4) {
    require_range("a1", a1, 2);
    require_range("a2", a2, 2);
    require_range("a3", a3, 2);
    require_range("a4", a4, 2);
    auto fl = four_lines({a1 - 2, a2 - 2, a3 - 2, a4 - 2});
    const auto& t = fl.towers;
    FamilyBuild fb{.id = FamilyId::T, .params = {a1, a2, a3, a4}, .model = std::move(fl.model), .plan = {},
                   .test_curve = "E1", .second_curve = "E2", .expected_chains = {}};
    // Upper chain: tower 4, F4, L3, L1, F2, tower 2. Lower: tower 3, F3, L2, L4, F1, tower 1.
    fb.plan.chains.push_back(join(reversed(tower_body(t[3])), std::vector<std::string>{"F4", "L3", "L1", "F2"},
                                  tower_body(t[1])));
    fb.plan.chains.push_back(join(reversed(tower_body(t[2])), std::vector<std::string>{"F3", "L2", "L4", "F1"},
                                  tower_body(t[0])));
    fb.expected_chains.push_back(make_pattern(a4, a3, a1, a2));
    fb.expected_chains.push_back(make_pattern(a3, a2, a4, a1));
    return fb;
}

FamilyBuild build_S1(std::int64_t b) {
    require_range("b", b, 2);
    return s1_build(FamilyId::S1, b, 2);
}

FamilyBuild build_S1_variant(std::int64_t b, std::int64_t c, S1Variant which) {
    require_range("b", b, 2);
    require_range("c", c, 2);
    return s1_build(which == S1Variant::PPrime ? FamilyId::S1Pp : FamilyId::S1Ppp, b, c);
}

FamilyBuild build_S3(std::int64_t b) {
    require_range("b", b, 2);
    return s3_build(FamilyId::S3, b, 0);
}

FamilyBuild build_S3_variant(std::int64_t b, std::int64_t c, S3Variant which) {
    require_range("b", b, 2);
    require_range("c", c, 0);
    return s3_build(which == S3Variant::V ? FamilyId::V : FamilyId::Y, b, c);
}

FamilyBuild build_family(FamilyId id, std::span<const std::int64_t> params) {
    const auto names = parameter_names(id);
    if (params.size() != names.size()) {
        throw FamilyError("family " + std::string(to_string(id)) + " takes " + std::to_string(names.size()) +
                          " parameters, got " + std::to_string(params.size()));
    }
    switch (id) {
        case FamilyId::T: return build_T(params[0], params[1], params[2], params[3]);
        case FamilyId::S1: return build_S1(params[0]);
        case FamilyId::S1Pp: return build_S1_variant(params[0], params[1], S1Variant::PPrime);
        case FamilyId::S1Ppp: return build_S1_variant(params[0], params[1], S1Variant::PDoublePrime);
        case FamilyId::S3: return build_S3(params[0]);
        case FamilyId::V: return build_S3_variant(params[0], params[1], S3Variant::V);
        case FamilyId::Y: return build_S3_variant(params[0], params[1], S3Variant::Y);
    }
    throw FamilyError("unknown family");
}

bool same_chain(const HJFraction& a, const HJFraction& b) { return a == b || a == reverse(b); }

bool chains_match_expected(const FamilyBuild& build) {
    if (build.plan.chains.size() != build.expected_chains.size()) return false;
    for (std::size_t i = 0; i < build.plan.chains.size(); ++i) {
        if (!same_chain(extract_chain(build.model, build.plan.chains[i]), build.expected_chains[i])) return false;
    }
    return true;
}

QhppReport evaluate_build(const FamilyBuild& build) { return classify(build.model, build.plan, build.test_curve); }

std::vector<std::string> t_figure_curves() {
    return {"L1", "L2", "L3", "L4", "F1", "F2", "F3", "F4", "E1", "E2", "E3", "E4"};
}

DualGraph t_figure_graph() {
    // Top row T1 - L3 - L1 - T4, bottom row B1 - L2 - L4 - B4, and the four
    // black vertices E1..E4 in between.
    DualGraph g;
    const std::vector<std::pair<std::string, std::int64_t>> vertices{
        {"T1", -2}, {"L3", -2}, {"L1", -2}, {"T4", -2}, {"B1", -2}, {"L2", -2},
        {"L4", -2}, {"B4", -2}, {"E1", -1}, {"E2", -1}, {"E3", -1}, {"E4", -1},
    };
    for (const auto& [name, self] : vertices) g.vertices.push_back({name, self});
    auto index = [&](const std::string& n) {
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            if (g.vertices[i].name == n) return i;
        }
        throw std::logic_error("no vertex " + n);
    };
    const std::vector<std::pair<std::string, std::string>> edges{
        {"T1", "L3"}, {"L3", "L1"}, {"L1", "T4"}, {"B1", "L2"}, {"L2", "L4"}, {"L4", "B4"},
        {"E1", "L1"}, {"E1", "B4"}, {"E2", "L2"}, {"E2", "T4"}, {"E3", "L3"}, {"E3", "B1"},
        {"E4", "L4"}, {"E4", "T1"},
    };
    for (const auto& [a, b] : edges) {
        const auto i = index(a), j = index(b);
        g.edges.push_back({std::min(i, j), std::max(i, j), 1});
    }
    return g;
}

}  // namespace qhpp
