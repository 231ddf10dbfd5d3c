#include "qhpp/cli/verify.hpp"

#include <functional>
#include <sstream>

#include "qhpp/contraction.hpp"
#include "qhpp/families.hpp"
#include "qhpp/hjcf.hpp"
#include "qhpp/kollar.hpp"

namespace qhpp::cli {

namespace {

// Runs body over cases until the first failure; body returns an empty string
// on success and a counterexample description otherwise.
class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    bool operator()(const std::function<std::string()>& body) {
        if (!result_.passed) return false;
        ++result_.cases;
        std::string failure;
        try {
            failure = body();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (!failure.empty()) {
            result_.passed = false;
            result_.detail = std::move(failure);
        }
        return result_.passed;
    }

    Check& info(std::string detail) {
        if (result_.passed) result_.detail = std::move(detail);
        return *this;
    }

    CheckResult done() { return std::move(result_); }

private:
    CheckResult result_;
};

template <class... Ts>
std::string tuple_str(const Ts&... xs) {
    std::ostringstream os;
    os << '(';
    std::size_t i = 0;
    ((os << (i++ ? "," : "") << xs), ...);
    os << ')';
    return os.str();
}

// Cofactor expansion along the first row; deliberately naive.
Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Integer total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col] == 0) continue;
        std::vector<std::vector<Integer>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Integer> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        const Integer term = m[0][col] * cofactor_det(minor);
        total += (col % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

Integer tridiagonal_oracle(const HJFraction& w) {
    const std::size_t l = w.length();
    std::vector<std::vector<Integer>> m(l, std::vector<Integer>(l, 0));
    for (std::size_t i = 0; i < l; ++i) {
        m[i][i] = w.entries()[i];
        if (i + 1 < l) m[i][i + 1] = m[i + 1][i] = -1;
    }
    return cofactor_det(m);
}

void for_each_chain(std::size_t max_len, int lo, int hi, const std::function<void(const HJFraction&)>& f) {
    std::vector<std::int64_t> cur;
    std::function<void()> rec = [&] {
        if (!cur.empty()) f(HJFraction::from_ints(cur));
        if (cur.size() == max_len) return;
        for (int n = lo; n <= hi; ++n) {
            cur.push_back(n);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view s) {
    if (s == "hjcf") return Suite::Hjcf;
    if (s == "kollar") return Suite::Kollar;
    if (s == "families") return Suite::Families;
    if (s == "all") return Suite::All;
    return std::nullopt;
}

std::vector<CheckResult> verify_hjcf() {
    std::vector<CheckResult> out;

    Check round_trip("expand/evaluate round trip, 1 <= q1 < q <= 500");
    for (int q = 2; q <= 500; ++q) {
        for (int q1 = 1; q1 < q; ++q1) {
            if (gcd(Integer(q), Integer(q1)) != 1) continue;
            round_trip([&] {
                return evaluate(expand(q, q1)) == Rational(q, q1) ? "" : tuple_str(q, q1);
            });
        }
    }
    out.push_back(round_trip.done());

    Check det("determinant = cofactor expansion, length <= 6, entries 2..5");
    Check bump("bump_determinant = determinant of bumped chain");
    Check mono("determinant strictly increasing in each entry");
    Check rev("reversal keeps |w| and inverts q1 mod q");
    Check disc("discrepancies in [0,1), all zero iff all entries 2");
    Check orders("partial orders: u_{l+1} = v_0 = |w|, monotone");
    for_each_chain(6, 2, 5, [&](const HJFraction& w) {
        det([&] { return determinant(w) == tridiagonal_oracle(w) ? "" : w.str(); });
        for (std::size_t j = 1; j <= w.length(); ++j) {
            bump([&] {
                return bump_determinant(w, j) == determinant(w.bumped(j)) ? "" : w.str() + " j=" + std::to_string(j);
            });
            mono([&] { return bump_determinant(w, j) > determinant(w) ? "" : w.str(); });
        }
        rev([&] {
            const auto r = reverse(w);
            const Rational a = evaluate(w), b = evaluate(r);
            const bool ok = determinant(r) == determinant(w) && numerator_of(a) == numerator_of(b) &&
                            mod(denominator_of(a) * denominator_of(b), numerator_of(a)) == mod(1, numerator_of(a));
            return ok ? "" : w.str();
        });
        disc([&] {
            const auto d = discrepancy_coefficients(w);
            bool all_zero = true, all_two = true;
            for (const auto& x : d) {
                if (x < 0 || x >= 1) return w.str();
                all_zero = all_zero && x == 0;
            }
            for (const auto& n : w.entries()) all_two = all_two && n == 2;
            return all_zero == all_two ? "" : w.str();
        });
        orders([&] {
            const auto po = partial_orders(w);
            const std::size_t l = w.length();
            if (po.u[l + 1] != po.v[0] || po.v[0] != determinant(w)) return w.str();
            for (std::size_t j = 1; j <= l; ++j) {
                if (po.u[j + 1] <= po.u[j] || po.v[j - 1] <= po.v[j]) return w.str();
            }
            return std::string{};
        });
    });
    for (auto* c : {&det, &bump, &mono, &rev, &disc, &orders}) out.push_back(c->done());

    Check pattern("pattern_determinant = |make_pattern|, a,d in 1..8, b,c in 2..8");
    for (int a = 1; a <= 8; ++a) {
        for (int b = 2; b <= 8; ++b) {
            for (int c = 2; c <= 8; ++c) {
                for (int d = 1; d <= 8; ++d) {
                    pattern([&] {
                        return pattern_determinant(a, b, c, d) == tridiagonal_oracle(make_pattern(a, b, c, d))
                                   ? ""
                                   : tuple_str(a, b, c, d);
                    });
                }
            }
        }
    }
    out.push_back(pattern.done());
    return out;
}

std::vector<CheckResult> verify_kollar() {
    std::vector<CheckResult> out;
    Check rel("weights satisfy a_i w_i + w_{i+1} = d, [2,6]^4");
    Check types("s, t, chains and congruences when w* = 1, [2,6]^4");
    std::size_t applicable = 0;
    for (int a1 = 2; a1 <= 6; ++a1) {
        for (int a2 = 2; a2 <= 6; ++a2) {
            for (int a3 = 2; a3 <= 6; ++a3) {
                for (int a4 = 2; a4 <= 6; ++a4) {
                    const KollarParams p(a1, a2, a3, a4);
                    const auto kw = weights(p);
                    rel([&] {
                        const auto& w = kw.w;
                        const bool ok = a1 * w[0] + w[1] == kw.d && a2 * w[1] + w[2] == kw.d &&
                                        a3 * w[2] + w[3] == kw.d && a4 * w[3] + w[0] == kw.d &&
                                        gcd(gcd(w[0], w[1]), gcd(w[2], w[3])) == 1;
                        return ok ? "" : tuple_str(a1, a2, a3, a4);
                    });
                    if (!kw.applicable()) continue;
                    ++applicable;
                    types([&] {
                        const auto [x, y] = singularity_types(p);
                        const auto& w = kw.w;
                        const Integer s1 = kw.s1, s2 = kw.s2;
                        const Integer A1 = a1, A2 = a2, A3 = a3, A4 = a4;
                        const Integer c1 = A1 * A3 * A4 - A1 * A3 - A1 * A4 + 2 * A1 - 1;
                        const Integer c2 = A2 * A3 * A4 - A2 * A4 - A3 * A4 + 2 * A4 - 1;
                        const bool ok = x.type.q() == s1 && y.type.q() == s2 &&
                                        pattern_determinant(A4 - 1, A3, A1, A2) * w[1] == w[3] + c1 * s1 &&
                                        pattern_determinant(A3 - 1, A2, A4, A1) * w[0] == w[2] + c2 * s2 &&
                                        s1 == pattern_determinant(a4, a3, a1, a2) &&
                                        s2 == pattern_determinant(a3, a2, a4, a1) &&
                                        mod(x.type.q1() * w[1] - w[3], s1) == 0 &&
                                        mod(y.type.q1() * w[0] - w[2], s2) == 0 &&
                                        x.type.matches(singularity_of(x.chain)) &&
                                        y.type.matches(singularity_of(y.chain));
                        return ok ? "" : tuple_str(a1, a2, a3, a4);
                    });
                }
            }
        }
    }
    out.push_back(rel.done());
    types.info(std::to_string(applicable) + " tuples with w*=1");
    out.push_back(types.done());
    return out;
}

std::vector<CheckResult> verify_families() {
    std::vector<CheckResult> out;

    auto common = [](const FamilyBuild& fb) -> std::string {
        std::ostringstream where;
        where << to_string(fb.id);
        for (auto p : fb.params) where << ' ' << p;
        if (!chains_match_expected(fb)) return where.str() + ": chains differ from the stated strings";
        if (!fb.model.genus_violations().empty()) return where.str() + ": genus check failed";
        const auto rep = evaluate_build(fb);
        const auto blowups = static_cast<std::int64_t>(fb.model.blowup_count());
        if (rep.rho != 1 || rep.rho != 1 + blowups - static_cast<std::int64_t>(fb.plan.curve_count())) {
            return where.str() + ": rho != 1";
        }
        const auto alt = pullback_k_dot(fb.model, fb.plan, fb.second_curve);
        if (kclass_of(alt) != rep.k_class) return where.str() + ": test curves disagree on the sign of K";
        return {};
    };

    Check t("T over [2,6]^4: chains, rho, closed form, Kollar types, ampleness");
    for (int a1 = 2; a1 <= 6; ++a1) {
        for (int a2 = 2; a2 <= 6; ++a2) {
            for (int a3 = 2; a3 <= 6; ++a3) {
                for (int a4 = 2; a4 <= 6; ++a4) {
                    t([&]() -> std::string {
                        const auto fb = build_T(a1, a2, a3, a4);
                        if (auto e = common(fb); !e.empty()) return e;
                        const auto rep = evaluate_build(fb);
                        const Integer A1 = a1, A2 = a2, A3 = a3, A4 = a4;
                        const Rational closed(
                            (A2 * A3 * A4 - A3 * A4 + A4 - 1) *
                                ((A1 - 1) * (A2 - 1) * (A3 - 1) * (A4 - 1) - A1 * A3 - A2 * A4 + 2),
                            determinant(fb.expected_chains[0]) * determinant(fb.expected_chains[1]));
                        if (rep.k_value != closed) return "closed form " + tuple_str(a1, a2, a3, a4);
                        if (std::min({a1, a2, a3, a4}) >= 3) {
                            const bool all3 = a1 == 3 && a2 == 3 && a3 == 3 && a4 == 3;
                            const auto want = all3 ? KClass::NumericallyTrivial : KClass::Ample;
                            if (rep.k_class != want) return "K class " + tuple_str(a1, a2, a3, a4);
                        }
                        const KollarParams p(a1, a2, a3, a4);
                        if (weights(p).applicable()) {
                            const auto [x, y] = singularity_types(p);
                            if (!rep.singularities[0].type.matches(x.type) ||
                                !rep.singularities[1].type.matches(y.type)) {
                                return "Kollar types " + tuple_str(a1, a2, a3, a4);
                            }
                        }
                        return {};
                    });
                }
            }
        }
    }
    out.push_back(t.done());

    Check remark("T with two exponents 2: ample thresholds / anti-ample, others in 2..12");
    auto ample_threshold = [](int k, int l) {
        const int lo = std::min(k, l), hi = std::max(k, l);
        return lo >= 6 || (lo == 5 && hi >= 7) || (lo == 4 && hi >= 10);
    };
    for (int x = 2; x <= 12; ++x) {
        for (int y = 2; y <= 12; ++y) {
            remark([&] {
                // Adjacent pairs {1,2}, {1,4}, {2,3}, {3,4} follow the threshold rule.
                const std::vector<std::array<int, 4>> adjacent{{2, 2, x, y}, {2, x, y, 2}, {x, 2, 2, y}, {x, y, 2, 2}};
                for (const auto& a : adjacent) {
                    const auto k = evaluate_build(build_T(a[0], a[1], a[2], a[3])).k_class;
                    if ((k == KClass::Ample) != ample_threshold(x, y)) return tuple_str(a[0], a[1], a[2], a[3]);
                }
                const std::vector<std::array<int, 4>> opposite{{2, x, 2, y}, {x, 2, y, 2}};
                for (const auto& a : opposite) {
                    if (evaluate_build(build_T(a[0], a[1], a[2], a[3])).k_class != KClass::AntiAmple) {
                        return tuple_str(a[0], a[1], a[2], a[3]);
                    }
                }
                return std::string{};
            });
        }
    }
    out.push_back(remark.done());

    Check s1("S1, b in 2..12: order 27b^2-36b+4, type, k_value 18(b-2)/order");
    Check s3("S3, b in 2..12: A1, 1/7(1,3), order 3b^2-2b-2, k_value 2(b-5)/order");
    for (int b = 2; b <= 12; ++b) {
        s1([&]() -> std::string {
            const auto fb = build_S1(b);
            if (auto e = common(fb); !e.empty()) return e;
            const auto rep = evaluate_build(fb);
            const Integer B = b, q = 27 * B * B - 36 * B + 4;
            if (rep.singularities.size() != 1 || !rep.singularities[0].type.matches(q, 9 * B * B - 9 * B + 1)) {
                return "type at b=" + std::to_string(b);
            }
            if (rep.k_value != Rational(18 * (B - 2), q)) return "k_value at b=" + std::to_string(b);
            return {};
        });
        s3([&]() -> std::string {
            const auto fb = build_S3(b);
            if (auto e = common(fb); !e.empty()) return e;
            const auto rep = evaluate_build(fb);
            const Integer B = b, q = 3 * B * B - 2 * B - 2;
            if (rep.singularities.size() != 3 || !rep.singularities[0].type.matches(2, 1) ||
                !rep.singularities[1].type.matches(7, 3) || !rep.singularities[2].type.matches(q, 2 * B * B - B - 1)) {
                return "types at b=" + std::to_string(b);
            }
            if (rep.k_value != Rational(2 * (B - 5), q)) return "k_value at b=" + std::to_string(b);
            return {};
        });
    }
    out.push_back(s1.done());
    out.push_back(s3.done());

    Check variants("variants S1-Pp, S1-Ppp (c 2..8), V, Y (c 0..8), b 2..8");
    for (auto id : {FamilyId::S1Pp, FamilyId::S1Ppp, FamilyId::V, FamilyId::Y}) {
        const std::int64_t c_lo = parameter_minimums(id)[1];
        for (std::int64_t b = 2; b <= 8; ++b) {
            for (std::int64_t c = c_lo; c <= 8; ++c) {
                variants([&] {
                    const std::vector<std::int64_t> params{b, c};
                    return common(build_family(id, params));
                });
            }
        }
    }
    out.push_back(variants.done());

    Check figure("T(2,2,2,2) dual graph matches the twelve-curve figure");
    figure([] {
        const auto fb = build_T(2, 2, 2, 2);
        return isomorphic(dual_graph(fb.model, t_figure_curves()), t_figure_graph()) ? "" : "not isomorphic";
    });
    out.push_back(figure.done());
    return out;
}

std::vector<CheckResult> run_suite(Suite suite) {
    std::vector<CheckResult> out;
    auto add = [&out](std::vector<CheckResult> r) { out.insert(out.end(), r.begin(), r.end()); };
    if (suite == Suite::Hjcf || suite == Suite::All) add(verify_hjcf());
    if (suite == Suite::Kollar || suite == Suite::All) add(verify_kollar());
    if (suite == Suite::Families || suite == Suite::All) add(verify_families());
    return out;
}

bool print_results(std::ostream& os, const std::vector<CheckResult>& results) {
    std::size_t failed = 0;
    for (const auto& r : results) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.cases << " cases]";
        if (!r.detail.empty()) os << (r.passed ? ": " : ": counterexample ") << r.detail;
        os << '\n';
        if (!r.passed) ++failed;
    }
    os << (failed ? "FAILED " : "OK ") << results.size() - failed << "/" << results.size() << " checks passed\n";
    return failed == 0;
}

}  // namespace qhpp::cli
