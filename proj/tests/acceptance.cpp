// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"

using namespace irrdec;
namespace t = irrdec::oracle;

namespace {

Rational q(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

std::vector<Integer> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

Integer binomial(const Integer& n, std::size_t k) {
    Integer r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Everything the later criteria re-examine.
struct ShiftedPolytope {
    std::string label;
    Polytope poly;
    EhrhartDecomposition dec;
};

struct ShiftedCone {
    std::string label;
    Cone cone;
    ConeGenFun gf;
};

struct Ledger {
    std::deque<ShiftedPolytope> polytopes;  // stable references
    std::deque<ShiftedCone> cones;

    const EhrhartDecomposition& decompose(const std::string& label, const Polytope& poly, const Integer& p,
                                          bool interior) {
        polytopes.push_back({label + (interior ? " (interior)" : " (closed)"), poly,
                             ehrhart_decomposition(poly, p, interior)});
        return polytopes.back().dec;
    }
};

struct Outcome {
    bool pass = true;
    std::size_t failures = 0;
    std::ostringstream note;

    void fail(const std::string& why) {
        if (pass) note.str("");
        pass = false;
        if (++failures <= 3) note << (failures > 1 ? "; " : "") << why;
        else if (failures == 4) note << "; ...";
    }
};

std::vector<Polytope> corpus() { return t::random_corpus(20240611, 24); }

Polytope half_segment() { return t::segment(q(0), q(1, 2)); }

void criterion_1(Ledger& ledger, Outcome& out) {
    Polytope poly = half_segment();
    const auto& closed = ledger.decompose("[0,1/2]", poly, 2, false).series;
    const auto& open = ledger.decompose("[0,1/2]", poly, 2, true).series;
    if (closed.numerator != ints({1, 1, 0, 0}) || closed.denominator_str() != "(1-t^2)^2")
        out.fail("closed numerator " + closed.numerator_str() + " over " + closed.denominator_str());
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < open.numerator.size(); ++i)
        if (open.numerator[i] != 0) {
            support.push_back(i);
            if (open.numerator[i] != 1) out.fail("interior a_" + std::to_string(i) + " != 1");
        }
    if (support != std::vector<std::size_t>{3, 4}) out.fail("interior numerator " + open.numerator_str());
    auto lc = quasipolynomial_from_series(closed);
    auto li = quasipolynomial_from_series(open);
    for (Integer n = 1; n <= 12; ++n) {
        if (eval_quasipolynomial(lc, n) != Rational(oracle_count(poly, n, false)))
            out.fail("L(" + n.str() + ") disagrees with the oracle");
        if (eval_quasipolynomial(li, n) != Rational(oracle_count(poly, n, true)))
            out.fail("interior L(" + n.str() + ") disagrees with the oracle");
    }
    if (out.pass)
        out.note << "numerator " << closed.numerator_str() << " over " << closed.denominator_str()
                 << ", interior " << open.numerator_str() << ", n=1..12 match";
}

void criterion_2(Ledger& ledger, Outcome& out) {
    struct Case {
        std::string label;
        Polytope poly;
        std::vector<Integer> numerator;
        std::function<Integer(const Integer&)> closed_form;
    };
    std::vector<Case> cases;
    for (std::size_t d = 1; d <= 3; ++d) {
        std::vector<Integer> nu(d + 1, 0);
        nu[0] = 1;
        cases.push_back({"simplex_" + std::to_string(d), t::standard_simplex(d), nu,
                         [d](const Integer& n) { return binomial(n + d, d); }});
    }
    cases.push_back({"square", t::unit_cube(2), ints({1, 1, 0}), [](const Integer& n) { return (n + 1) * (n + 1); }});
    cases.push_back(
        {"cube", t::unit_cube(3), ints({1, 4, 1, 0}), [](const Integer& n) { return (n + 1) * (n + 1) * (n + 1); }});
    std::size_t checks = 0;
    for (const auto& c : cases) {
        const auto& s = ledger.decompose(c.label, c.poly, 1, false).series;
        if (s.numerator != c.numerator) out.fail(c.label + " numerator " + s.numerator_str());
        auto lq = quasipolynomial_from_series(s);
        for (Integer n = 1; n <= 8; ++n) {
            Integer oracle = oracle_count(c.poly, n, false);
            if (oracle != c.closed_form(n)) out.fail(c.label + " oracle mismatch at n=" + n.str());
            if (eval_quasipolynomial(lq, n) != Rational(oracle)) out.fail(c.label + " L(" + n.str() + ") mismatch");
            ++checks;
        }
    }
    if (out.pass) out.note << cases.size() << " polytopes, " << checks << " oracle comparisons";
}

void criterion_3(Ledger& ledger, Outcome& out) {
    auto polys = corpus();
    std::size_t checks = 0;
    Integer max_p = 0;
    std::size_t lower = 0;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const auto& poly = polys[i];
        Integer p = minimal_dilation(poly);
        max_p = std::max(max_p, p);
        lower += poly.affine_dim() < poly.ambient_dim();
        ledger.decompose("corpus[" + std::to_string(i) + "]", poly, p, false);
        ledger.decompose("corpus[" + std::to_string(i) + "]", poly, p, true);
        std::size_t max_n = static_cast<std::size_t>(2 * p + 3);
        auto report = check_reciprocity_ehrhart(poly, p, max_n);
        checks += max_n;
        for (const auto& v : report.violations) out.fail("corpus[" + std::to_string(i) + "] " + v);
    }
    if (out.pass)
        out.note << polys.size() << " polytopes (" << lower << " lower-dimensional, max p " << max_p << "), "
                 << checks << " values of n";
}

void criterion_4(Ledger&, Outcome& out) {
    auto polys = corpus();
    std::size_t coefficients = 0;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        auto report = check_positivity(polys[i], minimal_dilation(polys[i]));
        for (const auto& v : report.violations) out.fail("corpus[" + std::to_string(i) + "] " + v);
        for (const auto& [k, v] : report.details)
            if (k == "numerator") coefficients += std::count(v.begin(), v.end(), ' ') + 1;
    }
    if (out.pass) out.note << polys.size() << " polytopes, " << coefficients << " coefficients >= 0, sums = volume sums";
}

void criterion_5(Ledger& ledger, Outcome& out) {
    auto detail = [](const CheckReport& r, const std::string& key) {
        for (const auto& [k, v] : r.details)
            if (k == key) return v;
        return std::string();
    };
    std::size_t pairs = 0;
    auto polys = corpus();
    for (std::size_t i = 0; i < polys.size(); ++i) {
        Polytope box = bounding_box(polys[i]);
        Integer p = lcm(minimal_dilation(polys[i]), minimal_dilation(box));
        ledger.decompose("box(corpus[" + std::to_string(i) + "])", box, p, false);
        auto r = check_monotonicity(polys[i], box, p);
        for (const auto& v : r.violations) out.fail("corpus[" + std::to_string(i) + "] in its box: " + v);
        ++pairs;
    }
    auto seg = check_monotonicity(half_segment(), t::segment(q(0), q(1)), 2);
    ledger.decompose("[0,1]", t::segment(q(0), q(1)), 2, false);
    if (!seg.passed() || detail(seg, "nu_P") != "1 1 0 0" || detail(seg, "nu_Q") != "1 2 1 0")
        out.fail("[0,1/2] in [0,1]: " + detail(seg, "nu_P") + " vs " + detail(seg, "nu_Q"));
    auto tri = check_monotonicity(t::standard_simplex(2), t::unit_cube(2), 1);
    if (!tri.passed() || detail(tri, "nu_P") != "1 0 0" || detail(tri, "nu_Q") != "1 1 0")
        out.fail("triangle in square: " + detail(tri, "nu_P") + " vs " + detail(tri, "nu_Q"));
    pairs += 2;
    if (out.pass) out.note << pairs << " nested pairs, worked pairs [1,1,0,0]<=[1,2,1,0] and [1,0,0]<=[1,1,0]";
}

void criterion_6(Ledger& ledger, Outcome& out) {
    t::Rng rng(6061);
    std::size_t cones = 0, evaluations = 0;
    for (int i = 0; i < 12; ++i) {
        std::size_t d = 1 + i % 3;
        Cone cone = t::random_pointed_cone(rng, d, d + static_cast<std::size_t>(i % 3), 4);
        std::vector<RatVector> bases{RatVector(d)};
        for (int k = 0; k < 3; ++k) {
            RatVector v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = t::random_rational(rng, 2, 5);
            bases.push_back(v);
        }
        for (std::size_t b = 0; b < bases.size(); ++b) {
            std::string label = "cone[" + std::to_string(i) + "] v=(" + bases[b].str(",") + ")";
            auto report = check_reciprocity_cone(cone, bases[b], 5, 1000 + static_cast<std::uint64_t>(10 * i + b));
            for (const auto& v : report.violations) out.fail(label + ": " + v);
            ledger.cones.push_back({label + " closed", cone, cone_genfun(cone, bases[b], false)});
            ledger.cones.push_back({label + " interior", cone, cone_genfun(cone, -bases[b], true)});
            evaluations += 5;
        }
        ++cones;
    }
    if (out.pass) out.note << cones << " cones x 4 base points, " << evaluations << " cone and per-cell evaluations";
}

void criterion_7(Ledger& ledger, Outcome& out) {
    std::size_t points = 0;
    for (const auto& sp : ledger.polytopes) {
        auto sys = t::cone_over_system(sp.poly);
        auto [lo, hi] = t::cone_over_box(sp.poly, sp.dec.series.p);
        auto res = t::check_shift_soundness(sys, sp.dec.triangulation, sp.dec.shift.spec, lo, hi);
        points += res.points_checked;
        if (!res.ok) out.fail(sp.label + ": " + res.failure);
    }
    for (const auto& sc : ledger.cones) {
        const std::size_t d = sc.cone.ambient_dim;
        const long long r = d == 3 ? 6 : 10;
        auto res = t::check_shift_soundness(t::cone_system(sc.cone), sc.gf.triangulation, sc.gf.shift.spec,
                                            std::vector<long long>(d, -r), std::vector<long long>(d, r));
        points += res.points_checked;
        if (!res.ok) out.fail(sc.label + ": " + res.failure);
    }
    if (out.pass)
        out.note << ledger.polytopes.size() + ledger.cones.size() << " certified shifts, " << points
                 << " box lattice points";
}

void criterion_8(Ledger& ledger, Outcome& out) {
    std::size_t cells = 0;
    auto check_cells = [&](const std::string& label, const Triangulation& tri, const RatVector& s,
                           const std::vector<GradedPoints>& pts) {
        for (std::size_t j = 0; j < tri.cells.size(); ++j) {
            const auto& cell = tri.cells[j];
            const IntMatrix w = cell.matrix();
            Integer expected = w.rows() == w.cols() ? abs(determinant(w)) : cell_volume(cell);
            if (Integer(pts[j].points.size()) != expected)
                out.fail(label + " cell " + std::to_string(j) + ": " + std::to_string(pts[j].points.size()) +
                         " points, expected " + expected.str());
            IntVector sum(tri.parent.ambient_dim);
            for (const auto& g : cell.generators) sum += g;
            std::set<IntVector> reflected;
            for (const auto& z : pts[j].points) reflected.insert(sum - z);
            auto minus = parallelepiped_points({-s, cell.generators});
            if (reflected != std::set<IntVector>(minus.points.begin(), minus.points.end()))
                out.fail(label + " cell " + std::to_string(j) + ": reflection identity fails");
            ++cells;
        }
    };
    SeriesOptions shrink;
    shrink.shift.extra_shrink_steps = 1;
    for (const auto& sp : ledger.polytopes) {
        const auto& s = sp.dec.series;
        if (s.numerator.empty() || s.numerator[0] != (s.interior ? 0 : 1))
            out.fail(sp.label + ": a_0 = " + (s.numerator.empty() ? "?" : s.numerator[0].str()));
        check_cells(sp.label, sp.dec.triangulation, sp.dec.shift.spec.s, sp.dec.cell_points);
        auto again = ehrhart_decomposition(sp.poly, s.p, s.interior, shrink);
        if (again.series.numerator != s.numerator || again.shift.spec.epsilon >= sp.dec.shift.spec.epsilon)
            out.fail(sp.label + ": numerator changes when epsilon shrinks (" + again.series.numerator_str() + ")");
    }
    for (const auto& sc : ledger.cones) {
        std::vector<GradedPoints> pts;
        for (const auto& term : sc.gf.terms) pts.push_back(term.numerator);
        check_cells(sc.label, sc.gf.triangulation, sc.gf.shift.spec.s, pts);
    }
    if (out.pass)
        out.note << ledger.polytopes.size() << " series (a_0, extra shrink step), " << cells
                 << " cells (|det| count, reflection)";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        void (*run)(Ledger&, Outcome&);
        double limit_seconds;  // 0: no runtime bound
    };
    const Criterion criteria[] = {
        {1, "worked rational polytope [0,1/2]", criterion_1, 1.0},
        {2, "integral standards", criterion_2, 5.0},
        {3, "Ehrhart-Macdonald reciprocity on the random corpus", criterion_3, 120.0},
        {4, "positivity on the random corpus", criterion_4, 0},
        {5, "monotonicity on nested pairs", criterion_5, 0},
        {6, "cone reciprocity and per-cell identity", criterion_6, 60.0},
        {7, "shift-certificate soundness by box brute force", criterion_7, 0},
        {8, "structural invariants", criterion_8, 0},
    };
    Ledger ledger;
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome out;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(ledger, out);
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            std::ostringstream why;
            why << "runtime " << secs << " s exceeds " << c.limit_seconds << " s";
            out.fail(why.str());
        }
        failures += out.pass ? 0 : 1;
        std::printf("%s criterion %d: %s [%.2fs] %s\n", out.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    out.note.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
