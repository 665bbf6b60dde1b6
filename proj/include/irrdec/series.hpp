#pragma once

// Ehrhart series and cone generating functions assembled from a shifted
// ("irrational") decomposition, plus the reciprocity, positivity and
// monotonicity checkers.
//
// Pipeline for a polytope P and dilation p:
//   cone_over(P, p) -> placing_triangulation -> choose_shift(base 0)
//   -> parallelepiped points of every shifted cell, graded by x0.
// The shifted cells partition the lattice points of cone(P) (closed,
// outward shift) or of its interior (inward shift), so the numerator over
// (1 - t^p)^(D+1) is a plain point count per grade.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irrdec/enumeration.hpp"
#include "irrdec/error.hpp"
#include "irrdec/linalg.hpp"
#include "irrdec/polytope.hpp"
#include "irrdec/quasipolynomial.hpp"
#include "irrdec/shift.hpp"
#include "irrdec/triangulation.hpp"

namespace irrdec {

struct EhrhartSeries {
    Integer p = 1;
    std::size_t dim = 0;  // affine dimension D of P
    bool interior = false;
    std::vector<Integer> numerator;  // (D+1)p entries closed, (D+1)p+1 interior
    std::size_t denominator_exponent = 1;

    std::string denominator_str() const {
        std::string base = p == 1 ? std::string("(1-t)") : "(1-t^" + p.str() + ")";
        return denominator_exponent == 1 ? base : base + "^" + std::to_string(denominator_exponent);
    }
    std::string numerator_str() const {
        std::string out;
        for (std::size_t i = 0; i < numerator.size(); ++i) {
            if (i) out += ' ';
            out += numerator[i].str();
        }
        return out;
    }
};

struct SeriesOptions {
    ShiftOptions shift;
    unsigned threads = 1;
};

// Everything the series pipeline produced, kept for audit and tests.
struct EhrhartDecomposition {
    EhrhartSeries series;
    Cone cone;
    Triangulation triangulation;
    CertifiedShift shift;
    std::vector<GradedPoints> cell_points;
};

namespace detail {

inline std::vector<GradedPoints> points_per_cell(const Triangulation& t, const RatVector& s, unsigned threads) {
    std::vector<GradedPoints> out(t.cells.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            out[i] = parallelepiped_points({s, t.cells[i].generators});
    };
    const std::size_t n = t.cells.size();
    if (threads <= 1 || n < 2) {
        work(0, n);
        return out;
    }
    const std::size_t chunks = std::min<std::size_t>(threads, n);
    std::vector<std::future<void>> jobs;
    for (std::size_t c = 0; c < chunks; ++c)
        jobs.push_back(std::async(std::launch::async, work, c * n / chunks, (c + 1) * n / chunks));
    for (auto& j : jobs) j.get();
    return out;
}

}  // namespace detail

inline EhrhartDecomposition ehrhart_decomposition(const Polytope& poly, const Integer& p, bool interior,
                                                  const SeriesOptions& options = {}) {
    EhrhartDecomposition out;
    out.cone = cone_over(poly, p);
    out.triangulation = placing_triangulation(out.cone);
    const std::size_t d = out.triangulation.rank - 1;
    out.shift = choose_shift(out.triangulation, RatVector(out.cone.ambient_dim),
                             interior ? ShiftDirection::inward : ShiftDirection::outward, options.shift);
    out.cell_points = detail::points_per_cell(out.triangulation, out.shift.spec.s, options.threads);

    EhrhartSeries& s = out.series;
    s.p = p;
    s.dim = d;
    s.interior = interior;
    s.denominator_exponent = d + 1;
    const std::size_t length = static_cast<std::size_t>(Integer(d + 1) * p) + (interior ? 1 : 0);
    s.numerator.assign(length, 0);
    for (const auto& cell : out.cell_points) {
        for (const auto& [grade, count] : cell.grading) {
            if (grade < 0 || grade >= Integer(length))
                throw Error("parallelepiped point at grade " + grade.str() + " outside the numerator range");
            s.numerator[static_cast<std::size_t>(grade)] += count;
        }
    }
    return out;
}

inline EhrhartSeries ehrhart_series(const Polytope& poly, const Integer& p, bool interior,
                                    const SeriesOptions& options = {}) {
    return ehrhart_decomposition(poly, p, interior, options).series;
}

// L(n) = sum over i = n mod p of a_i * binom((n - i)/p + D, D), expanded as
// a polynomial in n for each residue. Valid for n >= 0 (closed series) and
// n >= 1 (interior series).
inline QuasiPolynomial quasipolynomial_from_series(const EhrhartSeries& s) {
    QuasiPolynomial q;
    q.p = s.p;
    const std::size_t p = static_cast<std::size_t>(s.p);
    const std::size_t d = s.denominator_exponent - 1;
    q.constituents.assign(p, Polynomial());
    for (std::size_t i = 0; i < s.numerator.size(); ++i) {
        if (s.numerator[i] == 0) continue;
        // binom((n - i)/p + d, d) = prod_{j=1..d} (n - i + j p) / (j p)
        Polynomial term = Polynomial::constant(Rational(s.numerator[i]));
        for (std::size_t j = 1; j <= d; ++j) {
            Rational jp(static_cast<long long>(j * p));
            term = term * Polynomial::linear(Rational(1) / jp,
                                             Rational(static_cast<long long>(j * p) - static_cast<long long>(i)) / jp);
        }
        q.constituents[i % p] += term;
    }
    return q;
}

// Outcome of a theorem check: ordered key/value details plus violations.
struct CheckReport {
    std::vector<std::pair<std::string, std::string>> details;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
    void add(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
};

inline std::string join_integers(const std::vector<Integer>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += v[i].str();
    }
    return out;
}

// Ehrhart-Macdonald: (-1)^D L_P(-n) = L_{P°}(n), checked against the interior
// series and the brute-force interior count for n = 1..max_n.
inline CheckReport check_reciprocity_ehrhart(const Polytope& poly, const Integer& p, std::size_t max_n,
                                             const SeriesOptions& options = {}) {
    CheckReport report;
    EhrhartSeries closed = ehrhart_series(poly, p, false, options);
    EhrhartSeries open = ehrhart_series(poly, p, true, options);
    QuasiPolynomial lq = quasipolynomial_from_series(closed);
    QuasiPolynomial iq = quasipolynomial_from_series(open);
    PolytopeRegion region(poly);
    const Rational sign = closed.dim % 2 == 0 ? Rational(1) : Rational(-1);
    report.add("p", p.str());
    report.add("dim", std::to_string(closed.dim));
    report.add("closed.numerator", closed.numerator_str());
    report.add("interior.numerator", open.numerator_str());
    for (std::size_t n = 1; n <= max_n; ++n) {
        Integer nn(n);
        Rational lhs = sign * eval_quasipolynomial(lq, -nn);
        Rational via_series = eval_quasipolynomial(iq, nn);
        Rational via_oracle(oracle_count(region, poly, nn, true));
        report.add("n." + std::to_string(n), lhs.str() + " " + via_series.str() + " " + via_oracle.str());
        if (lhs != via_series || lhs != via_oracle)
            report.violations.push_back("n = " + std::to_string(n) + ": (-1)^D L(-n) = " + lhs.str() +
                                        ", interior series " + via_series.str() + ", oracle " + via_oracle.str());
    }
    return report;
}

inline CheckReport check_positivity(const Polytope& poly, const Integer& p, const SeriesOptions& options = {}) {
    CheckReport report;
    EhrhartDecomposition dec = ehrhart_decomposition(poly, p, false, options);
    const auto& a = dec.series.numerator;
    Integer volume = 0;
    for (const auto& cell : dec.triangulation.cells) volume += cell_volume(cell);
    Integer total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += a[i];
        if (a[i] < 0) report.violations.push_back("a_" + std::to_string(i) + " = " + a[i].str() + " < 0");
    }
    if (total != volume)
        report.violations.push_back("sum of coefficients " + total.str() + " != sum of cell volumes " + volume.str());
    if (a.empty() || a[0] != 1) report.violations.push_back("a_0 != 1");
    report.add("p", p.str());
    report.add("dim", std::to_string(dec.series.dim));
    report.add("numerator", dec.series.numerator_str());
    report.add("denominator", dec.series.denominator_str());
    report.add("cells", std::to_string(dec.triangulation.cells.size()));
    report.add("volume_sum", volume.str());
    return report;
}

// nu_P <= nu_Q coefficientwise, each numerator over its own (1 - t^p)^(dim+1),
// nu_P zero-padded to the length of nu_Q.
inline CheckReport check_monotonicity(const Polytope& inner, const Polytope& outer, const Integer& p,
                                      const SeriesOptions& options = {}) {
    if (auto bad = first_vertex_outside(outer, inner))
        throw PreconditionError("vertex " + std::to_string(*bad) + " (" + inner.vertices()[*bad].str(",") +
                                ") of P lies outside Q");
    CheckReport report;
    EhrhartSeries sp = ehrhart_series(inner, p, false, options);
    EhrhartSeries sq = ehrhart_series(outer, p, false, options);
    std::vector<Integer> nu_p = sp.numerator;
    if (nu_p.size() > sq.numerator.size())
        throw Error("inner numerator longer than outer numerator");
    nu_p.resize(sq.numerator.size(), 0);
    for (std::size_t i = 0; i < nu_p.size(); ++i)
        if (nu_p[i] > sq.numerator[i])
            report.violations.push_back("coefficient " + std::to_string(i) + ": " + nu_p[i].str() + " > " +
                                        sq.numerator[i].str());
    report.add("p", p.str());
    report.add("dim_P", std::to_string(sp.dim));
    report.add("dim_Q", std::to_string(sq.dim));
    report.add("nu_P", join_integers(nu_p));
    report.add("nu_Q", join_integers(sq.numerator));
    return report;
}

// sigma of a shifted cone as a sum of terms
//   (sum_{z in points} x^z) / prod_i (1 - x^{w_i}).
struct ConeGenFun {
    struct Term {
        GradedPoints numerator;
        std::vector<IntVector> generators;
    };
    std::vector<Term> terms;
    std::size_t dim = 0;  // dimension of the cone
    Triangulation triangulation;
    CertifiedShift shift;
};

inline ConeGenFun cone_genfun(const Cone& cone, const RatVector& base, bool interior,
                              const SeriesOptions& options = {}) {
    ConeGenFun g;
    g.triangulation = placing_triangulation(cone);
    g.dim = g.triangulation.rank;
    g.shift = choose_shift(g.triangulation, base, interior ? ShiftDirection::inward : ShiftDirection::outward,
                           options.shift);
    auto points = detail::points_per_cell(g.triangulation, g.shift.spec.s, options.threads);
    for (std::size_t i = 0; i < points.size(); ++i)
        g.terms.push_back({std::move(points[i]), g.triangulation.cells[i].generators});
    return g;
}

inline Rational monomial(const RatVector& x, const IntVector& exponent) {
    Rational acc(1);
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (exponent[i] == 0) continue;
        acc *= pow(x[i], exponent[i].convert_to<long long>());
    }
    return acc;
}

inline Rational evaluate_term(const ConeGenFun::Term& term, const RatVector& x) {
    Rational denom(1);
    for (const auto& w : term.generators) {
        Rational factor = Rational(1) - monomial(x, w);
        if (factor.is_zero()) throw EvaluationError("pole: 1 - x^(" + w.str(",") + ") vanishes");
        denom *= factor;
    }
    Rational num(0);
    for (const auto& z : term.numerator.points) num += monomial(x, z);
    return num / denom;
}

inline Rational gf_evaluate(const ConeGenFun& g, const RatVector& x, bool reciprocal = false) {
    if (x.dim() != g.triangulation.parent.ambient_dim) throw DimensionError("evaluation point dimension mismatch");
    RatVector at = x;
    for (std::size_t i = 0; i < at.dim(); ++i) {
        if (at[i].is_zero()) throw EvaluationError("coordinate " + std::to_string(i) + " of x is zero");
        if (reciprocal) at[i] = at[i].reciprocal();
    }
    Rational total(0);
    for (const auto& t : g.terms) total += evaluate_term(t, at);
    return total;
}

namespace detail {

// Seeded small rational point, avoiding zero coordinates.
inline RatVector random_point(std::uint64_t& state, std::size_t dim) {
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    RatVector x(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        long long num = static_cast<long long>(next() % 11) - 5;
        if (num == 0) num = 6;
        long long den = static_cast<long long>(next() % 6) + 1;
        x[i] = Rational(Integer(num), Integer(den));
    }
    return x;
}

inline bool is_pole(const std::vector<IntVector>& generators, const RatVector& x) {
    return std::any_of(generators.begin(), generators.end(),
                       [&](const IntVector& w) { return monomial(x, w) == Rational(1); });
}

}  // namespace detail

// sigma_{v+K}(x) = (-1)^dim K sigma_{-v+K°}(1/x) at seeded random points, and
// per cell sigma_{s+K_j}(1/x) = (-1)^dim K sigma_{-s+K_j}(x).
inline CheckReport check_reciprocity_cone(const Cone& cone, const RatVector& base, std::size_t trials,
                                          std::uint64_t seed, const SeriesOptions& options = {}) {
    CheckReport report;
    ConeGenFun closed = cone_genfun(cone, base, false, options);
    ConeGenFun open = cone_genfun(cone, -base, true, options);
    const Rational sign = closed.dim % 2 == 0 ? Rational(1) : Rational(-1);
    const RatVector& s = closed.shift.spec.s;
    std::vector<GradedPoints> reflected = detail::points_per_cell(closed.triangulation, -s, options.threads);

    std::vector<IntVector> all_gens;
    for (const auto& c : closed.triangulation.cells)
        all_gens.insert(all_gens.end(), c.generators.begin(), c.generators.end());

    report.add("dim", std::to_string(closed.dim));
    report.add("cells", std::to_string(closed.triangulation.cells.size()));
    report.add("base", base.str(","));
    report.add("closed.shift", s.str(","));
    report.add("open.shift", open.shift.spec.s.str(","));
    report.add("seed", std::to_string(seed));

    std::uint64_t state = seed;
    std::size_t attempts = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        RatVector x;
        do {
            if (++attempts > 1000 + 100 * trials)
                throw SamplingError("could not sample a non-pole evaluation point");
            x = detail::random_point(state, cone.ambient_dim);
        } while (detail::is_pole(all_gens, x));
        Rational lhs = gf_evaluate(closed, x);
        Rational rhs = sign * gf_evaluate(open, x, true);
        report.add("trial." + std::to_string(trial), "x=" + x.str(",") + " lhs=" + lhs.str() + " rhs=" + rhs.str());
        if (lhs != rhs)
            report.violations.push_back("cone identity fails at x = (" + x.str(",") + "): " + lhs.str() +
                                        " != " + rhs.str());
        RatVector inv = x;
        for (std::size_t i = 0; i < inv.dim(); ++i) inv[i] = inv[i].reciprocal();
        for (std::size_t j = 0; j < closed.terms.size(); ++j) {
            Rational cell_lhs = evaluate_term(closed.terms[j], inv);
            Rational cell_rhs = sign * evaluate_term({reflected[j], closed.terms[j].generators}, x);
            if (cell_lhs != cell_rhs)
                report.violations.push_back("cell " + std::to_string(j) + " identity fails at x = (" + x.str(",") +
                                            "): " + cell_lhs.str() + " != " + cell_rhs.str());
        }
    }
    return report;
}

}  // namespace irrdec
