#pragma once

// Exact lattice-point enumeration.
//
// Both enumerators scan the integer bounding box of their region over all
// but the last free coordinate and solve the membership inequalities for
// the last coordinate exactly. When every intermediate value is provably
// below 2^62 the scan runs in 64-bit integers, otherwise in Integer.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "irrdec/error.hpp"
#include "irrdec/linalg.hpp"
#include "irrdec/polytope.hpp"
#include "irrdec/quasipolynomial.hpp"

namespace irrdec {

// { s + W lambda : lambda in [0,1)^r }, W the D x r matrix whose columns are
// the generators (r = D in the full-dimensional case).
struct HalfOpenParallelepiped {
    RatVector shift;
    std::vector<IntVector> generators;
};

// Lattice points together with their count per first coordinate.
struct GradedPoints {
    std::vector<IntVector> points;
    std::map<Integer, std::size_t> grading;

    void add(IntVector z) {
        ++grading[z[0]];
        points.push_back(std::move(z));
    }
};

namespace detail {

inline const Integer& fast_limit() {
    static const Integer limit = Integer(1) << 62;
    return limit;
}

template <class Int>
Int narrow(const Integer& x) {
    if constexpr (std::is_same_v<Int, Integer>)
        return x;
    else
        return x.template convert_to<Int>();
}

template <class Int>
Int floor_div_t(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

template <class Int>
Int ceil_div_t(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) q += 1;
    return q;
}

// Tightens [lo, hi] to the integers z with coef * z <= rhs.
template <class Int>
void restrict_upper(const Int& coef, const Int& rhs, Int& lo, Int& hi) {
    if (coef > 0) {
        hi = std::min(hi, floor_div_t(rhs, coef));
    } else if (coef < 0) {
        lo = std::max(lo, ceil_div_t(rhs, coef));
    } else if (rhs < 0) {
        hi = lo - 1;
    }
}

struct ParallelepipedSetup {
    std::size_t dim = 0;
    std::size_t rank = 0;
    std::vector<std::size_t> kept;
    std::vector<std::size_t> dropped;
    IntMatrix adj;         // sign(det) * adjugate of the kept-row block
    Integer delta;         // |det| of the kept-row block
    Integer scale;         // common denominator S of the shift
    IntVector scaled;      // S * shift
    IntMatrix dropped_w;   // generator rows of the dropped coordinates
    std::vector<Integer> lo, hi;  // box over kept coordinates
    Integer bound;         // magnitude bound on every intermediate
};

inline ParallelepipedSetup make_setup(const HalfOpenParallelepiped& pp) {
    ParallelepipedSetup st;
    st.dim = pp.shift.dim();
    st.rank = pp.generators.size();
    if (st.rank == 0 || st.rank > st.dim) throw DimensionError("parallelepiped needs 1..D generators");
    IntMatrix w = IntMatrix::from_columns(pp.generators, st.dim);
    try {
        st.kept = independent_rows(w);
    } catch (const RankError&) {
        throw SingularMatrixError("parallelepiped generators are linearly dependent");
    }
    std::vector<bool> is_kept(st.dim, false);
    for (auto k : st.kept) is_kept[k] = true;
    for (std::size_t q = 0; q < st.dim; ++q)
        if (!is_kept[q]) st.dropped.push_back(q);

    IntMatrix block = w.select_rows(st.kept);
    Integer det = determinant(block);
    st.adj = adjugate(block);
    if (det < 0)
        for (std::size_t i = 0; i < st.rank; ++i)
            for (std::size_t j = 0; j < st.rank; ++j) st.adj(i, j) = -st.adj(i, j);
    st.delta = abs(det);
    st.scale = common_denominator(pp.shift);
    st.scaled = clear_denominators(pp.shift);
    st.dropped_w = w.select_rows(st.dropped);

    Integer zmax = 0;
    for (std::size_t j = 0; j < st.rank; ++j) {
        const std::size_t row = st.kept[j];
        Rational lo = pp.shift[row], hi = pp.shift[row];
        for (std::size_t i = 0; i < st.rank; ++i) {
            const Integer& e = w(row, i);
            if (e < 0) lo += Rational(e);
            else hi += Rational(e);
        }
        st.lo.push_back(lo.ceil());
        st.hi.push_back(hi.floor());
        zmax = std::max({zmax, abs(st.lo.back()), abs(st.hi.back())});
    }
    Integer bc = 0;
    for (std::size_t i = 0; i < st.rank; ++i) {
        Integer row = 0;
        for (std::size_t j = 0; j < st.rank; ++j)
            row += abs(st.adj(i, j)) * (st.scale * zmax + abs(st.scaled[st.kept[j]]));
        bc = std::max(bc, row);
    }
    Integer ds = st.delta * st.scale;
    st.bound = std::max(bc, ds) * 2 + 2;
    for (std::size_t q = 0; q < st.dropped.size(); ++q) {
        Integer b = st.delta * abs(st.scaled[st.dropped[q]]);
        for (std::size_t i = 0; i < st.rank; ++i) b += abs(st.dropped_w(q, i)) * bc;
        st.bound = std::max(st.bound, b);
    }
    return st;
}

template <class Int>
void scan_parallelepiped(const ParallelepipedSetup& st, GradedPoints& out) {
    const std::size_t r = st.rank;
    const std::size_t last = r - 1;
    std::vector<std::vector<Int>> adj(r, std::vector<Int>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) adj[i][j] = narrow<Int>(st.adj(i, j));
    const Int scale = narrow<Int>(st.scale);
    const Int delta = narrow<Int>(st.delta);
    const Int ds = delta * scale;
    std::vector<Int> sk(r), lo(r), hi(r);
    for (std::size_t j = 0; j < r; ++j) {
        sk[j] = narrow<Int>(st.scaled[st.kept[j]]);
        lo[j] = narrow<Int>(st.lo[j]);
        hi[j] = narrow<Int>(st.hi[j]);
        if (lo[j] > hi[j]) return;
    }
    const std::size_t nd = st.dropped.size();
    std::vector<Int> sd(nd);
    std::vector<std::vector<Int>> wd(nd, std::vector<Int>(r));
    for (std::size_t q = 0; q < nd; ++q) {
        sd[q] = narrow<Int>(st.scaled[st.dropped[q]]);
        for (std::size_t i = 0; i < r; ++i) wd[q][i] = narrow<Int>(st.dropped_w(q, i));
    }

    std::vector<Int> z(lo);
    std::vector<Int> partial(r), coef(r), c(r);
    while (true) {
        Int from = lo[last], to = hi[last];
        for (std::size_t i = 0; i < r && from <= to; ++i) {
            Int acc = -adj[i][last] * sk[last];
            for (std::size_t j = 0; j < last; ++j) acc += adj[i][j] * (scale * z[j] - sk[j]);
            partial[i] = acc;
            coef[i] = adj[i][last] * scale;
            // 0 <= partial + coef * t <= ds - 1
            restrict_upper<Int>(coef[i], ds - 1 - partial[i], from, to);
            restrict_upper<Int>(-coef[i], partial[i], from, to);
        }
        for (Int t = from; t <= to; t += 1) {
            for (std::size_t i = 0; i < r; ++i) c[i] = partial[i] + coef[i] * t;
            IntVector point(st.dim);
            bool integral = true;
            for (std::size_t q = 0; q < nd && integral; ++q) {
                Int num = delta * sd[q];
                for (std::size_t i = 0; i < r; ++i) num += wd[q][i] * c[i];
                if (num % ds != 0) integral = false;
                else point[st.dropped[q]] = Integer(num / ds);
            }
            if (!integral) continue;
            for (std::size_t j = 0; j < last; ++j) point[st.kept[j]] = Integer(z[j]);
            point[st.kept[last]] = Integer(t);
            out.add(std::move(point));
        }
        // odometer over the scanned coordinates
        std::size_t j = last;
        while (j > 0) {
            --j;
            if (z[j] < hi[j]) {
                z[j] += 1;
                for (std::size_t k = j + 1; k < last; ++k) z[k] = lo[k];
                break;
            }
            if (j == 0) return;
        }
        if (last == 0) return;
    }
}

}  // namespace detail

// Lattice points z with W^-1 (z - s) in [0,1)^r, r = number of generators.
// Full rank: exactly |det W| points. Lower rank: the index of the generator
// lattice in its saturation, or zero when s + span(W) misses Z^D.
inline GradedPoints parallelepiped_points(const HalfOpenParallelepiped& pp) {
    for (const auto& g : pp.generators)
        if (g.dim() != pp.shift.dim()) throw DimensionError("generator and shift dimensions differ");
    detail::ParallelepipedSetup st = detail::make_setup(pp);
    GradedPoints out;
    if (st.bound < detail::fast_limit())
        detail::scan_parallelepiped<long long>(st, out);
    else
        detail::scan_parallelepiped<Integer>(st, out);

    Integer expected = maximal_minor_gcd(IntMatrix::from_columns(pp.generators, st.dim));
    if (!(out.points.empty() && st.rank < st.dim) && Integer(out.points.size()) != expected)
        throw Error("parallelepiped enumeration found " + std::to_string(out.points.size()) +
                    " points, expected " + expected.str());
    return out;
}

namespace detail {

struct OracleSetup {
    std::size_t k = 0;
    std::vector<std::vector<Integer>> a;  // bd * normal, per facet
    std::vector<Integer> rhs;             // n * bn (minus 1 when strict)
    std::vector<Integer> lo, hi;          // box over kept coordinates
    std::vector<std::vector<Integer>> dm; // L * hull map, per dropped coordinate
    std::vector<Integer> dc;              // L * n * c, per dropped coordinate
    std::vector<Integer> dl;              // L
    Integer bound;
};

template <class Int>
Integer scan_dilate(const OracleSetup& st) {
    const std::size_t k = st.k;
    const std::size_t last = k - 1;
    const std::size_t nf = st.a.size();
    const std::size_t nd = st.dl.size();
    std::vector<std::vector<Int>> a(nf, std::vector<Int>(k));
    std::vector<Int> rhs(nf);
    for (std::size_t f = 0; f < nf; ++f) {
        rhs[f] = narrow<Int>(st.rhs[f]);
        for (std::size_t j = 0; j < k; ++j) a[f][j] = narrow<Int>(st.a[f][j]);
    }
    std::vector<Int> lo(k), hi(k);
    for (std::size_t j = 0; j < k; ++j) {
        lo[j] = narrow<Int>(st.lo[j]);
        hi[j] = narrow<Int>(st.hi[j]);
        if (lo[j] > hi[j]) return 0;
    }
    std::vector<std::vector<Int>> dm(nd, std::vector<Int>(k));
    std::vector<Int> dc(nd), dl(nd);
    for (std::size_t q = 0; q < nd; ++q) {
        dc[q] = narrow<Int>(st.dc[q]);
        dl[q] = narrow<Int>(st.dl[q]);
        for (std::size_t j = 0; j < k; ++j) dm[q][j] = narrow<Int>(st.dm[q][j]);
    }

    Integer count = 0;
    std::vector<Int> z(lo);
    std::vector<Int> dpartial(nd);
    while (true) {
        Int from = lo[last], to = hi[last];
        for (std::size_t f = 0; f < nf && from <= to; ++f) {
            Int acc = 0;
            for (std::size_t j = 0; j < last; ++j) acc += a[f][j] * z[j];
            restrict_upper<Int>(a[f][last], rhs[f] - acc, from, to);
        }
        if (from <= to) {
            if (nd == 0) {
                count += Integer(to - from + 1);
            } else {
                for (std::size_t q = 0; q < nd; ++q) {
                    Int acc = dc[q];
                    for (std::size_t j = 0; j < last; ++j) acc += dm[q][j] * z[j];
                    dpartial[q] = acc;
                }
                for (Int t = from; t <= to; t += 1) {
                    bool integral = true;
                    for (std::size_t q = 0; q < nd && integral; ++q)
                        integral = (dpartial[q] + dm[q][last] * t) % dl[q] == 0;
                    if (integral) count += 1;
                }
            }
        }
        if (last == 0) return count;
        std::size_t j = last;
        while (true) {
            --j;
            if (z[j] < hi[j]) {
                z[j] += 1;
                for (std::size_t m = j + 1; m < last; ++m) z[m] = lo[m];
                break;
            }
            if (j == 0) return count;
        }
    }
}

}  // namespace detail

// #(nP cap Z^d), or the relative-interior count when `interior` is set.
// Independent of the cone machinery: facets of P (within its affine hull)
// are tested directly on every candidate of the box around nP.
inline Integer oracle_count(const PolytopeRegion& region, const Polytope& poly, const Integer& n, bool interior) {
    if (n <= 0) throw PreconditionError("oracle_count needs n >= 1");
    const std::size_t k = region.dim();
    if (k == 0) {
        for (const auto& c : poly.vertices()[0])
            if (!(Rational(n) * c).is_integer()) return 0;
        return 1;
    }
    detail::OracleSetup st;
    st.k = k;
    const auto& kept = region.kept_coordinates();
    const auto& dropped = region.dropped_coordinates();
    Integer zmax = 0;
    for (std::size_t j = 0; j < k; ++j) {
        Rational lo = poly.vertices()[0][kept[j]], hi = lo;
        for (const auto& v : poly.vertices()) {
            lo = std::min(lo, v[kept[j]]);
            hi = std::max(hi, v[kept[j]]);
        }
        st.lo.push_back((Rational(n) * lo).ceil());
        st.hi.push_back((Rational(n) * hi).floor());
        zmax = std::max({zmax, abs(st.lo.back()), abs(st.hi.back())});
    }
    st.bound = 0;
    for (const auto& f : region.facets()) {
        std::vector<Integer> a;
        Integer b = 0;
        for (std::size_t j = 0; j < k; ++j) {
            a.push_back(f.normal[j] * f.offset.den());
            b += abs(a.back()) * zmax;
        }
        Integer rhs = n * f.offset.num() - (interior ? 1 : 0);
        st.bound = std::max(st.bound, (b + abs(rhs)) * 2 + 2);
        st.a.push_back(std::move(a));
        st.rhs.push_back(std::move(rhs));
    }
    const RatMatrix& map = region.hull_map();
    const RatVector& origin = region.origin();
    for (std::size_t q = 0; q < dropped.size(); ++q) {
        Rational c = origin[dropped[q]];
        for (std::size_t j = 0; j < k; ++j) c -= map(q, j) * origin[kept[j]];
        Integer l = c.den();
        for (std::size_t j = 0; j < k; ++j) l = lcm(l, map(q, j).den());
        std::vector<Integer> row;
        Integer b = 0;
        for (std::size_t j = 0; j < k; ++j) {
            row.push_back((map(q, j) * Rational(l)).num());
            b += abs(row.back()) * zmax;
        }
        Integer dc = (c * Rational(l) * Rational(n)).num();
        st.bound = std::max(st.bound, (b + abs(dc) + l) * 2 + 2);
        st.dm.push_back(std::move(row));
        st.dc.push_back(std::move(dc));
        st.dl.push_back(std::move(l));
    }
    if (st.bound < detail::fast_limit()) return detail::scan_dilate<long long>(st);
    return detail::scan_dilate<Integer>(st);
}

inline Integer oracle_count(const Polytope& poly, const Integer& n, bool interior) {
    return oracle_count(PolytopeRegion(poly), poly, n, interior);
}

// Constituents interpolated through the oracle counts at n = r + kp,
// k = 1..D+1, D the affine dimension of P.
inline QuasiPolynomial oracle_quasipolynomial(const Polytope& poly, const Integer& p, bool interior = false) {
    if (!dilation_is_integral(poly, p)) throw PreconditionError("p does not make the polytope integral");
    PolytopeRegion region(poly);
    const std::size_t d = region.dim();
    QuasiPolynomial q;
    q.p = p;
    for (Integer r = 0; r < p; ++r) {
        std::vector<std::pair<Rational, Rational>> samples;
        for (std::size_t k = 1; k <= d + 1; ++k) {
            Integer n = r + Integer(k) * p;
            samples.emplace_back(Rational(n), Rational(oracle_count(region, poly, n, interior)));
        }
        q.constituents.push_back(lagrange_interpolate(samples));
    }
    return q;
}

}  // namespace irrdec
