#pragma once

// Rational polytopes given by vertices, their facet descriptions, the
// dilation parameter p and the homogenizing cone over a polytope.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "irrdec/error.hpp"
#include "irrdec/linalg.hpp"
#include "irrdec/rational.hpp"

namespace irrdec {

// Convex hull of a finite point list. Listed points need not all be
// extreme; they must be distinct.
class Polytope {
public:
    Polytope(std::size_t ambient_dim, std::vector<RatVector> vertices)
        : ambient_dim_(ambient_dim), vertices_(std::move(vertices)) {
        if (ambient_dim_ == 0) throw DimensionError("polytope ambient dimension must be >= 1");
        if (vertices_.empty()) throw PreconditionError("polytope needs at least one vertex");
        for (const auto& v : vertices_)
            if (v.dim() != ambient_dim_) throw DimensionError("vertex dimension does not match ambient dimension");
        auto sorted = vertices_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionError("duplicate vertex");
    }

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<RatVector>& vertices() const { return vertices_; }

    // Dimension of the affine hull of the vertices.
    std::size_t affine_dim() const {
        std::vector<IntVector> diffs;
        for (std::size_t i = 1; i < vertices_.size(); ++i)
            diffs.push_back(clear_denominators(vertices_[i] - vertices_[0]));
        return rank_of(diffs, ambient_dim_);
    }

private:
    std::size_t ambient_dim_;
    std::vector<RatVector> vertices_;
};

struct Cone {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> generators;
};

// <normal, x> <= offset, normal primitive.
struct FacetInequality {
    IntVector normal;
    Rational offset;

    friend bool operator==(const FacetInequality&, const FacetInequality&) = default;
    friend bool operator<(const FacetInequality& a, const FacetInequality& b) {
        if (a.normal == b.normal) return a.offset < b.offset;
        return a.normal < b.normal;
    }
};

inline Integer minimal_dilation(const Polytope& poly) {
    Integer p = 1;
    for (const auto& v : poly.vertices()) p = lcm(p, common_denominator(v));
    return p;
}

inline bool dilation_is_integral(const Polytope& poly, const Integer& p) {
    if (p <= 0) return false;
    return p % minimal_dilation(poly) == 0;
}

// Generators (p, p*v) in vertex order, duplicates removed.
inline Cone cone_over(const Polytope& poly, const Integer& p) {
    if (!dilation_is_integral(poly, p))
        throw PreconditionError("p = " + p.str() + " does not make the polytope integral");
    Cone cone;
    cone.ambient_dim = poly.ambient_dim() + 1;
    std::set<IntVector> seen;
    for (const auto& v : poly.vertices()) {
        IntVector g(cone.ambient_dim);
        g[0] = p;
        for (std::size_t i = 0; i < v.dim(); ++i) g[i + 1] = (Rational(p) * v[i]).num();
        if (seen.insert(g).second) cone.generators.push_back(std::move(g));
    }
    return cone;
}

// Facets of a full-dimensional polytope, by exhaustive enumeration of
// vertex d-subsets spanning a supporting hyperplane.
inline std::vector<FacetInequality> hrep_from_vrep(const Polytope& poly) {
    const std::size_t d = poly.ambient_dim();
    const auto& verts = poly.vertices();
    if (poly.affine_dim() != d)
        throw DimensionError("hrep_from_vrep needs a full-dimensional polytope (affine dim " +
                             std::to_string(poly.affine_dim()) + " < " + std::to_string(d) + ")");
    std::set<FacetInequality> facets;
    const std::size_t m = verts.size();
    std::vector<std::size_t> pick(d);
    for (std::size_t i = 0; i < d; ++i) pick[i] = i;
    while (true) {
        std::vector<IntVector> span;
        for (std::size_t i = 1; i < d; ++i) span.push_back(clear_denominators(verts[pick[i]] - verts[pick[0]]));
        if (rank_of(span, d) == d - 1) {
            IntVector normal = hyperplane_normal(span, d);
            Rational offset = dot(normal, verts[pick[0]]);
            bool below = false, above = false;
            for (const auto& v : verts) {
                Rational val = dot(normal, v);
                below |= val < offset;
                above |= val > offset;
            }
            if (!(below && above)) {
                if (above) {
                    normal = -normal;
                    offset = -offset;
                }
                facets.insert({std::move(normal), std::move(offset)});
            }
        }
        std::size_t k = d;
        while (k > 0 && pick[k - 1] == m - d + (k - 1)) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    return {facets.begin(), facets.end()};
}

// Membership structure for a polytope of any dimension: the affine hull is
// parametrized by a coordinate subset on which it projects bijectively,
// and the projected (full-dimensional) polytope is described by facets.
class PolytopeRegion {
public:
    explicit PolytopeRegion(const Polytope& poly) : ambient_dim_(poly.ambient_dim()) {
        const auto& verts = poly.vertices();
        origin_ = verts[0];
        std::vector<IntVector> int_dirs;
        for (std::size_t i = 1; i < verts.size(); ++i) {
            int_dirs.push_back(clear_denominators(verts[i] - origin_));
            if (rank_of(int_dirs, ambient_dim_) < int_dirs.size()) int_dirs.pop_back();
        }
        dim_ = int_dirs.size();
        if (dim_ == 0) return;
        IntMatrix basis = IntMatrix::from_columns(int_dirs, ambient_dim_);
        kept_ = independent_rows(basis);
        std::vector<bool> is_kept(ambient_dim_, false);
        for (auto r : kept_) is_kept[r] = true;
        for (std::size_t r = 0; r < ambient_dim_; ++r)
            if (!is_kept[r]) dropped_.push_back(r);
        // dropped coords = origin + M (kept coords - origin), M = B_dropped * B_kept^{-1}
        RatMatrix bk(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) bk(i, j) = Rational(basis(kept_[i], j));
        map_ = RatMatrix(dropped_.size(), dim_);
        // Row i of M solves M_i * B_kept = B_dropped_i, i.e. B_kept^T M_i^T = B_dropped_i^T.
        RatMatrix bkt = bk.transpose();
        for (std::size_t i = 0; i < dropped_.size(); ++i) {
            RatVector rhs(dim_);
            for (std::size_t j = 0; j < dim_; ++j) rhs[j] = Rational(basis(dropped_[i], j));
            RatVector sol = solve_unique(bkt, rhs);
            for (std::size_t j = 0; j < dim_; ++j) map_(i, j) = sol[j];
        }
        std::vector<RatVector> projected;
        for (const auto& v : verts) projected.push_back(project(v));
        facets_ = hrep_from_vrep(Polytope(dim_, projected));
    }

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return dim_; }
    const RatVector& origin() const { return origin_; }
    const std::vector<std::size_t>& kept_coordinates() const { return kept_; }
    const std::vector<std::size_t>& dropped_coordinates() const { return dropped_; }
    // Facets of the projection onto the kept coordinates.
    const std::vector<FacetInequality>& facets() const { return facets_; }
    // Affine-hull map: dropped = origin_dropped + map * (kept - origin_kept).
    const RatMatrix& hull_map() const { return map_; }

    RatVector project(const RatVector& x) const {
        RatVector out(kept_.size());
        for (std::size_t i = 0; i < kept_.size(); ++i) out[i] = x[kept_[i]];
        return out;
    }

    // y in t*P (closed) or in the relative interior of t*P (strict).
    bool contains_scaled(const RatVector& y, const Rational& t, bool strict) const {
        if (y.dim() != ambient_dim_) throw DimensionError("membership test dimension mismatch");
        if (t.sign() < 0) return false;
        if (t.is_zero()) return !strict && y.is_zero();
        if (dim_ == 0) return y == t * origin_;
        for (std::size_t i = 0; i < dropped_.size(); ++i) {
            Rational expect = t * origin_[dropped_[i]];
            for (std::size_t j = 0; j < dim_; ++j)
                expect += map_(i, j) * (y[kept_[j]] - t * origin_[kept_[j]]);
            if (expect != y[dropped_[i]]) return false;
        }
        for (const auto& f : facets_) {
            Rational lhs(0);
            for (std::size_t j = 0; j < dim_; ++j) lhs += Rational(f.normal[j]) * y[kept_[j]];
            Rational rhs = t * f.offset;
            if (strict ? !(lhs < rhs) : !(lhs <= rhs)) return false;
        }
        return true;
    }

    bool contains(const RatVector& x, bool strict = false) const { return contains_scaled(x, Rational(1), strict); }

private:
    std::size_t ambient_dim_;
    std::size_t dim_ = 0;
    RatVector origin_;
    std::vector<std::size_t> kept_;
    std::vector<std::size_t> dropped_;
    RatMatrix map_;
    std::vector<FacetInequality> facets_;
};

// Index of the first vertex of `inner` outside `outer`, if any.
inline std::optional<std::size_t> first_vertex_outside(const Polytope& outer, const Polytope& inner) {
    if (outer.ambient_dim() != inner.ambient_dim()) throw DimensionError("containment across dimensions");
    PolytopeRegion region(outer);
    for (std::size_t i = 0; i < inner.vertices().size(); ++i)
        if (!region.contains(inner.vertices()[i])) return i;
    return std::nullopt;
}

// True iff inner is a subset of outer.
inline bool contains_polytope(const Polytope& outer, const Polytope& inner) {
    return !first_vertex_outside(outer, inner).has_value();
}

// Axis-parallel bounding box of a polytope (degenerate axes collapse).
inline Polytope bounding_box(const Polytope& poly) {
    const std::size_t d = poly.ambient_dim();
    std::vector<Rational> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        lo[i] = hi[i] = poly.vertices()[0][i];
        for (const auto& v : poly.vertices()) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    }
    std::set<RatVector> corners;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        RatVector c(d);
        for (std::size_t i = 0; i < d; ++i) c[i] = (mask >> i) & 1 ? hi[i] : lo[i];
        corners.insert(c);
    }
    return Polytope(d, {corners.begin(), corners.end()});
}

// Inner facet normals of a full-rank pointed cone, found by enumerating
// generator subsets spanning a supporting hyperplane through the origin.
inline std::vector<IntVector> cone_facet_normals(const Cone& cone) {
    const std::size_t d = cone.ambient_dim;
    const auto& gens = cone.generators;
    if (rank_of(gens, d) != d) throw GeometryError("cone_facet_normals needs a full-rank cone");
    std::set<IntVector> normals;
    if (d == 1) {
        normals.insert(IntVector{Integer(gens[0][0] > 0 ? 1 : -1)});
        return {normals.begin(), normals.end()};
    }
    const std::size_t m = gens.size();
    const std::size_t k = d - 1;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::vector<IntVector> span;
        for (auto i : pick) span.push_back(gens[i]);
        if (rank_of(span, d) == k) {
            IntVector n = hyperplane_normal(span, d);
            bool pos = false, neg = false;
            for (const auto& g : gens) {
                Integer v = dot(n, g);
                pos |= v > 0;
                neg |= v < 0;
            }
            if (!(pos && neg)) normals.insert(neg ? IntVector(-n) : n);
        }
        std::size_t j = k;
        while (j > 0 && pick[j - 1] == m - k + (j - 1)) --j;
        if (j == 0) break;
        ++pick[j - 1];
        for (std::size_t q = j; q < k; ++q) pick[q] = pick[q - 1] + 1;
    }
    return {normals.begin(), normals.end()};
}

}  // namespace irrdec
