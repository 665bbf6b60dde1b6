#pragma once

// Placing (beneath-beyond) triangulation of a pointed cone, using only the
// input generators and inserting them in the given order.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "irrdec/error.hpp"
#include "irrdec/linalg.hpp"
#include "irrdec/polytope.hpp"

namespace irrdec {

struct SimplicialCone {
    std::vector<std::size_t> indices;    // into the parent generator list, ascending
    std::vector<IntVector> generators;

    IntMatrix matrix() const { return IntMatrix::from_columns(generators, generators.front().dim()); }
};

struct Triangulation {
    Cone parent;
    std::size_t rank = 0;
    std::vector<SimplicialCone> cells;
    std::vector<IntVector> boundary_normals;  // inner orientation
    std::vector<IntVector> wall_normals;      // canonical orientation, all cell facets
    std::vector<std::size_t> unused;          // generators inside the cone at insertion time
    std::vector<IntVector> complement;        // basis of the orthogonal complement of the span
};

namespace detail {

struct BoundaryFacet {
    std::vector<std::size_t> indices;  // ascending, size rank - 1
    std::size_t apex;                  // remaining generator of the owning cell
};

// Inner normal, inside the linear span, of the facet spanned by `facet`
// within a cell that also contains `apex`.
inline IntVector relative_normal(const std::vector<IntVector>& gens, const std::vector<std::size_t>& facet,
                                 std::size_t apex, const std::vector<IntVector>& complement) {
    std::vector<IntVector> span;
    for (auto i : facet) span.push_back(gens[i]);
    span.insert(span.end(), complement.begin(), complement.end());
    return primitive_normal(span, gens[apex]);
}

inline std::vector<std::size_t> with(std::vector<std::size_t> v, std::size_t extra) {
    v.insert(std::upper_bound(v.begin(), v.end(), extra), extra);
    return v;
}

}  // namespace detail

inline Triangulation placing_triangulation(const Cone& cone) {
    const std::size_t dim = cone.ambient_dim;
    const auto& gens = cone.generators;
    if (gens.empty()) throw GeometryError("cannot triangulate a cone without generators");
    for (const auto& g : gens) {
        if (g.dim() != dim) throw DimensionError("generator dimension does not match cone ambient dimension");
        if (g.is_zero()) throw GeometryError("zero generator");
    }

    std::size_t rank = 0;
    std::vector<std::vector<std::size_t>> cells;
    std::vector<detail::BoundaryFacet> facets;
    std::vector<std::size_t> used;
    std::vector<std::size_t> unused;
    std::vector<IntVector> complement = complement_basis({}, dim);

    auto span_vectors = [&](std::size_t extra) {
        std::vector<IntVector> v;
        for (auto i : used) v.push_back(gens[i]);
        v.push_back(gens[extra]);
        return v;
    };

    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (rank == 0) {
            rank = 1;
            cells = {{k}};
            facets = {{{}, k}};
            used.push_back(k);
            complement = complement_basis(span_vectors(k), dim);
            continue;
        }
        if (rank_of(span_vectors(k), dim) > rank) {
            // Pyramid over the current triangulation.
            std::vector<detail::BoundaryFacet> next;
            for (const auto& c : cells) next.push_back({c, k});
            for (const auto& f : facets) next.push_back({detail::with(f.indices, k), f.apex});
            for (auto& c : cells) c = detail::with(c, k);
            facets = std::move(next);
            complement = complement_basis(span_vectors(k), dim);
            used.push_back(k);
            ++rank;
            continue;
        }
        std::vector<bool> visible(facets.size(), false);
        bool any_visible = false, any_hidden = false;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            IntVector a = detail::relative_normal(gens, facets[f].indices, facets[f].apex, complement);
            Integer v = dot(a, gens[k]);
            if (v < 0) {
                visible[f] = true;
                any_visible = true;
            } else if (v > 0) {
                any_hidden = true;
            }
        }
        if (!any_visible) {
            unused.push_back(k);
            continue;
        }
        if (!any_hidden) throw GeometryError("generators do not span a pointed cone (generator " +
                                             std::to_string(k) + " is opposite to the current cone)");
        // Horizon ridges lie in exactly one visible facet.
        std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> ridge_use;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (!visible[f]) continue;
            const auto& idx = facets[f].indices;
            for (std::size_t e = 0; e < idx.size(); ++e) {
                std::vector<std::size_t> ridge = idx;
                ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(e));
                auto& slot = ridge_use[ridge];
                slot.first += 1;
                slot.second = idx[e];
            }
        }
        std::vector<detail::BoundaryFacet> next;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (visible[f])
                cells.push_back(detail::with(facets[f].indices, k));
            else
                next.push_back(facets[f]);
        }
        for (const auto& [ridge, use] : ridge_use)
            if (use.first == 1) next.push_back({detail::with(ridge, k), use.second});
        facets = std::move(next);
        used.push_back(k);
    }

    Triangulation t;
    t.parent = cone;
    t.rank = rank;
    t.unused = std::move(unused);
    t.complement = complement;
    for (auto& c : cells) {
        SimplicialCone sc;
        sc.indices = c;
        for (auto i : c) sc.generators.push_back(gens[i]);
        t.cells.push_back(std::move(sc));
    }
    std::set<IntVector> boundary;
    for (const auto& f : facets) boundary.insert(detail::relative_normal(gens, f.indices, f.apex, complement));
    t.boundary_normals.assign(boundary.begin(), boundary.end());
    std::set<IntVector> walls;
    for (const auto& c : cells) {
        for (std::size_t e = 0; e < c.size(); ++e) {
            std::vector<std::size_t> facet = c;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(e));
            walls.insert(canonical_orientation(detail::relative_normal(gens, facet, c[e], complement)));
        }
    }
    t.wall_normals.assign(walls.begin(), walls.end());
    return t;
}

inline Triangulation placing_triangulation(std::size_t ambient_dim, std::vector<IntVector> generators) {
    return placing_triangulation(Cone{ambient_dim, std::move(generators)});
}

inline std::pair<std::vector<IntVector>, std::vector<IntVector>> collect_normals(const Triangulation& t) {
    return {t.boundary_normals, t.wall_normals};
}

// Lattice index of a cell: |det| of its generator matrix when full rank,
// otherwise the gcd of maximal minors.
inline Integer cell_volume(const SimplicialCone& cell) { return maximal_minor_gcd(cell.matrix()); }

}  // namespace irrdec
