#pragma once

// Interior hulls, the onion sequence, the move-out operation, maximal
// containers and genus.
//
// interior_hull(P) is the convex hull of the interior lattice points of P
// (absent when there are none). move_out(G) reverses it on candidates: every
// edge's supporting half-plane, written with primitive inward normal v and
// offset a as {p : <p,v> >= -a}, is relaxed to {p : <p,v> >= -a-1}, and the
// relaxed half-planes are intersected into a rational polygon. G is the
// interior hull of some lattice polygon exactly when that intersection has
// integral vertices, in which case the intersection is the unique maximal
// container max_polygon(G).
//
// Points and segments are declared interior polygons by convention (the
// containers below witness this); their maximal containers are fixed
// representatives transported along the segment's normal form:
//   point p            -> p + conv{(-1,-1),(1,-1),(-1,1)}
//   segment, k points  -> image of [-1,k] x [0,2] for the segment placed at
//                         (0,1)..(k-1,1)

#include <optional>
#include <utility>
#include <vector>

#include "npinv/errors.hpp"
#include "npinv/lattice.hpp"
#include "npinv/normal_form.hpp"

namespace npinv {

struct RationalPoint {
    Rat x;
    Rat y;

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// Convex polygon with rational vertices, as produced by move_out. Vertices are
// counterclockwise starting at the lexicographically smallest one.
struct RationalPolygon {
    std::vector<RationalPoint> vertices;

    bool is_lattice() const {
        for (const auto& v : vertices) {
            if (boost::multiprecision::denominator(v.x) != 1 ||
                boost::multiprecision::denominator(v.y) != 1)
                return false;
        }
        return true;
    }

    // Integral vertex set as a lattice polygon. Requires is_lattice().
    LatticePolygon to_lattice() const {
        std::vector<LatticePoint> pts;
        pts.reserve(vertices.size());
        for (const auto& v : vertices) {
            if (boost::multiprecision::denominator(v.x) != 1 ||
                boost::multiprecision::denominator(v.y) != 1)
                fail(errc::not_lattice, "rational polygon has a non-integral vertex");
            pts.emplace_back(Int(boost::multiprecision::numerator(v.x)),
                             Int(boost::multiprecision::numerator(v.y)));
        }
        return LatticePolygon::hull(pts);
    }
};

struct MoveOutResult {
    RationalPolygon polygon;
    bool is_lattice;
};

namespace detail {

inline Rat rat_cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline std::vector<RationalPoint> rational_hull(std::vector<RationalPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<RationalPoint> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && rat_cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && rat_cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace detail

// Hull of the interior lattice points; absent when the interior is empty.
inline std::optional<LatticePolygon> interior_hull(const LatticePolygon& p) {
    std::vector<LatticePoint> pts = p.interior_lattice_points();
    if (pts.empty()) return std::nullopt;
    return LatticePolygon::hull(pts);
}

// Successive interior hulls until they vanish.
inline std::vector<LatticePolygon> onion(const LatticePolygon& p) {
    std::vector<LatticePolygon> layers;
    std::optional<LatticePolygon> cur = interior_hull(p);
    while (cur) {
        layers.push_back(*cur);
        if (cur->dim() < 2) break;
        cur = interior_hull(*cur);
    }
    return layers;
}

// Intersection of the outward-shifted supporting half-planes of a
// two-dimensional polygon. Since shifting by non-uniform Euclidean distances
// can change which constraints carry vertices, the intersection is built from
// all pairwise boundary-line meets filtered by feasibility, not from adjacent
// edge pairs.
inline MoveOutResult move_out(const LatticePolygon& g) {
    if (g.dim() != 2) fail(errc::not_two_dimensional, "move_out requires a two-dimensional polygon");

    struct Constraint {
        LatticePoint normal;  // primitive inward normal
        Int offset;           // relaxed: <p, normal> >= offset
    };
    std::vector<Constraint> cons;
    for (const auto& [a, b] : g.edges()) {
        LatticePoint e = b - a;
        LatticePoint n = primitive(LatticePoint(-e.y, e.x));
        cons.push_back({n, dot(n, a) - 1});
    }

    std::vector<RationalPoint> candidates;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        for (std::size_t j = i + 1; j < cons.size(); ++j) {
            Int det = cross(cons[i].normal, cons[j].normal);
            if (det == 0) continue;
            // Solve <p,n_i> = c_i, <p,n_j> = c_j by Cramer's rule.
            Rat x = make_rat(cons[i].offset * cons[j].normal.y - cons[j].offset * cons[i].normal.y, det);
            Rat y = make_rat(cons[i].normal.x * cons[j].offset - cons[j].normal.x * cons[i].offset, det);
            bool feasible = true;
            for (const auto& c : cons) {
                if (Rat(c.normal.x) * x + Rat(c.normal.y) * y < Rat(c.offset)) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) candidates.push_back({std::move(x), std::move(y)});
        }
    }

    RationalPolygon out{detail::rational_hull(std::move(candidates))};
    bool lattice = out.is_lattice();
    return {std::move(out), lattice};
}

// Whether g arises as the interior hull of some lattice polygon. Points and
// segments always do; a two-dimensional g does exactly when its move-out is
// integral.
inline bool is_interior_polygon(const LatticePolygon& g) {
    if (g.dim() < 2) return true;
    return move_out(g).is_lattice;
}

// The unique maximal polygon whose interior hull is g.
inline LatticePolygon max_polygon(const LatticePolygon& g) {
    if (g.dim() == 0) {
        const LatticePoint& p = g.vertices()[0];
        return LatticePolygon::hull({p + LatticePoint(-1, -1), p + LatticePoint(1, -1),
                                     p + LatticePoint(-1, 1)});
    }
    if (g.dim() == 1) {
        // Place the segment at (0,1)..(k-1,1); the container there is the
        // rectangle [-1,k] x [0,2].
        NormalForm nf = normal_form(g);
        Int len = nf.polygon.vertices()[1].x;  // segment spans (0,0)..(len,0)
        AffineMap lift(Mat2(), LatticePoint(0, 1));
        AffineMap to_strip = lift.compose(nf.to_normal);
        LatticePolygon box = LatticePolygon::hull({LatticePoint(Int(-1), Int(0)),
                                                   LatticePoint(len + 1, Int(0)),
                                                   LatticePoint(len + 1, Int(2)),
                                                   LatticePoint(Int(-1), Int(2))});
        return box.transformed(to_strip.inverse());
    }
    MoveOutResult mo = move_out(g);
    if (!mo.is_lattice)
        fail(errc::not_interior_polygon, "polygon is not an interior polygon, no maximal container");
    return mo.polygon.to_lattice();
}

// Number of interior lattice points of a two-dimensional polygon.
inline Int genus(const LatticePolygon& p) {
    if (p.dim() != 2) fail(errc::bad_argument, "genus requires a two-dimensional polygon");
    return p.interior_count();
}

}  // namespace npinv
