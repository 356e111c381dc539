#pragma once

// Canonical forms and equivalence of lattice polygons under affine unimodular
// maps (GL2(Z) plus translations, reflections included).
//
// The canonical representative of a dimension-2 class is computed as follows.
// For each directed edge of the polygon and of its x-axis mirror image, move
// the edge's source vertex to the origin and its primitive direction to (1,0);
// the polygon then lies in the closed upper half-plane and the remaining
// freedom is the shear group x -> x + k*y. For each shear in a window that
// provably contains the optimum, translate the lexicographically smallest
// vertex to the origin and read off the sorted vertex list; the candidate with
// the smallest list is the normal form. Points map to the origin; segments map
// to conv{(0,0),(g,0)} with g the lattice length.
//
// Why the shear window suffices: once |k| exceeds the largest horizontal
// spread between vertices on distinct rows, the sorted order of the sheared
// vertices is frozen and every further shear step moves some entry strictly
// lexicographically upward while leaving earlier entries fixed. The sorted-list
// key is therefore strictly increasing beyond the window in both directions,
// so the global minimum is attained inside it.

#include <optional>
#include <utility>
#include <vector>

#include "npinv/errors.hpp"
#include "npinv/lattice.hpp"

namespace npinv {

struct NormalForm {
    LatticePolygon polygon;       // canonical class representative
    AffineMap to_normal;          // maps the input onto `polygon`
};

namespace detail {

// Unimodular matrix with det +1 sending the primitive vector d to (1,0).
inline Mat2 direction_to_x_axis(const LatticePoint& d) {
    ExtGcd e = ext_gcd(d.x, d.y);
    return Mat2(e.u, e.v, -d.y, d.x);
}

inline std::vector<LatticePoint> sorted_key(const LatticePolygon& p) {
    std::vector<LatticePoint> key = p.vertices();
    std::sort(key.begin(), key.end());
    return key;
}

// Applies f to p and translates the lexicographically smallest vertex of the
// image to the origin; returns the finished candidate map.
inline AffineMap settle_at_origin(const LatticePolygon& p, const AffineMap& f) {
    LatticePolygon img = p.transformed(f);
    LatticePoint corner = img.vertices()[0];
    for (const auto& v : img.vertices())
        if (v < corner) corner = v;
    return AffineMap(Mat2(), -corner).compose(f);
}

}  // namespace detail

// Canonical representative and a witness map onto it.
inline NormalForm normal_form(const LatticePolygon& p) {
    if (p.dim() == 0) {
        AffineMap f(Mat2(), -p.vertices()[0]);
        return {p.transformed(f), f};
    }
    if (p.dim() == 1) {
        LatticePoint a = p.vertices()[0];
        LatticePoint d = primitive(p.vertices()[1] - a);
        Mat2 m = detail::direction_to_x_axis(d);
        AffineMap f(m, -m.apply(a));
        return {p.transformed(f), f};
    }

    std::optional<std::vector<LatticePoint>> best_key;
    AffineMap best_map;
    const Mat2 mirror(1, 0, 0, -1);

    for (int s = 0; s < 2; ++s) {
        AffineMap pre(s == 0 ? Mat2() : mirror, LatticePoint(0, 0));
        LatticePolygon q = p.transformed(pre);
        for (const auto& [a, b] : q.edges()) {
            Mat2 m = detail::direction_to_x_axis(primitive(b - a));
            AffineMap anchor = AffineMap(m, -m.apply(a)).compose(pre);
            LatticePolygon r = p.transformed(anchor);

            // Horizontal spread bound that freezes the sorted order outside
            // the scanned window.
            Int spread = 0;
            for (const auto& u : r.vertices())
                for (const auto& w : r.vertices()) {
                    Int dx = abs_int(u.x - w.x);
                    if (dx > spread) spread = dx;
                }
            Int window = spread + 1;

            for (Int k = -window; k <= window; ++k) {
                AffineMap sheared = AffineMap(Mat2(Int(1), k, Int(0), Int(1)),
                                              LatticePoint(0, 0))
                                        .compose(anchor);
                AffineMap cand = detail::settle_at_origin(p, sheared);
                std::vector<LatticePoint> key = detail::sorted_key(p.transformed(cand));
                if (!best_key || std::lexicographical_compare(key.begin(), key.end(),
                                                              best_key->begin(),
                                                              best_key->end())) {
                    best_key = std::move(key);
                    best_map = cand;
                }
            }
        }
    }
    return {p.transformed(best_map), best_map};
}

// Witness map with apply(p) == q, or absence when the polygons are not
// unimodularly equivalent.
inline std::optional<AffineMap> equivalent(const LatticePolygon& p, const LatticePolygon& q) {
    NormalForm np = normal_form(p);
    NormalForm nq = normal_form(q);
    if (np.polygon != nq.polygon) return std::nullopt;
    return nq.to_normal.inverse().compose(np.to_normal);
}

}  // namespace npinv
