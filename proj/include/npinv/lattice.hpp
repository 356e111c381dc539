#pragma once

// Exact planar lattice geometry: points and vectors over arbitrary-precision
// integers, 2x2 integer matrices, affine unimodular maps, convex hulls and
// lattice polygons. Every predicate and every coordinate is exact; no floating
// point enters any computation.
//
// Conventions used throughout the library:
//   * area2() is the doubled Euclidean area (shoelace sum), so Pick's theorem
//     reads area2 = 2*interior + boundary - 2.
//   * A polygon may have dimension 0 (point), 1 (segment) or 2. Vertex lists
//     are stored counterclockwise, with collinear points removed, rotated so
//     the lexicographically smallest vertex comes first. Segments keep their
//     two endpoints in lexicographic order.
//   * mixed_volume(P,Q) is the doubled mixed volume
//     area2(P+Q) - area2(P) - area2(Q).

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "npinv/errors.hpp"

namespace npinv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Rational num/den for any nonzero den; the component constructor itself
// insists on a positive denominator.
inline Rat make_rat(Int num, Int den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

struct LatticePoint {
    Int x;
    Int y;

    LatticePoint() : x(0), y(0) {}
    LatticePoint(Int px, Int py) : x(std::move(px)), y(std::move(py)) {}
    LatticePoint(long px, long py) : x(px), y(py) {}

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
    // Lexicographic order, x first. Used for canonical vertex rotations and
    // for deterministic sorted point lists.
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
        return LatticePoint(a.x + b.x, a.y + b.y);
    }
    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
        return LatticePoint(a.x - b.x, a.y - b.y);
    }
    friend LatticePoint operator-(const LatticePoint& a) { return LatticePoint(-a.x, -a.y); }
    friend LatticePoint operator*(const Int& k, const LatticePoint& a) {
        return LatticePoint(k * a.x, k * a.y);
    }
};

inline Int cross(const LatticePoint& a, const LatticePoint& b) { return a.x * b.y - a.y * b.x; }
inline Int dot(const LatticePoint& a, const LatticePoint& b) { return a.x * b.x + a.y * b.y; }

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = std::move(r);
    }
    return a;
}

// Extended gcd: returns g = gcd(a,b) together with u,v such that u*a + v*b = g.
struct ExtGcd {
    Int g, u, v;
};

inline ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = std::move(a), r = std::move(b);
    Int old_u = 1, u = 0;
    Int old_v = 0, v = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = std::move(t);
        t = old_u - q * u; old_u = u; u = std::move(t);
        t = old_v - q * v; old_v = v; v = std::move(t);
    }
    if (old_r < 0) { old_r = -old_r; old_u = -old_u; old_v = -old_v; }
    return {std::move(old_r), std::move(old_u), std::move(old_v)};
}

// Primitive vector in the direction of v. Requires v != 0.
inline LatticePoint primitive(const LatticePoint& v) {
    if (v.x == 0 && v.y == 0) fail(errc::bad_argument, "primitive of zero vector");
    Int g = gcd_int(v.x, v.y);
    return LatticePoint(v.x / g, v.y / g);
}

// Row-major 2x2 integer matrix acting on column vectors: (x,y) -> (a*x+b*y, c*x+d*y).
struct Mat2 {
    Int a, b, c, d;

    Mat2() : a(1), b(0), c(0), d(1) {}
    Mat2(Int pa, Int pb, Int pc, Int pd)
        : a(std::move(pa)), b(std::move(pb)), c(std::move(pc)), d(std::move(pd)) {}
    Mat2(long pa, long pb, long pc, long pd) : a(pa), b(pb), c(pc), d(pd) {}

    Int det() const { return a * d - b * c; }

    LatticePoint apply(const LatticePoint& p) const {
        return LatticePoint(a * p.x + b * p.y, c * p.x + d * p.y);
    }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return Mat2(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                    m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
    }

    friend bool operator==(const Mat2& m, const Mat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

// Inverse of a matrix with det = +-1.
inline Mat2 unimodular_inverse(const Mat2& m) {
    Int dt = m.det();
    if (dt != 1 && dt != -1) fail(errc::bad_argument, "matrix is not unimodular");
    return Mat2(m.d * dt, -m.b * dt, -m.c * dt, m.a * dt);
}

// Affine lattice map p -> linear*p + shift. Composition and inverse are defined
// for unimodular linear parts only, which is the only kind the library produces.
struct AffineMap {
    Mat2 linear;
    LatticePoint shift;

    AffineMap() = default;
    AffineMap(Mat2 m, LatticePoint t) : linear(std::move(m)), shift(std::move(t)) {}

    LatticePoint apply(const LatticePoint& p) const { return linear.apply(p) + shift; }

    AffineMap inverse() const {
        Mat2 inv = unimodular_inverse(linear);
        return AffineMap(inv, -inv.apply(shift));
    }

    // (f.compose(g)).apply(p) == f.apply(g.apply(p))
    AffineMap compose(const AffineMap& g) const {
        return AffineMap(linear * g.linear, linear.apply(g.shift) + shift);
    }

    friend bool operator==(const AffineMap& f, const AffineMap& g) {
        return f.linear == g.linear && f.shift == g.shift;
    }
};

namespace detail {

// Monotone-chain convex hull. Returns the vertex cycle counterclockwise with
// collinear interior points dropped; a point or segment degenerates to one or
// two entries.
inline std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<LatticePoint> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 2 && h[1] < h[0]) std::swap(h[0], h[1]);
    return h;
}

}  // namespace detail

class LatticePolygon {
public:
    // Convex hull of a non-empty point set.
    static LatticePolygon hull(const std::vector<LatticePoint>& pts) {
        if (pts.empty()) fail(errc::empty_point_set, "convex hull of empty point set");
        return LatticePolygon(detail::convex_hull(pts));
    }

    // 0 for a point, 1 for a segment, 2 otherwise.
    int dim() const { return verts_.size() == 1 ? 0 : (verts_.size() == 2 ? 1 : 2); }

    const std::vector<LatticePoint>& vertices() const { return verts_; }
    std::size_t vertex_count() const { return verts_.size(); }

    friend bool operator==(const LatticePolygon& p, const LatticePolygon& q) {
        return p.verts_ == q.verts_;
    }
    friend bool operator!=(const LatticePolygon& p, const LatticePolygon& q) {
        return !(p == q);
    }
    friend bool operator<(const LatticePolygon& p, const LatticePolygon& q) {
        return std::lexicographical_compare(p.verts_.begin(), p.verts_.end(),
                                            q.verts_.begin(), q.verts_.end());
    }

    // Doubled area by the shoelace formula; 0 for points and segments.
    Int area2() const {
        Int s = 0;
        const std::size_t n = verts_.size();
        for (std::size_t i = 0; i < n; ++i) s += cross(verts_[i], verts_[(i + 1) % n]);
        return s;
    }

    // Directed edges of the counterclockwise cycle. Empty for a point; a
    // segment yields the two opposite traversals.
    std::vector<std::pair<LatticePoint, LatticePoint>> edges() const {
        std::vector<std::pair<LatticePoint, LatticePoint>> e;
        const std::size_t n = verts_.size();
        if (n < 2) return e;
        if (n == 2) {
            e.push_back({verts_[0], verts_[1]});
            e.push_back({verts_[1], verts_[0]});
            return e;
        }
        for (std::size_t i = 0; i < n; ++i) e.push_back({verts_[i], verts_[(i + 1) % n]});
        return e;
    }

    bool contains(const LatticePoint& p) const {
        const std::size_t n = verts_.size();
        if (n == 1) return p == verts_[0];
        if (n == 2) {
            if (cross(verts_[1] - verts_[0], p - verts_[0]) != 0) return false;
            return dot(p - verts_[0], verts_[1] - verts_[0]) >= 0 &&
                   dot(p - verts_[1], verts_[0] - verts_[1]) >= 0;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (cross(verts_[(i + 1) % n] - verts_[i], p - verts_[i]) < 0) return false;
        }
        return true;
    }

    bool strictly_contains(const LatticePoint& p) const {
        const std::size_t n = verts_.size();
        if (n <= 2) return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (cross(verts_[(i + 1) % n] - verts_[i], p - verts_[i]) <= 0) return false;
        }
        return true;
    }

    // Number of lattice points on the boundary (all points for dim <= 1).
    Int boundary_count() const {
        const std::size_t n = verts_.size();
        if (n == 1) return 1;
        if (n == 2) return gcd_int(verts_[1].x - verts_[0].x, verts_[1].y - verts_[0].y) + 1;
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            LatticePoint d = verts_[(i + 1) % n] - verts_[i];
            s += gcd_int(d.x, d.y);
        }
        return s;
    }

    // Number of interior lattice points, via Pick's theorem.
    Int interior_count() const {
        if (dim() < 2) return 0;
        return (area2() - boundary_count() + 2) / 2;
    }

    Int lattice_point_count() const { return interior_count() + boundary_count(); }

    // All lattice points, sorted lexicographically.
    std::vector<LatticePoint> lattice_points() const { return scan_points(false); }

    // Interior lattice points, sorted lexicographically.
    std::vector<LatticePoint> interior_lattice_points() const { return scan_points(true); }

    // Image under an affine map whose linear part may have det -1 (orientation
    // is re-canonicalized).
    LatticePolygon transformed(const AffineMap& f) const {
        std::vector<LatticePoint> img;
        img.reserve(verts_.size());
        for (const auto& v : verts_) img.push_back(f.apply(v));
        return hull(img);
    }

    LatticePolygon translated(const LatticePoint& t) const {
        return transformed(AffineMap(Mat2(), t));
    }

    // Minkowski sum.
    friend LatticePolygon operator+(const LatticePolygon& p, const LatticePolygon& q) {
        std::vector<LatticePoint> sums;
        sums.reserve(p.verts_.size() * q.verts_.size());
        for (const auto& a : p.verts_)
            for (const auto& b : q.verts_) sums.push_back(a + b);
        return hull(sums);
    }

    // Dilation by a non-negative integer factor.
    LatticePolygon scaled(const Int& k) const {
        if (k < 0) fail(errc::bad_argument, "negative dilation factor");
        if (k == 0) return hull({LatticePoint(0, 0)});
        std::vector<LatticePoint> pts;
        pts.reserve(verts_.size());
        for (const auto& v : verts_) pts.push_back(k * v);
        return LatticePolygon(std::move(pts));
    }

    // Range of the linear form p -> dot(v, p) over the polygon.
    std::pair<Int, Int> support_range(const LatticePoint& v) const {
        Int lo = dot(v, verts_[0]), hi = lo;
        for (const auto& w : verts_) {
            Int s = dot(v, w);
            if (s < lo) lo = s;
            if (s > hi) hi = s;
        }
        return {std::move(lo), std::move(hi)};
    }

    std::pair<LatticePoint, LatticePoint> bounding_box() const {
        Int xmin = verts_[0].x, xmax = verts_[0].x, ymin = verts_[0].y, ymax = verts_[0].y;
        for (const auto& v : verts_) {
            if (v.x < xmin) xmin = v.x;
            if (v.x > xmax) xmax = v.x;
            if (v.y < ymin) ymin = v.y;
            if (v.y > ymax) ymax = v.y;
        }
        return {LatticePoint(xmin, ymin), LatticePoint(xmax, ymax)};
    }

private:
    explicit LatticePolygon(std::vector<LatticePoint> hull_verts) : verts_(std::move(hull_verts)) {
        canonicalize();
    }

    void canonicalize() {
        if (verts_.size() < 3) return;
        std::size_t best = 0;
        for (std::size_t i = 1; i < verts_.size(); ++i)
            if (verts_[i] < verts_[best]) best = i;
        std::rotate(verts_.begin(), verts_.begin() + static_cast<std::ptrdiff_t>(best),
                    verts_.end());
    }

    // Row scan: for each integer y in the vertical range, the x-extent is an
    // exact rational interval obtained from the edges crossing that row.
    std::vector<LatticePoint> scan_points(bool interior_only) const {
        std::vector<LatticePoint> out;
        if (dim() == 0) {
            if (!interior_only) out.push_back(verts_[0]);
            return out;
        }
        if (dim() == 1) {
            if (interior_only) return out;
            LatticePoint d = verts_[1] - verts_[0];
            Int g = gcd_int(d.x, d.y);
            LatticePoint step(d.x / g, d.y / g);
            LatticePoint p = verts_[0];
            for (Int i = 0; i <= g; ++i) {
                out.push_back(p);
                p = p + step;
            }
            std::sort(out.begin(), out.end());
            return out;
        }
        auto [lo, hi] = bounding_box();
        for (Int y = lo.y; y <= hi.y; ++y) {
            bool have = false;
            Rat xmin, xmax;
            const std::size_t n = verts_.size();
            for (std::size_t i = 0; i < n; ++i) {
                const LatticePoint& a = verts_[i];
                const LatticePoint& b = verts_[(i + 1) % n];
                Int ylo = a.y < b.y ? a.y : b.y;
                Int yhi = a.y < b.y ? b.y : a.y;
                if (y < ylo || y > yhi) continue;
                if (a.y == b.y) {
                    Rat x1(a.x), x2(b.x);
                    if (x2 < x1) std::swap(x1, x2);
                    if (!have) { xmin = x1; xmax = x2; have = true; }
                    else { if (x1 < xmin) xmin = x1; if (x2 > xmax) xmax = x2; }
                } else {
                    Rat x = Rat(a.x) + make_rat(Int(y - a.y) * (b.x - a.x), Int(b.y - a.y));
                    if (!have) { xmin = x; xmax = x; have = true; }
                    else { if (x < xmin) xmin = x; if (x > xmax) xmax = x; }
                }
            }
            if (!have) continue;
            Int x0 = rat_ceil(xmin);
            Int x1 = rat_floor(xmax);
            for (Int x = x0; x <= x1; ++x) {
                LatticePoint p(x, y);
                if (interior_only ? strictly_contains(p) : true) out.push_back(p);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    static Int rat_floor(const Rat& r) {
        Int num = boost::multiprecision::numerator(r);
        Int den = boost::multiprecision::denominator(r);
        Int q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }
    static Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

    std::vector<LatticePoint> verts_;
};

// Doubled mixed volume of two polygons.
inline Int mixed_volume(const LatticePolygon& p, const LatticePolygon& q) {
    return (p + q).area2() - p.area2() - q.area2();
}

}  // namespace npinv
