#pragma once

// Toric ideal generators of the embedding by lattice-point characters,
// dimension counting for its quadratic part, the canonical quadrics indexed
// by second-interior points (plain and well-aligned forms), and the genus-5
// discriminant of the net of quadrics cut out by the reference quadrangle.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "npinv/adjunction.hpp"
#include "npinv/curve_invariants.hpp"
#include "npinv/errors.hpp"
#include "npinv/lattice.hpp"
#include "npinv/laurent.hpp"
#include "npinv/normal_form.hpp"

namespace npinv {

// ---------------------------------------------------------------------------
// Toric binomials and quadric counting

// A binomial relation prod X_u (u in lhs) - prod X_u (u in rhs) between the
// characters of the polygon's lattice points. Both sides are sorted
// multisets with equal sums, and lhs < rhs lexicographically.
struct ToricBinomial {
    int degree = 2;
    std::vector<LatticePoint> lhs, rhs;
};

inline bool operator==(const ToricBinomial& a, const ToricBinomial& b) {
    return a.degree == b.degree && a.lhs == b.lhs && a.rhs == b.rhs;
}

// Generators of the toric ideal in degrees 2 and 3: all quadratic binomials,
// plus (only when the boundary has fewer than 4 lattice points, where
// quadrics do not suffice) the cubic binomials whose sides share no point.
inline std::vector<ToricBinomial> toric_binomials(const LatticePolygon& g) {
    auto pts = g.lattice_points();
    std::sort(pts.begin(), pts.end());
    std::vector<ToricBinomial> out;

    std::map<LatticePoint, std::vector<std::vector<LatticePoint>>> bySum;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i; j < pts.size(); ++j)
            bySum[pts[i] + pts[j]].push_back({pts[i], pts[j]});
    for (const auto& [sum, sides] : bySum)
        for (std::size_t i = 0; i < sides.size(); ++i)
            for (std::size_t j = i + 1; j < sides.size(); ++j) {
                ToricBinomial b;
                b.degree = 2;
                b.lhs = std::min(sides[i], sides[j]);
                b.rhs = std::max(sides[i], sides[j]);
                out.push_back(std::move(b));
            }

    if (g.dim() == 2 && g.boundary_count() < 4) {
        std::map<LatticePoint, std::vector<std::vector<LatticePoint>>> cubes;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i; j < pts.size(); ++j)
                for (std::size_t k = j; k < pts.size(); ++k)
                    cubes[pts[i] + pts[j] + pts[k]].push_back({pts[i], pts[j], pts[k]});
        auto disjoint = [](const std::vector<LatticePoint>& a,
                           const std::vector<LatticePoint>& b) {
            for (const auto& x : a)
                for (const auto& y : b)
                    if (x == y) return false;
            return true;
        };
        for (const auto& [sum, sides] : cubes)
            for (std::size_t i = 0; i < sides.size(); ++i)
                for (std::size_t j = i + 1; j < sides.size(); ++j) {
                    if (!disjoint(sides[i], sides[j])) continue;
                    ToricBinomial b;
                    b.degree = 3;
                    b.lhs = std::min(sides[i], sides[j]);
                    b.rhs = std::max(sides[i], sides[j]);
                    out.push_back(std::move(b));
                }
    }

    std::sort(out.begin(), out.end(), [](const ToricBinomial& a, const ToricBinomial& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.lhs != b.lhs) return a.lhs < b.lhs;
        return a.rhs < b.rhs;
    });
    return out;
}

// Dimension of the space of quadrics vanishing on the character embedding:
// the quadratic monomials minus the distinct character sums, which by
// normality of lattice polygons is the lattice-point count of 2g.
inline Int i2_dimension(const LatticePolygon& g) {
    Int n = g.lattice_point_count();
    return n * (n + 1) / 2 - g.scaled(Int(2)).lattice_point_count();
}

// ---------------------------------------------------------------------------
// Canonical quadrics

// The quadric attached to a second-interior point w: coefficients indexed by
// unordered pairs {u, v} of interior-hull lattice points with u + v equal to
// the term exponent plus w.
template <class K>
struct CanonicalQuadric {
    LatticePoint w;
    std::map<std::pair<LatticePoint, LatticePoint>, K> coeffs;
};

namespace detail {

template <class K>
void quadric_insert(CanonicalQuadric<K>& q, LatticePoint u, LatticePoint v, const K& c) {
    if (v < u) std::swap(u, v);
    auto key = std::make_pair(std::move(u), std::move(v));
    auto it = q.coeffs.find(key);
    if (it == q.coeffs.end())
        q.coeffs.emplace(std::move(key), c);
    else
        it->second = it->second + c;
}

}  // namespace detail

// One quadric per lattice point of the second interior hull, each term of f
// rewritten through the lexicographically smallest admissible decomposition
// into two interior-hull points. The input is taken at face value; certify
// its non-degeneracy separately if the curve interpretation matters.
template <class K>
std::vector<CanonicalQuadric<K>> canonical_quadrics(const LaurentPoly<K>& f) {
    LatticePolygon delta = newton_polygon(f);
    if (delta.dim() != 2)
        fail(errc::not_two_dimensional, "canonical quadrics need a two-dimensional Newton polygon");
    auto ih = interior_hull(delta);
    if (!ih) return {};
    auto ih2 = interior_hull(*ih);
    if (!ih2) return {};

    auto d1 = ih->lattice_points();
    std::sort(d1.begin(), d1.end());
    std::set<LatticePoint> d1set(d1.begin(), d1.end());
    auto ws = ih2->lattice_points();
    std::sort(ws.begin(), ws.end());

    std::vector<CanonicalQuadric<K>> out;
    for (const auto& w : ws) {
        CanonicalQuadric<K> q;
        q.w = w;
        for (const auto& [e, c] : f.terms) {
            LatticePoint target = e + w;
            bool found = false;
            for (const auto& u : d1) {
                if (d1set.count(target - u)) {
                    detail::quadric_insert(q, u, target - u, c);
                    found = true;
                    break;
                }
            }
            if (!found)
                fail(errc::decomposition_failed,
                     "no interior-hull decomposition for a term of the quadric");
        }
        out.push_back(std::move(q));
    }
    return out;
}

// Well-aligned form: decompositions follow the alignment certificate for the
// strip normalization along dir, so each boundary term of f is split at the
// certified height pair, and interior-hull terms are split as the term times
// the character of w itself. Coordinates in the result are the original ones.
template <class K>
std::vector<CanonicalQuadric<K>> canonical_quadrics(const LaurentPoly<K>& f,
                                                    const LatticePoint& dir) {
    LatticePolygon delta = newton_polygon(f);
    if (delta.dim() != 2)
        fail(errc::not_two_dimensional, "canonical quadrics need a two-dimensional Newton polygon");
    WellAlignment wa = is_well_aligned(delta, dir);
    if (!wa.aligned)
        fail(errc::not_well_aligned, "polygon is not well-aligned along the direction");

    AffineMap back = wa.strip.inverse();
    LatticePolygon P = delta.transformed(wa.strip);
    auto ih = interior_hull(delta);
    LatticePolygon D1 = ih->transformed(wa.strip);
    LatticePolygon D2 = interior_hull(*ih)->transformed(wa.strip);

    auto d1 = D1.lattice_points();
    std::sort(d1.begin(), d1.end());
    std::set<LatticePoint> d1set(d1.begin(), d1.end());

    std::map<std::pair<Int, LatticePoint>, std::pair<Int, Int>> heights;
    for (const auto& witness : wa.certificate)
        heights[{witness.row, witness.boundary}] = {witness.h1, witness.h2};

    LaurentPoly<K> fs;
    for (const auto& [e, c] : f.terms) fs.terms.emplace(wa.strip.apply(e), c);

    auto ws = D2.lattice_points();
    std::sort(ws.begin(), ws.end());

    std::vector<CanonicalQuadric<K>> out;
    for (const auto& w : ws) {
        CanonicalQuadric<K> q;
        q.w = back.apply(w);
        for (const auto& [e, c] : fs.terms) {
            if (d1set.count(e)) {
                detail::quadric_insert(q, back.apply(e), back.apply(w), c);
                continue;
            }
            auto it = heights.find({w.y, e});
            if (it == heights.end())
                fail(errc::decomposition_failed,
                     "no alignment witness for a boundary term");
            LatticePoint target = e + w;
            bool found = false;
            for (const auto& u : d1) {
                if (u.y != it->second.first) continue;
                if (d1set.count(target - u)) {
                    detail::quadric_insert(q, back.apply(u), back.apply(target - u), c);
                    found = true;
                    break;
                }
            }
            if (!found)
                fail(errc::decomposition_failed,
                     "alignment certificate does not cover a boundary term");
        }
        out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end(),
              [](const CanonicalQuadric<K>& a, const CanonicalQuadric<K>& b) {
                  return a.w < b.w;
              });
    return out;
}

// ---------------------------------------------------------------------------
// The genus-5 discriminant

inline LatticePolygon genus5_reference_quadrangle() {
    return LatticePolygon::hull({LatticePoint(2, 0), LatticePoint(0, 2),
                                 LatticePoint(-2, 0), LatticePoint(0, -2)});
}

inline LatticePolygon genus5_pentagon() {
    return LatticePolygon::hull({LatticePoint(0, 0), LatticePoint(3, 0),
                                 LatticePoint(3, 2), LatticePoint(2, 3),
                                 LatticePoint(0, 3)});
}

// Discriminant of the net of quadrics through the genus-5 canonical curve:
// delta(l1, l2) = det(l1 M1 + l2 M2 + MQ), where M1, M2 are the two toric
// binomial quadrics of the interior quadrangle and MQ is the canonical
// quadric of f, with off-diagonal coefficients halved. Exponents of the
// result are the (l1, l2) degrees.
struct Genus5Discriminant {
    LaurentPoly<Rat> delta;
    LaurentPoly<Rat> sixteenDelta;
    LatticePolygon support;            // Newton polygon of delta in the (l1, l2) plane
    AffineMap transport;               // applied to f's exponents before the construction
    NondegeneracyVerdict containerCheck;  // weak non-degeneracy against the pentagon
};

namespace detail {

inline LaurentPoly<Rat> det_laplace(const std::vector<std::vector<LaurentPoly<Rat>>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    LaurentPoly<Rat> acc;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[0][k].empty()) continue;
        std::vector<std::vector<LaurentPoly<Rat>>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<LaurentPoly<Rat>> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        LaurentPoly<Rat> term = m[0][k] * det_laplace(minor);
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace detail

inline Genus5Discriminant genus5_discriminant(const LaurentPoly<Rat>& f) {
    LatticePolygon ref = genus5_reference_quadrangle();
    LatticePolygon delta = newton_polygon(f);
    AffineMap transport;
    if (!(delta.vertices() == ref.vertices())) {
        auto witness = equivalent(delta, ref);
        if (!witness)
            fail(errc::bad_argument,
                 "Newton polygon is not equivalent to the reference quadrangle");
        transport = *witness;
    }
    LaurentPoly<Rat> g;
    for (const auto& [e, c] : f.terms) g.terms.emplace(transport.apply(e), c);

    const LatticePoint vars[5] = {LatticePoint(-1, 0), LatticePoint(0, 0),
                                  LatticePoint(1, 0), LatticePoint(0, 1),
                                  LatticePoint(0, -1)};
    auto var_index = [&](const LatticePoint& u) {
        for (int i = 0; i < 5; ++i)
            if (vars[i] == u) return i;
        fail(errc::decomposition_failed, "quadric variable outside the interior quadrangle");
    };

    auto qs = canonical_quadrics(g);
    if (qs.size() != 1)
        fail(errc::bad_argument, "the reference quadrangle carries exactly one canonical quadric");

    Rat mq[5][5] = {};
    for (const auto& [pair, c] : qs[0].coeffs) {
        int i = var_index(pair.first);
        int j = var_index(pair.second);
        if (i == j) {
            mq[i][i] += c;
        } else {
            mq[i][j] += c / 2;
            mq[j][i] += c / 2;
        }
    }
    Rat m1[5][5] = {}, m2[5][5] = {};
    m1[1][1] = 1;
    m1[0][2] = m1[2][0] = Rat(-1, 2);
    m2[1][1] = 1;
    m2[3][4] = m2[4][3] = Rat(-1, 2);

    std::vector<std::vector<LaurentPoly<Rat>>> m(5, std::vector<LaurentPoly<Rat>>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (m1[i][j] != 0) m[i][j].add_term(LatticePoint(1, 0), m1[i][j]);
            if (m2[i][j] != 0) m[i][j].add_term(LatticePoint(0, 1), m2[i][j]);
            if (mq[i][j] != 0) m[i][j].add_term(LatticePoint(0, 0), mq[i][j]);
        }

    LaurentPoly<Rat> det = detail::det_laplace(m);
    if (det.empty()) fail(errc::bad_argument, "the discriminant vanishes identically");
    LaurentPoly<Rat> sixteen = scaled(det, Rat(16));
    LatticePolygon support = newton_polygon(det);
    NondegeneracyVerdict check = is_weakly_nondegenerate(sixteen, genus5_pentagon());
    return Genus5Discriminant{std::move(det), std::move(sixteen), std::move(support), transport,
                              std::move(check)};
}

}  // namespace npinv
