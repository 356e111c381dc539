#pragma once

// Combinatorial curve invariants read off a lattice polygon: gonality,
// Clifford index and dimension, combinatorial gonality pencils, scrollar
// invariants and the h0 sequence, Schreyer's tetragonal pair, the epsilon
// correction terms, well-alignedness, secondary scrollar invariants, special
// shape recognition, the C_{a,b} family, and predicted graded Betti tables.
//
// Everything is driven by the interior hull: gonality is lw(interior) + 2
// with a single exceptional shape, scrollar data are row counts of the
// interior hull in strip position, and the Schreyer / secondary invariants
// are boundary and second-interior point counts.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "npinv/adjunction.hpp"
#include "npinv/errors.hpp"
#include "npinv/lattice.hpp"
#include "npinv/normal_form.hpp"
#include "npinv/width.hpp"

namespace npinv {

// ---------------------------------------------------------------------------
// Special shapes

enum class ShapeTag {
    Empty,
    Point,
    Segment,
    StandardSimplexMultiple,
    Upsilon,
    TwoUpsilon,
    GammaFive,
    Rectangle,
    Generic,
};

// Tagged shape with parameters: Segment carries its lattice length,
// StandardSimplexMultiple the multiple d, GammaFive the index 1..3, and
// Rectangle the side lengths normalized a >= b >= 1.
struct SpecialShape {
    ShapeTag tag = ShapeTag::Generic;
    Int a = 0;
    Int b = 0;
};

inline bool operator==(const SpecialShape& s, const SpecialShape& t) {
    return s.tag == t.tag && s.a == t.a && s.b == t.b;
}

inline LatticePolygon standard_simplex(const Int& d) {
    return LatticePolygon::hull(
        {LatticePoint(0, 0), LatticePoint(d, 0), LatticePoint(0, d)});
}

inline LatticePolygon upsilon() {
    return LatticePolygon::hull(
        {LatticePoint(-1, -1), LatticePoint(1, 0), LatticePoint(0, 1)});
}

inline LatticePolygon two_upsilon() {
    return LatticePolygon::hull(
        {LatticePoint(-2, -2), LatticePoint(2, 0), LatticePoint(0, 2)});
}

// The three exceptional genus-one interior pentagon/quadrilateral/triangle
// shapes that show up in the genus-5 classification.
inline LatticePolygon gamma_five(int which) {
    switch (which) {
        case 1:
            return LatticePolygon::hull({LatticePoint(0, 1), LatticePoint(1, 0),
                                         LatticePoint(2, 1), LatticePoint(1, 2)});
        case 2:
            return LatticePolygon::hull({LatticePoint(0, 1), LatticePoint(1, 0),
                                         LatticePoint(2, 0), LatticePoint(1, 2)});
        case 3:
            return LatticePolygon::hull({LatticePoint(0, 0), LatticePoint(2, 0),
                                         LatticePoint(1, 2)});
        default:
            fail(errc::bad_argument, "gamma_five index must be 1, 2 or 3");
    }
}

inline LatticePolygon rectangle(const Int& a, const Int& b) {
    return LatticePolygon::hull({LatticePoint(0, 0), LatticePoint(a, 0),
                                 LatticePoint(a, b), LatticePoint(0, b)});
}

inline SpecialShape classify_special(const std::optional<LatticePolygon>& g) {
    if (!g) return {ShapeTag::Empty};
    const LatticePolygon& p = *g;
    if (p.dim() == 0) return {ShapeTag::Point};
    if (p.dim() == 1) {
        LatticePoint d = p.vertices()[1] - p.vertices()[0];
        return {ShapeTag::Segment, gcd_int(d.x, d.y)};
    }
    if (equivalent(p, upsilon())) return {ShapeTag::Upsilon};
    if (equivalent(p, two_upsilon())) return {ShapeTag::TwoUpsilon};
    for (int k = 1; k <= 3; ++k)
        if (equivalent(p, gamma_five(k))) return {ShapeTag::GammaFive, k};
    Int a2 = p.area2();
    Int d = boost::multiprecision::sqrt(a2);
    if (d >= 1 && d * d == a2 && equivalent(p, standard_simplex(d)))
        return {ShapeTag::StandardSimplexMultiple, d};
    if (p.vertex_count() == 4 && a2 % 2 == 0) {
        Int prod = a2 / 2;
        for (Int b = 1; b * b <= prod; ++b) {
            if (prod % b != 0) continue;
            Int a = prod / b;
            if (equivalent(p, rectangle(a, b))) return {ShapeTag::Rectangle, a, b};
        }
    }
    return {ShapeTag::Generic};
}

inline std::string to_string(const SpecialShape& s) {
    switch (s.tag) {
        case ShapeTag::Empty: return "Empty";
        case ShapeTag::Point: return "Point";
        case ShapeTag::Segment: return "Segment(" + s.a.str() + ")";
        case ShapeTag::StandardSimplexMultiple:
            return "StandardSimplexMultiple(" + s.a.str() + ")";
        case ShapeTag::Upsilon: return "Upsilon";
        case ShapeTag::TwoUpsilon: return "TwoUpsilon";
        case ShapeTag::GammaFive: return "GammaFive(" + s.a.str() + ")";
        case ShapeTag::Rectangle:
            return "Rectangle(" + s.a.str() + "," + s.b.str() + ")";
        case ShapeTag::Generic: return "Generic";
    }
    return "Generic";
}

// ---------------------------------------------------------------------------
// Row data in strip position

namespace detail {

inline Int rat_floor(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    Int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

}  // namespace detail

// Rational x-extent of the polygon's slice at integer height j, if the slice
// is non-empty.
inline std::optional<std::pair<Rat, Rat>> row_range(const LatticePolygon& p, const Int& j) {
    bool have = false;
    Rat lo, hi;
    auto consider = [&](Rat x) {
        if (!have) {
            lo = hi = x;
            have = true;
        } else {
            if (x < lo) lo = x;
            if (x > hi) hi = x;
        }
    };
    if (p.dim() == 0) {
        if (p.vertices()[0].y == j) consider(Rat(p.vertices()[0].x));
    } else {
        for (const auto& [a, b] : p.edges()) {
            if (a.y == b.y) {
                if (a.y == j) {
                    consider(Rat(a.x));
                    consider(Rat(b.x));
                }
                continue;
            }
            Int ylo = a.y < b.y ? a.y : b.y;
            Int yhi = a.y < b.y ? b.y : a.y;
            if (j < ylo || j > yhi) continue;
            consider(Rat(a.x) + make_rat(Int((j - a.y) * (b.x - a.x)), Int(b.y - a.y)));
        }
    }
    if (!have) return std::nullopt;
    return std::make_pair(std::move(lo), std::move(hi));
}

// Smallest and largest lattice x at height j; absent when the slice contains
// no lattice point.
inline std::optional<std::pair<Int, Int>> row_lattice_range(const LatticePolygon& p, const Int& j) {
    auto rng = row_range(p, j);
    if (!rng) return std::nullopt;
    Int x0 = detail::rat_ceil(rng->first);
    Int x1 = detail::rat_floor(rng->second);
    if (x0 > x1) return std::nullopt;
    return std::make_pair(std::move(x0), std::move(x1));
}

// Row data of the interior hull inside the strip normalization of p along a
// width direction v: for heights l = 1..gamma-1 (gamma = lw(p)), E holds the
// lattice-point count of the interior hull's row minus one, and iMinus /
// iPlus the integer row extremes i-(l), i+(l). A row without lattice points
// is recorded as E = -1 with iMinus > iPlus; a row the interior hull misses
// entirely gets the sentinel (0, -1). Both only occur outside the
// preconditions of the operations built on top of this profile.
struct RowProfile {
    Int gamma;
    std::vector<Int> E;
    std::vector<Int> iMinus;
    std::vector<Int> iPlus;

    std::size_t index(long l) const {
        if (l < 1 || Int(l) > gamma - 1) fail(errc::bad_argument, "row height out of range");
        return static_cast<std::size_t>(l - 1);
    }
    const Int& e(long l) const { return E[index(l)]; }
    const Int& i_minus(long l) const { return iMinus[index(l)]; }
    const Int& i_plus(long l) const { return iPlus[index(l)]; }
};

inline RowProfile row_profile(const LatticePolygon& p, const LatticePoint& v) {
    if (p.dim() != 2) fail(errc::not_two_dimensional, "row profile needs a two-dimensional polygon");
    Int w = width_along(p, v);
    if (w != lattice_width(p).width)
        fail(errc::not_width_direction, "direction does not achieve the lattice width");
    AffineMap strip = normalize_to_strip(p, v);
    std::optional<LatticePolygon> ihs;
    if (auto ih = interior_hull(p)) ihs = ih->transformed(strip);
    RowProfile r;
    r.gamma = w;
    for (Int l = 1; l <= w - 1; ++l) {
        if (!ihs) {
            r.E.push_back(Int(-1));
            r.iMinus.push_back(Int(0));
            r.iPlus.push_back(Int(-1));
            continue;
        }
        if (auto rng = row_range(*ihs, l)) {
            Int x0 = detail::rat_ceil(rng->first);
            Int x1 = detail::rat_floor(rng->second);
            r.E.push_back(x1 - x0);
            r.iMinus.push_back(std::move(x0));
            r.iPlus.push_back(std::move(x1));
        } else {
            r.E.push_back(Int(-1));
            r.iMinus.push_back(Int(0));
            r.iPlus.push_back(Int(-1));
        }
    }
    return r;
}

// The 0/1/2 correction term from the two row-extreme comparisons.
inline int epsilon(const RowProfile& r, long j1, long j2) {
    long gamma = r.gamma.convert_to<long>();
    if (!(2 <= j1 && j1 <= j2 && j2 <= gamma - 2))
        fail(errc::bad_argument, "epsilon indices must satisfy 2 <= j1 <= j2 <= gamma-2");
    bool condMinus =
        r.i_minus(j1) + r.i_minus(j2) <= r.i_minus(j1 - 1) + r.i_minus(j2 + 1);
    bool condPlus =
        r.i_plus(j1) + r.i_plus(j2) >= r.i_plus(j1 - 1) + r.i_plus(j2 + 1);
    if (condMinus && condPlus) return 0;
    if (!condMinus && !condPlus) return 2;
    return 1;
}

// ---------------------------------------------------------------------------
// Gonality, Clifford data, pencils

inline Int gonality(const LatticePolygon& p) {
    if (p.dim() != 2) fail(errc::not_two_dimensional, "gonality needs a two-dimensional polygon");
    auto ih = interior_hull(p);
    if (!ih) return Int(1);
    if (ih->dim() == 2 && equivalent(*ih, upsilon())) return Int(3);
    return lattice_width(*ih).width + 2;
}

struct CliffordData {
    Int index;
    Int dimension;
};

inline CliffordData clifford(const LatticePolygon& p) {
    if (p.dim() != 2 || genus(p) < 1)
        fail(errc::undefined_invariant, "Clifford data needs genus at least one");
    auto ih = interior_hull(p);
    SpecialShape s = classify_special(ih);
    switch (s.tag) {
        case ShapeTag::Point:
        case ShapeTag::Segment:
            return {Int(0), Int(1)};
        case ShapeTag::Upsilon:
            return {Int(1), Int(1)};
        case ShapeTag::TwoUpsilon:
            return {Int(3), Int(3)};
        case ShapeTag::StandardSimplexMultiple:
            if (s.a >= 2) return {s.a - 1, Int(2)};
            break;
        default:
            break;
    }
    return {lattice_width(*ih).width, Int(1)};
}

// Directions of the combinatorial gonality pencils, one per +-pair; absent
// for the two families that have none.
inline std::optional<std::vector<LatticePoint>> pencils(const LatticePolygon& p) {
    if (p.dim() != 2) fail(errc::not_two_dimensional, "pencils need a two-dimensional polygon");
    SpecialShape own = classify_special(std::optional<LatticePolygon>(p));
    if (own.tag == ShapeTag::TwoUpsilon) return std::nullopt;
    if (own.tag == ShapeTag::StandardSimplexMultiple && own.a >= 2) return std::nullopt;
    auto ih = interior_hull(p);
    if (ih && ih->dim() >= 1) return lattice_width(*ih).directions;
    return lattice_width(p).directions;
}

// ---------------------------------------------------------------------------
// Scrollar invariants and the h0 sequence

inline std::vector<Int> scrollar_invariants(const LatticePolygon& p, const LatticePoint& v) {
    if (p.dim() != 2)
        fail(errc::not_two_dimensional, "scrollar invariants need a two-dimensional polygon");
    SpecialShape own = classify_special(std::optional<LatticePolygon>(p));
    if (own.tag == ShapeTag::TwoUpsilon ||
        (own.tag == ShapeTag::StandardSimplexMultiple && own.a >= 2))
        fail(errc::excluded_case, "no combinatorial pencil to take scrollar invariants of");
    RowProfile r = row_profile(p, v);
    std::vector<Int> e = r.E;
    std::sort(e.begin(), e.end());
    return e;
}

// Dimension of the space of sections of m times the gonality pencil,
// determined by the genus and the scrollar multiset.
inline Int h0_sequence(const Int& g, const std::vector<Int>& scrollar, const Int& m) {
    if (m < 0) fail(errc::bad_argument, "multiple m must be non-negative");
    Int gamma = Int(scrollar.size()) + 1;
    Int sum = 0;
    for (const Int& e : scrollar) sum += e;
    if (sum != g - gamma + 1)
        fail(errc::bad_argument, "scrollar multiset must sum to g - gamma + 1");
    Int h = m + 1;
    for (const Int& e : scrollar) {
        Int t = m - e - 1;
        if (t > 0) h += t;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Schreyer's tetragonal invariants

struct SchreyerInvariants {
    Int b1;  // boundary count of the interior hull, minus 4
    Int b2;  // lattice-point count of the second interior hull, minus 1
    std::array<Int, 2> sorted;
    bool anomalous;  // the literal pair comes out with b1 < b2
};

inline SchreyerInvariants schreyer_invariants(const LatticePolygon& p) {
    if (p.dim() != 2)
        fail(errc::not_tetragonal, "Schreyer invariants need a two-dimensional polygon");
    auto ih = interior_hull(p);
    bool tetragonal = ih && ih->dim() == 2 && lattice_width(*ih).width == 2 &&
                      !equivalent(*ih, upsilon());
    if (!tetragonal) fail(errc::not_tetragonal, "Schreyer invariants need gonality four");
    Int b1 = ih->boundary_count() - 4;
    auto ih2 = interior_hull(*ih);
    Int b2 = (ih2 ? ih2->lattice_point_count() : Int(0)) - 1;
    SchreyerInvariants out;
    out.anomalous = b1 < b2;
    out.sorted = {b1 < b2 ? b1 : b2, b1 < b2 ? b2 : b1};
    out.b1 = std::move(b1);
    out.b2 = std::move(b2);
    return out;
}

// ---------------------------------------------------------------------------
// Well-alignedness

struct AlignmentWitness {
    Int row;                // strip height of the second-interior row L
    LatticePoint boundary;  // boundary point of p, in strip coordinates
    Int h1;                 // chosen interior-hull heights; h2 = boundary.y + row - h1
    Int h2;
};

struct WellAlignment {
    bool aligned = false;
    std::vector<AlignmentWitness> certificate;  // one witness per (row, boundary point)
    std::optional<std::pair<Int, LatticePoint>> failure;  // first (row, point) with no heights
    AffineMap strip;  // normalization map; witness coordinates live in its image
};

// Decides whether every boundary point of p decomposes uniformly (with a
// single height pair) against every lattice row of the second interior hull,
// after sending v to the vertical axis.
inline WellAlignment is_well_aligned(const LatticePolygon& p, const LatticePoint& v) {
    if (p.dim() != 2)
        fail(errc::not_two_dimensional, "well-alignedness needs a two-dimensional polygon");
    auto ih = interior_hull(p);
    std::optional<LatticePolygon> ih2;
    if (ih) ih2 = interior_hull(*ih);
    if (!ih2) fail(errc::no_second_interior, "second interior hull is empty");

    WellAlignment res;
    res.strip = normalize_to_strip(p, v);
    LatticePolygon P = p.transformed(res.strip);
    LatticePolygon D1 = ih->transformed(res.strip);
    LatticePolygon D2 = ih2->transformed(res.strip);

    auto d1pts = D1.lattice_points();
    std::set<LatticePoint> d1set(d1pts.begin(), d1pts.end());
    std::map<Int, std::vector<Int>> d1rows;
    for (const auto& q : d1pts) d1rows[q.y].push_back(q.x);
    std::map<Int, std::vector<Int>> d2rows;
    for (const auto& q : D2.lattice_points()) d2rows[q.y].push_back(q.x);

    std::vector<LatticePoint> boundary;
    for (const auto& q : P.lattice_points())
        if (!P.strictly_contains(q)) boundary.push_back(q);

    res.aligned = true;
    for (const auto& [t, ws] : d2rows) {
        for (const auto& b : boundary) {
            bool ok = false;
            for (const auto& [h1, xs1] : d1rows) {
                Int h2 = b.y + t - h1;
                if (h2 < h1) continue;  // unordered height pair
                if (!d1rows.count(h2)) continue;
                bool all = true;
                for (const Int& wx : ws) {
                    bool found = false;
                    for (const Int& ux : xs1) {
                        if (d1set.count(LatticePoint(b.x + wx - ux, h2))) {
                            found = true;
                            break;
                        }
                    }
                    if (!found) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    res.certificate.push_back({t, b, h1, std::move(h2)});
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                res.aligned = false;
                res.failure = std::make_pair(t, b);
                res.certificate.clear();
                return res;
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Secondary scrollar invariants

struct SecondaryInvariants {
    std::map<std::pair<long, long>, Int> pairTerms;  // (j1,j2) -> E_{j1-1} + E_{j2+1} - eps
    std::map<long, Int> rowTerms;                    // l -> second-interior row count minus one
    std::vector<Int> multiset;                       // sorted union of all values
    bool zeroRowWarning = false;  // some scrollar invariant vanishes; the sum
                                  // identities are not guaranteed in that case
};

inline SecondaryInvariants secondary_scrollar_invariants(const LatticePolygon& p,
                                                         const LatticePoint& v) {
    if (p.dim() != 2)
        fail(errc::not_two_dimensional, "secondary invariants need a two-dimensional polygon");
    if (lattice_width(p).width < 4)
        fail(errc::too_narrow, "secondary invariants need lattice width at least 4");
    RowProfile r = row_profile(p, v);
    WellAlignment wa = is_well_aligned(p, v);
    if (!wa.aligned)
        fail(errc::not_well_aligned, "polygon is not well-aligned with respect to the direction");

    long gamma = r.gamma.convert_to<long>();
    SecondaryInvariants out;
    for (const Int& e : r.E)
        if (e == 0) out.zeroRowWarning = true;

    for (long j1 = 2; j1 <= gamma - 2; ++j1)
        for (long j2 = j1; j2 <= gamma - 2; ++j2)
            out.pairTerms[{j1, j2}] = r.e(j1 - 1) + r.e(j2 + 1) - epsilon(r, j1, j2);

    auto ih2 = interior_hull(*interior_hull(p));
    LatticePolygon D2 = ih2->transformed(wa.strip);
    std::map<Int, Int> counts;
    for (const auto& q : D2.lattice_points()) ++counts[q.y];
    for (long l = 2; l <= gamma - 2; ++l) {
        auto it = counts.find(Int(l));
        out.rowTerms[l] = (it == counts.end() ? Int(0) : it->second) - 1;
    }

    for (const auto& [k, val] : out.pairTerms) out.multiset.push_back(val);
    for (const auto& [k, val] : out.rowTerms) out.multiset.push_back(val);
    std::sort(out.multiset.begin(), out.multiset.end());
    return out;
}

// ---------------------------------------------------------------------------
// The C_{a,b} family

struct CabResult {
    LatticePolygon polygon;
    Int genus;
    Int gonality;
};

inline CabResult cab_polygon(const Int& a, const Int& b) {
    if (a < 2 || b < 2) fail(errc::bad_argument, "parameters must be at least 2");
    if (gcd_int(a, b) != 1) fail(errc::not_coprime, "parameters must be coprime");
    LatticePolygon t = LatticePolygon::hull(
        {LatticePoint(b, 0), LatticePoint(0, a), LatticePoint(0, 0)});
    return {std::move(t), (a - 1) * (b - 1) / 2, a < b ? a : b};
}

// ---------------------------------------------------------------------------
// Predicted Betti tables

// Rows 1 and 2 of the four-row graded Betti table of a canonically embedded
// curve: linear[i] = beta_{i,i+1} and quadratic[i] = beta_{i,i+2} for columns
// i = 0..g-2. The corner entries beta_{0,0} = beta_{g-2,g+1} = 1 are implicit.
struct BettiTable {
    Int genus;
    std::vector<Int> linear;
    std::vector<Int> quadratic;
    std::string status;  // "known", "observed" or "conjectural"
};

namespace detail {

inline Int binom(const Int& n, long k) {
    if (k < 0 || Int(k) > n) return Int(0);
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - Int(i - 1);
        r /= Int(i);
    }
    return r;
}

// Fill both strands from the leading quadratic entries zeta_0..zeta_m
// (m = floor((g-3)/2)) using the linear-strand recurrence and the mirror
// symmetry beta_{i,j} = beta_{g-2-i,g+1-j}.
template <class ZetaFn>
BettiTable assemble_betti(const Int& g, const std::string& status, ZetaFn&& zeta) {
    long gl = g.convert_to<long>();
    long cols = gl - 1;  // columns 0..g-2
    long m = (gl - 3) / 2;
    BettiTable t;
    t.genus = g;
    t.status = status;
    t.linear.assign(cols, Int(0));
    t.quadratic.assign(cols, Int(0));
    for (long i = 0; i <= m; ++i) t.quadratic[i] = zeta(i);
    for (long i = 1; i <= m + 1 && i <= gl - 2; ++i) {
        Int step = (g - 1 - i) * (g - 1 - 2 * i) * binom(g - 1, i - 1);
        if (step % (i + 1) != 0)
            fail(errc::bad_argument, "linear-strand recurrence step is not integral");
        t.linear[i] = (i - 1 <= m ? t.quadratic[i - 1] : Int(0)) + step / (i + 1);
    }
    for (long i = m + 1; i <= gl - 2; ++i) t.quadratic[i] = t.linear[gl - 2 - i];
    for (long i = m + 2; i <= gl - 2; ++i) t.linear[i] = t.quadratic[gl - 2 - i];
    return t;
}

}  // namespace detail

// Closed-form Betti table prediction for gonality at most 4; absent for
// gonality 5 and above. The hyperelliptic form is classical, the trigonal one
// matches experiments, and the tetragonal one is conjectural; the status
// string records which.
inline std::optional<BettiTable> predicted_betti(const LatticePolygon& p) {
    if (p.dim() != 2)
        fail(errc::undefined_invariant, "Betti prediction needs a two-dimensional polygon");
    Int g = genus(p);
    if (g < 3) fail(errc::undefined_invariant, "Betti prediction needs genus at least 3");
    Int gam = gonality(p);
    if (gam >= 5) return std::nullopt;
    if (gam == 2)
        return detail::assemble_betti(g, "known", [&](long i) {
            return (g - 2 - i) * detail::binom(g - 1, i);
        });
    if (gam == 3)
        return detail::assemble_betti(g, "observed", [&](long i) {
            return (g - 2 - i) * detail::binom(g - 2, i - 1);
        });
    auto ih = interior_hull(p);
    auto ih2 = interior_hull(*ih);
    Int n2 = ih2 ? ih2->lattice_point_count() : Int(0);  // = b2 + 1
    return detail::assemble_betti(g, "conjectural", [&](long i) {
        Int cap = n2 < i ? n2 : Int(i);
        return (g - 2 - i) * detail::binom(g - 2, i - 1) - cap * detail::binom(g - 3, i);
    });
}

// ---------------------------------------------------------------------------
// Smooth plane / quadric surface recognition

// Degree d of a smooth plane model, when the interior hull is a multiple of
// the standard simplex ((d-3) Sigma, with the conventions d = 2 for empty
// interior and d = 3 for a point); absent otherwise.
inline std::optional<Int> is_smooth_plane(const LatticePolygon& p) {
    if (p.dim() != 2)
        fail(errc::not_two_dimensional, "smooth-plane recognition needs a two-dimensional polygon");
    SpecialShape s = classify_special(interior_hull(p));
    switch (s.tag) {
        case ShapeTag::Empty: return Int(2);
        case ShapeTag::Point: return Int(3);
        case ShapeTag::StandardSimplexMultiple: return s.a + 3;
        default: return std::nullopt;
    }
}

// Bidegree offsets (a, b) when the interior hull is a rectangle [0,a] x [0,b]
// (a point or a horizontal segment counts with b = 0); absent otherwise. The
// one excluded shape raises ExcludedCase.
inline std::optional<std::pair<Int, Int>> is_p1xp1(const LatticePolygon& p) {
    if (p.dim() != 2)
        fail(errc::not_two_dimensional, "quadric-surface recognition needs a two-dimensional polygon");
    if (equivalent(p, two_upsilon()))
        fail(errc::excluded_case, "the TwoUpsilon class is excluded");
    SpecialShape s = classify_special(interior_hull(p));
    switch (s.tag) {
        case ShapeTag::Point: return std::make_pair(Int(0), Int(0));
        case ShapeTag::Segment: return std::make_pair(s.a, Int(0));
        case ShapeTag::Rectangle: return std::make_pair(s.a, s.b);
        default: return std::nullopt;
    }
}

}  // namespace npinv
