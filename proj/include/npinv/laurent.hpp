#pragma once

// Laurent polynomials in two variables over the rationals or a prime field,
// their Newton polygons, and certified (non-)degeneracy checks face by face:
// vertex faces are immediate, edge faces reduce to an exact univariate
// multiple-root test, and the two-dimensional face goes through resultants
// of the polynomial against its two scaled derivatives. Over a prime field
// an inconclusive full-face test is followed by a brute-force search for an
// explicit torus witness in F_p or F_{p^2} when the field is small enough;
// over the rationals the full-face test is accelerated by reduction modulo a
// random large prime, falling back to exact arithmetic when inconclusive.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "npinv/errors.hpp"
#include "npinv/lattice.hpp"
#include "npinv/polynomial.hpp"

namespace npinv {

inline constexpr std::uint64_t kDefaultModulus = 10007;

// ---------------------------------------------------------------------------
// Laurent polynomials

template <class K>
struct LaurentPoly {
    std::map<LatticePoint, K> terms;  // exponent -> coefficient, no zeros stored

    void add_term(const LatticePoint& e, const K& c) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!is_zero(c)) terms.emplace(e, c);
            return;
        }
        it->second = it->second + c;
        if (is_zero(it->second)) terms.erase(it);
    }
    bool empty() const { return terms.empty(); }
};

template <class K>
bool operator==(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    return a.terms == b.terms;
}
template <class K>
bool operator!=(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    return !(a == b);
}

template <class K>
LaurentPoly<K> operator+(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    LaurentPoly<K> r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

template <class K>
LaurentPoly<K> operator-(const LaurentPoly<K>& a) {
    LaurentPoly<K> r;
    for (const auto& [e, c] : a.terms) r.terms.emplace(e, -c);
    return r;
}

template <class K>
LaurentPoly<K> operator-(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    return a + (-b);
}

template <class K>
LaurentPoly<K> operator*(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    LaurentPoly<K> r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) r.add_term(ea + eb, ca * cb);
    return r;
}

template <class K>
LaurentPoly<K> scaled(const LaurentPoly<K>& a, const K& s) {
    LaurentPoly<K> r;
    for (const auto& [e, c] : a.terms) {
        K v = c * s;
        if (!is_zero(v)) r.terms.emplace(e, v);
    }
    return r;
}

template <class K>
LatticePolygon newton_polygon(const LaurentPoly<K>& f) {
    std::vector<LatticePoint> pts;
    pts.reserve(f.terms.size());
    for (const auto& [e, c] : f.terms) pts.push_back(e);
    return LatticePolygon::hull(pts);
}

// Coefficient-wise x * df/dx (axis = x) or y * df/dy (axis = y): same
// support, each coefficient scaled by its exponent.
template <class K>
LaurentPoly<K> scaled_derivative(const LaurentPoly<K>& f, bool xAxis) {
    LaurentPoly<K> r;
    for (const auto& [e, c] : f.terms) {
        K v = c * from_int_like(c, xAxis ? e.x : e.y);
        if (!is_zero(v)) r.terms.emplace(e, v);
    }
    return r;
}

template <class K>
K k_pow(const K& base, const Int& e) {
    K b = base;
    Int n = e;
    if (n < 0) {
        b = inverse(b);
        n = -n;
    }
    K r = one_like(base);
    long exp = n.convert_to<long>();
    while (exp) {
        if (exp & 1) r = r * b;
        b = b * b;
        exp >>= 1;
    }
    return r;
}

// Evaluation at a torus point (x and y must be invertible when negative
// exponents occur).
template <class K>
K evaluate(const LaurentPoly<K>& f, const K& x, const K& y) {
    K r{};
    for (const auto& [e, c] : f.terms) r = r + c * k_pow(x, e.x) * k_pow(y, e.y);
    return r;
}

// ---------------------------------------------------------------------------
// Faces

struct Face {
    enum class Kind { Vertex, Edge, Full };
    Kind kind = Kind::Full;
    std::size_t index = 0;  // vertex or edge index; unused for Full
};

inline std::vector<Face> faces_of(const LatticePolygon& p) {
    std::vector<Face> fs;
    std::size_t n = p.vertex_count();
    if (p.dim() >= 1)
        for (std::size_t i = 0; i < n; ++i) fs.push_back({Face::Kind::Vertex, i});
    if (p.dim() == 2)
        for (std::size_t i = 0; i < n; ++i) fs.push_back({Face::Kind::Edge, i});
    fs.push_back({Face::Kind::Full, 0});
    return fs;
}

namespace detail {

inline bool on_segment(const LatticePoint& a, const LatticePoint& b, const LatticePoint& q) {
    if (cross(b - a, q - a) != 0) return false;
    Int t = dot(q - a, b - a);
    return t >= 0 && t <= dot(b - a, b - a);
}

}  // namespace detail

// Endpoints of a face: the vertex itself, the edge's endpoints, or (for the
// full face of a segment) the segment's endpoints.
inline std::pair<LatticePoint, LatticePoint> face_span(const LatticePolygon& p, const Face& f) {
    const auto& vs = p.vertices();
    switch (f.kind) {
        case Face::Kind::Vertex:
            return {vs.at(f.index), vs.at(f.index)};
        case Face::Kind::Edge:
            return {vs.at(f.index), vs.at((f.index + 1) % vs.size())};
        case Face::Kind::Full:
            return {vs.front(), vs.size() > 1 ? vs[1] : vs.front()};
    }
    fail(errc::bad_argument, "unknown face kind");
}

inline std::string face_label(const LatticePolygon& p, const Face& f) {
    auto pt = [](const LatticePoint& q) {
        return "(" + q.x.str() + "," + q.y.str() + ")";
    };
    auto [a, b] = face_span(p, f);
    switch (f.kind) {
        case Face::Kind::Vertex: return "vertex " + pt(a);
        case Face::Kind::Edge: return "edge " + pt(a) + "-" + pt(b);
        case Face::Kind::Full: return "interior";
    }
    return "";
}

// Terms of f supported on the given face of delta.
template <class K>
LaurentPoly<K> face_restriction(const LaurentPoly<K>& f, const LatticePolygon& delta,
                                const Face& face) {
    LaurentPoly<K> r;
    if (face.kind == Face::Kind::Full) {
        for (const auto& [e, c] : f.terms)
            if (delta.contains(e)) r.terms.emplace(e, c);
        return r;
    }
    auto [a, b] = face_span(delta, face);
    for (const auto& [e, c] : f.terms) {
        bool in = face.kind == Face::Kind::Vertex ? e == a : detail::on_segment(a, b, e);
        if (in) r.terms.emplace(e, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Verdicts

enum class FaceStatus { Certified, DegenerateWitnessed, Undetermined };

struct FaceReport {
    Face face;
    std::string label;
    FaceStatus status = FaceStatus::Undetermined;
    std::string detail;
};

struct NondegeneracyVerdict {
    std::vector<FaceReport> faces;

    bool nondegenerate() const {
        for (const auto& f : faces)
            if (f.status != FaceStatus::Certified) return false;
        return true;
    }
    bool degenerate() const {
        for (const auto& f : faces)
            if (f.status == FaceStatus::DegenerateWitnessed) return true;
        return false;
    }
    std::string status() const {
        if (nondegenerate()) return "Certified";
        if (degenerate()) return "DegenerateWitnessed";
        return "Undetermined";
    }
};

// ---------------------------------------------------------------------------
// Internal machinery

namespace detail {

inline std::string coeff_string(const Fp& c) { return std::to_string(c.v); }
inline std::string coeff_string(const Rat& c) {
    Int num = boost::multiprecision::numerator(c);
    Int den = boost::multiprecision::denominator(c);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

template <class K>
std::string poly_string(const Poly<K>& q, const std::string& var) {
    if (q.is_zero_poly()) return "0";
    std::string s;
    for (long i = q.degree(); i >= 0; --i) {
        if (is_zero(q.c[i])) continue;
        if (!s.empty()) s += " + ";
        s += coeff_string(q.c[i]);
        if (i > 0) s += "*" + var + "^" + std::to_string(i);
    }
    return s;
}

// Collapse a one-dimensional support onto a single parameter: terms at
// a + t*d (d primitive) become coefficient of T^t.
template <class K>
Poly<K> segment_collapse(const LaurentPoly<K>& f, const LatticePoint& a, const LatticePoint& b) {
    Poly<K> q;
    if (f.empty()) return q;
    LatticePoint d = b == a ? LatticePoint(1, 0) : primitive(b - a);
    for (const auto& [e, c] : f.terms) {
        LatticePoint off = e - a;
        Int t = d.x != 0 ? off.x / d.x : off.y / d.y;
        long tl = t.convert_to<long>();
        if (q.c.size() < static_cast<std::size_t>(tl + 1)) q.c.resize(tl + 1);
        q.c[tl] = c;
    }
    q.normalize();
    return q;
}

// Removes the monomial content T^k, which is a torus unit.
template <class K>
void strip_low(Poly<K>& q) {
    std::size_t v = 0;
    while (v < q.c.size() && is_zero(q.c[v])) ++v;
    if (v) q.c.erase(q.c.begin(), q.c.begin() + v);
}

// Exact multiple-root test of a nonzero univariate polynomial on the torus
// (roots at T = 0 are discarded first). Never returns Undetermined.
template <class K>
std::pair<FaceStatus, std::string> multiple_root_status(Poly<K> q) {
    strip_low(q);
    std::size_t nonzero = 0;
    for (const auto& c : q.c)
        if (!is_zero(c)) ++nonzero;
    if (nonzero <= 1) return {FaceStatus::Certified, "monomial restriction"};
    Poly<K> d = derivative(q);
    if (d.is_zero_poly())
        return {FaceStatus::DegenerateWitnessed,
                "inseparable restriction: every root is a multiple root"};
    Poly<K> g = poly_gcd(q, d);
    if (g.degree() <= 0) return {FaceStatus::Certified, "squarefree restriction"};
    return {FaceStatus::DegenerateWitnessed,
            "repeated factor " + poly_string(g, "T")};
}

// --- fast univariate resultants over a prime field ---

inline Fp eval_poly(const Poly<Fp>& q, const Fp& x) {
    Fp r{0, x.p};
    for (long i = q.degree(); i >= 0; --i) r = r * x + q.c[i];
    return r;
}

// Resultant of two univariate polynomials over F_p by a remainder sequence.
inline Fp resultant_univariate(Poly<Fp> a, Poly<Fp> b, std::uint64_t p) {
    Fp res = Fp::make(Int(1), p);
    if (a.is_zero_poly() || b.is_zero_poly())
        return (a.degree() <= 0 && b.degree() <= 0) ? res : Fp{0, p};
    while (b.degree() > 0) {
        Poly<Fp> q, r;
        divmod(a, b, q, r);
        long da = a.degree(), db = b.degree();
        long dr = r.is_zero_poly() ? -1 : r.degree();
        if ((da & 1) && (db & 1)) res = -res;
        res = res * k_pow(b.lead(), Int(da - (dr < 0 ? 0 : dr)));
        if (r.is_zero_poly()) return Fp{0, p};
        a = std::move(b);
        b = std::move(r);
    }
    return res * k_pow(b.c[0], Int(a.degree()));
}

// Resultant in the outer variable of bivariate polynomials over F_p by
// evaluation at distinct points (avoiding the roots of both leading
// coefficients) and Newton interpolation. Requires p > the needed number of
// sample points; falls back to the fraction-free route otherwise.
inline Poly<Fp> resultant_outer_fp(const std::vector<Poly<Fp>>& a,
                                   const std::vector<Poly<Fp>>& b, std::uint64_t p) {
    auto degx = [](const std::vector<Poly<Fp>>& v) {
        long d = 0;
        for (const auto& q : v) d = std::max(d, q.degree());
        return d;
    };
    long m = static_cast<long>(a.size()) - 1;
    long n = static_cast<long>(b.size()) - 1;
    if (m <= 0 || n <= 0) return resultant_outer(a, b);
    long bound = n * degx(a) + m * degx(b);
    if (static_cast<unsigned long long>(bound) + 64 > p) return resultant_outer(a, b);

    const Poly<Fp>& la = a.back();
    const Poly<Fp>& lb = b.back();
    std::vector<Fp> xs, ys;
    Poly<Fp> newtonBasis = Poly<Fp>::constant(Fp::make(Int(1), p));
    Poly<Fp> interp;
    for (std::uint64_t x0 = 0; static_cast<long>(xs.size()) <= bound; ++x0) {
        if (x0 >= p) return resultant_outer(a, b);  // not enough good points
        Fp x{x0, p};
        if (eval_poly(la, x).is_zero() || eval_poly(lb, x).is_zero()) continue;
        Poly<Fp> ax, bx;
        for (const auto& q : a) ax.c.push_back(eval_poly(q, x));
        for (const auto& q : b) bx.c.push_back(eval_poly(q, x));
        ax.normalize();
        bx.normalize();
        Fp y = resultant_univariate(ax, bx, p);
        // incremental Newton step: interp += c * basis, basis *= (T - x)
        Fp basisAt = eval_poly(newtonBasis, x);
        Fp interpAt = eval_poly(interp, x);
        Fp c = (y - interpAt) * inverse(basisAt);
        interp = interp + scaled(newtonBasis, c);
        Poly<Fp> shift;
        shift.c = {-x, Fp::make(Int(1), p)};
        newtonBasis = newtonBasis * shift;
        xs.push_back(x);
    }
    return interp;
}

// --- full-face (torus smoothness) test ---

template <class K>
Poly<K> outer_resultant_dispatch(const std::vector<Poly<K>>& a,
                                 const std::vector<Poly<K>>& b) {
    return resultant_outer(a, b);
}
inline Poly<Fp> outer_resultant_dispatch(const std::vector<Poly<Fp>>& a,
                                         const std::vector<Poly<Fp>>& b) {
    std::uint64_t p = 0;
    for (const auto& q : a)
        for (const auto& c : q.c)
            if (c.p) p = c.p;
    return p ? resultant_outer_fp(a, b, p) : resultant_outer(a, b);
}

// Decides whether f, x df/dx and y df/dy have a common zero on the torus.
// Certified and DegenerateWitnessed are definitive; Undetermined reports what
// blocked the certificate.
template <class K>
std::pair<FaceStatus, std::string> full_system_status(const LaurentPoly<K>& f) {
    if (f.empty())
        return {FaceStatus::DegenerateWitnessed, "restriction vanishes identically"};
    LatticePolygon np = newton_polygon(f);
    if (np.dim() == 0) return {FaceStatus::Certified, "monomial restriction"};
    if (np.dim() == 1) {
        const auto& vs = np.vertices();
        return multiple_root_status(segment_collapse(f, vs[0], vs[1]));
    }

    LaurentPoly<K> fx = scaled_derivative(f, true);
    LaurentPoly<K> fy = scaled_derivative(f, false);
    if (fx.empty() && fy.empty())
        return {FaceStatus::DegenerateWitnessed,
                "both toric derivatives vanish identically"};

    auto [lo, hi] = np.bounding_box();
    long ny = (hi.y - lo.y).convert_to<long>();
    auto to_grid = [&](const LaurentPoly<K>& g) {
        std::vector<Poly<K>> rows(ny + 1);
        for (const auto& [e, c] : g.terms) {
            long yi = Int(e.y - lo.y).convert_to<long>();
            long xi = Int(e.x - lo.x).convert_to<long>();
            auto& row = rows[yi].c;
            if (row.size() < static_cast<std::size_t>(xi + 1)) row.resize(xi + 1);
            row[xi] = c;
        }
        for (auto& r : rows) r.normalize();
        return rows;
    };
    std::vector<Poly<K>> g1 = to_grid(f);

    std::optional<Poly<K>> h;
    for (const LaurentPoly<K>* partner : {&fx, &fy}) {
        if (partner->empty()) continue;
        Poly<K> r = outer_resultant_dispatch(g1, to_grid(*partner));
        strip_low(r);
        if (r.is_zero_poly())
            return {FaceStatus::Undetermined,
                    "a resultant against a toric derivative vanishes identically"};
        h = h ? poly_gcd(*h, r) : r;
        if (h->degree() <= 0) break;
    }
    if (h->degree() <= 0)
        return {FaceStatus::Certified, "coprime resultants against the toric derivatives"};
    return {FaceStatus::Undetermined,
            "resultants share the factor " + poly_string(*h, "x")};
}

// --- witness search over small prime fields ---

// Arithmetic in F_{p^2} = F_p[t]/(t^2 - alpha), p odd.
struct QuadExt {
    std::uint64_t p, alpha;
    using E = std::pair<std::uint64_t, std::uint64_t>;  // a + b t

    E mul(const E& x, const E& y) const {
        std::uint64_t a = mulmod(x.first, y.first, p);
        std::uint64_t b = mulmod(x.second, y.second, p);
        std::uint64_t cross1 = mulmod(x.first, y.second, p);
        std::uint64_t cross2 = mulmod(x.second, y.first, p);
        return {(a + mulmod(b, alpha, p)) % p, (cross1 + cross2) % p};
    }
    E add(const E& x, const E& y) const {
        return {(x.first + y.first) % p, (x.second + y.second) % p};
    }
    E scale(std::uint64_t c, const E& x) const {
        return {mulmod(c, x.first, p), mulmod(c, x.second, p)};
    }
    bool is_zero(const E& x) const { return x.first == 0 && x.second == 0; }
};

inline std::uint64_t find_non_residue(std::uint64_t p) {
    for (std::uint64_t a = 2; a < p; ++a)
        if (powmod(a, (p - 1) / 2, p) == p - 1) return a;
    fail(errc::bad_argument, "no quadratic non-residue found");
}

struct ShiftedSystem {
    // exponents shifted to be non-negative; shifting multiplies each
    // polynomial by a torus unit and does not change torus zeros
    std::array<std::vector<std::tuple<long, long, std::uint64_t>>, 3> polys;
    long xmax = 0, ymax = 0;
};

inline ShiftedSystem shift_system(const LaurentPoly<Fp>& f, const LaurentPoly<Fp>& fx,
                                  const LaurentPoly<Fp>& fy) {
    ShiftedSystem s;
    LatticePolygon np = newton_polygon(f);
    auto [lo, hi] = np.bounding_box();
    const LaurentPoly<Fp>* gs[3] = {&f, &fx, &fy};
    for (int k = 0; k < 3; ++k)
        for (const auto& [e, c] : gs[k]->terms) {
            long xi = (e.x - lo.x).convert_to<long>();
            long yi = (e.y - lo.y).convert_to<long>();
            s.polys[k].emplace_back(xi, yi, c.v);
            s.xmax = std::max(s.xmax, xi);
            s.ymax = std::max(s.ymax, yi);
        }
    return s;
}

// Exhaustive search over (F_p*)^2, then (F_{p^2}*)^2 for odd p, within a
// fixed evaluation budget. Returns a printable witness if one is found.
inline std::optional<std::string> torus_witness_search(const LaurentPoly<Fp>& f,
                                                       const LaurentPoly<Fp>& fx,
                                                       const LaurentPoly<Fp>& fy,
                                                       std::uint64_t p) {
    // budgets chosen so the full scan stays around 2e6 point evaluations
    constexpr std::uint64_t kMaxPLinear = 1485, kMaxPQuadratic = 38;
    ShiftedSystem s = shift_system(f, fx, fy);

    if (p <= kMaxPLinear) {
        std::vector<std::uint64_t> xp(s.xmax + 1), yp(s.ymax + 1);
        for (std::uint64_t u = 1; u < p; ++u) {
            xp[0] = 1;
            for (long i = 1; i <= s.xmax; ++i) xp[i] = mulmod(xp[i - 1], u, p);
            for (std::uint64_t v = 1; v < p; ++v) {
                yp[0] = 1;
                for (long j = 1; j <= s.ymax; ++j) yp[j] = mulmod(yp[j - 1], v, p);
                bool zero = true;
                for (int k = 0; k < 3 && zero; ++k) {
                    if (s.polys[k].empty()) continue;  // identically zero
                    std::uint64_t acc = 0;
                    for (const auto& [xi, yi, c] : s.polys[k])
                        acc = (acc + mulmod(c, mulmod(xp[xi], yp[yi], p), p)) % p;
                    if (acc != 0) zero = false;
                }
                if (zero)
                    return "torus zero at (" + std::to_string(u) + ", " +
                           std::to_string(v) + ") over F_" + std::to_string(p);
            }
        }
    }

    if (p >= 3 && p <= kMaxPQuadratic) {
        {
            QuadExt ext{p, find_non_residue(p)};
            std::vector<QuadExt::E> elems;
            for (std::uint64_t a = 0; a < p; ++a)
                for (std::uint64_t b = 0; b < p; ++b)
                    if (a || b) elems.push_back({a, b});
            std::vector<QuadExt::E> xp(s.xmax + 1), yp(s.ymax + 1);
            for (const auto& u : elems) {
                xp[0] = {1, 0};
                for (long i = 1; i <= s.xmax; ++i) xp[i] = ext.mul(xp[i - 1], u);
                for (const auto& v : elems) {
                    yp[0] = {1, 0};
                    for (long j = 1; j <= s.ymax; ++j) yp[j] = ext.mul(yp[j - 1], v);
                    bool zero = true;
                    for (int k = 0; k < 3 && zero; ++k) {
                        if (s.polys[k].empty()) continue;
                        QuadExt::E acc{0, 0};
                        for (const auto& [xi, yi, c] : s.polys[k])
                            acc = ext.add(acc, ext.scale(c, ext.mul(xp[xi], yp[yi])));
                        if (!ext.is_zero(acc)) zero = false;
                    }
                    if (zero)
                        return "torus zero at (" + std::to_string(u.first) + "+" +
                               std::to_string(u.second) + "t, " + std::to_string(v.first) +
                               "+" + std::to_string(v.second) + "t) over F_" +
                               std::to_string(p) + "[t]/(t^2-" + std::to_string(ext.alpha) +
                               ")";
                }
            }
        }
    }
    return std::nullopt;
}

// Full-face test specializations: over F_p an inconclusive resultant test is
// followed by the witness search; over Q it is preceded by a modular pass.
inline std::pair<FaceStatus, std::string> full_face_status(const LaurentPoly<Fp>& f) {
    auto [status, detail] = full_system_status(f);
    if (status != FaceStatus::Undetermined) return {status, detail};
    std::uint64_t p = 0;
    for (const auto& [e, c] : f.terms) p = c.p;
    if (auto witness = torus_witness_search(f, scaled_derivative(f, true),
                                            scaled_derivative(f, false), p))
        return {FaceStatus::DegenerateWitnessed, *witness};
    return {FaceStatus::Undetermined, detail + "; no witness within the search budget"};
}

inline std::pair<FaceStatus, std::string> full_face_status(const LaurentPoly<Rat>& f) {
    LatticePolygon np = newton_polygon(f);
    if (np.dim() == 2) {
        // modular pass: clear denominators, reduce at a random large prime
        // that keeps every coefficient nonzero, and certify there
        Int lcm = 1;
        for (const auto& [e, c] : f.terms) {
            Int den = boost::multiprecision::denominator(c);
            lcm = lcm / gcd_int(lcm, den) * den;
        }
        std::mt19937_64 rng(0x6e70696e76ull);
        for (int attempt = 0; attempt < 5; ++attempt) {
            std::uint64_t p = random_prime_62bit(rng);
            LaurentPoly<Fp> fp;
            bool good = true;
            for (const auto& [e, c] : f.terms) {
                Fp r = Fp::make(
                    boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c)),
                    p);
                if (r.is_zero()) {
                    good = false;
                    break;
                }
                fp.terms.emplace(e, r);
            }
            if (!good) continue;
            auto [status, detail] = full_system_status(fp);
            if (status == FaceStatus::Certified)
                return {status, detail + " (modulo p=" + std::to_string(p) + ")"};
            break;  // inconclusive modulo p: decide exactly
        }
    }
    auto [status, detail] = full_system_status(f);
    if (status == FaceStatus::Undetermined)
        detail += "; no witness search is attempted over the rationals";
    return {status, detail};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Non-degeneracy with respect to the polynomial's own Newton polygon

template <class K>
NondegeneracyVerdict is_nondegenerate(const LaurentPoly<K>& f) {
    LatticePolygon np = newton_polygon(f);  // rejects the zero polynomial
    NondegeneracyVerdict verdict;
    for (const Face& face : faces_of(np)) {
        FaceReport report;
        report.face = face;
        report.label = face_label(np, face);
        switch (face.kind) {
            case Face::Kind::Vertex:
                report.status = FaceStatus::Certified;
                report.detail = "vertex monomial";
                break;
            case Face::Kind::Edge: {
                auto [a, b] = face_span(np, face);
                auto [status, detail] = detail::multiple_root_status(
                    detail::segment_collapse(face_restriction(f, np, face), a, b));
                report.status = status;
                report.detail = detail;
                break;
            }
            case Face::Kind::Full: {
                auto [status, detail] = detail::full_face_status(f);
                report.status = status;
                report.detail = detail;
                break;
            }
        }
        verdict.faces.push_back(std::move(report));
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// Weak non-degeneracy with respect to a containing polygon

// Like is_nondegenerate, but the faces are those of the given container, and
// vertices of the container at which the toric surface is smooth (adjacent
// primitive edge directions spanning the whole lattice) are exempt. A face
// whose restriction vanishes identically is degenerate; in particular a
// missing monomial at a non-smooth vertex fails that vertex's face.
template <class K>
NondegeneracyVerdict is_weakly_nondegenerate(const LaurentPoly<K>& f,
                                             const LatticePolygon& container) {
    if (f.empty()) fail(errc::bad_argument, "the zero polynomial has no faces to check");
    for (const auto& [e, c] : f.terms)
        if (!container.contains(e))
            fail(errc::bad_argument, "support is not contained in the container");

    const auto& vs = container.vertices();
    std::size_t n = vs.size();
    auto smooth_vertex = [&](std::size_t i) {
        if (container.dim() != 2) return false;
        LatticePoint prev = vs[(i + n - 1) % n];
        LatticePoint next = vs[(i + 1) % n];
        Int d = cross(primitive(prev - vs[i]), primitive(next - vs[i]));
        return d == 1 || d == -1;
    };

    NondegeneracyVerdict verdict;
    for (const Face& face : faces_of(container)) {
        FaceReport report;
        report.face = face;
        report.label = face_label(container, face);
        LaurentPoly<K> g = face_restriction(f, container, face);
        switch (face.kind) {
            case Face::Kind::Vertex:
                if (smooth_vertex(face.index)) {
                    report.status = FaceStatus::Certified;
                    report.detail = "smooth vertex (exempt)";
                } else if (g.empty()) {
                    report.status = FaceStatus::DegenerateWitnessed;
                    report.detail = "missing monomial at a non-smooth vertex";
                } else {
                    report.status = FaceStatus::Certified;
                    report.detail = "vertex monomial present";
                }
                break;
            case Face::Kind::Edge: {
                if (g.empty()) {
                    report.status = FaceStatus::DegenerateWitnessed;
                    report.detail = "restriction vanishes identically";
                    break;
                }
                auto [a, b] = face_span(container, face);
                auto [status, detail] =
                    detail::multiple_root_status(detail::segment_collapse(g, a, b));
                report.status = status;
                report.detail = detail;
                break;
            }
            case Face::Kind::Full: {
                auto [status, detail] = detail::full_face_status(f);
                report.status = status;
                report.detail = detail;
                break;
            }
        }
        verdict.faces.push_back(std::move(report));
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// Random non-degenerate polynomials

// Draws coefficients for every lattice point of delta (vertices nonzero)
// until the result is certified non-degenerate; gives up after maxAttempts
// rejections.
inline std::pair<LaurentPoly<Fp>, int> random_nondegenerate(const LatticePolygon& delta,
                                                            std::uint64_t p,
                                                            std::uint64_t seed,
                                                            int maxAttempts = 1000) {
    if (p < 2 || !detail::is_probable_prime(p))
        fail(errc::bad_argument, "modulus must be prime");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> any(0, p - 1);
    std::uniform_int_distribution<std::uint64_t> unit(1, p - 1);
    auto pts = delta.lattice_points();
    const auto& vs = delta.vertices();
    auto is_vertex = [&](const LatticePoint& q) {
        for (const auto& v : vs)
            if (v == q) return true;
        return false;
    };
    for (int attempt = 1; attempt <= maxAttempts; ++attempt) {
        LaurentPoly<Fp> f;
        for (const auto& q : pts) {
            std::uint64_t c = is_vertex(q) ? unit(rng) : any(rng);
            if (c) f.terms.emplace(q, Fp{c, p});
        }
        if (is_nondegenerate(f).nondegenerate()) return {std::move(f), attempt};
    }
    fail(errc::give_up, "no certified non-degenerate draw within the attempt budget");
}

// Rational variant: coefficients are uniform integers in [-50, 50], nonzero
// on vertices.
inline std::pair<LaurentPoly<Rat>, int> random_nondegenerate_rational(
    const LatticePolygon& delta, std::uint64_t seed, int maxAttempts = 1000) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> any(-50, 50);
    auto pts = delta.lattice_points();
    const auto& vs = delta.vertices();
    auto is_vertex = [&](const LatticePoint& q) {
        for (const auto& v : vs)
            if (v == q) return true;
        return false;
    };
    for (int attempt = 1; attempt <= maxAttempts; ++attempt) {
        LaurentPoly<Rat> f;
        for (const auto& q : pts) {
            int c = any(rng);
            while (is_vertex(q) && c == 0) c = any(rng);
            if (c) f.terms.emplace(q, Rat(c));
        }
        if (is_nondegenerate(f).nondegenerate()) return {std::move(f), attempt};
    }
    fail(errc::give_up, "no certified non-degenerate draw within the attempt budget");
}

}  // namespace npinv
