#pragma once

// Input parsing and JSON serialization for the command-line tool and tests.
//
// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; rationals are emitted as "p/q" strings unless
// integral. Objects are backed by std::map, so key order (and therefore the
// serialized byte stream) is deterministic.

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "npinv/curve_invariants.hpp"
#include "npinv/enumeration.hpp"
#include "npinv/errors.hpp"
#include "npinv/fingerprint.hpp"
#include "npinv/lattice.hpp"
#include "npinv/laurent.hpp"
#include "npinv/toric.hpp"
#include "npinv/width.hpp"

namespace npinv {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars

inline json json_of_int(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
    return x.str();
}

inline json json_of_rat(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return json_of_int(Int(boost::multiprecision::numerator(r)));
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline Int int_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return Int(j.get<std::int64_t>());
        if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
        if (j.is_string()) return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
    throw input_error("expected an integer, got: " + j.dump());
}

inline Rat rat_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
        if (j.is_number_unsigned()) return Rat(j.get<std::uint64_t>());
        if (j.is_string()) return Rat(j.get<std::string>());
    } catch (const std::exception&) {
    }
    throw input_error("expected an integer or \"p/q\" string, got: " + j.dump());
}

// ---------------------------------------------------------------------------
// Points and polygons

inline json json_of(const LatticePoint& p) { return json::array({json_of_int(p.x), json_of_int(p.y)}); }

inline json json_of(const LatticePolygon& p) {
    json a = json::array();
    for (const auto& v : p.vertices()) a.push_back(json_of(v));
    return a;
}

inline json json_of(const AffineMap& m) {
    return {{"linear", json::array({json::array({json_of_int(m.linear.a), json_of_int(m.linear.b)}),
                                    json::array({json_of_int(m.linear.c), json_of_int(m.linear.d)})})},
            {"shift", json_of(m.shift)}};
}

namespace detail {

// Tolerates U+2212 (minus sign) in hand-typed literals.
inline std::string normalize_minus(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size();) {
        if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
            static_cast<unsigned char>(s[i + 1]) == 0x88 &&
            static_cast<unsigned char>(s[i + 2]) == 0x92) {
            out.push_back('-');
            i += 3;
        } else {
            out.push_back(s[i]);
            ++i;
        }
    }
    return out;
}

inline void skip_space(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline Int parse_int_token(const std::string& s, std::size_t& i) {
    skip_space(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw input_error("expected an integer in \"" + s + "\" at position " + std::to_string(start));
    return Int(s.substr(start, i - start));
}

inline LatticePoint parse_point_token(const std::string& s, std::size_t& i) {
    skip_space(s, i);
    if (i >= s.size() || s[i] != '(') throw input_error("expected '(' in point literal: " + s);
    ++i;
    Int x = parse_int_token(s, i);
    skip_space(s, i);
    if (i >= s.size() || s[i] != ',') throw input_error("expected ',' in point literal: " + s);
    ++i;
    Int y = parse_int_token(s, i);
    skip_space(s, i);
    if (i >= s.size() || s[i] != ')') throw input_error("expected ')' in point literal: " + s);
    ++i;
    return LatticePoint(x, y);
}

}  // namespace detail

// Parses "(a,b)".
inline LatticePoint parse_point(const std::string& rawText) {
    std::string text = detail::normalize_minus(rawText);
    std::size_t i = 0;
    LatticePoint p = detail::parse_point_token(text, i);
    detail::skip_space(text, i);
    if (i != text.size()) throw input_error("trailing characters after point literal: " + text);
    return p;
}

// Parses either whitespace-separated "(a,b)" pairs or a JSON array of
// [a, b] pairs, and returns the convex hull of the listed points.
inline LatticePolygon parse_polygon(const std::string& rawText) {
    std::string text = detail::normalize_minus(rawText);
    std::vector<LatticePoint> pts;
    std::size_t i = 0;
    detail::skip_space(text, i);
    if (i < text.size() && text[i] == '[') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw input_error(std::string("invalid polygon JSON: ") + e.what());
        }
        if (!j.is_array()) throw input_error("polygon JSON must be an array of [x, y] pairs");
        for (const auto& item : j) {
            if (!item.is_array() || item.size() != 2)
                throw input_error("polygon JSON entries must be [x, y] pairs, got: " + item.dump());
            pts.emplace_back(int_from_json(item[0]), int_from_json(item[1]));
        }
    } else {
        while (i < text.size()) {
            pts.push_back(detail::parse_point_token(text, i));
            detail::skip_space(text, i);
        }
    }
    if (pts.empty()) throw input_error("polygon literal lists no points");
    return LatticePolygon::hull(pts);
}

// ---------------------------------------------------------------------------
// Laurent polynomials

struct ParsedLaurent {
    std::optional<std::uint64_t> modulus;
    std::vector<std::tuple<Int, Int, Rat>> terms;

    LaurentPoly<Rat> to_rational() const {
        LaurentPoly<Rat> f;
        for (const auto& [i, j, c] : terms) f.add_term(LatticePoint(i, j), c);
        return f;
    }

    LaurentPoly<Fp> to_modular() const {
        if (!modulus) throw input_error("polynomial input has no \"modulus\" field");
        LaurentPoly<Fp> f;
        for (const auto& [i, j, c] : terms) {
            if (boost::multiprecision::denominator(c) != 1)
                throw input_error("modular polynomial coefficients must be integers");
            f.add_term(LatticePoint(i, j), Fp::make(Int(boost::multiprecision::numerator(c)), *modulus));
        }
        return f;
    }
};

// Parses {"modulus": p, "terms": [{"i": .., "j": .., "c": ..}, ...]}; the
// modulus is optional (absent means rational coefficients).
inline ParsedLaurent parse_laurent(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("invalid polynomial JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw input_error("polynomial JSON must be an object with a \"terms\" array");
    ParsedLaurent out;
    if (j.contains("modulus")) {
        Int p = int_from_json(j["modulus"]);
        if (p < 2 || p > Int(std::numeric_limits<std::int64_t>::max()))
            throw input_error("modulus out of range: " + p.str());
        out.modulus = p.convert_to<std::uint64_t>();
    }
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("i") || !t.contains("j") || !t.contains("c"))
            throw input_error("each term must be an object with \"i\", \"j\", \"c\": " + t.dump());
        out.terms.emplace_back(int_from_json(t["i"]), int_from_json(t["j"]), rat_from_json(t["c"]));
    }
    return out;
}

inline json json_of(const LaurentPoly<Rat>& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms)
        terms.push_back({{"i", json_of_int(e.x)}, {"j", json_of_int(e.y)}, {"c", json_of_rat(c)}});
    return {{"terms", terms}};
}

inline json json_of(const LaurentPoly<Fp>& f) {
    std::uint64_t p = 0;
    for (const auto& [e, c] : f.terms)
        if (c.p != 0) {
            p = c.p;
            break;
        }
    json terms = json::array();
    for (const auto& [e, c] : f.terms)
        terms.push_back({{"i", json_of_int(e.x)}, {"j", json_of_int(e.y)}, {"c", c.v}});
    return {{"modulus", p}, {"terms", terms}};
}

// ---------------------------------------------------------------------------
// Width and profiles

inline json json_of(const WidthCertificate& c) {
    json dirs = json::array();
    for (const auto& d : c.directions) dirs.push_back(json_of(d));
    return {{"width", json_of_int(c.width)}, {"directions", dirs}};
}

inline json json_of(const RowProfile& r) {
    json rows = json::array();
    for (std::size_t k = 0; k < r.E.size(); ++k) {
        rows.push_back({{"height", static_cast<std::int64_t>(k) + 1},
                        {"count", json_of_int(r.E[k])},
                        {"iMinus", json_of_int(r.iMinus[k])},
                        {"iPlus", json_of_int(r.iPlus[k])}});
    }
    return {{"gonality", json_of_int(r.gamma)}, {"rows", rows}};
}

// ---------------------------------------------------------------------------
// Curve invariants

inline json json_of(const SpecialShape& s) { return to_string(s); }

inline json json_of(const CliffordData& c) {
    return {{"index", json_of_int(c.index)}, {"dimension", json_of_int(c.dimension)}};
}

inline json json_of(const SchreyerInvariants& s) {
    return {{"b1", json_of_int(s.b1)},
            {"b2", json_of_int(s.b2)},
            {"sorted", json::array({json_of_int(s.sorted[0]), json_of_int(s.sorted[1])})},
            {"anomalous", s.anomalous}};
}

inline json json_of(const WellAlignment& w) {
    json out;
    out["aligned"] = w.aligned;
    json cert = json::array();
    for (const auto& e : w.certificate)
        cert.push_back({{"row", json_of_int(e.row)},
                        {"boundary", json_of(e.boundary)},
                        {"h1", json_of_int(e.h1)},
                        {"h2", json_of_int(e.h2)}});
    out["certificate"] = cert;
    if (w.failure)
        out["failure"] = {{"row", json_of_int(w.failure->first)}, {"boundary", json_of(w.failure->second)}};
    else
        out["failure"] = nullptr;
    return out;
}

inline json json_of(const SecondaryInvariants& s) {
    json pairs = json::array();
    for (const auto& [jj, v] : s.pairTerms)
        pairs.push_back({{"j1", jj.first}, {"j2", jj.second}, {"value", json_of_int(v)}});
    json rows = json::array();
    for (const auto& [l, v] : s.rowTerms) rows.push_back({{"row", l}, {"value", json_of_int(v)}});
    json ms = json::array();
    for (const auto& v : s.multiset) ms.push_back(json_of_int(v));
    return {{"pairTerms", pairs},
            {"rowTerms", rows},
            {"multiset", ms},
            {"zeroRowWarning", s.zeroRowWarning}};
}

inline json json_of(const BettiTable& b) {
    json lin = json::array(), quad = json::array();
    for (const auto& v : b.linear) lin.push_back(json_of_int(v));
    for (const auto& v : b.quadratic) quad.push_back(json_of_int(v));
    return {{"genus", json_of_int(b.genus)}, {"linear", lin}, {"quadratic", quad}, {"status", b.status}};
}

inline json json_of(const CabResult& c) {
    return {{"vertices", json_of(c.polygon)},
            {"genus", json_of_int(c.genus)},
            {"gonality", json_of_int(c.gonality)}};
}

// ---------------------------------------------------------------------------
// Fingerprints

inline json json_of(const CurveFingerprint& f) {
    json out;
    out["genus"] = json_of_int(f.genus);
    out["hyperelliptic"] = f.hyperelliptic;
    out["gonality"] = json_of_int(f.gonality);
    out["cliffordIndex"] = json_of_int(f.cliffordIndex);
    out["cliffordDimension"] = json_of_int(f.cliffordDimension);
    out["specialShape"] = to_string(f.specialShape);
    out["pencilPairCount"] = static_cast<std::int64_t>(f.pencilPairCount);
    json scroll = json::array();
    for (const auto& ms : f.scrollarMultisets) {
        json one = json::array();
        for (const auto& v : ms) one.push_back(json_of_int(v));
        scroll.push_back(one);
    }
    out["scrollarMultisets"] = scroll;
    if (f.schreyer)
        out["schreyer"] = json::array({json_of_int((*f.schreyer)[0]), json_of_int((*f.schreyer)[1])});
    else
        out["schreyer"] = nullptr;
    if (f.secondary) {
        json secs = json::array();
        for (const auto& s : *f.secondary) {
            json ms = json::array();
            for (const auto& v : s.multiset) ms.push_back(json_of_int(v));
            secs.push_back({{"wellAligned", s.wellAligned},
                            {"multiset", ms},
                            {"zeroRowWarning", s.zeroRowWarning}});
        }
        out["secondary"] = secs;
    } else {
        out["secondary"] = nullptr;
    }
    out["interiorVertexCount"] = static_cast<std::int64_t>(f.nDelta1);
    out["equalityKey"] = f.equalityKey;
    return out;
}

inline json json_of(const CensusEntry& e) {
    return {{"genus", json_of_int(e.fingerprint.genus)},
            {"vertices", json_of(e.polygon)},
            {"maxVertices", json_of(e.maxPolygon)},
            {"fingerprint", json_of(e.fingerprint)}};
}

// ---------------------------------------------------------------------------
// Nondegeneracy verdicts

inline std::string face_status_name(FaceStatus s) {
    switch (s) {
        case FaceStatus::Certified: return "Certified";
        case FaceStatus::DegenerateWitnessed: return "DegenerateWitnessed";
        default: return "Undetermined";
    }
}

inline json json_of(const NondegeneracyVerdict& v) {
    json faces = json::array();
    for (const auto& f : v.faces)
        faces.push_back({{"label", f.label}, {"status", face_status_name(f.status)}, {"detail", f.detail}});
    return {{"nondegenerate", v.nondegenerate()}, {"status", v.status()}, {"faces", faces}};
}

// ---------------------------------------------------------------------------
// Toric algebra

inline json json_of(const ToricBinomial& b) {
    json lhs = json::array(), rhs = json::array();
    for (const auto& p : b.lhs) lhs.push_back(json_of(p));
    for (const auto& p : b.rhs) rhs.push_back(json_of(p));
    return {{"degree", b.degree}, {"lhs", lhs}, {"rhs", rhs}};
}

namespace detail {
inline json quadric_coeff_json(const Rat& c) { return json_of_rat(c); }
inline json quadric_coeff_json(const Fp& c) { return c.v; }
}  // namespace detail

template <class K>
inline json json_of(const CanonicalQuadric<K>& q) {
    json terms = json::array();
    for (const auto& [uv, c] : q.coeffs)
        terms.push_back({{"u", json_of(uv.first)}, {"v", json_of(uv.second)}, {"c", detail::quadric_coeff_json(c)}});
    return {{"w", json_of(q.w)}, {"terms", terms}};
}

}  // namespace npinv
