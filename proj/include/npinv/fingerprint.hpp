#pragma once

// Curve fingerprint: the full bundle of combinatorial invariants attached to
// an interior polygon E, computed on its maximal container. Fingerprints
// carry a reduced equality key; two fingerprints compare equal exactly when
// the key agrees, which groups polygons whose invariant bundles cannot be
// told apart (ignoring data that varies within one class, such as the pencil
// count or the vertex count of E).

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "npinv/adjunction.hpp"
#include "npinv/curve_invariants.hpp"
#include "npinv/errors.hpp"
#include "npinv/lattice.hpp"
#include "npinv/normal_form.hpp"
#include "npinv/width.hpp"

namespace npinv {

struct SecondaryEntry {
    bool wellAligned = false;
    std::vector<Int> multiset;  // empty when the direction is not well-aligned
    bool zeroRowWarning = false;
};

struct CurveFingerprint {
    Int genus;
    bool hyperelliptic = false;
    Int gonality;
    Int cliffordIndex;
    Int cliffordDimension;
    SpecialShape specialShape;  // of the interior polygon E itself
    long pencilPairCount = 0;   // 0 when pencils are absent
    std::vector<std::vector<Int>> scrollarMultisets;  // one per pencil pair, sorted
    std::optional<std::array<Int, 2>> schreyer;       // literal (b1, b2), gonality 4 only
    std::optional<std::vector<SecondaryEntry>> secondary;  // one per pencil pair
    long nDelta1 = 0;           // vertex count of E
    std::string equalityKey;
};

inline bool operator==(const CurveFingerprint& a, const CurveFingerprint& b) {
    return a.equalityKey == b.equalityKey;
}
inline bool operator!=(const CurveFingerprint& a, const CurveFingerprint& b) {
    return !(a == b);
}

namespace detail {

inline std::string join_ints(const std::vector<Int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].str();
    }
    return s;
}

// Lexicographically maximal element of a list of sorted multisets.
inline const std::vector<Int>* lexmax(const std::vector<std::vector<Int>>& lists) {
    const std::vector<Int>* best = nullptr;
    for (const auto& l : lists)
        if (!best || std::lexicographical_compare(best->begin(), best->end(),
                                                  l.begin(), l.end()))
            best = &l;
    return best;
}

inline std::string polygon_key(const LatticePolygon& p) {
    LatticePolygon nf = normal_form(p).polygon;
    std::string s;
    for (const auto& q : nf.vertices())
        s += "(" + q.x.str() + "," + q.y.str() + ")";
    return s;
}

// The reduced equality key. Branches, in order: degenerate E (hyperelliptic
// and genus-one curves), the Upsilon and 2-Upsilon classes, multiples of the
// standard simplex, rectangles, then a split by gonality. Within the
// gonality branches the key keeps the lexicographically maximal scrollar
// multiset and (for gonality at least 4) the lexicographically maximal
// well-aligned secondary multiset; gonality-4 keys with distinguishable
// Schreyer pairs, and all genus-5 gonality-4 keys, additionally pin the
// normal form of E itself.
inline std::string equality_key(const LatticePolygon& e, const CurveFingerprint& f) {
    std::string key = "g=" + f.genus.str() + "|";
    if (e.dim() <= 1) return key + "hyp";
    switch (f.specialShape.tag) {
        case ShapeTag::Upsilon: return key + "ups";
        case ShapeTag::TwoUpsilon: return key + "cd3";
        case ShapeTag::StandardSimplexMultiple:
            return key + "pln:" + f.specialShape.a.str();
        case ShapeTag::Rectangle:
            return key + "p1q:" + f.specialShape.a.str() + "," + f.specialShape.b.str();
        default: break;
    }
    const std::vector<Int>* scroll = lexmax(f.scrollarMultisets);
    std::string scrollKey = scroll ? join_ints(*scroll) : "";
    if (f.gonality == 3) return key + "tri:" + scrollKey;

    std::string secKey = "noWA";
    if (f.secondary) {
        std::vector<std::vector<Int>> aligned;
        for (const auto& entry : *f.secondary)
            if (entry.wellAligned) aligned.push_back(entry.multiset);
        if (const std::vector<Int>* s = lexmax(aligned)) secKey = join_ints(*s);
    }
    if (f.gonality == 4) {
        const auto& sch = *f.schreyer;
        key += "tet:" + sch[0].str() + "," + sch[1].str() + ":" + scrollKey + ":" + secKey;
        if (sch[0] != sch[1] || f.genus == 5) key += ":nf=" + polygon_key(e);
        return key;
    }
    return key + "gon" + f.gonality.str() + ":" + scrollKey + ":" + secKey;
}

}  // namespace detail

// Full invariant bundle of the interior polygon e, evaluated on its maximal
// container.
inline CurveFingerprint fingerprint(const LatticePolygon& e) {
    if (!is_interior_polygon(e))
        fail(errc::not_interior_polygon, "fingerprints are defined for interior polygons");
    CurveFingerprint f;
    f.genus = e.lattice_point_count();
    f.hyperelliptic = e.dim() <= 1;
    f.specialShape = classify_special(std::optional<LatticePolygon>(e));
    f.nDelta1 = static_cast<long>(e.vertex_count());

    LatticePolygon d = max_polygon(e);
    f.gonality = gonality(d);
    CliffordData c = clifford(d);
    f.cliffordIndex = c.index;
    f.cliffordDimension = c.dimension;

    auto pc = pencils(d);
    f.pencilPairCount = pc ? static_cast<long>(pc->size()) : 0;
    if (pc) {
        for (const auto& dir : *pc)
            f.scrollarMultisets.push_back(scrollar_invariants(d, dir));
        std::sort(f.scrollarMultisets.begin(), f.scrollarMultisets.end());
    }

    if (f.gonality == 4) {
        SchreyerInvariants s = schreyer_invariants(d);
        f.schreyer = std::array<Int, 2>{s.b1, s.b2};
    }

    if (pc && lattice_width(d).width >= 4) {
        auto ih = interior_hull(d);
        auto ih2 = ih ? interior_hull(*ih) : std::nullopt;
        if (ih2) {
            std::vector<SecondaryEntry> entries;
            for (const auto& dir : *pc) {
                WellAlignment wa = is_well_aligned(d, dir);
                if (wa.aligned) {
                    SecondaryInvariants s = secondary_scrollar_invariants(d, dir);
                    entries.push_back({true, s.multiset, s.zeroRowWarning});
                } else {
                    entries.push_back({false, {}, false});
                }
            }
            f.secondary = std::move(entries);
        }
    }

    f.equalityKey = detail::equality_key(e, f);
    return f;
}

}  // namespace npinv
