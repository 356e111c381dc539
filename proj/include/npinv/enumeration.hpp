#pragma once

// Exhaustive enumeration of interior polygons of a given genus up to
// unimodular equivalence, the census report that attaches a fingerprint to
// every class, and the distinguishability partition induced by fingerprint
// equality.
//
// Dimension-two classes are generated in width-strip position: a polygon of
// lattice width w sits in the strip 0 <= y <= w after normalizing along a
// width direction, is translated so its bottom row starts at x = 0, and is
// sheared so the top row's start lies in [0, w-1]. Rows are placed outer
// rows first; every candidate row placement respects two sound pruning
// rules (row starts cannot exceed the chord interpolation of the outer
// rows, and any triangle spanned with the outer rows must fit the doubled
// area budget 2g - 5), and each completed stack is validated exactly by
// rebuilding the hull and comparing its rows. Degenerate classes (a point
// for genus 1, a segment otherwise) are injected directly.

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "npinv/adjunction.hpp"
#include "npinv/errors.hpp"
#include "npinv/fingerprint.hpp"
#include "npinv/lattice.hpp"
#include "npinv/normal_form.hpp"

namespace npinv {

namespace detail {

inline long floor_div_long(long n, long d) {
    long q = n / d;
    if (n % d != 0 && ((n < 0) != (d < 0))) --q;
    return q;
}
inline long ceil_div_long(long n, long d) { return -floor_div_long(-n, d); }

struct StackEnumerator {
    long g;      // target lattice-point count
    long w;      // strip height
    long amax2;  // doubled-area budget 2g - 5
    std::vector<long> len;    // row lengths, len[j] for height j (0 = lattice-free)
    std::vector<long> start;  // row starts for nonempty rows
    std::vector<LatticePolygon>* sink;
    std::set<std::vector<LatticePoint>>* seen;

    void emit() {
        std::vector<LatticePoint> pts;
        for (long j = 0; j <= w; ++j)
            for (long x = start[j]; x < start[j] + len[j]; ++x)
                pts.emplace_back(x, j);
        LatticePolygon hull = LatticePolygon::hull(pts);
        if (hull.dim() != 2) return;
        for (long j = 0; j <= w; ++j) {
            auto row = row_lattice_range(hull, Int(j));
            if (len[j] == 0) {
                if (row) return;
            } else {
                if (!row || row->first != start[j] || row->second != start[j] + len[j] - 1)
                    return;
            }
        }
        if (!is_interior_polygon(hull)) return;
        auto nf = normal_form(hull).polygon;
        if (seen->insert(nf.vertices()).second) sink->push_back(nf);
    }

    // Rows 0 and w are placed; fill heights 1..w-1 in order. Lengths are
    // fixed already, only the starts vary.
    void place_middle(long j) {
        if (j == w) {
            emit();
            return;
        }
        if (len[j] == 0) {
            place_middle(j + 1);
            return;
        }
        long a0 = start[0], aw = start[w];
        long b0 = start[0] + len[0] - 1, bw = start[w] + len[w] - 1;
        // chord bound: the convex left boundary lies below the chord of the
        // outer rows, so start[j] <= ceil(chord); symmetrically the row end
        // must reach at least the floor of the right chord
        long hiChord = ceil_div_long(a0 * (w - j) + aw * j, w);
        long loChordEnd = floor_div_long(b0 * (w - j) + bw * j, w);
        // area bound: the triangle on the leftmost points of rows 0, j, w
        // fits inside the polygon, whose doubled area is at most amax2
        long loArea = ceil_div_long(a0 * (w - j) + aw * j - amax2, w);
        long hiAreaEnd = floor_div_long(b0 * (w - j) + bw * j + amax2, w);
        long lo = std::max(loArea, loChordEnd - (len[j] - 1));
        long hi = std::min(hiChord, hiAreaEnd - (len[j] - 1));
        for (long a = lo; a <= hi; ++a) {
            start[j] = a;
            place_middle(j + 1);
        }
    }

    void run() {
        len.assign(w + 1, 0);
        start.assign(w + 1, 0);
        std::vector<long> lens(w + 1, 0);
        enumerate_lengths(lens, 0, g);
    }

    // Row lengths: the end rows are positive, middle rows may be zero
    // (a lattice-free row of the hull); lengths sum to g.
    void enumerate_lengths(std::vector<long>& lens, long j, long remaining) {
        if (j == w) {
            if (remaining < 1) return;
            lens[w] = remaining;
            len = lens;
            start[0] = 0;
            long shearMax = w >= 2 ? w - 1 : 0;
            for (long aw = 0; aw <= shearMax; ++aw) {
                start[w] = aw;
                place_middle(1);
            }
            return;
        }
        long minLen = (j == 0) ? 1 : 0;
        for (long L = minLen; L + 1 <= remaining; ++L) {
            lens[j] = L;
            enumerate_lengths(lens, j + 1, remaining - L);
        }
    }
};

}  // namespace detail

// All interior polygons with exactly g lattice points, one normal form per
// unimodular equivalence class, sorted by vertex count and then by the
// normal-form vertex list.
inline std::vector<LatticePolygon> enumerate_interior_polygons(const Int& genusWanted) {
    long g = genusWanted.convert_to<long>();
    if (g < 1) fail(errc::bad_argument, "genus must be at least 1");

    std::vector<LatticePolygon> out;
    std::set<std::vector<LatticePoint>> seen;
    auto emit = [&](const LatticePolygon& p) {
        auto nf = normal_form(p).polygon;
        if (seen.insert(nf.vertices()).second) out.push_back(nf);
    };

    if (g == 1) emit(LatticePolygon::hull({LatticePoint(0, 0)}));
    if (g >= 2)
        emit(LatticePolygon::hull({LatticePoint(0, 0), LatticePoint(g - 1, 0)}));

    if (g >= 3) {
        long amax2 = 2 * g - 5;
        long wmax = 0;
        while (3 * (wmax + 1) * (wmax + 1) <= 4 * amax2) ++wmax;
        for (long w = 1; w <= wmax; ++w) {
            detail::StackEnumerator e;
            e.g = g;
            e.w = w;
            e.amax2 = amax2;
            e.sink = &out;
            e.seen = &seen;
            e.run();
        }
    }

    std::sort(out.begin(), out.end(), [](const LatticePolygon& a, const LatticePolygon& b) {
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
        return a.vertices() < b.vertices();
    });
    return out;
}

// ---------------------------------------------------------------------------
// Census with fingerprints

struct CensusEntry {
    LatticePolygon polygon;     // normal form of the interior polygon
    LatticePolygon maxPolygon;  // its maximal container
    CurveFingerprint fingerprint;
};

inline int default_thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(hw < 8 ? hw : 8);
}

inline std::vector<CensusEntry> census_report(const Int& genusWanted, int threads = 0) {
    auto polys = enumerate_interior_polygons(genusWanted);
    if (polys.empty()) return {};
    std::vector<std::optional<LatticePolygon>> maxPolys(polys.size());
    std::vector<std::optional<CurveFingerprint>> fps(polys.size());
    if (threads <= 0) threads = default_thread_count();
    threads = std::max(1, std::min<int>(threads, static_cast<int>(polys.size())));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= polys.size()) return;
            maxPolys[i] = max_polygon(polys[i]);
            fps[i] = fingerprint(polys[i]);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<CensusEntry> entries;
    entries.reserve(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i)
        entries.push_back({std::move(polys[i]), std::move(*maxPolys[i]), std::move(*fps[i])});
    return entries;
}

// ---------------------------------------------------------------------------
// Distinguishability partition

// Groups of indices whose fingerprints compare equal, in order of first
// appearance.
struct PartitionGroup {
    std::string key;
    std::vector<std::size_t> members;
};

inline std::vector<PartitionGroup> distinguishability_partition(
    const std::vector<CurveFingerprint>& fps) {
    std::vector<PartitionGroup> groups;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < fps.size(); ++i) {
        auto it = index.find(fps[i].equalityKey);
        if (it == index.end()) {
            index.emplace(fps[i].equalityKey, groups.size());
            groups.push_back({fps[i].equalityKey, {i}});
        } else {
            groups[it->second].members.push_back(i);
        }
    }
    return groups;
}

}  // namespace npinv
