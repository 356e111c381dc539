// Command-line front end: every library operation behind a subcommand with
// stable JSON output. Exit codes: 0 success, 2 domain errors (well-formed
// input outside an operation's domain), 1 usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "npinv/adjunction.hpp"
#include "npinv/curve_invariants.hpp"
#include "npinv/enumeration.hpp"
#include "npinv/errors.hpp"
#include "npinv/fingerprint.hpp"
#include "npinv/io.hpp"
#include "npinv/lattice.hpp"
#include "npinv/laurent.hpp"
#include "npinv/normal_form.hpp"
#include "npinv/toric.hpp"
#include "npinv/width.hpp"

namespace {

using nlohmann::json;
using namespace npinv;

json report_shell(const std::string& command) {
    json r;
    r["command"] = command;
    r["inputs"] = json::object();
    r["results"] = json::object();
    r["warnings"] = json::array();
    return r;
}

void add_warning(json& rep, const std::string& w) {
    for (const auto& e : rep["warnings"])
        if (e == w) return;
    rep["warnings"].push_back(w);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string vertices_string(const LatticePolygon& p) {
    std::string out;
    for (const auto& v : p.vertices()) {
        if (!out.empty()) out += " ";
        out += "(" + v.x.str() + "," + v.y.str() + ")";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pretty rendering: aligned key/value listing with nested blocks.

bool is_scalar_array(const json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (e.is_object() || e.is_array()) return false;
    return true;
}

void render_pretty(std::ostream& os, const json& j, int indent);

void render_object(std::ostream& os, const json& j, int indent) {
    std::size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        os << std::string(indent, ' ') << it.key() << std::string(width - it.key().size(), ' ')
           << "  ";
        const json& v = it.value();
        if (v.is_object() || (v.is_array() && !is_scalar_array(v))) {
            os << "\n";
            render_pretty(os, v, indent + 2);
        } else {
            os << v.dump() << "\n";
        }
    }
}

void render_pretty(std::ostream& os, const json& j, int indent) {
    if (j.is_object()) {
        render_object(os, j, indent);
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object() || (e.is_array() && !is_scalar_array(e))) {
                os << std::string(indent, ' ') << "-\n";
                render_pretty(os, e, indent + 2);
            } else {
                os << std::string(indent, ' ') << "- " << e.dump() << "\n";
            }
        }
    } else {
        os << std::string(indent, ' ') << j.dump() << "\n";
    }
}

void emit(const json& rep, bool pretty) {
    if (pretty)
        render_pretty(std::cout, rep, 0);
    else
        std::cout << rep.dump() << "\n";
}

int resolve_threads(int flagValue) {
    if (flagValue > 0) return flagValue;
    if (const char* env = std::getenv("NPINV_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // library default
}

// ---------------------------------------------------------------------------
// Subcommand handlers

json run_analyze(const std::string& polyText) {
    LatticePolygon P = parse_polygon(polyText);
    json rep = report_shell("analyze");
    rep["inputs"]["polygon"] = json_of(P);
    rep["inputs"]["normalForm"] = json_of(normal_form(P).polygon);
    json& res = rep["results"];

    Int g = genus(P);
    res["genus"] = json_of_int(g);
    res["width"] = json_of(lattice_width(P));
    auto ih = interior_hull(P);
    res["interiorHull"] = ih ? json_of(*ih) : json(nullptr);
    res["interiorWidth"] = json_of_int(lattice_width_value(ih));
    Int gamma = gonality(P);
    res["gonality"] = json_of_int(gamma);
    res["clifford"] = g >= 1 ? json_of(clifford(P)) : json(nullptr);
    SpecialShape shape = classify_special(P);
    res["specialShape"] = to_string(shape);
    auto sp = is_smooth_plane(P);
    res["smoothPlaneDegree"] = sp ? json_of_int(*sp) : json(nullptr);
    if (shape.tag == ShapeTag::TwoUpsilon) {
        res["p1xp1"] = "excluded";
    } else {
        auto pq = is_p1xp1(P);
        res["p1xp1"] = pq ? json::array({json_of_int(pq->first), json_of_int(pq->second)})
                          : json(nullptr);
    }

    auto pc = pencils(P);
    if (pc) {
        json dirs = json::array();
        for (const auto& v : *pc) dirs.push_back(json_of(v));
        res["pencilDirections"] = dirs;
        json scroll = json::array();
        for (const auto& v : *pc) {
            auto ms = scrollar_invariants(P, v);
            json one = json::array();
            for (const auto& e : ms) one.push_back(json_of_int(e));
            scroll.push_back({{"direction", json_of(v)}, {"multiset", one}});
        }
        res["scrollar"] = scroll;
    } else {
        res["pencilDirections"] = nullptr;
        res["scrollar"] = nullptr;
    }

    if (gamma == 4) {
        auto s = schreyer_invariants(P);
        res["schreyer"] = json_of(s);
        if (s.anomalous) add_warning(rep, "anomalous");
    } else {
        res["schreyer"] = nullptr;
    }

    res["secondary"] = nullptr;
    if (pc && gamma >= 4 && ih) {
        auto ih2 = interior_hull(*ih);
        if (ih2) {
            json secs = json::array();
            for (const auto& v : *pc) {
                auto wa = is_well_aligned(P, v);
                json one;
                one["direction"] = json_of(v);
                one["wellAligned"] = wa.aligned;
                if (wa.aligned) {
                    auto sec = secondary_scrollar_invariants(P, v);
                    one["secondary"] = json_of(sec);
                    if (sec.zeroRowWarning) add_warning(rep, "zeroRow");
                } else {
                    one["secondary"] = nullptr;
                }
                secs.push_back(one);
            }
            res["secondary"] = secs;
        }
    }
    return rep;
}

json run_equiv(const std::string& aText, const std::string& bText) {
    LatticePolygon A = parse_polygon(aText);
    LatticePolygon B = parse_polygon(bText);
    json rep = report_shell("equiv");
    rep["inputs"]["first"] = json_of(A);
    rep["inputs"]["second"] = json_of(B);
    auto w = equivalent(A, B);
    rep["results"]["equivalent"] = static_cast<bool>(w);
    rep["results"]["witness"] = w ? json_of(*w) : json(nullptr);
    return rep;
}

json run_interior(const std::string& polyText) {
    LatticePolygon P = parse_polygon(polyText);
    json rep = report_shell("interior");
    rep["inputs"]["polygon"] = json_of(P);
    json& res = rep["results"];
    auto ih = interior_hull(P);
    res["interiorHull"] = ih ? json_of(*ih) : json(nullptr);
    bool isip = is_interior_polygon(P);
    res["isInteriorPolygon"] = isip;
    res["maxPolygon"] = isip ? json_of(max_polygon(P)) : json(nullptr);
    res["genus"] = P.dim() == 2 ? json_of_int(genus(P)) : json(nullptr);
    return rep;
}

json run_width(const std::string& polyText, const std::optional<std::string>& directionText) {
    LatticePolygon P = parse_polygon(polyText);
    json rep = report_shell("width");
    rep["inputs"]["polygon"] = json_of(P);
    json& res = rep["results"];
    if (directionText) {
        LatticePoint v = parse_point(*directionText);
        res["direction"] = json_of(v);
        res["widthAlong"] = json_of_int(width_along(P, v));
    } else {
        res["width"] = json_of(lattice_width(P));
        res["interiorWidth"] = json_of_int(lattice_width_value(interior_hull(P)));
    }
    return rep;
}

std::optional<json> run_enumerate(std::int64_t genusArg, bool csv, int threads) {
    auto entries = census_report(Int(genusArg), threads);
    if (csv) {
        std::cout << "genus,vertices,maxVertices,gonality,specialShape,equalityKey\n";
        for (const auto& e : entries) {
            std::cout << e.fingerprint.genus << ",\"" << vertices_string(e.polygon) << "\",\""
                      << vertices_string(e.maxPolygon) << "\"," << e.fingerprint.gonality << ",\""
                      << to_string(e.fingerprint.specialShape) << "\",\"" << e.fingerprint.equalityKey
                      << "\"\n";
        }
        return std::nullopt;
    }
    json rep = report_shell("enumerate");
    rep["inputs"]["genus"] = genusArg;
    json items = json::array();
    for (const auto& e : entries) items.push_back(json_of(e));
    rep["results"]["count"] = static_cast<std::int64_t>(entries.size());
    rep["results"]["entries"] = items;
    return rep;
}

json run_fingerprint(const std::string& polyText, std::int64_t genusArg, int threads) {
    json rep = report_shell("fingerprint");
    json& res = rep["results"];
    if (genusArg >= 0) {
        rep["inputs"]["genus"] = genusArg;
        auto entries = census_report(Int(genusArg), threads);
        std::vector<CurveFingerprint> fps;
        fps.reserve(entries.size());
        for (const auto& e : entries) fps.push_back(e.fingerprint);
        auto part = distinguishability_partition(fps);
        json blocks = json::array();
        std::int64_t nonSingleton = 0;
        for (const auto& b : part) {
            json mem = json::array(), pol = json::array();
            for (auto i : b.members) {
                mem.push_back(static_cast<std::int64_t>(i));
                pol.push_back(json_of(entries[i].polygon));
            }
            if (b.members.size() > 1) ++nonSingleton;
            blocks.push_back({{"key", b.key}, {"members", mem}, {"polygons", pol}});
        }
        res["count"] = static_cast<std::int64_t>(entries.size());
        res["blocks"] = blocks;
        res["nonSingletonBlocks"] = nonSingleton;
        return rep;
    }
    if (polyText.empty()) throw input_error("fingerprint needs a polygon argument or --genus");
    LatticePolygon P = parse_polygon(polyText);
    rep["inputs"]["polygon"] = json_of(P);
    res["fingerprint"] = json_of(fingerprint(P));
    return rep;
}

json run_nondeg(const std::string& fileArg, const std::string& randomPoly, std::uint64_t modulus,
                std::uint64_t seed) {
    json rep = report_shell("nondeg");
    json& res = rep["results"];
    if (!randomPoly.empty()) {
        LatticePolygon d = parse_polygon(randomPoly);
        rep["inputs"]["polygon"] = json_of(d);
        rep["inputs"]["modulus"] = modulus;
        rep["inputs"]["seed"] = seed;
        auto [f, attempts] = random_nondegenerate(d, modulus, seed);
        res["attempts"] = attempts;
        res["polynomial"] = json_of(f);
        res["verdict"] = json_of(is_nondegenerate(f));
        return rep;
    }
    if (fileArg.empty()) throw input_error("nondeg needs a polynomial file or --random");
    auto parsed = parse_laurent(read_file(fileArg));
    if (parsed.modulus) {
        auto f = parsed.to_modular();
        rep["inputs"]["newtonPolygon"] = json_of(newton_polygon(f));
        res["verdict"] = json_of(is_nondegenerate(f));
    } else {
        auto f = parsed.to_rational();
        rep["inputs"]["newtonPolygon"] = json_of(newton_polygon(f));
        res["verdict"] = json_of(is_nondegenerate(f));
    }
    return rep;
}

json run_quadrics(const std::string& fileArg, const std::optional<std::string>& directionText) {
    json rep = report_shell("quadrics");
    json& res = rep["results"];
    auto parsed = parse_laurent(read_file(fileArg));
    std::optional<LatticePoint> dir;
    if (directionText) {
        dir = parse_point(*directionText);
        rep["inputs"]["direction"] = json_of(*dir);
    }
    auto handle = [&](const auto& f) {
        rep["inputs"]["newtonPolygon"] = json_of(newton_polygon(f));
        auto qs = dir ? canonical_quadrics(f, *dir) : canonical_quadrics(f);
        json arr = json::array();
        for (const auto& q : qs) arr.push_back(json_of(q));
        res["quadrics"] = arr;
    };
    if (parsed.modulus)
        handle(parsed.to_modular());
    else
        handle(parsed.to_rational());
    return rep;
}

json run_discriminant(const std::string& fileArg) {
    json rep = report_shell("discriminant");
    json& res = rep["results"];
    auto parsed = parse_laurent(read_file(fileArg));
    if (parsed.modulus)
        throw input_error("discriminant requires rational coefficients (no \"modulus\" field)");
    auto f = parsed.to_rational();
    rep["inputs"]["newtonPolygon"] = json_of(newton_polygon(f));
    auto d = genus5_discriminant(f);
    res["delta"] = json_of(d.delta);
    res["sixteenDelta"] = json_of(d.sixteenDelta);
    res["support"] = json_of(d.support);
    res["transport"] = json_of(d.transport);
    res["containerCheck"] = json_of(d.containerCheck);
    if (!d.containerCheck.nondegenerate()) add_warning(rep, d.containerCheck.status());
    return rep;
}

json run_cab(std::int64_t a, std::int64_t b) {
    json rep = report_shell("cab");
    rep["inputs"]["a"] = a;
    rep["inputs"]["b"] = b;
    rep["results"] = json_of(cab_polygon(Int(a), Int(b)));
    return rep;
}

json run_betti(const std::string& polyText) {
    LatticePolygon P = parse_polygon(polyText);
    json rep = report_shell("betti");
    rep["inputs"]["polygon"] = json_of(P);
    auto bt = predicted_betti(P);
    rep["results"]["betti"] = bt ? json_of(*bt) : json(nullptr);
    if (bt && bt->status != "known") add_warning(rep, bt->status);
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of lattice polygons and the curves they carry"};
    app.require_subcommand(1);

    bool pretty = false;
    int threads = 0;
    app.add_flag("--pretty", pretty, "render a human-readable listing instead of JSON");
    app.add_option("--threads", threads, "worker threads for enumeration (default: NPINV_THREADS or all cores)");

    std::string polyA, polyB, fileArg, randomPoly, directionText;
    std::int64_t genusArg = -1;
    std::uint64_t modulus = kDefaultModulus;
    std::uint64_t seed = 1;
    std::int64_t cabA = 0, cabB = 0;
    bool csv = false;
    bool haveDirection = false;

    auto* cAnalyze = app.add_subcommand("analyze", "all invariants of a lattice polygon");
    cAnalyze->add_option("polygon", polyA, "polygon literal")->required();

    auto* cEquiv = app.add_subcommand("equiv", "unimodular equivalence witness");
    cEquiv->add_option("first", polyA, "polygon literal")->required();
    cEquiv->add_option("second", polyB, "polygon literal")->required();

    auto* cInterior = app.add_subcommand("interior", "interior hull and maximal polygon");
    cInterior->add_option("polygon", polyA, "polygon literal")->required();

    auto* cWidth = app.add_subcommand("width", "lattice width and width directions");
    cWidth->add_option("polygon", polyA, "polygon literal")->required();
    cWidth->add_option("--direction", directionText, "measure width along \"(a,b)\" only");

    auto* cEnumerate = app.add_subcommand("enumerate", "census of interior polygons of a genus");
    cEnumerate->add_option("--genus", genusArg, "genus")->required();
    cEnumerate->add_flag("--csv", csv, "emit CSV rows instead of JSON");

    auto* cFingerprint = app.add_subcommand("fingerprint", "fingerprint of an interior polygon, or the partition of a whole census");
    cFingerprint->add_option("polygon", polyA, "interior polygon literal");
    cFingerprint->add_option("--genus", genusArg, "partition the census of this genus");

    auto* cNondeg = app.add_subcommand("nondeg", "nondegeneracy verdict for a Laurent polynomial");
    cNondeg->add_option("file", fileArg, "polynomial JSON file");
    cNondeg->add_option("--random", randomPoly, "draw a certified polynomial with this Newton polygon");
    cNondeg->add_option("--modulus", modulus, "coefficient field size for --random");
    cNondeg->add_option("--seed", seed, "random seed for --random");

    auto* cQuadrics = app.add_subcommand("quadrics", "canonical quadrics of a Laurent polynomial");
    cQuadrics->add_option("file", fileArg, "polynomial JSON file")->required();
    cQuadrics->add_option("--direction", directionText, "use the well-aligned construction along \"(a,b)\"");

    auto* cDiscriminant = app.add_subcommand("discriminant", "quadric-pencil discriminant of a genus-5 input");
    cDiscriminant->add_option("file", fileArg, "polynomial JSON file")->required();

    auto* cCab = app.add_subcommand("cab", "the coprime-degree triangle family");
    cCab->add_option("a", cabA, "first parameter")->required();
    cCab->add_option("b", cabB, "second parameter")->required();

    auto* cBetti = app.add_subcommand("betti", "predicted graded Betti numbers");
    cBetti->add_option("polygon", polyA, "polygon literal")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err{{"error", {{"type", "usage"}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 1;
    }

    haveDirection = !directionText.empty();

    try {
        std::optional<json> rep;
        if (cAnalyze->parsed()) rep = run_analyze(polyA);
        else if (cEquiv->parsed()) rep = run_equiv(polyA, polyB);
        else if (cInterior->parsed()) rep = run_interior(polyA);
        else if (cWidth->parsed())
            rep = run_width(polyA, haveDirection ? std::optional<std::string>(directionText)
                                                 : std::nullopt);
        else if (cEnumerate->parsed()) rep = run_enumerate(genusArg, csv, resolve_threads(threads));
        else if (cFingerprint->parsed()) rep = run_fingerprint(polyA, genusArg, resolve_threads(threads));
        else if (cNondeg->parsed()) rep = run_nondeg(fileArg, randomPoly, modulus, seed);
        else if (cQuadrics->parsed())
            rep = run_quadrics(fileArg, haveDirection ? std::optional<std::string>(directionText)
                                                      : std::nullopt);
        else if (cDiscriminant->parsed()) rep = run_discriminant(fileArg);
        else if (cCab->parsed()) rep = run_cab(cabA, cabB);
        else if (cBetti->parsed()) rep = run_betti(polyA);
        if (rep) emit(*rep, pretty);
        return 0;
    } catch (const npinv::domain_error& e) {
        json err{{"error", {{"type", "domain"}, {"code", errc_name(e.code())}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 2;
    } catch (const npinv::input_error& e) {
        json err{{"error", {{"type", "input"}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", {{"type", "internal"}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 1;
    }
}
