#pragma once

// Serialization (versioned JSON instance and result documents), FNV-1a
// instance hashing, witness re-validation, and deterministic SVG export.

#include <array>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqhit/exact.hpp"
#include "sqhit/geometry.hpp"

namespace sqhit {

struct ParseError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

inline constexpr const char* kInstanceSchema = "sqhit-instance-1";
inline constexpr const char* kResultSchema = "sqhit-result-1";

namespace detail {

inline double require_finite_number(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number()) throw SchemaError(where + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw SchemaError(where + ": value must be finite");
    return v;
}

}  // namespace detail

inline std::string write_instance(const SquareFamily& fam) {
    nlohmann::json j;
    j["version"] = kInstanceSchema;
    j["tolerance"] = fam.tol.eps;
    nlohmann::json squares = nlohmann::json::array();
    for (const Square& s : fam.squares) {
        nlohmann::json q;
        q["cx"] = s.centre.x;
        q["cy"] = s.centre.y;
        q["side"] = s.side;
        q["rot"] = s.rot;
        squares.push_back(q);
    }
    j["squares"] = squares;
    return j.dump(1) + "\n";
}

inline SquareFamily read_instance(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("instance parse error: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("instance: top level must be an object");
    if (!j.contains("version") || j["version"] != kInstanceSchema)
        throw SchemaError("instance: missing or unsupported version tag");
    if (!j.contains("squares") || !j["squares"].is_array())
        throw SchemaError("instance: missing squares array");

    Tolerance tol;
    if (j.contains("tolerance")) {
        const double eps = detail::require_finite_number(j["tolerance"], "tolerance");
        try {
            tol = Tolerance(eps);
        } catch (const InvalidGeometry& e) {
            throw SchemaError(std::string("tolerance: ") + e.what());
        }
    }

    std::vector<Square> squares;
    int idx = 0;
    for (const auto& q : j["squares"]) {
        const std::string where = "squares[" + std::to_string(idx) + "]";
        if (!q.is_object()) throw SchemaError(where + ": expected an object");
        for (const char* field : {"cx", "cy", "side"})
            if (!q.contains(field)) throw SchemaError(where + ": missing field " + field);
        const double cx = detail::require_finite_number(q["cx"], where + ".cx");
        const double cy = detail::require_finite_number(q["cy"], where + ".cy");
        const double side = detail::require_finite_number(q["side"], where + ".side");
        const double rot =
            q.contains("rot") ? detail::require_finite_number(q["rot"], where + ".rot") : 0.0;
        if (side <= 0.0) throw SchemaError(where + ".side: must be positive");
        squares.emplace_back(Point{cx, cy}, side, rot);
        ++idx;
    }
    return SquareFamily(std::move(squares), tol);
}

inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string instance_hash(const SquareFamily& fam) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                  static_cast<unsigned long long>(fnv1a(write_instance(fam))));
    return buf;
}

struct ResultDocument {
    std::string operation;  // tau | nu | chi | omega | delta | hit | colour
    std::string instance_hash;
    nlohmann::json parameters = nlohmann::json::object();
    int value = 0;
    std::vector<Point> witness_points;
    std::vector<int> witness_indices;
    std::vector<int> witness_colours;
    std::optional<int> bound;
    std::optional<std::uint64_t> seed;
    std::optional<double> runtime_ms;  // emitted only on request; keeps output seed-deterministic
};

inline std::string write_result(const ResultDocument& r) {
    nlohmann::json j;
    j["version"] = kResultSchema;
    j["operation"] = r.operation;
    j["instance_hash"] = r.instance_hash;
    j["parameters"] = r.parameters;
    j["value"] = r.value;
    nlohmann::json witness = nlohmann::json::object();
    if (!r.witness_points.empty()) {
        nlohmann::json pts = nlohmann::json::array();
        for (const Point& p : r.witness_points) pts.push_back({{"x", p.x}, {"y", p.y}});
        witness["points"] = pts;
    }
    if (!r.witness_indices.empty()) witness["indices"] = r.witness_indices;
    if (!r.witness_colours.empty()) witness["colours"] = r.witness_colours;
    j["witness"] = witness;
    if (r.bound) j["bound"] = *r.bound;
    if (r.seed) j["seed"] = *r.seed;
    if (r.runtime_ms) j["runtime_ms"] = *r.runtime_ms;
    return j.dump(1) + "\n";
}

inline ResultDocument read_result(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("result parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("version") || j["version"] != kResultSchema)
        throw SchemaError("result: missing or unsupported version tag");
    ResultDocument r;
    if (!j.contains("operation") || !j["operation"].is_string())
        throw SchemaError("result: missing operation");
    r.operation = j["operation"].get<std::string>();
    r.instance_hash = j.value("instance_hash", std::string{});
    if (j.contains("parameters")) r.parameters = j["parameters"];
    if (!j.contains("value") || !j["value"].is_number_integer())
        throw SchemaError("result: missing integer value");
    r.value = j["value"].get<int>();
    if (j.contains("witness")) {
        const auto& w = j["witness"];
        if (w.contains("points"))
            for (const auto& p : w["points"])
                r.witness_points.emplace_back(
                    detail::require_finite_number(p.at("x"), "witness point x"),
                    detail::require_finite_number(p.at("y"), "witness point y"));
        if (w.contains("indices"))
            for (const auto& v : w["indices"]) r.witness_indices.push_back(v.get<int>());
        if (w.contains("colours"))
            for (const auto& v : w["colours"]) r.witness_colours.push_back(v.get<int>());
    }
    if (j.contains("bound")) r.bound = j["bound"].get<int>();
    if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
    return r;
}

// Re-validates a result witness against the instance with the geometry
// predicates. Returns false (with a reason) instead of throwing, so the CLI
// can gate on tampered documents.
inline bool verify_result(const SquareFamily& fam, const ResultDocument& r, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (!r.instance_hash.empty() && r.instance_hash != instance_hash(fam))
        return fail("instance hash mismatch");
    const int n = static_cast<int>(fam.size());

    if (r.operation == "tau" || r.operation == "hit") {
        if (static_cast<int>(r.witness_points.size()) != r.value)
            return fail("hitting witness size differs from value");
        for (int i = 0; i < n; ++i) {
            bool hit = false;
            for (const Point& p : r.witness_points)
                if (contains_point(fam[i], p, fam.tol)) {
                    hit = true;
                    break;
                }
            if (!hit) return fail("square " + std::to_string(i) + " is not hit");
        }
        return true;
    }
    if (r.operation == "nu" || r.operation == "omega") {
        if (static_cast<int>(r.witness_indices.size()) != r.value)
            return fail("witness subfamily size differs from value");
        for (int idx : r.witness_indices)
            if (idx < 0 || idx >= n) return fail("witness index out of range");
        const bool want_intersect = r.operation == "omega";
        for (std::size_t a = 0; a < r.witness_indices.size(); ++a)
            for (std::size_t b = a + 1; b < r.witness_indices.size(); ++b) {
                const bool inter = squares_intersect(fam[r.witness_indices[a]],
                                                     fam[r.witness_indices[b]], fam.tol);
                if (inter != want_intersect)
                    return fail(want_intersect ? "witness is not a clique"
                                               : "witness is not a packing");
            }
        return true;
    }
    if (r.operation == "chi" || r.operation == "colour") {
        if (static_cast<int>(r.witness_colours.size()) != n)
            return fail("colouring witness must assign every square");
        int used = 0;
        for (int c : r.witness_colours) {
            if (c < 0) return fail("negative colour");
            used = std::max(used, c + 1);
        }
        if (used != r.value) return fail("colour count differs from value");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (r.witness_colours[i] == r.witness_colours[j] &&
                    squares_intersect(fam[i], fam[j], fam.tol))
                    return fail("colouring is not proper");
        return true;
    }
    if (r.operation == "delta") {
        if (r.witness_points.size() != 1) return fail("delta witness must be a single point");
        int depth = 0;
        for (int i = 0; i < n; ++i)
            if (contains_point(fam[i], r.witness_points[0], fam.tol)) ++depth;
        if (depth != r.value) return fail("witness point depth differs from value");
        return true;
    }
    return fail("unknown operation: " + r.operation);
}

// ---------------------------------------------------------------------------
// SVG export

struct SvgOverlays {
    std::vector<Point> points;            // hitting points, numbered
    std::vector<int> point_labels;        // optional label per point (round id)
    std::vector<int> colour_of;           // colour class per square
    std::vector<int> highlight_squares;   // pivots drawn with a heavy stroke
    struct Disk {
        Point centre;
        double r;
    };
    std::vector<Disk> disks;  // patch disks
    std::vector<std::array<Point, 3>> triangles;
    struct HalfDisk {
        Point centre;
        double r;
        double dir;  // outward normal of the straight edge
    };
    std::vector<HalfDisk> half_disks;
};

namespace detail {

inline const char* palette(int i) {
    static const char* colours[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                    "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                                    "#9c755f", "#bab0ac", "#1b9e77", "#d95f02"};
    return colours[i % 12];
}

inline void svg_num(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    out += buf;
}

}  // namespace detail

inline std::string render_svg(const SquareFamily& fam, const SvgOverlays& overlays = {}) {
    double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
    auto grow = [&](const Point& p, double r) {
        min_x = std::min(min_x, p.x - r);
        min_y = std::min(min_y, p.y - r);
        max_x = std::max(max_x, p.x + r);
        max_y = std::max(max_y, p.y + r);
    };
    for (const Square& s : fam.squares) grow(s.centre, s.circumradius());
    for (const Point& p : overlays.points) grow(p, 0.05);
    for (const auto& d : overlays.disks) grow(d.centre, d.r);
    for (const auto& d : overlays.half_disks) grow(d.centre, d.r);
    if (fam.empty() && overlays.points.empty()) min_x = min_y = -1.0, max_x = max_y = 1.0;
    const double margin = 0.2 * std::max(max_x - min_x, max_y - min_y) + 0.1;
    min_x -= margin;
    min_y -= margin;
    max_x += margin;
    max_y += margin;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"720\" "
           "height=\"720\" viewBox=\"";
    detail::svg_num(out, min_x);
    out += " ";
    detail::svg_num(out, -max_y);  // SVG y grows downward; flip via scale(1,-1)
    out += " ";
    detail::svg_num(out, max_x - min_x);
    out += " ";
    detail::svg_num(out, max_y - min_y);
    out += "\">\n<g transform=\"scale(1,-1)\">\n";

    const double stroke = 0.01 * std::max(max_x - min_x, max_y - min_y);
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const auto vs = vertices(fam[i]);
        const bool highlighted =
            std::find(overlays.highlight_squares.begin(), overlays.highlight_squares.end(),
                      static_cast<int>(i)) != overlays.highlight_squares.end();
        const char* fill = overlays.colour_of.empty()
                               ? "#dddddd"
                               : detail::palette(overlays.colour_of[i]);
        out += "<polygon points=\"";
        for (const Point& v : vs) {
            detail::svg_num(out, v.x);
            out += ",";
            detail::svg_num(out, v.y);
            out += " ";
        }
        out += "\" fill=\"";
        out += fill;
        out += "\" fill-opacity=\"0.35\" stroke=\"";
        out += highlighted ? "#000000" : "#555555";
        out += "\" stroke-width=\"";
        detail::svg_num(out, highlighted ? 2.2 * stroke : stroke);
        out += "\"/>\n";
    }

    for (const auto& t : overlays.triangles) {
        out += "<polygon points=\"";
        for (const Point& v : t) {
            detail::svg_num(out, v.x);
            out += ",";
            detail::svg_num(out, v.y);
            out += " ";
        }
        out += "\" fill=\"#2a7fff\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
    }
    for (const auto& d : overlays.disks) {
        out += "<circle cx=\"";
        detail::svg_num(out, d.centre.x);
        out += "\" cy=\"";
        detail::svg_num(out, d.centre.y);
        out += "\" r=\"";
        detail::svg_num(out, d.r);
        out += "\" fill=\"#2a7fff\" fill-opacity=\"0.2\" stroke=\"#2a7fff\" stroke-width=\"";
        detail::svg_num(out, 0.5 * stroke);
        out += "\"/>\n";
    }
    for (const auto& h : overlays.half_disks) {
        // Half disk: arc from dir+90 to dir-90 around the centre, closed by
        // the diameter chord.
        const Point a = h.centre + h.r * unit_vec(h.dir + kHalfPi);
        const Point b = h.centre + h.r * unit_vec(h.dir - kHalfPi);
        out += "<path d=\"M ";
        detail::svg_num(out, a.x);
        out += " ";
        detail::svg_num(out, a.y);
        out += " A ";
        detail::svg_num(out, h.r);
        out += " ";
        detail::svg_num(out, h.r);
        out += " 0 0 0 ";
        detail::svg_num(out, b.x);
        out += " ";
        detail::svg_num(out, b.y);
        out += " Z\" fill=\"none\" stroke=\"#444444\" stroke-dasharray=\"0.05,0.03\" "
               "stroke-width=\"";
        detail::svg_num(out, stroke);
        out += "\"/>\n";
    }

    for (std::size_t i = 0; i < overlays.points.size(); ++i) {
        const Point& p = overlays.points[i];
        out += "<circle cx=\"";
        detail::svg_num(out, p.x);
        out += "\" cy=\"";
        detail::svg_num(out, p.y);
        out += "\" r=\"";
        detail::svg_num(out, 1.8 * stroke);
        out += "\" fill=\"#c00000\"/>\n";
        const int label =
            i < overlays.point_labels.size() ? overlays.point_labels[i] : static_cast<int>(i);
        out += "<text x=\"";
        detail::svg_num(out, p.x + 2.5 * stroke);
        out += "\" y=\"";
        detail::svg_num(out, p.y + 2.5 * stroke);
        out += "\" font-size=\"";
        detail::svg_num(out, 8 * stroke);
        out += "\" transform=\"scale(1,-1) translate(0,";
        detail::svg_num(out, -2.0 * (p.y + 2.5 * stroke));
        out += ")\">";
        out += std::to_string(label);
        out += "</text>\n";
    }

    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace sqhit
