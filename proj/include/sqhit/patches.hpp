#pragma once

// Patch toolkit: predicates and certifiers proving that a point set hits
// every large-enough square whose centre lies in a "patched" region
// (triangle, Thales half-plane, disk, or convex polygon).

#include <cassert>
#include <cstddef>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "sqhit/geometry.hpp"

namespace sqhit {

struct MalformedPolygon : Error {
    using Error::Error;
};

struct ResolutionTooCoarse : Error {
    using Error::Error;
};

struct PatchCertificate {
    enum class Kind { Triangle, Thales, Circular, Polygon };

    Kind kind = Kind::Triangle;
    std::vector<Point> anchor_points;
    std::vector<Point> region_points;  // triangle vertices / polygon ring
    Point region_centre;               // disk centre (Circular)
    double region_radius = 0.0;        // disk radius (Circular)
    double min_side = 1.0;             // smallest square side the guarantee covers
    double margin = 0.0;               // certified slack where applicable
};

// Union of equal squares sharing a centre while the vertex angle runs over
// [angle_lo, angle_hi] (pi/4 = axis-parallel).
struct SweptSquare {
    Point centre;
    double side = 1.0;
    double angle_lo = 0.0;
    double angle_hi = 0.0;

    SweptSquare() = default;
    SweptSquare(Point c, double side_, double lo, double hi)
        : centre(c), side(side_), angle_lo(lo), angle_hi(hi) {
        if (!(side_ > 0.0)) throw InvalidGeometry("SweptSquare: side must be positive");
        if (!(lo <= hi)) throw InvalidGeometry("SweptSquare: angle_lo must be <= angle_hi");
    }

    Square at(double ang) const { return square_from_vertex_angle(centre, side, ang); }
};

// Certified lower bound on the distance from q to the swept region.
// Sampled at dyadic refinements up to `resolution` intervals; each level's
// raw minimum is corrected by the Lipschitz drift h * side * sqrt(2)/4
// (boundary points move at speed at most side * sqrt(2)/2 per radian).
// The returned bound is the best over levels, so it is non-decreasing in
// resolution by construction.
inline double dist_point_swept(const Point& q, const SweptSquare& sw, int resolution = 4096,
                               const Tolerance& tol = {}) {
    if (resolution < 1) throw PreconditionViolated("dist_point_swept: resolution must be >= 1");
    const double span = sw.angle_hi - sw.angle_lo;
    if (span <= 0.0) return dist_point_square(q, sw.at(sw.angle_lo));

    double best = -1.0;
    double raw_finest = 0.0;
    for (int k = 1;; k *= 2) {
        if (k > resolution) k = resolution;
        const double h = span / k;
        double raw = dist_point_square(q, sw.at(sw.angle_lo));
        for (int i = 1; i <= k; ++i)
            raw = std::min(raw, dist_point_square(q, sw.at(sw.angle_lo + i * h)));
        raw_finest = raw;
        if (raw <= tol.eps) return 0.0;  // a sampled square already reaches q
        best = std::max(best, raw - h * sw.side * kSqrt2 / 4.0);
        if (k == resolution) break;
    }
    if (best <= 0.0)
        throw ResolutionTooCoarse("dist_point_swept: Lipschitz correction exceeds sampled minimum " +
                                  std::to_string(raw_finest));
    return best;
}

// Triangular patch: three points pairwise at distance <= 1 hit every square
// of side >= 1 centred in their convex hull.
inline PatchCertificate triangle_patch(const Point& a, const Point& b, const Point& c,
                                       const Tolerance& tol = {}) {
    const double m = std::max({dist(a, b), dist(b, c), dist(a, c)});
    if (m > 1.0 + tol.eps)
        throw PreconditionViolated("triangle_patch: pairwise distance exceeds 1");
    PatchCertificate cert;
    cert.kind = PatchCertificate::Kind::Triangle;
    cert.anchor_points = {a, b, c};
    cert.region_points = {a, b, c};
    cert.min_side = 1.0;
    cert.margin = 1.0 - m;
    return cert;
}

// Circular patch: for sqrt(2)-1 <= dist(a,b) <= 1, every square of side >= 1
// centred in the disk B(q, sqrt(2)/2 - d) contains a or b, where q is the
// midpoint and d = dist(q, a).
inline PatchCertificate circular_patch(const Point& a, const Point& b, const Tolerance& tol = {}) {
    const double d_ab = dist(a, b);
    if (d_ab < kSqrt2 - 1.0 - tol.eps || d_ab > 1.0 + tol.eps)
        throw PreconditionViolated("circular_patch: dist(a,b) outside [sqrt(2)-1, 1]");
    PatchCertificate cert;
    cert.kind = PatchCertificate::Kind::Circular;
    cert.anchor_points = {a, b};
    cert.region_centre = midpoint(a, b);
    cert.region_radius = kSqrt2 / 2.0 - d_ab / 2.0;
    cert.min_side = 1.0;
    cert.margin = std::min(1.0 - d_ab, d_ab - (kSqrt2 - 1.0));
    return cert;
}

namespace detail {

inline bool segment_intersects_square(const Square& s, const Point& a, const Point& b,
                                      double eps) {
    // Slab clipping in the square's frame.
    const Point pa = to_frame(s, a);
    const Point pb = to_frame(s, b);
    const double h = s.half() + eps;
    double t0 = 0.0, t1 = 1.0;
    const double d[2] = {pb.x - pa.x, pb.y - pa.y};
    const double p[2] = {pa.x, pa.y};
    for (int axis = 0; axis < 2; ++axis) {
        if (std::abs(d[axis]) < 1e-300) {
            if (std::abs(p[axis]) > h) return false;
            continue;
        }
        double ta = (-h - p[axis]) / d[axis];
        double tb = (h - p[axis]) / d[axis];
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        if (t0 > t1) return false;
    }
    return true;
}

}  // namespace detail

// Hitting condition built on Thales' theorem: q the midpoint of [a,b],
// dist(q,c) >= dist(q,a), c in the square, line(a,b) separating the square's
// centre from c, and the square meeting [a,b]. When all hold, the square
// contains a or b; this is checked and a violation reported as a logic
// error, since the construction rules it out.
inline bool thales_patch_applies(const Point& a, const Point& b, const Point& c,
                                 const Square& square, const Tolerance& tol = {}) {
    const double d_ab = dist(a, b);
    if (d_ab > 1.0 + tol.eps)
        throw PreconditionViolated("thales_patch_applies: dist(a,b) exceeds 1");
    if (std::abs(square.side - 1.0) > tol.eps)
        throw PreconditionViolated("thales_patch_applies: stated for unit squares");
    if (d_ab <= tol.eps) return false;  // no separating line through a single point

    const Point q = midpoint(a, b);
    if (dist(q, c) < dist(q, a) - tol.eps) return false;
    if (!contains_point(square, c, tol)) return false;

    // Strict separation of c and the centre by line(a,b).
    const Point ab = b - a;
    const double side_c = cross(ab, c - a);
    const double side_ctr = cross(ab, square.centre - a);
    const double scale = d_ab;
    if (std::abs(side_c) <= tol.eps * scale || std::abs(side_ctr) <= tol.eps * scale)
        return false;
    if (side_c * side_ctr >= 0.0) return false;

    if (!detail::segment_intersects_square(square, a, b, tol.eps)) return false;

    if (!contains_point(square, a, tol) && !contains_point(square, b, tol))
        throw std::logic_error("thales_patch_applies: hypotheses hold but neither a nor b is hit");
    return true;
}

using HitterTarget = std::variant<Square, SweptSquare>;

enum class CertifyMode { Unconditional, SeparatedOnly };

struct PolygonCheck {
    bool ok = false;
    // 0 = pass; 1/2/3 = first failing condition (vertex distance, side length,
    // side separation), with the offending index.
    int failing_condition = 0;
    int failing_index = -1;
    // Certified slack: min over side-length and separation conditions. Vertex
    // distances are validated within tolerance but anchors may sit exactly on
    // the unit circle, so they do not enter the margin.
    double margin = 0.0;
    std::vector<double> side_length_margins;
    std::vector<double> separation_margins;
    PatchCertificate certificate;
};

namespace detail {

inline double dist_to_target(const Point& q, const HitterTarget& target, int swept_resolution,
                             const Tolerance& tol) {
    if (std::holds_alternative<Square>(target))
        return dist_point_square(q, std::get<Square>(target));
    return dist_point_swept(q, std::get<SweptSquare>(target), swept_resolution, tol);
}

inline bool point_in_convex_ring(const std::vector<Point>& ring, const Point& p, double eps) {
    const std::size_t k = ring.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % k];
        if (cross(b - a, p - a) < -eps) return false;
    }
    return true;
}

}  // namespace detail

// Certification that {p0, ring...} hits every unit square
// intersecting the target. Checks, with per-side margins:
//   (i)   dist(p0, p_i) <= 1
//   (ii)  dist(p_i, p_{i+1}) <= 1
//   (iii) dist(p_i, q_i) <= dist(q_i, target), q_i the side midpoint
// Unconditional mode requires (iii) on every side and yields the full
// guarantee; separated-only mode records per-side results and the guarantee
// is conditional on the separating-line clause at the point of use.
inline PolygonCheck polygon_hitter_certify(const Point& p0, const std::vector<Point>& ring,
                                           const HitterTarget& target,
                                           CertifyMode mode = CertifyMode::Unconditional,
                                           const Tolerance& tol = {}, int swept_resolution = 4096) {
    const std::size_t k = ring.size();
    if (k < 3) throw MalformedPolygon("polygon_hitter_certify: ring needs at least 3 points");

    // Convex and counter-clockwise, collinear consecutive sides allowed.
    double area2 = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % k];
        const Point& c = ring[(i + 2) % k];
        if (cross(b - a, c - b) < -tol.eps)
            throw MalformedPolygon("polygon_hitter_certify: ring is not convex ccw");
        area2 += cross(a, b);
    }
    if (area2 <= tol.eps) throw MalformedPolygon("polygon_hitter_certify: degenerate ring");

    if (mode == CertifyMode::Unconditional) {
        // target must lie inside conv(ring) for the interior-centre case.
        bool inside = true;
        if (std::holds_alternative<Square>(target)) {
            for (const Point& v : vertices(std::get<Square>(target)))
                inside = inside && detail::point_in_convex_ring(ring, v, tol.eps);
        } else {
            const SweptSquare& sw = std::get<SweptSquare>(target);
            const double r = sw.side * kSqrt2 / 2.0;
            for (std::size_t i = 0; i < k; ++i) {
                const Point& a = ring[i];
                const Point& b = ring[(i + 1) % k];
                const double len = dist(a, b);
                if (len <= tol.eps) continue;
                if (cross(b - a, sw.centre - a) / len < r - tol.eps) inside = false;
            }
        }
        if (!inside)
            throw PreconditionViolated("polygon_hitter_certify: target not inside the ring");
    }

    PolygonCheck res;
    res.side_length_margins.resize(k);
    res.separation_margins.resize(k);

    for (std::size_t i = 0; i < k; ++i) {
        if (dist(p0, ring[i]) > 1.0 + tol.eps) {
            res.failing_condition = 1;
            res.failing_index = static_cast<int>(i);
            return res;
        }
    }

    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % k];
        res.side_length_margins[i] = 1.0 - dist(a, b);
        const Point q = midpoint(a, b);
        res.separation_margins[i] =
            detail::dist_to_target(q, target, swept_resolution, tol) - dist(q, a);
    }

    for (std::size_t i = 0; i < k; ++i) {
        if (res.side_length_margins[i] < -tol.eps) {
            res.failing_condition = 2;
            res.failing_index = static_cast<int>(i);
            return res;
        }
        margin = std::min(margin, res.side_length_margins[i]);
    }
    if (mode == CertifyMode::Unconditional) {
        for (std::size_t i = 0; i < k; ++i) {
            if (res.separation_margins[i] < -tol.eps) {
                res.failing_condition = 3;
                res.failing_index = static_cast<int>(i);
                return res;
            }
            margin = std::min(margin, res.separation_margins[i]);
        }
    }

    res.ok = true;
    res.margin = margin;
    res.certificate.kind = PatchCertificate::Kind::Polygon;
    res.certificate.anchor_points.push_back(p0);
    for (const Point& p : ring) res.certificate.anchor_points.push_back(p);
    res.certificate.region_points = ring;
    res.certificate.min_side = 1.0;
    res.certificate.margin = margin;
    return res;
}

}  // namespace sqhit
