#pragma once

// Core types and predicates for rotated closed squares in the plane.
// All squares are closed sets; touching counts as intersecting and boundary
// points count as hitting. Ties are resolved toward intersection with a
// single absolute tolerance.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqhit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGeometry : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double x_, double y_) : x(x_), y(y_) {
        if (!std::isfinite(x) || !std::isfinite(y))
            throw InvalidGeometry("Point: coordinates must be finite");
    }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, const Point& a) { return {s * a.x, s * a.y}; }
inline Point operator*(const Point& a, double s) { return {s * a.x, s * a.y}; }

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }
inline double dist(const Point& a, const Point& b) { return norm(a - b); }
inline Point midpoint(const Point& a, const Point& b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }
inline Point unit_vec(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline Point rotated(const Point& p, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

struct Tolerance {
    double eps = 1e-9;

    Tolerance() = default;
    explicit Tolerance(double e) : eps(e) {
        if (!(e > 0.0 && e < 1e-3))
            throw InvalidGeometry("Tolerance: eps must be in (0, 1e-3)");
    }
};

// rot is normalized into [0, pi/2): the square's symmetry group makes larger
// ranges redundant. The vertex direction convention puts vertex k at
// centre + (side/sqrt(2)) * u(rot + pi/4 + k*pi/2), counter-clockwise.
struct Square {
    Point centre;
    double side = 1.0;
    double rot = 0.0;

    Square() = default;
    Square(Point c, double side_, double rot_ = 0.0) : centre(c), side(side_) {
        if (!std::isfinite(side) || side <= 0.0)
            throw InvalidGeometry("Square: side must be positive and finite");
        if (!std::isfinite(rot_)) throw InvalidGeometry("Square: rot must be finite");
        rot = std::fmod(rot_, kHalfPi);
        if (rot < 0.0) rot += kHalfPi;
        if (rot >= kHalfPi) rot = 0.0;
    }

    double half() const { return side / 2.0; }
    double circumradius() const { return side * kSqrt2 / 2.0; }
};

// Direction of the vertex in the non-negative quadrant, in [0, pi/2);
// equals pi/4 for an axis-parallel square.
inline double vertex_angle(const Square& s) {
    double a = std::fmod(s.rot + kPi / 4.0, kHalfPi);
    if (a < 0.0) a += kHalfPi;
    if (a >= kHalfPi) a = 0.0;
    return a;
}

inline Square square_from_vertex_angle(Point centre, double side, double angle) {
    return Square(centre, side, angle - kPi / 4.0);
}

inline std::array<Point, 4> vertices(const Square& s) {
    std::array<Point, 4> v;
    const double r = s.side / kSqrt2;
    for (int k = 0; k < 4; ++k) {
        const double a = s.rot + kPi / 4.0 + k * kHalfPi;
        v[k] = s.centre + r * unit_vec(a);
    }
    return v;
}

// Coordinates of p in the square's frame (centre at origin, sides axis-parallel).
inline Point to_frame(const Square& s, const Point& p) {
    return rotated(p - s.centre, -s.rot);
}

inline Point from_frame(const Square& s, const Point& p) {
    return s.centre + rotated(p, s.rot);
}

inline bool contains_point(const Square& s, const Point& p, const Tolerance& tol = {}) {
    const Point q = to_frame(s, p);
    const double h = s.half() + tol.eps;
    return std::abs(q.x) <= h && std::abs(q.y) <= h;
}

inline double dist_point_square(const Point& p, const Square& s) {
    const Point q = to_frame(s, p);
    const double dx = std::max(std::abs(q.x) - s.half(), 0.0);
    const double dy = std::max(std::abs(q.y) - s.half(), 0.0);
    return std::hypot(dx, dy);
}

// Separating-axis test over the four side normals; a gap of at most eps on
// every axis counts as intersecting (closed squares, touching included).
inline bool squares_intersect(const Square& a, const Square& b, const Tolerance& tol = {}) {
    const Point d = b.centre - a.centre;
    const std::array<double, 4> axes = {a.rot, a.rot + kHalfPi, b.rot, b.rot + kHalfPi};
    for (double axis : axes) {
        const Point u = unit_vec(axis);
        const double ext_a =
            a.half() * (std::abs(std::cos(axis - a.rot)) + std::abs(std::sin(axis - a.rot)));
        const double ext_b =
            b.half() * (std::abs(std::cos(axis - b.rot)) + std::abs(std::sin(axis - b.rot)));
        if (std::abs(dot(d, u)) > ext_a + ext_b + tol.eps) return false;
    }
    return true;
}

// Crossing pair: intersecting, but no vertex of either square lies in the
// other. Crossing squares each contain the other's centre.
inline bool squares_cross(const Square& a, const Square& b, const Tolerance& tol = {}) {
    if (!squares_intersect(a, b, tol)) return false;
    for (const Point& v : vertices(a))
        if (contains_point(b, v, tol)) return false;
    for (const Point& v : vertices(b))
        if (contains_point(a, v, tol)) return false;
    return true;
}

// Signed distance of p to the boundary of s: negative inside, positive outside.
inline double signed_dist_point_square(const Point& p, const Square& s) {
    const Point q = to_frame(s, p);
    const double dx = std::abs(q.x) - s.half();
    const double dy = std::abs(q.y) - s.half();
    if (dx <= 0.0 && dy <= 0.0) return std::max(dx, dy);
    return std::hypot(std::max(dx, 0.0), std::max(dy, 0.0));
}

namespace detail {

// Appends all intersection points of segments [p,p+r] and [a,a+s_vec].
// Coincident overlaps contribute the overlap's endpoints only.
inline void segment_intersections(const Point& p, const Point& r, const Point& a,
                                  const Point& s_vec, double eps, std::vector<Point>& out) {
    const double rr = norm(r), ss = norm(s_vec);
    if (rr < eps || ss < eps) return;
    const double denom = cross(r, s_vec);
    const Point ap = a - p;
    if (std::abs(denom) > eps * rr * ss) {
        const double t = cross(ap, s_vec) / denom;
        const double u = cross(ap, r) / denom;
        const double t_tol = eps / rr, u_tol = eps / ss;
        if (t >= -t_tol && t <= 1.0 + t_tol && u >= -u_tol && u <= 1.0 + u_tol)
            out.push_back(p + t * r);
        return;
    }
    // Parallel; collinear only if a is on the line through p.
    if (std::abs(cross(ap, r)) > eps * rr) return;
    const double inv = 1.0 / (rr * rr);
    double t0 = dot(ap, r) * inv;
    double t1 = dot(a + s_vec - p, r) * inv;
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(t0, 0.0), hi = std::min(t1, 1.0);
    if (lo <= hi + eps / rr) {
        out.push_back(p + lo * r);
        out.push_back(p + hi * r);
    }
}

inline void dedup_points(std::vector<Point>& pts, double eps) {
    std::vector<Point> kept;
    for (const Point& p : pts) {
        bool dup = false;
        for (const Point& q : kept)
            if (dist(p, q) <= eps) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(p);
    }
    pts = std::move(kept);
}

}  // namespace detail

// All intersection points of the two square boundaries, deduplicated within tol.
inline std::vector<Point> boundary_intersections(const Square& a, const Square& b,
                                                 const Tolerance& tol = {}) {
    std::vector<Point> out;
    const auto va = vertices(a);
    const auto vb = vertices(b);
    for (int i = 0; i < 4; ++i) {
        const Point p = va[i];
        const Point r = va[(i + 1) % 4] - p;
        for (int j = 0; j < 4; ++j) {
            const Point q = vb[j];
            const Point s_vec = vb[(j + 1) % 4] - q;
            detail::segment_intersections(p, r, q, s_vec, tol.eps, out);
        }
    }
    detail::dedup_points(out, tol.eps);
    return out;
}

struct InnerOuterDisk {
    Point centre;
    double r_in = 0.0;
    double r_out = 0.0;
};

inline InnerOuterDisk inner_outer_disk(const Square& s) {
    return {s.centre, s.half(), s.circumradius()};
}

struct SquareFamily {
    std::vector<Square> squares;
    Tolerance tol;

    SquareFamily() = default;
    explicit SquareFamily(std::vector<Square> sq, Tolerance t = {})
        : squares(std::move(sq)), tol(t) {}

    std::size_t size() const { return squares.size(); }
    bool empty() const { return squares.empty(); }
    const Square& operator[](std::size_t i) const { return squares[i]; }
};

inline bool is_unit_family(const SquareFamily& fam) {
    if (fam.empty()) return true;
    const double s0 = fam.squares.front().side;
    for (const Square& s : fam.squares)
        if (std::abs(s.side - s0) > fam.tol.eps) return false;
    return true;
}

inline bool is_axis_parallel(const Square& s, const Tolerance& tol = {}) {
    return s.rot <= tol.eps || s.rot >= kHalfPi - tol.eps;
}

inline bool is_axis_parallel_family(const SquareFamily& fam) {
    for (const Square& s : fam.squares)
        if (!is_axis_parallel(s, fam.tol)) return false;
    return true;
}

}  // namespace sqhit
