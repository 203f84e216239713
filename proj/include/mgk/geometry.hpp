#pragma once

#include <cmath>

namespace mgk {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

// Distance from p to the closed segment [a, b].
double point_segment_distance(Point2 p, Point2 a, Point2 b);

// Distance between the closed segments [a1, b1] and [a2, b2]; zero if they
// intersect. Closest-point parameterization with clamping, no exact predicates.
double segment_segment_distance(Point2 a1, Point2 b1, Point2 a2, Point2 b2);

// Planar isometry p -> R(angle) * (reflect ? (x, -y) : (x, y)) + t.
struct Isometry {
    double angle = 0.0;
    Point2 translation{};
    bool reflect = false;

    Point2 apply(Point2 p) const {
        if (reflect) p.y = -p.y;
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * p.x - s * p.y + translation.x,
                s * p.x + c * p.y + translation.y};
    }
};

} // namespace mgk
