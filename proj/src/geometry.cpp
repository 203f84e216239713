#include "mgk/geometry.hpp"

#include <algorithm>

namespace mgk {

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return distance(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + t * ab);
}

double segment_segment_distance(Point2 a1, Point2 b1, Point2 a2, Point2 b2) {
    const Point2 d1 = b1 - a1;
    const Point2 d2 = b2 - a2;
    const Point2 r = a1 - a2;
    const double denom = cross(d1, d2);
    if (denom != 0.0) {
        const double t = cross(d2, r) / denom;
        const double s = cross(d1, r) / denom;
        if (t >= 0.0 && t <= 1.0 && s >= 0.0 && s <= 1.0) return 0.0;
    }
    return std::min({point_segment_distance(a1, a2, b2),
                     point_segment_distance(b1, a2, b2),
                     point_segment_distance(a2, a1, b1),
                     point_segment_distance(b2, a1, b1)});
}

} // namespace mgk
