#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "sepspace/error.hpp"

namespace sepspace::geom {

struct Vec2 {
    double x = 0;
    double y = 0;
    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::sqrt(x * x + y * y); }
};

struct Disk {
    Vec2 c;
    double r = 1;
};

/// Simple polygon, vertices in order, implicitly closed.
struct Poly {
    std::vector<Vec2> pts;
};

using Shape = std::variant<Disk, Poly>;

double perimeter(const Shape& s);

/// Boundary point at perimeter parameter t in [0,1); disks start at angle 0,
/// polygons at vertex 0, both walked counterclockwise in their own order.
Vec2 boundary_at(const Shape& s, double t);

/// Forward boundary direction (unit) at parameter t.
Vec2 tangent_at(const Shape& s, double t);

bool point_inside(const Shape& s, Vec2 p, double eps); // strict interior
double boundary_distance(const Shape& s, Vec2 p);      // distance to the boundary curve

struct Crossing {
    double ta; // parameter on a's boundary
    double tb; // parameter on b's boundary
    Vec2 p;
};

/// Proper boundary crossings of two shapes. Tangency — boundaries touching
/// without crossing, including vertex-on-boundary contacts — raises
/// DEGENERATE_TANGENCY rather than being perturbed away.
std::vector<Crossing> boundary_crossings(const Shape& a, const Shape& b, double eps);

/// a strictly contains b; callers ensure the pair has no boundary crossings.
bool contains(const Shape& a, const Shape& b, double eps);

/// Nonempty intersection: crossing boundaries or containment either way.
bool intersects(const Shape& a, const Shape& b, double eps);

} // namespace sepspace::geom
