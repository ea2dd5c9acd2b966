#pragma once

#include <cmath>

namespace fracvolve {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

// Points and vectors share the representation; 1D code leaves y at 0.
using Point = Vec2;

inline Point midpoint(const Point& a, const Point& b) {
    return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
}

/// 2x2 coefficient matrix; diffusion tensors are expected symmetric.
/// 1D problems use only a11.
struct Mat2 {
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    Vec2 apply(const Vec2& v) const {
        return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
    }
    double max_abs() const {
        return std::max(std::max(std::abs(a11), std::abs(a12)),
                        std::max(std::abs(a21), std::abs(a22)));
    }
    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 isotropic(double a) { return {a, 0.0, 0.0, a}; }
};

/// Axis-aligned rectangle used as the 2D computational domain.
struct Rect {
    double x0 = 0.0, y0 = 0.0;
    double x1 = 1.0, y1 = 1.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
    static Rect unit_square() { return {0.0, 0.0, 1.0, 1.0}; }
};

/// Signed area; positive for counterclockwise vertex order.
inline double signed_triangle_area(const Point& a, const Point& b, const Point& c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

}  // namespace fracvolve
