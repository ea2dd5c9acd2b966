#pragma once

#include <span>

#include "fracvolve/geometry.hpp"

namespace fracvolve::quad {

/// Quadrature node in barycentric coordinates; weights sum to 1 over a rule.
struct TriNode {
    double l1, l2, l3;
    double w;
};

/// Edge-midpoint rule, exact for polynomials of degree 2.
std::span<const TriNode> triangle_degree2();

/// Seven-node rule, exact for polynomials of degree 5.
std::span<const TriNode> triangle_degree5();

/// Gauss-Legendre nodes and weights on [-1, 1]; n in {1, 2, 3, 4, 5, 6}.
struct GaussRule {
    std::span<const double> nodes;
    std::span<const double> weights;
};
GaussRule gauss_legendre(int n);

/// Integrate f over the triangle (a, b, c).
template <class F>
double integrate_triangle(const Point& a, const Point& b, const Point& c, const F& f,
                          std::span<const TriNode> rule) {
    const double area = std::abs(signed_triangle_area(a, b, c));
    double sum = 0.0;
    for (const TriNode& q : rule) {
        const Point p{q.l1 * a.x + q.l2 * b.x + q.l3 * c.x,
                      q.l1 * a.y + q.l2 * b.y + q.l3 * c.y};
        sum += q.w * f(p);
    }
    return area * sum;
}

/// Integrate f over the segment [a, b] on the x axis.
template <class F>
double integrate_interval(double a, double b, const F& f, int gauss_points) {
    const GaussRule rule = gauss_legendre(gauss_points);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

/// Integrate f along the straight segment from p1 to p2 (arc-length measure).
template <class F>
double integrate_segment(const Point& p1, const Point& p2, const F& f, int gauss_points) {
    const GaussRule rule = gauss_legendre(gauss_points);
    const double len = (p2 - p1).norm();
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = 0.5 * (1.0 + rule.nodes[i]);
        const Point p = p1 + (p2 - p1) * t;
        sum += 0.5 * rule.weights[i] * f(p);
    }
    return len * sum;
}

}  // namespace fracvolve::quad
