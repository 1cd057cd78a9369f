#pragma once

#include <Eigen/Core>

#include <array>
#include <functional>
#include <string>

namespace nippas {

using Vector = Eigen::VectorXd;

/// Axis-aligned box [lo_0, hi_0] x ... x [lo_{d-1}, hi_{d-1}] enclosing the
/// random space. Requires lo[i] < hi[i] for every axis.
struct BoundingBox {
    Vector lo;
    Vector hi;

    BoundingBox() = default;
    BoundingBox(Vector lo_in, Vector hi_in);

    static BoundingBox unit(int dim);  // [0,1]^d

    int dim() const { return static_cast<int>(lo.size()); }
    double width(int axis) const { return hi[axis] - lo[axis]; }
    double diameter() const { return (hi - lo).norm(); }
    double volume() const;
    bool inside(const Vector& z) const;
    Vector clamp(const Vector& z) const;
};

enum class DomainKind { hypercube, triangle, disc, holes, simplex2d, custom };

std::string to_string(DomainKind kind);

/// A (possibly non-hypercube) random space: a bounding box plus a 0/1
/// indicator. The box is the smallest axis-aligned box containing the region,
/// which is also the box the interpolation basis lives on. Boundary points
/// count as inside (all defining inequalities are non-strict).
class Domain {
public:
    using Indicator = std::function<bool(const Vector&)>;

    static Domain hypercube(BoundingBox box);
    /// Equilateral triangle with corners (0,0), (2pi,0), (pi, sqrt(3) pi):
    /// z2 >= 0, z2 - sqrt(3) z1 <= 0, sqrt(3) z1 + z2 <= 2 pi sqrt(3).
    static Domain triangle();
    /// Disc (z1-pi)^2 + (z2-pi)^2 <= pi^2.
    static Domain disc();
    /// [0,2pi]^2 minus three discs: centers (pi,pi), (pi/3,pi/3),
    /// (5pi/3,5pi/3) with radii pi/2, pi/5, pi/3.
    static Domain holes();
    /// Unit triangle {s1,s2 >= 0, s1+s2 <= 1} in chart coordinates.
    static Domain simplex2d();
    static Domain custom(BoundingBox box, Indicator indicator, double volume);

    /// Indicator evaluation; throws on dimension mismatch.
    bool contains(const Vector& z) const;

    const BoundingBox& box() const { return box_; }
    DomainKind kind() const { return kind_; }
    int dim() const { return box_.dim(); }
    /// Lebesgue measure of the region (exact for the built-in kinds).
    double volume() const { return volume_; }

private:
    Domain(DomainKind kind, BoundingBox box, Indicator indicator, double volume);

    DomainKind kind_;
    BoundingBox box_;
    Indicator indicator_;
    double volume_;
};

/// Affine chart of a planar triangle embedded in R^3. Chart coordinates
/// (s1, s2) live on the unit triangle; the map is the barycentric combination
/// s1 c1 + s2 c2 + (1 - s1 - s2) c3.
class SimplexChart {
public:
    SimplexChart(const Eigen::Vector3d& c1, const Eigen::Vector3d& c2,
                 const Eigen::Vector3d& c3);

    /// The (g, h_l, v_l) parameter triangle of the dambreak study, with
    /// corners (12, 0.5, -0.5), (8, 1.5, -0.5), (8, 0.5, 0.5).
    static SimplexChart swe_parameters();

    /// Throws if (s1, s2) lies outside the unit triangle (tolerance 1e-12).
    Eigen::Vector3d to_ambient(double s1, double s2) const;
    Eigen::Vector3d to_ambient(const Vector& s) const;

    const Eigen::Vector3d& corner(int i) const { return corners_[i]; }
    /// Area of the embedded triangle.
    double area() const;

private:
    std::array<Eigen::Vector3d, 3> corners_;
};

}  // namespace nippas
