#include "nippas/geometry.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace nippas {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

BoundingBox::BoundingBox(Vector lo_in, Vector hi_in)
    : lo(std::move(lo_in)), hi(std::move(hi_in)) {
    if (lo.size() == 0 || lo.size() != hi.size())
        throw std::invalid_argument("BoundingBox: lo/hi must be non-empty and equal-sized");
    for (int i = 0; i < dim(); ++i)
        if (!(lo[i] < hi[i]))
            throw std::invalid_argument("BoundingBox: requires lo[i] < hi[i]");
}

BoundingBox BoundingBox::unit(int d) {
    return BoundingBox(Vector::Zero(d), Vector::Ones(d));
}

double BoundingBox::volume() const {
    double v = 1.0;
    for (int i = 0; i < dim(); ++i) v *= width(i);
    return v;
}

bool BoundingBox::inside(const Vector& z) const {
    if (z.size() != lo.size()) throw std::invalid_argument("BoundingBox: dimension mismatch");
    for (int i = 0; i < dim(); ++i)
        if (z[i] < lo[i] || z[i] > hi[i]) return false;
    return true;
}

Vector BoundingBox::clamp(const Vector& z) const {
    Vector out = z;
    for (int i = 0; i < dim(); ++i) out[i] = std::clamp(out[i], lo[i], hi[i]);
    return out;
}

std::string to_string(DomainKind kind) {
    switch (kind) {
        case DomainKind::hypercube: return "hypercube";
        case DomainKind::triangle: return "triangle";
        case DomainKind::disc: return "disc";
        case DomainKind::holes: return "holes";
        case DomainKind::simplex2d: return "simplex2d";
        case DomainKind::custom: return "custom";
    }
    return "unknown";
}

Domain::Domain(DomainKind kind, BoundingBox box, Indicator indicator, double volume)
    : kind_(kind), box_(std::move(box)), indicator_(std::move(indicator)), volume_(volume) {}

Domain Domain::hypercube(BoundingBox box) {
    double vol = box.volume();
    return Domain(DomainKind::hypercube, std::move(box),
                  [](const Vector&) { return true; }, vol);
}

Domain Domain::triangle() {
    const double s3 = std::sqrt(3.0);
    Vector lo(2), hi(2);
    lo << 0.0, 0.0;
    hi << kTwoPi, s3 * kPi;
    auto ind = [s3](const Vector& z) {
        return z[1] >= 0.0 && z[1] - s3 * z[0] <= 0.0 && s3 * z[0] + z[1] <= kTwoPi * s3;
    };
    // equilateral, side 2pi
    double vol = s3 / 4.0 * kTwoPi * kTwoPi;
    return Domain(DomainKind::triangle, BoundingBox(lo, hi), ind, vol);
}

Domain Domain::disc() {
    Vector lo(2), hi(2);
    lo << 0.0, 0.0;
    hi << kTwoPi, kTwoPi;
    auto ind = [](const Vector& z) {
        const double dx = z[0] - kPi, dy = z[1] - kPi;
        return dx * dx + dy * dy <= kPi * kPi;
    };
    return Domain(DomainKind::disc, BoundingBox(lo, hi), ind, kPi * kPi * kPi);
}

Domain Domain::holes() {
    Vector lo(2), hi(2);
    lo << 0.0, 0.0;
    hi << kTwoPi, kTwoPi;
    auto in_disc = [](const Vector& z, double cx, double cy, double r) {
        const double dx = z[0] - cx, dy = z[1] - cy;
        return dx * dx + dy * dy <= r * r;
    };
    auto ind = [in_disc](const Vector& z) {
        if (z[0] < 0.0 || z[0] > kTwoPi || z[1] < 0.0 || z[1] > kTwoPi) return false;
        if (in_disc(z, kPi, kPi, kPi / 2.0)) return false;
        if (in_disc(z, kPi / 3.0, kPi / 3.0, kPi / 5.0)) return false;
        if (in_disc(z, 5.0 * kPi / 3.0, 5.0 * kPi / 3.0, kPi / 3.0)) return false;
        return true;
    };
    // the three discs are pairwise disjoint and contained in the square
    double holes_area = kPi * (kPi * kPi / 4.0 + kPi * kPi / 25.0 + kPi * kPi / 9.0);
    double vol = kTwoPi * kTwoPi - holes_area;
    return Domain(DomainKind::holes, BoundingBox(lo, hi), ind, vol);
}

Domain Domain::simplex2d() {
    auto ind = [](const Vector& s) {
        return s[0] >= 0.0 && s[1] >= 0.0 && s[0] + s[1] <= 1.0;
    };
    return Domain(DomainKind::simplex2d, BoundingBox::unit(2), ind, 0.5);
}

Domain Domain::custom(BoundingBox box, Indicator indicator, double volume) {
    if (!indicator) throw std::invalid_argument("Domain::custom: null indicator");
    if (!(volume > 0.0)) throw std::invalid_argument("Domain::custom: volume must be positive");
    return Domain(DomainKind::custom, std::move(box), std::move(indicator), volume);
}

bool Domain::contains(const Vector& z) const {
    if (z.size() != box_.lo.size())
        throw std::invalid_argument("Domain::contains: dimension mismatch");
    return box_.inside(z) && indicator_(z);
}

SimplexChart::SimplexChart(const Eigen::Vector3d& c1, const Eigen::Vector3d& c2,
                           const Eigen::Vector3d& c3)
    : corners_{c1, c2, c3} {}

SimplexChart SimplexChart::swe_parameters() {
    return SimplexChart(Eigen::Vector3d(12.0, 0.5, -0.5),
                        Eigen::Vector3d(8.0, 1.5, -0.5),
                        Eigen::Vector3d(8.0, 0.5, 0.5));
}

Eigen::Vector3d SimplexChart::to_ambient(double s1, double s2) const {
    constexpr double tol = 1e-12;
    if (s1 < -tol || s2 < -tol || s1 + s2 > 1.0 + tol)
        throw std::invalid_argument("SimplexChart: point outside unit triangle");
    return s1 * corners_[0] + s2 * corners_[1] + (1.0 - s1 - s2) * corners_[2];
}

Eigen::Vector3d SimplexChart::to_ambient(const Vector& s) const {
    if (s.size() != 2) throw std::invalid_argument("SimplexChart: chart point must be 2D");
    return to_ambient(s[0], s[1]);
}

double SimplexChart::area() const {
    Eigen::Vector3d u = corners_[0] - corners_[2];
    Eigen::Vector3d v = corners_[1] - corners_[2];
    return 0.5 * u.cross(v).norm();
}

}  // namespace nippas
