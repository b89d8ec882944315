#include "ngs/geometry.hpp"

#include <cmath>

namespace ngs {

Mat3 Grasp::rotation_matrix() const { return euler_to_matrix(rot); }

PointMap deproject(const RGBDFrame& frame, const CameraIntrinsics& k) {
    k.validate();
    if (!frame.depth.same_shape(k.width, k.height))
        throw std::invalid_argument("deproject: frame dimensions do not match intrinsics");

    PointMap pm;
    pm.xyz = Image<Vec3>(k.width, k.height, Vec3::Zero());
    pm.valid = Mask(k.width, k.height, 0);
    for (int v = 0; v < k.height; ++v) {
        for (int u = 0; u < k.width; ++u) {
            if (!frame.valid.at(u, v)) continue;
            const double z = frame.depth.at(u, v);
            pm.xyz.at(u, v) = Vec3((u - k.cx) * z / k.fx, (v - k.cy) * z / k.fy, z);
            pm.valid.at(u, v) = 1;
        }
    }
    return pm;
}

Vec3 project(const Vec3& p, const CameraIntrinsics& k) {
    if (p.z() <= 0.0)
        throw std::domain_error("project: point behind the camera");
    return Vec3(k.fx * p.x() / p.z() + k.cx, k.fy * p.y() / p.z() + k.cy, p.z());
}

Mat3 rotation_z(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 m;
    m << c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0;
    return m;
}

Mat3 rotation_y(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 m;
    m << c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c;
    return m;
}

Mat3 rotation_x(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 m;
    m << 1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c;
    return m;
}

Mat3 euler_to_matrix(const EulerRotation& r) {
    return rotation_z(r.theta) * rotation_x(r.beta) * rotation_y(r.gamma);
}

std::optional<EulerRotation> try_matrix_to_euler(const Mat3& m) {
    // For M = Rz(t)Rx(b)Ry(g):
    //   m(2,1) = sin b
    //   m(2,0) = -cos b sin g,  m(2,2) = cos b cos g
    //   m(0,1) = -sin t cos b,  m(1,1) = cos t cos b
    const double sb = std::clamp(m(2, 1), -1.0, 1.0);
    const double cb = std::sqrt(std::max(0.0, 1.0 - sb * sb));
    constexpr double kDegenerate = 1e-12;
    if (cb < kDegenerate) return std::nullopt;  // gimbal: theta/gamma not separable

    EulerRotation r;
    r.beta = std::asin(sb);
    r.gamma = std::atan2(-m(2, 0), m(2, 2));
    r.theta = std::atan2(-m(0, 1), m(1, 1));
    // cos(beta) >= 0 on the canonical branch, so atan2 already lands in
    // (-pi, pi]; the representation only exists when both stay in [-pi/2, pi/2].
    constexpr double kRangeTol = 1e-9;
    if (std::abs(r.gamma) > kHalfPi + kRangeTol || std::abs(r.theta) > kHalfPi + kRangeTol)
        return std::nullopt;
    r.gamma = std::clamp(r.gamma, -kHalfPi, kHalfPi);
    r.theta = std::clamp(r.theta, -kHalfPi, kHalfPi);
    return r;
}

EulerRotation matrix_to_euler(const Mat3& m) {
    auto r = try_matrix_to_euler(m);
    if (!r)
        throw std::domain_error(
            "matrix_to_euler: non-canonical rotation (gimbal-degenerate or out of range)");
    return *r;
}

double rotation_geodesic(const Mat3& r1, const Mat3& r2) {
    const double tr = (r1.transpose() * r2).trace();
    return std::acos(std::clamp((tr - 1.0) / 2.0, -1.0, 1.0));
}

}  // namespace ngs
