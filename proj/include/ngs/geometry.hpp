#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <optional>
#include <stdexcept>

#include "ngs/image.hpp"

namespace ngs {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

/// Gripper defaults shared across the pipeline: jaws open to 0.1 m and the
/// reference receptive field is twice that.
inline constexpr double kDefaultGripperWidth = 0.1;
inline constexpr double kDefaultReceptiveField = 2.0 * kDefaultGripperWidth;

struct CameraIntrinsics {
    double fx = 0.0;
    double fy = 0.0;
    double cx = 0.0;
    double cy = 0.0;
    int width = 0;
    int height = 0;

    void validate() const {
        if (fx <= 0.0 || fy <= 0.0)
            throw std::invalid_argument("CameraIntrinsics: focal lengths must be positive");
        if (cx < 0.0 || cx >= width || cy < 0.0 || cy >= height)
            throw std::invalid_argument("CameraIntrinsics: principal point outside image");
    }
};

/// Single-view RGBD input. Depth in meters; valid(u,v) implies depth(u,v) > 0.
/// Invalid pixels keep depth 0 (the file sentinel) rather than NaN.
struct RGBDFrame {
    Image<Vec3> rgb;
    Image<double> depth;
    Mask valid;

    int width() const { return depth.width(); }
    int height() const { return depth.height(); }
};

/// Per-pixel camera-frame coordinates derived from an RGBDFrame.
struct PointMap {
    Image<Vec3> xyz;
    Mask valid;

    int width() const { return xyz.width(); }
    int height() const { return xyz.height(); }
};

/// Intrinsic grasp rotation R = Rz(theta) * Rx(beta) * Ry(gamma),
/// all three angles constrained to [-pi/2, pi/2].
struct EulerRotation {
    double theta = 0.0;
    double gamma = 0.0;
    double beta = 0.0;

    bool in_range(double tol = 0.0) const {
        const double lim = kHalfPi + tol;
        return std::abs(theta) <= lim && std::abs(gamma) <= lim && std::abs(beta) <= lim;
    }
};

/// Camera-frame 6-DoF grasp: center t, rotation, jaw width and confidence.
struct Grasp {
    Vec3 t = Vec3::Zero();
    EulerRotation rot;
    double width = 0.0;
    double score = 0.0;

    Mat3 rotation_matrix() const;
    /// Jaw closing direction (gripper x-axis in camera frame).
    Vec3 closing_axis() const { return rotation_matrix().col(0); }
    /// Approach direction (gripper z-axis, pointing away from the camera).
    Vec3 approach() const { return rotation_matrix().col(2); }
};

/// Rigid transform x -> R*x + t.
struct Pose {
    Mat3 rotation = Mat3::Identity();
    Vec3 translation = Vec3::Zero();

    Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
    Vec3 apply_direction(const Vec3& d) const { return rotation * d; }
    Pose inverse() const {
        Pose inv;
        inv.rotation = rotation.transpose();
        inv.translation = -(inv.rotation * translation);
        return inv;
    }
};

/// Back-project a depth frame through the pinhole model. Invalid pixels stay
/// invalid with xyz = 0.
PointMap deproject(const RGBDFrame& frame, const CameraIntrinsics& k);

/// Forward pinhole projection of a camera-frame point: (u, v, depth).
Vec3 project(const Vec3& p, const CameraIntrinsics& k);

Mat3 rotation_z(double angle);
Mat3 rotation_y(double angle);
Mat3 rotation_x(double angle);

/// Rz(theta) * Rx(beta) * Ry(gamma).
Mat3 euler_to_matrix(const EulerRotation& r);

/// Inverse of euler_to_matrix on the canonical branch (beta = asin(m(2,1))).
/// Returns nullopt when the decomposition is gimbal-degenerate or any angle
/// falls outside [-pi/2, pi/2].
std::optional<EulerRotation> try_matrix_to_euler(const Mat3& m);

/// Throwing variant of try_matrix_to_euler; reports non-canonical rotations.
EulerRotation matrix_to_euler(const Mat3& m);

/// Geodesic distance between two rotations: the angle of r1^T * r2.
double rotation_geodesic(const Mat3& r1, const Mat3& r2);

}  // namespace ngs
