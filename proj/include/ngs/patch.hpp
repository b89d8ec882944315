#pragma once

#include <cstdint>
#include <vector>

#include "ngs/geometry.hpp"

namespace ngs {

/// Depth-adaptive crop request: a pixel center, its 3D counterpart, the crop
/// side in (fractional) source pixels and the resampled output size.
struct PatchSpec {
    double center_u = 0.0;
    double center_v = 0.0;
    Vec3 center_3d = Vec3::Zero();
    double side_px = 0.0;
    int out_size = 64;

    void validate() const {
        if (side_px <= 0.0) throw std::invalid_argument("PatchSpec: side_px must be positive");
        if (out_size < 8) throw std::invalid_argument("PatchSpec: out_size must be >= 8");
    }
};

/// S x S x 6 RGBXYZ crop in camera-frame units, plus validity mask.
struct RawPatch {
    Image<Vec3> rgb;
    Image<Vec3> xyz;
    Mask valid;
    PatchSpec spec;

    int size() const { return valid.width(); }
};

/// Table plane in camera frame; height(p) = normal . p - offset, with the
/// normal pointing from the table toward the camera side.
struct TablePlane {
    Vec3 normal = Vec3(0.0, 0.0, -1.0);
    double offset = 0.0;

    double height(const Vec3& p) const { return normal.dot(p) - offset; }

    /// Overhead-camera convention: the table is the constant-depth surface
    /// z = table_depth, so height = table_depth - z.
    static TablePlane from_camera_depth(double table_depth) {
        return TablePlane{Vec3(0.0, 0.0, -1.0), -table_depth};
    }
};

struct PatchCenter {
    int u = 0;
    int v = 0;
    Vec3 point = Vec3::Zero();
};

struct LocateResult {
    std::vector<PatchCenter> centers;
    bool shortfall = false;  // fewer foreground points than requested
};

/// Crop side in pixels for a patch centered at depth z_center (Eq.-style
/// side = w_ref * focal / z_center), keeping the metric receptive field fixed.
double adaptive_side(double z_center, double focal, double w_ref);

/// Farthest-point-sample k patch centers from points higher than `margin`
/// above the table plane. The first point is drawn by the seeded RNG over a
/// canonical (coordinate-sorted) ordering, so the result does not depend on
/// input pixel order.
LocateResult locate_centers(const PointMap& pm, const TablePlane& table, double margin,
                            int k, std::uint64_t seed);

/// Overhead-camera convenience overload: table at constant depth table_height.
LocateResult locate_centers(const PointMap& pm, double table_height, double margin,
                            int k, std::uint64_t seed);

/// Resample a square window of side spec.side_px centered at the patch center
/// to out_size x out_size. RGB is sampled bilinearly; depth/XYZ take the
/// nearest source pixel so no 3D points are fabricated across object edges.
/// Sample sites outside the image are invalid.
RawPatch extract_patch(const RGBDFrame& frame, const PointMap& pm, const PatchSpec& spec);

/// Build a PatchSpec at a located center with the depth-adaptive side.
PatchSpec make_patch_spec(const PatchCenter& c, const CameraIntrinsics& k, double w_ref,
                          int out_size);

}  // namespace ngs
