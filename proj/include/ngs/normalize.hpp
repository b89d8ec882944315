#pragma once

#include <random>
#include <vector>

#include "ngs/patch.hpp"

namespace ngs {

/// Regional frame of the normalized grasp space: everything is expressed
/// relative to the patch center and divided by the receptive field.
struct NGSContext {
    Vec3 center = Vec3::Zero();
    double w_ref = kDefaultReceptiveField;

    void validate() const {
        if (w_ref <= 0.0) throw std::domain_error("NGSContext: w_ref must be positive");
    }
};

/// Spherical retention boundary for regional grasp labels, in normalized
/// units: grasps keep membership iff ||t*|| < 0.1 (strict).
inline constexpr double kRegionBall = 0.1;

struct NormalizedPatch {
    Image<Vec3> rgb;
    Image<Vec3> xyz;  // unitless, (xyz - center) / w_ref on valid pixels
    Mask valid;
    NGSContext ctx;

    int size() const { return valid.width(); }
};

struct NormalizedGrasp {
    Vec3 t_star = Vec3::Zero();
    EulerRotation rot;
    double w_star = 0.0;
    double score = 0.0;
};

NormalizedPatch normalize_patch(const RawPatch& raw, const NGSContext& ctx);

/// Map grasps into the regional frame and keep only those inside the 0.1
/// retention ball.
std::vector<NormalizedGrasp> normalize_grasps(const std::vector<Grasp>& grasps,
                                              const NGSContext& ctx);

/// Exact inverse of normalize_grasps for a retained grasp.
Grasp denormalize_grasp(const NormalizedGrasp& g, const NGSContext& ctx);

/// Log-uniform draw from [w_ref/2, 2*w_ref]; the training-time receptive
/// field randomization.
double randomize_scale(double w_ref, std::mt19937_64& rng);

}  // namespace ngs
