#pragma once

#include <optional>
#include <vector>

#include "ngs/normalize.hpp"

namespace ngs {

enum class AnchorMode { Uniform, Shifted };

/// Rotation anchors per Euler axis; the (gamma, beta) Cartesian product spans
/// the 2D rotation heatmap, theta anchors classify the in-plane angle.
struct AnchorSet {
    std::vector<double> gammas;
    std::vector<double> betas;
    std::vector<double> thetas;

    void validate() const;
};

/// Nearest anchor by absolute angle difference; ties go to the lower index.
int nearest_anchor(const std::vector<double>& anchors, double angle);

/// One axis of anchors over [-pi/2, pi/2]. Uniform mode places cell centers
/// of `count` equal bins; Shifted runs a 1D Lloyd iteration seeded from the
/// uniform layout (assign to nearest, move to assignment mean, stop when the
/// largest move drops below 1e-4 rad or after 100 rounds).
std::vector<double> build_anchor_axis(int count, AnchorMode mode,
                                      const std::vector<double>* gt_angles = nullptr);

/// Same counts on all three axes. Shifted mode requires per-axis ground-truth
/// angle lists.
AnchorSet build_anchors(int count_per_axis, AnchorMode mode = AnchorMode::Uniform,
                        const std::vector<double>* gt_gammas = nullptr,
                        const std::vector<double>* gt_betas = nullptr,
                        const std::vector<double>* gt_thetas = nullptr);

/// Dense grid over (gamma-anchor, beta-anchor) cells. Each cell carries a
/// graspability score, theta anchor scores, a theta residual and the
/// regressed normalized width and center offset.
struct RotationHeatmap {
    int a_gamma = 0;
    int a_beta = 0;
    int a_theta = 0;
    std::vector<double> graspable;        // a_gamma * a_beta
    std::vector<double> theta_scores;     // a_gamma * a_beta * a_theta
    std::vector<double> theta_residual;   // a_gamma * a_beta
    std::vector<double> width;            // a_gamma * a_beta
    std::vector<Vec3> offset;             // a_gamma * a_beta

    RotationHeatmap() = default;
    RotationHeatmap(int ag, int ab, int at);

    int cell(int gi, int bi) const { return gi * a_beta + bi; }
    double& theta_score(int gi, int bi, int ti) {
        return theta_scores[(static_cast<size_t>(gi) * a_beta + bi) * a_theta + ti];
    }
    double theta_score(int gi, int bi, int ti) const {
        return theta_scores[(static_cast<size_t>(gi) * a_beta + bi) * a_theta + ti];
    }
    bool same_shape(const RotationHeatmap& o) const {
        return a_gamma == o.a_gamma && a_beta == o.a_beta && a_theta == o.a_theta;
    }
};

/// Rasterize filtered normalized grasps into a heatmap. Each grasp activates
/// its nearest (gamma, beta) cell and theta anchor; the residual keeps theta
/// exact. Cell collisions keep the higher-score grasp. With binary_graspable
/// the activated cells read 1 (training targets); otherwise they carry the
/// winning grasp score (predictor output).
RotationHeatmap encode(const std::vector<NormalizedGrasp>& grasps, const AnchorSet& anchors,
                       bool binary_graspable = true);

struct DecodeConfig {
    double score_thresh = 0.5;
    int top_k = 50;
    double w_gripper = kDefaultGripperWidth;
};

/// Invert the heatmap into camera-frame grasps through the context: cells
/// above threshold become grasps, score-sorted and truncated to top_k.
std::vector<Grasp> decode(const RotationHeatmap& hm, const AnchorSet& anchors,
                          const NGSContext& ctx, const DecodeConfig& cfg);

/// Greedy non-maximum suppression: walking grasps by descending score, drop
/// any grasp within trans_thresh of a kept center AND within rot_thresh
/// geodesic rotation distance of it.
std::vector<Grasp> grasp_nms(const std::vector<Grasp>& grasps, double trans_thresh = 0.02,
                             double rot_thresh = kPi / 6.0);

}  // namespace ngs
