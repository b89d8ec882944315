#include "ngs/normalize.hpp"

#include <cmath>

namespace ngs {

NormalizedPatch normalize_patch(const RawPatch& raw, const NGSContext& ctx) {
    ctx.validate();
    NormalizedPatch out;
    out.rgb = raw.rgb;
    out.valid = raw.valid;
    out.ctx = ctx;
    const int S = raw.size();
    out.xyz = Image<Vec3>(S, S, Vec3::Zero());
    for (int j = 0; j < S; ++j)
        for (int i = 0; i < S; ++i)
            if (raw.valid.at(i, j))
                out.xyz.at(i, j) = (raw.xyz.at(i, j) - ctx.center) / ctx.w_ref;
    return out;
}

std::vector<NormalizedGrasp> normalize_grasps(const std::vector<Grasp>& grasps,
                                              const NGSContext& ctx) {
    ctx.validate();
    std::vector<NormalizedGrasp> out;
    out.reserve(grasps.size());
    for (const Grasp& g : grasps) {
        NormalizedGrasp n;
        n.t_star = (g.t - ctx.center) / ctx.w_ref;
        if (!(n.t_star.norm() < kRegionBall)) continue;
        n.rot = g.rot;
        n.w_star = g.width / ctx.w_ref;
        n.score = g.score;
        out.push_back(n);
    }
    return out;
}

Grasp denormalize_grasp(const NormalizedGrasp& g, const NGSContext& ctx) {
    ctx.validate();
    Grasp out;
    out.t = g.t_star * ctx.w_ref + ctx.center;
    out.rot = g.rot;
    out.width = g.w_star * ctx.w_ref;
    out.score = g.score;
    return out;
}

double randomize_scale(double w_ref, std::mt19937_64& rng) {
    if (w_ref <= 0.0) throw std::domain_error("randomize_scale: w_ref must be positive");
    std::uniform_real_distribution<double> u(std::log(0.5 * w_ref), std::log(2.0 * w_ref));
    return std::exp(u(rng));
}

}  // namespace ngs
