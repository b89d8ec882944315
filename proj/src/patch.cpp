#include "ngs/patch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace ngs {

double adaptive_side(double z_center, double focal, double w_ref) {
    if (z_center <= 0.0 || focal <= 0.0 || w_ref <= 0.0)
        throw std::domain_error("adaptive_side: inputs must be positive");
    return w_ref * focal / z_center;
}

namespace {

bool point_less(const Vec3& a, const Vec3& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    if (a.y() != b.y()) return a.y() < b.y();
    return a.z() < b.z();
}

}  // namespace

LocateResult locate_centers(const PointMap& pm, const TablePlane& table, double margin,
                            int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("locate_centers: k must be >= 1");

    std::vector<PatchCenter> fg;
    for (int v = 0; v < pm.height(); ++v)
        for (int u = 0; u < pm.width(); ++u)
            if (pm.valid.at(u, v) && table.height(pm.xyz.at(u, v)) > margin)
                fg.push_back({u, v, pm.xyz.at(u, v)});

    // Canonical order makes the seeded draw and all tie-breaks independent of
    // the raster traversal above.
    std::sort(fg.begin(), fg.end(),
              [](const PatchCenter& a, const PatchCenter& b) { return point_less(a.point, b.point); });

    LocateResult res;
    if (fg.empty()) {
        res.shortfall = true;
        return res;
    }
    if (static_cast<int>(fg.size()) <= k) {
        res.centers = fg;
        res.shortfall = static_cast<int>(fg.size()) < k;
        return res;
    }

    std::mt19937_64 rng(seed);
    const size_t first = std::uniform_int_distribution<size_t>(0, fg.size() - 1)(rng);

    std::vector<double> min_d2(fg.size(), std::numeric_limits<double>::infinity());
    std::vector<char> taken(fg.size(), 0);
    size_t cur = first;
    res.centers.push_back(fg[cur]);
    taken[cur] = 1;
    for (int picked = 1; picked < k; ++picked) {
        size_t best = fg.size();
        double best_d2 = -1.0;
        for (size_t i = 0; i < fg.size(); ++i) {
            if (taken[i]) continue;
            const double d2 = (fg[i].point - fg[cur].point).squaredNorm();
            if (d2 < min_d2[i]) min_d2[i] = d2;
            if (min_d2[i] > best_d2 ||
                (min_d2[i] == best_d2 && point_less(fg[i].point, fg[best].point))) {
                best_d2 = min_d2[i];
                best = i;
            }
        }
        cur = best;
        taken[cur] = 1;
        res.centers.push_back(fg[cur]);
    }
    return res;
}

LocateResult locate_centers(const PointMap& pm, double table_height, double margin,
                            int k, std::uint64_t seed) {
    return locate_centers(pm, TablePlane::from_camera_depth(table_height), margin, k, seed);
}

RawPatch extract_patch(const RGBDFrame& frame, const PointMap& pm, const PatchSpec& spec) {
    spec.validate();
    const int w = frame.width(), h = frame.height();
    if (spec.center_u < 0.0 || spec.center_u > w - 1 || spec.center_v < 0.0 ||
        spec.center_v > h - 1)
        throw std::invalid_argument("extract_patch: center outside the image");

    const int S = spec.out_size;
    RawPatch patch;
    patch.rgb = Image<Vec3>(S, S, Vec3::Zero());
    patch.xyz = Image<Vec3>(S, S, Vec3::Zero());
    patch.valid = Mask(S, S, 0);
    patch.spec = spec;

    const double step = spec.side_px / S;
    for (int j = 0; j < S; ++j) {
        const double sv = spec.center_v + (j - S / 2) * step;
        for (int i = 0; i < S; ++i) {
            const double su = spec.center_u + (i - S / 2) * step;
            // Nearest source pixel carries depth/XYZ and validity.
            const int nu = static_cast<int>(std::lround(su));
            const int nv = static_cast<int>(std::lround(sv));
            if (!frame.depth.in_bounds(nu, nv)) continue;

            if (pm.valid.at(nu, nv)) {
                patch.xyz.at(i, j) = pm.xyz.at(nu, nv);
                patch.valid.at(i, j) = 1;
            }

            // Bilinear RGB with edge clamping.
            const double cu = std::clamp(su, 0.0, static_cast<double>(w - 1));
            const double cv = std::clamp(sv, 0.0, static_cast<double>(h - 1));
            const int u0 = std::min(static_cast<int>(std::floor(cu)), w - 2 >= 0 ? w - 2 : 0);
            const int v0 = std::min(static_cast<int>(std::floor(cv)), h - 2 >= 0 ? h - 2 : 0);
            const int u1 = std::min(u0 + 1, w - 1);
            const int v1 = std::min(v0 + 1, h - 1);
            const double fu = cu - u0, fv = cv - v0;
            patch.rgb.at(i, j) = (1 - fu) * (1 - fv) * frame.rgb.at(u0, v0) +
                                 fu * (1 - fv) * frame.rgb.at(u1, v0) +
                                 (1 - fu) * fv * frame.rgb.at(u0, v1) +
                                 fu * fv * frame.rgb.at(u1, v1);
        }
    }
    return patch;
}

PatchSpec make_patch_spec(const PatchCenter& c, const CameraIntrinsics& k, double w_ref,
                          int out_size) {
    PatchSpec spec;
    spec.center_u = c.u;
    spec.center_v = c.v;
    spec.center_3d = c.point;
    spec.side_px = adaptive_side(c.point.z(), k.fx, w_ref);
    spec.out_size = out_size;
    return spec;
}

}  // namespace ngs
