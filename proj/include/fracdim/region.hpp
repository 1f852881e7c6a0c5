#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "fracdim/common.hpp"
#include "fracdim/point_set.hpp"

namespace fracdim {

// A compact set E with covering data (k, C_E) for the Minkowski-content
// condition N_E(delta) <= max(C_E delta^-k, 1). Three shapes carry distance
// oracles: a bounded affine patch, a finite point cloud, and a union of
// axis-aligned boxes.

struct AffineSubspace {
  std::vector<double> base;                        // point on the subspace
  std::vector<std::vector<double>> directions;     // orthonormal, ambient dim
  std::vector<std::pair<double, double>> extent;   // intrinsic [lo, hi] per direction
};

struct PointCloudRegion {
  PointSet points;
};

using Box = std::vector<std::pair<double, double>>;  // per-axis [lo, hi]

struct BoxUnion {
  std::vector<Box> boxes;
};

struct RegionSpec {
  std::variant<AffineSubspace, PointCloudRegion, BoxUnion> shape;
  double k = 1.0;    // covering exponent
  double c_e = 1.0;  // covering constant

  std::size_t dim() const {
    if (const auto* a = std::get_if<AffineSubspace>(&shape)) return a->base.size();
    if (const auto* p = std::get_if<PointCloudRegion>(&shape)) return p->points.dim();
    const auto& boxes = std::get<BoxUnion>(shape).boxes;
    return boxes.empty() ? 0 : boxes.front().size();
  }
};

/// Default covering constant (2 sqrt(k))^k: covers a unit k-cube by
/// radius-delta balls in at most (2 sqrt(k))^k delta^-k balls for delta <= sqrt(k).
/// Valid but not tight; callers may override with something sharper.
inline double default_covering_constant(double k) {
  require(k > 0.0, "default_covering_constant: k must be positive");
  return std::pow(2.0 * std::sqrt(k), k);
}

inline void validate_region(const RegionSpec& region) {
  const std::size_t d = region.dim();
  require(d >= 1, "region: empty shape");
  require(region.c_e > 0.0, "region: C_E must be positive");
  require(region.k > 0.0 && region.k <= static_cast<double>(d),
          "region: need 0 < k <= ambient dimension");
  if (const auto* a = std::get_if<AffineSubspace>(&region.shape)) {
    require(!a->directions.empty(), "region: affine subspace needs directions");
    require(a->directions.size() == a->extent.size(),
            "region: one extent interval per direction");
    for (std::size_t i = 0; i < a->directions.size(); ++i) {
      require(a->directions[i].size() == d, "region: direction dimension mismatch");
      double norm2 = 0.0;
      for (double v : a->directions[i]) norm2 += v * v;
      require(std::abs(norm2 - 1.0) <= 1e-9, "region: directions must be unit vectors");
      for (std::size_t j = i + 1; j < a->directions.size(); ++j) {
        double dot = 0.0;
        for (std::size_t c = 0; c < d; ++c) dot += a->directions[i][c] * a->directions[j][c];
        require(std::abs(dot) <= 1e-9, "region: directions must be pairwise orthogonal");
      }
      require(a->extent[i].first <= a->extent[i].second, "region: empty extent interval");
    }
    const double kr = std::round(region.k);
    if (std::abs(region.k - kr) <= 1e-9)
      require(static_cast<std::size_t>(kr) == a->directions.size(),
              "region: integer k must equal the number of spanning directions");
  } else if (const auto* p = std::get_if<PointCloudRegion>(&region.shape)) {
    require(p->points.size() >= 1, "region: empty point cloud");
  } else {
    const auto& bu = std::get<BoxUnion>(region.shape);
    require(!bu.boxes.empty(), "region: empty box union");
    for (const auto& box : bu.boxes) {
      require(box.size() == d, "region: box dimension mismatch");
      for (const auto& [lo, hi] : box) require(lo <= hi, "region: empty box side");
    }
  }
}

namespace detail {

inline double distance_to_affine(std::span<const double> p, const AffineSubspace& a) {
  const std::size_t d = p.size();
  // project onto the patch, clamping intrinsic coordinates to the extent box
  std::vector<double> nearest(a.base.begin(), a.base.end());
  for (std::size_t i = 0; i < a.directions.size(); ++i) {
    double t = 0.0;
    for (std::size_t c = 0; c < d; ++c) t += (p[c] - a.base[c]) * a.directions[i][c];
    t = std::min(std::max(t, a.extent[i].first), a.extent[i].second);
    for (std::size_t c = 0; c < d; ++c) nearest[c] += t * a.directions[i][c];
  }
  return euclidean_distance(p, {nearest.data(), d});
}

inline double distance_to_box(std::span<const double> p, const Box& box) {
  double d2 = 0.0;
  for (std::size_t c = 0; c < p.size(); ++c) {
    double gap = 0.0;
    if (p[c] < box[c].first) gap = box[c].first - p[c];
    else if (p[c] > box[c].second) gap = p[c] - box[c].second;
    d2 += gap * gap;
  }
  return std::sqrt(d2);
}

}  // namespace detail

/// Euclidean distance from p to the region (0 when p lies in it).
inline double distance_to_region(std::span<const double> p, const RegionSpec& region) {
  require(p.size() == region.dim(), "distance_to_region: dimension mismatch");
  if (const auto* a = std::get_if<AffineSubspace>(&region.shape))
    return detail::distance_to_affine(p, *a);
  if (const auto* pc = std::get_if<PointCloudRegion>(&region.shape)) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pc->points.size(); ++i)
      best = std::min(best, euclidean_distance(p, pc->points.point(i)));
    return best;
  }
  const auto& bu = std::get<BoxUnion>(region.shape);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& box : bu.boxes) best = std::min(best, detail::distance_to_box(p, box));
  return best;
}

inline double distance_to_region(const PointSet& ps, std::size_t i,
                                 const RegionSpec& region) {
  return distance_to_region(ps.point(i), region);
}

}  // namespace fracdim
