#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fracdim/common.hpp"

namespace fracdim {

/// An ordered finite collection of d-dimensional points, stored flat
/// (point-major) for kernel locality. Coordinates must be finite; point
/// order is stable. Duplicate points are representable (the energy kernel
/// rejects them, pair counting does not care).
class PointSet {
 public:
  explicit PointSet(std::size_t dim) : dim_(dim) {
    require(dim >= 1, "PointSet: ambient dimension must be >= 1");
  }

  PointSet(std::size_t dim, std::vector<double> flat) : PointSet(dim) {
    require(flat.size() % dim == 0,
            "PointSet: flat coordinate count not divisible by dim");
    for (double v : flat)
      require(std::isfinite(v), "PointSet: non-finite coordinate");
    coords_ = std::move(flat);
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return coords_.size() / dim_; }
  bool empty() const { return coords_.empty(); }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  double coord(std::size_t i, std::size_t c) const {
    return coords_[i * dim_ + c];
  }
  const std::vector<double>& data() const { return coords_; }

  void push_back(std::span<const double> p) {
    require(p.size() == dim_, "PointSet: point dimension mismatch");
    for (double v : p)
      require(std::isfinite(v), "PointSet: non-finite coordinate");
    coords_.insert(coords_.end(), p.begin(), p.end());
  }
  void push_back(std::initializer_list<double> p) {
    push_back(std::span<const double>(p.begin(), p.size()));
  }

  void reserve(std::size_t n) { coords_.reserve(n * dim_); }

  /// FNV-1a over (dim, n, raw coordinate bytes); used as cache/manifest key.
  std::uint64_t content_hash() const {
    std::uint64_t h = fnv1a(&dim_, sizeof(dim_));
    const std::size_t n = size();
    h = fnv1a(&n, sizeof(n), h);
    h = fnv1a(coords_.data(), coords_.size() * sizeof(double), h);
    return h;
  }

  bool operator==(const PointSet& other) const {
    return dim_ == other.dim_ && coords_ == other.coords_;
  }

 private:
  std::size_t dim_;
  std::vector<double> coords_;
};

/// A family {P_n}: point sets of strictly increasing size sharing one
/// ambient dimension.
class PointFamily {
 public:
  explicit PointFamily(std::string label = "") : label_(std::move(label)) {}

  void add(PointSet ps) {
    require(ps.size() >= 1, "PointFamily: member must be non-empty");
    if (!members_.empty()) {
      require(ps.dim() == members_.front().dim(),
              "PointFamily: members must share ambient dimension");
      require(ps.size() > members_.back().size(),
              "PointFamily: member sizes must strictly increase");
    }
    members_.push_back(std::move(ps));
  }

  const std::vector<PointSet>& members() const { return members_; }
  const PointSet& member(std::size_t i) const { return members_[i]; }
  std::size_t size() const { return members_.size(); }
  std::size_t dim() const {
    require(!members_.empty(), "PointFamily: empty family has no dimension");
    return members_.front().dim();
  }
  const std::string& label() const { return label_; }

 private:
  std::vector<PointSet> members_;
  std::string label_;
};

// ---------------------------------------------------------------------------
// Normalization to the unit cube.
// ---------------------------------------------------------------------------

/// Axis-uniform affine map: to_unit(x) = (x - offset) / side, sending the
/// bounding box min corner to the origin and the longest side to length 1.
struct RescaleMap {
  std::vector<double> offset;
  double side = 1.0;

  std::vector<double> to_unit(std::span<const double> p) const {
    std::vector<double> out(p.size());
    for (std::size_t c = 0; c < p.size(); ++c)
      out[c] = (p[c] - offset[c]) / side;
    return out;
  }
  std::vector<double> from_unit(std::span<const double> p) const {
    std::vector<double> out(p.size());
    for (std::size_t c = 0; c < p.size(); ++c)
      out[c] = p[c] * side + offset[c];
    return out;
  }
};

/// Rescales so the bounding box lands in [0,1]^d with longest side exactly 1.
/// Division by the longest side (rather than multiplying by its reciprocal)
/// makes the longest side map to exactly 1.0.
inline std::pair<PointSet, RescaleMap> rescale_to_unit_cube(const PointSet& ps) {
  const std::size_t n = ps.size(), d = ps.dim();
  require(n >= 2, "rescale_to_unit_cube: need at least 2 points");
  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c) {
      lo[c] = std::min(lo[c], ps.coord(i, c));
      hi[c] = std::max(hi[c], ps.coord(i, c));
    }
  double side = 0.0;
  for (std::size_t c = 0; c < d; ++c) side = std::max(side, hi[c] - lo[c]);
  require(side > 0.0, "rescale_to_unit_cube: all points identical (zero diameter)");
  RescaleMap map{lo, side};
  PointSet out(d);
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto q = map.to_unit(ps.point(i));
    out.push_back(std::span<const double>(q.data(), q.size()));
  }
  return {std::move(out), std::move(map)};
}

inline double squared_distance(std::span<const double> a,
                               std::span<const double> b) {
  double d2 = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const double diff = a[c] - b[c];
    d2 += diff * diff;
  }
  return d2;
}

inline double euclidean_distance(std::span<const double> a,
                                 std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

}  // namespace fracdim
