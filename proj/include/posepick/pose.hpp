#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstdint>
#include <vector>

namespace posepick {

/// A 6-DoF camera pose: rotation q and camera center t, camera-to-world.
/// Camera frame convention: +x right, +y down, +z forward (optical axis),
/// so world_point = q * camera_point + t.
///
/// The quaternion is normalized and canonicalized on construction (sign
/// flipped so the first nonzero component of (w,x,y,z) is positive), which
/// makes serialization deterministic. q and -q denote the same rotation and
/// every distance in this library is invariant under that sign flip.
struct Pose {
  std::uint64_t id = 0;
  Eigen::Vector3d t = Eigen::Vector3d::Zero();
  Eigen::Quaterniond q = Eigen::Quaterniond::Identity();

  Pose() = default;
  Pose(std::uint64_t id, const Eigen::Vector3d& t, const Eigen::Quaterniond& q);

  Eigen::Vector3d right() const { return q * Eigen::Vector3d::UnitX(); }
  Eigen::Vector3d down() const { return q * Eigen::Vector3d::UnitY(); }
  Eigen::Vector3d forward() const { return q * Eigen::Vector3d::UnitZ(); }
};

/// Scene-level statistics of a training pose set.
struct DatasetStats {
  double sigma_t = 0.0;    // meters, translation spread (see compute_stats)
  std::size_t n_train = 0;
};

struct MetricConfig {
  double lambda = 1.0;  // dimensionless rotation weight
};

/// Normalizes and sign-canonicalizes a quaternion. Throws
/// std::invalid_argument if the input norm is too small to normalize.
Eigen::Quaterniond canonicalized(const Eigen::Quaterniond& q);

/// Geodesic angle between two rotations, in [0, pi] radians. Equals
/// arccos((tr(Ri^T Rj) - 1) / 2); the arccos argument is clamped to [-1, 1]
/// to absorb floating-point drift. Invariant under quaternion sign flips.
double rotation_distance(const Eigen::Quaterniond& qi, const Eigen::Quaterniond& qj);

/// Hybrid pose distance: ||ti - tj|| / sigma_t + lambda * rotation_distance.
/// Dimensionless; a metric (sum of two metrics). Throws std::invalid_argument
/// if stats.sigma_t <= 0.
double hybrid_distance(const Pose& a, const Pose& b, const DatasetStats& stats,
                       const MetricConfig& cfg);

/// sigma_t is the population standard deviation of the translations about
/// their centroid, collapsed to one scalar: sqrt(mean_i ||t_i - mean(t)||^2).
/// Requires >= 2 poses and at least two distinct translations.
DatasetStats compute_stats(const std::vector<Pose>& train);

}  // namespace posepick
