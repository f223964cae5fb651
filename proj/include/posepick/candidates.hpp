#pragma once

#include "posepick/pose.hpp"

#include <cstdint>
#include <vector>

namespace posepick {

/// Bounded uniform perturbation applied around each training pose.
struct PerturbConfig {
  double delta_t = 0.20;      // max translation offset per world axis, meters
  double delta_r_deg = 10.0;  // max rotation offset per camera axis, degrees
  int m_per_pose = 32;        // candidates generated per training pose (M)
  std::uint64_t seed = 0;

  void validate() const;
};

/// A perturbed pose together with the training pose it was derived from.
struct CandidatePose {
  Pose pose;
  std::uint64_t parent_id = 0;
};

/// Exact upper bound, in radians, on the geodesic offset produced by the
/// rotation sampling scheme below: three independent uniform angles in
/// [-delta_r, +delta_r] about the camera's local x/y/z axes, composed in
/// x-y-z order. The worst case is all three offsets at +/-delta_r, giving
/// 2*arccos(cos^3(d/2) - sin^3(d/2)) = sqrt(3)*d + O(d^3).
double max_rotation_offset(double delta_r_deg);

/// Generates the candidate pool: for each training pose, m_per_pose
/// candidates with translation offsets drawn independently uniform per world
/// axis in [-delta_t, delta_t] and rotation offsets drawn as three uniform
/// Euler angles in [-delta_r, delta_r] degrees about the camera's local
/// x/y/z axes (drawn in the order tx, ty, tz, rx, ry, rz).
///
/// Candidate ids are fresh and deterministic: numbering starts at
/// max(train id) + 1 and follows (parent index, sample index) order. Each
/// training pose has its own RNG stream seeded from
/// splitmix64(seed ^ parent_index), so the pool is reproducible across
/// platforms and independent of any parallel execution of the outer loop.
///
/// Throws std::invalid_argument on an empty training set or invalid config.
std::vector<CandidatePose> generate_pool(const std::vector<Pose>& train,
                                         const PerturbConfig& cfg);

}  // namespace posepick
