#include "posepick/candidates.hpp"

#include "posepick/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace posepick {

namespace {

Eigen::Quaterniond axis_rotation(double angle_rad, int axis) {
  Eigen::Vector3d u = Eigen::Vector3d::Zero();
  u[axis] = 1.0;
  return Eigen::Quaterniond(Eigen::AngleAxisd(angle_rad, u));
}

}  // namespace

void PerturbConfig::validate() const {
  if (!(delta_t > 0.0)) throw std::invalid_argument("perturb: delta_t must be > 0");
  if (!(delta_r_deg > 0.0)) throw std::invalid_argument("perturb: delta_r must be > 0");
  if (m_per_pose < 1) throw std::invalid_argument("perturb: m_per_pose must be >= 1");
}

double max_rotation_offset(double delta_r_deg) {
  const double d = delta_r_deg * std::numbers::pi / 180.0;
  const double c = std::cos(d / 2.0), s = std::sin(d / 2.0);
  return 2.0 * std::acos(c * c * c - s * s * s);
}

std::vector<CandidatePose> generate_pool(const std::vector<Pose>& train,
                                         const PerturbConfig& cfg) {
  cfg.validate();
  if (train.empty()) throw std::invalid_argument("generate_pool: empty training set");

  std::uint64_t next_id = 0;
  for (const Pose& p : train) next_id = std::max(next_id, p.id + 1);

  const double delta_r = cfg.delta_r_deg * std::numbers::pi / 180.0;
  std::vector<CandidatePose> pool;
  pool.reserve(train.size() * static_cast<std::size_t>(cfg.m_per_pose));

  for (std::size_t i = 0; i < train.size(); ++i) {
    const Pose& parent = train[i];
    StableRng rng(splitmix64(cfg.seed ^ static_cast<std::uint64_t>(i)));
    for (int j = 0; j < cfg.m_per_pose; ++j) {
      Eigen::Vector3d offset;
      offset.x() = rng.uniform(-cfg.delta_t, cfg.delta_t);
      offset.y() = rng.uniform(-cfg.delta_t, cfg.delta_t);
      offset.z() = rng.uniform(-cfg.delta_t, cfg.delta_t);
      const double ax = rng.uniform(-delta_r, delta_r);
      const double ay = rng.uniform(-delta_r, delta_r);
      const double az = rng.uniform(-delta_r, delta_r);
      const Eigen::Quaterniond dq =
          axis_rotation(ax, 0) * axis_rotation(ay, 1) * axis_rotation(az, 2);
      const std::uint64_t id =
          next_id + static_cast<std::uint64_t>(i) * cfg.m_per_pose + j;
      pool.push_back(CandidatePose{Pose(id, parent.t + offset, parent.q * dq), parent.id});
    }
  }
  return pool;
}

}  // namespace posepick
