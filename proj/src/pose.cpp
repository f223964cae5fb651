#include "posepick/pose.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace posepick {

Eigen::Quaterniond canonicalized(const Eigen::Quaterniond& q) {
  const double n = q.norm();
  if (!(n > 1e-12)) {
    throw std::invalid_argument("quaternion norm too small to normalize");
  }
  Eigen::Quaterniond out(q.w() / n, q.x() / n, q.y() / n, q.z() / n);
  const double c[4] = {out.w(), out.x(), out.y(), out.z()};
  for (double v : c) {
    if (v > 0.0) break;
    if (v < 0.0) {
      out.coeffs() = -out.coeffs();
      break;
    }
  }
  return out;
}

Pose::Pose(std::uint64_t id_, const Eigen::Vector3d& t_, const Eigen::Quaterniond& q_)
    : id(id_), t(t_), q(canonicalized(q_)) {}

double rotation_distance(const Eigen::Quaterniond& qi, const Eigen::Quaterniond& qj) {
  // tr(Ri^T Rj) = 4*dot(qi,qj)^2 - 1, so the trace formula reduces to
  // arccos(2*dot^2 - 1). |dot| makes it sign-flip invariant.
  const double dot = qi.w() * qj.w() + qi.x() * qj.x() + qi.y() * qj.y() + qi.z() * qj.z();
  const double arg = std::clamp(2.0 * dot * dot - 1.0, -1.0, 1.0);
  return std::acos(arg);
}

double hybrid_distance(const Pose& a, const Pose& b, const DatasetStats& stats,
                       const MetricConfig& cfg) {
  if (!(stats.sigma_t > 0.0)) {
    throw std::invalid_argument("hybrid_distance requires sigma_t > 0");
  }
  if (cfg.lambda < 0.0) {
    throw std::invalid_argument("hybrid_distance requires lambda >= 0");
  }
  return (a.t - b.t).norm() / stats.sigma_t + cfg.lambda * rotation_distance(a.q, b.q);
}

DatasetStats compute_stats(const std::vector<Pose>& train) {
  if (train.size() < 2) {
    throw std::invalid_argument("compute_stats requires at least 2 poses");
  }
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const Pose& p : train) centroid += p.t;
  centroid /= static_cast<double>(train.size());

  double ssq = 0.0;
  for (const Pose& p : train) ssq += (p.t - centroid).squaredNorm();
  const double sigma = std::sqrt(ssq / static_cast<double>(train.size()));
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("compute_stats: all translations identical, sigma_t would be 0");
  }
  return DatasetStats{sigma, train.size()};
}

}  // namespace posepick
