#pragma once

#include "posepick/candidates.hpp"
#include "posepick/image.hpp"
#include "posepick/pose.hpp"
#include "posepick/scene.hpp"

#include <string>
#include <utility>

namespace posepick {

/// Central rendering of one candidate plus the two mirrored perturbed
/// renderings used by the observability score, and the per-pixel accumulated
/// opacity of the central view. All four buffers share dimensions.
struct ViewTriplet {
  std::uint64_t candidate_id = 0;
  ImageBuffer central;          // RGB
  ImageBuffer plus;
  ImageBuffer minus;
  ImageBuffer opacity_central;  // gray, alpha in [0,1]
};

// Fixed perturbation applied when probing rendering stability.
inline constexpr double kObsTranslationM = 0.02;  // +-2 cm along camera right
inline constexpr double kObsYawDeg = 2.0;         // +-2 deg about camera down axis

/// Returns (p_plus, p_minus): the pose offset by +2 cm along its local right
/// axis combined with +2 deg yaw, and the exactly mirrored negative offsets.
/// Deterministic, no RNG; both poses keep the input id.
std::pair<Pose, Pose> perturb_for_observability(const Pose& p);

/// Supplies views for candidates, either by rendering the toy scene or by
/// ingesting externally rendered images. Pure per candidate; safe to call
/// concurrently from multiple threads.
class TripletSource {
 public:
  virtual ~TripletSource() = default;
  virtual ViewTriplet triplet(const CandidatePose& candidate) const = 0;
  /// Central (RGB) view of an arbitrary pose, used by the proxy evaluator.
  virtual ImageBuffer central(const Pose& pose) const = 0;
};

class ToyTripletSource final : public TripletSource {
 public:
  explicit ToyTripletSource(ToyScene scene) : scene_(std::move(scene)) { scene_.validate(); }
  ViewTriplet triplet(const CandidatePose& candidate) const override;
  ImageBuffer central(const Pose& pose) const override;
  const ToyScene& scene() const { return scene_; }

 private:
  ToyScene scene_;
};

/// Ingests pre-rendered views from a directory laid out as `<id>_c.png`,
/// `<id>_p.png`, `<id>_m.png` and optional `<id>_a.png` (8-bit gray
/// opacity). A missing opacity file defaults to all-ones, so views rendered
/// without an alpha channel still flow through the visibility gate. Missing
/// color files or size mismatches raise std::runtime_error.
class DirectoryTripletSource final : public TripletSource {
 public:
  explicit DirectoryTripletSource(std::string dir) : dir_(std::move(dir)) {}
  ViewTriplet triplet(const CandidatePose& candidate) const override;
  ImageBuffer central(const Pose& pose) const override;

 private:
  std::string path_for(std::uint64_t id, char role) const;
  std::string dir_;
};

ViewTriplet make_triplet(const TripletSource& source, const CandidatePose& candidate);

}  // namespace posepick
