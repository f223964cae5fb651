#pragma once

#include "posepick/config.hpp"
#include "posepick/image.hpp"
#include "posepick/pose.hpp"

#include <string>
#include <utility>
#include <vector>

namespace posepick {

enum class Face { PosX, NegX, PosY, NegY, PosZ, NegZ, None };

Face face_from_string(const std::string& s);
std::string face_to_string(Face f);

/// Axis-aligned rectangle on one wall, in wall-local coordinates (meters).
/// Wall-local (u, v) axes: faces +-x use (z, y), faces +-y use (x, z),
/// faces +-z use (x, y).
struct WallPatch {
  Face face = Face::PosX;
  double u0 = 0, u1 = 0, v0 = 0, v1 = 0;
};

/// Procedurally textured axis-aligned box room viewed by a pinhole camera.
/// Walls carry a two-level checker texture with a fixed per-face color tint;
/// `textureless` patches render at the constant mid albedo; `artifact`
/// patches add pose-seeded high-frequency noise so that renders of the same
/// region from different poses disagree there. One face may be left open:
/// rays through it return black with zero opacity.
struct ToyScene {
  Eigen::Vector3d half_extents{2.0, 1.2, 2.0};  // meters
  Face open_face = Face::PosY;
  double checker_freq = 2.0;  // checker cells per meter
  double albedo_low = 0.25;
  double albedo_high = 0.85;
  double artifact_gain = 0.6;  // noise amplitude added inside artifact patches
  std::vector<WallPatch> textureless;
  std::vector<WallPatch> artifacts;

  int image_width = 64;
  int image_height = 48;
  double focal_px = 55.0;
  // Principal point; negative means centered at ((W-1)/2, (H-1)/2).
  double cx = -1.0;
  double cy = -1.0;

  double principal_x() const { return cx >= 0.0 ? cx : 0.5 * (image_width - 1); }
  double principal_y() const { return cy >= 0.0 ? cy : 0.5 * (image_height - 1); }

  void validate() const;

  /// Reads every `scene.*` key (missing keys keep defaults). Patch lists use
  /// indexed keys `scene.textureless.N = <face> u0 u1 v0 v1` (same for
  /// `scene.artifact.N`).
  static ToyScene from_config(const KeyValues& kv);
};

/// Raycasts the scene from a pose. Returns (RGB view, gray opacity map):
/// opacity 1 where the ray hits a wall, 0 where it leaves through the open
/// face. Pure function of (scene, pose); repeated calls are bit-identical.
/// Throws std::invalid_argument if the camera center is outside the room.
std::pair<ImageBuffer, ImageBuffer> render_toy(const ToyScene& scene, const Pose& pose);

}  // namespace posepick
