#include "posepick/scene.hpp"

#include "posepick/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace posepick {

namespace {

struct FaceInfo {
  int axis;     // 0=x, 1=y, 2=z
  int sign;     // +1 or -1
  int u_axis;   // world axis mapped to wall-local u
  int v_axis;   // world axis mapped to wall-local v
};

FaceInfo face_info(Face f) {
  switch (f) {
    case Face::PosX: return {0, +1, 2, 1};
    case Face::NegX: return {0, -1, 2, 1};
    case Face::PosY: return {1, +1, 0, 2};
    case Face::NegY: return {1, -1, 0, 2};
    case Face::PosZ: return {2, +1, 0, 1};
    case Face::NegZ: return {2, -1, 0, 1};
    default: throw std::invalid_argument("face_info: Face::None has no geometry");
  }
}

// Fixed per-face color tints; distinct luminances disambiguate walls that
// share the same checker texture.
void face_tint(Face f, double tint[3]) {
  switch (f) {
    case Face::PosX: tint[0] = 1.00; tint[1] = 0.90; tint[2] = 0.80; break;
    case Face::NegX: tint[0] = 0.80; tint[1] = 0.88; tint[2] = 1.00; break;
    case Face::PosY: tint[0] = 0.92; tint[1] = 0.92; tint[2] = 0.92; break;
    case Face::NegY: tint[0] = 0.78; tint[1] = 0.82; tint[2] = 0.78; break;
    case Face::PosZ: tint[0] = 0.90; tint[1] = 1.00; tint[2] = 0.86; break;
    case Face::NegZ: tint[0] = 1.00; tint[1] = 0.84; tint[2] = 0.94; break;
    default: tint[0] = tint[1] = tint[2] = 1.0; break;
  }
}

bool in_patch(const WallPatch& p, Face f, double u, double v) {
  return p.face == f && u >= p.u0 && u <= p.u1 && v >= p.v0 && v <= p.v1;
}

std::uint64_t hash_double(std::uint64_t h, double v) {
  return splitmix64(h ^ std::bit_cast<std::uint64_t>(v));
}

std::uint64_t pose_hash(const Pose& p) {
  std::uint64_t h = 0x9AFB0C3E2D41577FULL;
  h = hash_double(h, p.t.x());
  h = hash_double(h, p.t.y());
  h = hash_double(h, p.t.z());
  h = hash_double(h, p.q.w());
  h = hash_double(h, p.q.x());
  h = hash_double(h, p.q.y());
  h = hash_double(h, p.q.z());
  return h;
}

// Per-pixel noise in [-1, 1), a pure function of (pose, pixel).
double pixel_noise(std::uint64_t pose_h, int px, int py) {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(static_cast<std::uint32_t>(py)) << 32) |
      static_cast<std::uint64_t>(static_cast<std::uint32_t>(px));
  const std::uint64_t h = splitmix64(pose_h ^ key);
  return static_cast<double>(h >> 11) * 0x1.0p-52 - 1.0;
}

void wall_bounds(const ToyScene& s, Face f, double& umin, double& umax, double& vmin,
                 double& vmax) {
  const FaceInfo info = face_info(f);
  umin = -s.half_extents[info.u_axis];
  umax = s.half_extents[info.u_axis];
  vmin = -s.half_extents[info.v_axis];
  vmax = s.half_extents[info.v_axis];
}

}  // namespace

Face face_from_string(const std::string& s) {
  if (s == "px" || s == "+x") return Face::PosX;
  if (s == "nx" || s == "-x") return Face::NegX;
  if (s == "py" || s == "+y") return Face::PosY;
  if (s == "ny" || s == "-y") return Face::NegY;
  if (s == "pz" || s == "+z") return Face::PosZ;
  if (s == "nz" || s == "-z") return Face::NegZ;
  if (s == "none") return Face::None;
  throw std::invalid_argument("unknown face '" + s + "' (expected px|nx|py|ny|pz|nz|none)");
}

std::string face_to_string(Face f) {
  switch (f) {
    case Face::PosX: return "px";
    case Face::NegX: return "nx";
    case Face::PosY: return "py";
    case Face::NegY: return "ny";
    case Face::PosZ: return "pz";
    case Face::NegZ: return "nz";
    default: return "none";
  }
}

void ToyScene::validate() const {
  if (!(half_extents.minCoeff() > 0.0)) {
    throw std::invalid_argument("scene: half extents must be positive");
  }
  if (image_width < 16 || image_height < 16) {
    throw std::invalid_argument("scene: image size must be at least 16x16");
  }
  if (!(focal_px > 0.0)) throw std::invalid_argument("scene: focal_px must be positive");
  if (!(checker_freq > 0.0)) throw std::invalid_argument("scene: checker_freq must be positive");
  if (albedo_low < 0.0 || albedo_high > 1.0 || albedo_low >= albedo_high) {
    throw std::invalid_argument("scene: need 0 <= albedo_low < albedo_high <= 1");
  }
  if (artifact_gain < 0.0) throw std::invalid_argument("scene: artifact_gain must be >= 0");
  auto check_patch = [&](const WallPatch& p, const char* kind) {
    if (p.face == Face::None) {
      throw std::invalid_argument(std::string("scene: ") + kind + " patch on face 'none'");
    }
    double umin, umax, vmin, vmax;
    wall_bounds(*this, p.face, umin, umax, vmin, vmax);
    if (p.u0 >= p.u1 || p.v0 >= p.v1 || p.u0 < umin || p.u1 > umax || p.v0 < vmin ||
        p.v1 > vmax) {
      throw std::invalid_argument(std::string("scene: ") + kind +
                                  " patch outside wall bounds on face " +
                                  face_to_string(p.face));
    }
  };
  for (const WallPatch& p : textureless) check_patch(p, "textureless");
  for (const WallPatch& p : artifacts) check_patch(p, "artifact");
}

ToyScene ToyScene::from_config(const KeyValues& kv) {
  ToyScene s;
  s.half_extents.x() = kv.get_double("scene.half_x", s.half_extents.x());
  s.half_extents.y() = kv.get_double("scene.half_y", s.half_extents.y());
  s.half_extents.z() = kv.get_double("scene.half_z", s.half_extents.z());
  s.open_face = face_from_string(kv.get_string("scene.open_face", face_to_string(s.open_face)));
  s.checker_freq = kv.get_double("scene.checker_freq", s.checker_freq);
  s.albedo_low = kv.get_double("scene.albedo_low", s.albedo_low);
  s.albedo_high = kv.get_double("scene.albedo_high", s.albedo_high);
  s.artifact_gain = kv.get_double("scene.artifact_gain", s.artifact_gain);
  s.image_width = static_cast<int>(kv.get_int("scene.image_width", s.image_width));
  s.image_height = static_cast<int>(kv.get_int("scene.image_height", s.image_height));
  s.focal_px = kv.get_double("scene.focal_px", s.focal_px);
  s.cx = kv.get_double("scene.cx", s.cx);
  s.cy = kv.get_double("scene.cy", s.cy);

  auto parse_patches = [&kv](const std::string& prefix) {
    std::vector<WallPatch> out;
    for (const std::string& key : kv.keys_with_prefix(prefix)) {
      std::istringstream ss(kv.get_string(key));
      std::string face;
      WallPatch p;
      if (!(ss >> face >> p.u0 >> p.u1 >> p.v0 >> p.v1)) {
        throw std::invalid_argument("config key " + key +
                                    ": expected '<face> u0 u1 v0 v1'");
      }
      p.face = face_from_string(face);
      out.push_back(p);
    }
    return out;
  };
  s.textureless = parse_patches("scene.textureless.");
  s.artifacts = parse_patches("scene.artifact.");
  s.validate();
  return s;
}

std::pair<ImageBuffer, ImageBuffer> render_toy(const ToyScene& scene, const Pose& pose) {
  scene.validate();
  const Eigen::Vector3d& h = scene.half_extents;
  const Eigen::Vector3d& o = pose.t;
  for (int a = 0; a < 3; ++a) {
    if (std::abs(o[a]) >= h[a]) {
      throw std::invalid_argument("render_toy: camera center outside the room");
    }
  }

  const int W = scene.image_width, H = scene.image_height;
  ImageBuffer rgb(W, H, 3);
  ImageBuffer opacity(W, H, 1);
  const Eigen::Matrix3d R = pose.q.toRotationMatrix();
  const double cx = scene.principal_x(), cy = scene.principal_y();
  const double mid_albedo = 0.5 * (scene.albedo_low + scene.albedo_high);
  const std::uint64_t pose_h = pose_hash(pose);

  static const Face kFaces[6] = {Face::PosX, Face::NegX, Face::PosY,
                                 Face::NegY, Face::PosZ, Face::NegZ};

  for (int py = 0; py < H; ++py) {
    for (int px = 0; px < W; ++px) {
      const Eigen::Vector3d dir_cam((px - cx) / scene.focal_px, (py - cy) / scene.focal_px, 1.0);
      const Eigen::Vector3d d = R * dir_cam;

      // Exit intersection of the interior ray with the box.
      double t_hit = std::numeric_limits<double>::infinity();
      Face hit_face = Face::None;
      for (int a = 0; a < 3; ++a) {
        if (d[a] == 0.0) continue;
        const double plane = d[a] > 0.0 ? h[a] : -h[a];
        const double t = (plane - o[a]) / d[a];
        if (t > 0.0 && t < t_hit) {
          t_hit = t;
          hit_face = kFaces[2 * a + (d[a] > 0.0 ? 0 : 1)];
        }
      }

      if (hit_face == Face::None || hit_face == scene.open_face) {
        // Open face: the ray escapes.
        for (int c = 0; c < 3; ++c) rgb.at(px, py, c) = 0.0;
        opacity.at(px, py) = 0.0;
        continue;
      }

      const Eigen::Vector3d hit = o + t_hit * d;
      const FaceInfo info = face_info(hit_face);
      const double u = hit[info.u_axis];
      const double v = hit[info.v_axis];

      bool flat = false;
      for (const WallPatch& p : scene.textureless) {
        if (in_patch(p, hit_face, u, v)) { flat = true; break; }
      }
      double albedo;
      if (flat) {
        albedo = mid_albedo;
      } else {
        const long long cu = static_cast<long long>(std::floor(u * scene.checker_freq));
        const long long cv = static_cast<long long>(std::floor(v * scene.checker_freq));
        albedo = ((cu + cv) & 1LL) ? scene.albedo_high : scene.albedo_low;
      }
      for (const WallPatch& p : scene.artifacts) {
        if (in_patch(p, hit_face, u, v)) {
          albedo += scene.artifact_gain * pixel_noise(pose_h, px, py);
          break;
        }
      }
      albedo = std::clamp(albedo, 0.0, 1.0);

      double tint[3];
      face_tint(hit_face, tint);
      for (int c = 0; c < 3; ++c) rgb.at(px, py, c) = albedo * tint[c];
      opacity.at(px, py) = 1.0;
    }
  }
  return {std::move(rgb), std::move(opacity)};
}

}  // namespace posepick
