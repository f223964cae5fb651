#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace posepick {

/// Row-major intensity buffer, 1 (gray) or 3 (RGB) interleaved channels,
/// values in [0, 1]. The image domain used by the per-pixel metrics is the
/// full pixel grid.
struct ImageBuffer {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<double> data;

  ImageBuffer() = default;
  ImageBuffer(int w, int h, int c, double fill = 0.0)
      : width(w), height(h), channels(c),
        data(static_cast<std::size_t>(w) * h * c, fill) {}

  double& at(int x, int y, int c = 0) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  double at(int x, int y, int c = 0) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
  bool same_shape(const ImageBuffer& o) const {
    return width == o.width && height == o.height && channels == o.channels;
  }
  bool same_size(const ImageBuffer& o) const {
    return width == o.width && height == o.height;
  }
};

/// Luminance of one pixel: 0.299 R + 0.587 G + 0.114 B (identity for gray).
double luminance(const ImageBuffer& img, int x, int y);

/// Single-channel luminance copy; returns the input unchanged if already gray.
ImageBuffer to_gray(const ImageBuffer& img);

/// 8-bit PNG I/O. `channels` selects the in-memory layout (1 or 3); gray and
/// RGB files are converted as needed. Intensities map by value/255.
ImageBuffer load_png(const std::string& path, int channels);
void save_png(const std::string& path, const ImageBuffer& img);

}  // namespace posepick
