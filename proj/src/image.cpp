#include "posepick/image.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace posepick {

double luminance(const ImageBuffer& img, int x, int y) {
  if (img.channels == 1) return img.at(x, y, 0);
  return 0.299 * img.at(x, y, 0) + 0.587 * img.at(x, y, 1) + 0.114 * img.at(x, y, 2);
}

ImageBuffer to_gray(const ImageBuffer& img) {
  if (img.channels == 1) return img;
  ImageBuffer out(img.width, img.height, 1);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) out.at(x, y) = luminance(img, x, y);
  return out;
}

ImageBuffer load_png(const std::string& path, int channels) {
  if (channels != 1 && channels != 3) {
    throw std::invalid_argument("load_png: channels must be 1 or 3");
  }
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.c_str())) {
    throw std::runtime_error("cannot read PNG: " + path + ": " + png.message);
  }
  png.format = (channels == 1) ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
  std::vector<unsigned char> bytes(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, bytes.data(), 0, nullptr)) {
    std::string msg = png.message;
    png_image_free(&png);
    throw std::runtime_error("cannot decode PNG: " + path + ": " + msg);
  }
  ImageBuffer img(static_cast<int>(png.width), static_cast<int>(png.height), channels);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    img.data[i] = static_cast<double>(bytes[i]) / 255.0;
  }
  return img;
}

void save_png(const std::string& path, const ImageBuffer& img) {
  if (img.channels != 1 && img.channels != 3) {
    throw std::invalid_argument("save_png: channels must be 1 or 3");
  }
  if (img.width <= 0 || img.height <= 0) {
    throw std::invalid_argument("save_png: empty image");
  }
  std::vector<unsigned char> bytes(img.data.size());
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    const double v = std::clamp(img.data[i], 0.0, 1.0);
    bytes[i] = static_cast<unsigned char>(std::lround(v * 255.0));
  }
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(img.width);
  png.height = static_cast<png_uint_32>(img.height);
  png.format = (img.channels == 1) ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&png, path.c_str(), 0, bytes.data(), 0, nullptr)) {
    throw std::runtime_error("cannot write PNG: " + path + ": " + png.message);
  }
}

}  // namespace posepick
