#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace salrank {

/// Row-major single-channel image with double precision values,
/// typically normalized to [0,1] (saliency maps, rank maps, energy inputs).
struct GrayMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  GrayMap() = default;
  GrayMap(int w, int h, double fill = 0.0)
      : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("GrayMap: non-positive dimensions");
  }

  double& at(int row, int col) { return values[static_cast<size_t>(row) * width + col]; }
  double at(int row, int col) const { return values[static_cast<size_t>(row) * width + col]; }
  size_t size() const { return values.size(); }
};

/// Row-major single-channel 8-bit image (rendered rank maps, mask exports).
struct Gray8 {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> values;

  Gray8() = default;
  Gray8(int w, int h, uint8_t fill = 0)
      : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("Gray8: non-positive dimensions");
  }

  uint8_t& at(int row, int col) { return values[static_cast<size_t>(row) * width + col]; }
  uint8_t at(int row, int col) const { return values[static_cast<size_t>(row) * width + col]; }
};

/// Row-major interleaved RGB image, double precision per channel.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<double> values;  // 3 * width * height, channel-interleaved

  RgbImage() = default;
  RgbImage(int w, int h, double fill = 0.0)
      : width(w), height(h), values(3 * static_cast<size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("RgbImage: non-positive dimensions");
  }

  double& at(int row, int col, int ch) {
    return values[(static_cast<size_t>(row) * width + col) * 3 + ch];
  }
  double at(int row, int col, int ch) const {
    return values[(static_cast<size_t>(row) * width + col) * 3 + ch];
  }
};

/// Convert an 8-bit map to [0,1] doubles by dividing by 255.
GrayMap to_unit_gray(const Gray8& img);

/// Quantize a [0,1] map to 8 bits with round-to-nearest; values are clamped.
Gray8 to_gray8(const GrayMap& map);

}  // namespace salrank
