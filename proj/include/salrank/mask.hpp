#pragma once

#include <cstdint>
#include <vector>

#include "salrank/image.hpp"

namespace salrank {

/// Binary pixel mask, row-major, one byte per pixel (0 = background,
/// nonzero = foreground). Instance masks are expected to be non-empty.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> bits;

  BinaryMask() = default;
  BinaryMask(int w, int h, uint8_t fill = 0)
      : width(w), height(h), bits(static_cast<size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("BinaryMask: non-positive dimensions");
  }

  uint8_t& at(int row, int col) { return bits[static_cast<size_t>(row) * width + col]; }
  uint8_t at(int row, int col) const { return bits[static_cast<size_t>(row) * width + col]; }

  size_t area() const;
  bool empty() const { return area() == 0; }
  bool same_shape(const BinaryMask& other) const {
    return width == other.width && height == other.height;
  }
};

/// Half-open pixel box [x0,x1) x [y0,y1); widths are plain subtractions.
struct Bbox {
  int x0 = 0;
  int y0 = 0;
  int x1 = 0;
  int y1 = 0;

  int width() const { return x1 - x0; }
  int height() const { return y1 - y0; }
  bool contains(const Bbox& inner) const {
    return x0 <= inner.x0 && y0 <= inner.y0 && x1 >= inner.x1 && y1 >= inner.y1;
  }
  bool operator==(const Bbox&) const = default;
};

/// Run-length encoded mask. Runs walk the mask row-major; the first count is
/// a background run (possibly zero), after which runs alternate
/// foreground/background. Interior runs are never zero.
struct RleMask {
  int width = 0;
  int height = 0;
  std::vector<uint32_t> counts;
};

/// Intersection area of two same-sized masks.
size_t mask_intersection_area(const BinaryMask& a, const BinaryMask& b);

/// Intersection-over-union of two same-sized masks. Empty-vs-empty is 0.
double mask_iou(const BinaryMask& a, const BinaryMask& b);

RleMask rle_encode(const BinaryMask& mask);
BinaryMask rle_decode(const RleMask& rle);

/// Tightest box containing every foreground pixel. Throws on empty masks.
Bbox bbox_of_mask(const BinaryMask& mask);

/// Scale a box about its center by `factor` (>= 1), rounding outward
/// (floor for mins, ceil for maxes), then clip to the image bounds.
Bbox enlarge_bbox(const Bbox& box, double factor, int bound_width, int bound_height);

}  // namespace salrank
