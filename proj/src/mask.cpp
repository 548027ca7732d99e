#include "salrank/mask.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace salrank {

GrayMap to_unit_gray(const Gray8& img) {
  GrayMap out(img.width, img.height);
  for (size_t i = 0; i < img.values.size(); ++i) out.values[i] = img.values[i] / 255.0;
  return out;
}

Gray8 to_gray8(const GrayMap& map) {
  Gray8 out(map.width, map.height);
  for (size_t i = 0; i < map.values.size(); ++i) {
    double v = std::clamp(map.values[i], 0.0, 1.0);
    out.values[i] = static_cast<uint8_t>(std::lround(v * 255.0));
  }
  return out;
}

size_t BinaryMask::area() const {
  return static_cast<size_t>(std::count_if(bits.begin(), bits.end(), [](uint8_t b) { return b != 0; }));
}

size_t mask_intersection_area(const BinaryMask& a, const BinaryMask& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("mask_intersection_area: dimension mismatch");
  size_t inter = 0;
  for (size_t i = 0; i < a.bits.size(); ++i)
    if (a.bits[i] && b.bits[i]) ++inter;
  return inter;
}

double mask_iou(const BinaryMask& a, const BinaryMask& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("mask_iou: dimension mismatch");
  size_t inter = 0, uni = 0;
  for (size_t i = 0; i < a.bits.size(); ++i) {
    bool fa = a.bits[i] != 0, fb = b.bits[i] != 0;
    inter += fa && fb;
    uni += fa || fb;
  }
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

RleMask rle_encode(const BinaryMask& mask) {
  RleMask rle;
  rle.width = mask.width;
  rle.height = mask.height;
  uint8_t current = 0;  // runs start on background
  uint32_t run = 0;
  for (uint8_t bit : mask.bits) {
    bool fg = bit != 0;
    if (fg == (current != 0)) {
      ++run;
    } else {
      rle.counts.push_back(run);
      current = fg ? 1 : 0;
      run = 1;
    }
  }
  rle.counts.push_back(run);
  return rle;
}

BinaryMask rle_decode(const RleMask& rle) {
  const size_t total = static_cast<size_t>(rle.width) * rle.height;
  size_t sum = 0;
  for (size_t i = 0; i < rle.counts.size(); ++i) {
    if (i > 0 && rle.counts[i] == 0)
      throw std::invalid_argument("rle_decode: zero-length interior run");
    sum += rle.counts[i];
  }
  if (sum != total)
    throw std::invalid_argument("rle_decode: counts sum to " + std::to_string(sum) +
                                ", expected " + std::to_string(total));
  BinaryMask mask(rle.width, rle.height);
  size_t pos = 0;
  uint8_t value = 0;
  for (uint32_t run : rle.counts) {
    std::fill_n(mask.bits.begin() + pos, run, value);
    pos += run;
    value = value ? 0 : 1;
  }
  return mask;
}

Bbox bbox_of_mask(const BinaryMask& mask) {
  int min_x = mask.width, min_y = mask.height, max_x = -1, max_y = -1;
  for (int r = 0; r < mask.height; ++r) {
    for (int c = 0; c < mask.width; ++c) {
      if (!mask.at(r, c)) continue;
      min_x = std::min(min_x, c);
      max_x = std::max(max_x, c);
      min_y = std::min(min_y, r);
      max_y = std::max(max_y, r);
    }
  }
  if (max_x < 0) throw std::invalid_argument("bbox_of_mask: empty mask");
  return Bbox{min_x, min_y, max_x + 1, max_y + 1};
}

Bbox enlarge_bbox(const Bbox& box, double factor, int bound_width, int bound_height) {
  if (factor < 1.0) throw std::invalid_argument("enlarge_bbox: factor must be >= 1");
  const double cx = 0.5 * (box.x0 + box.x1);
  const double cy = 0.5 * (box.y0 + box.y1);
  const double half_w = 0.5 * factor * box.width();
  const double half_h = 0.5 * factor * box.height();
  Bbox out;
  out.x0 = std::max(0, static_cast<int>(std::floor(cx - half_w)));
  out.y0 = std::max(0, static_cast<int>(std::floor(cy - half_h)));
  out.x1 = std::min(bound_width, static_cast<int>(std::ceil(cx + half_w)));
  out.y1 = std::min(bound_height, static_cast<int>(std::ceil(cy + half_h)));
  return out;
}

}  // namespace salrank
