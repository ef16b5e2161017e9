#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace layerlight {

// Raster types used by the composition pipeline. All data is row-major,
// top row first; RGB images are interleaved.

// Linear-light RGB raster with all values in [0, 1].
struct LinearImage {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // width * height * 3, RGB interleaved

  LinearImage() = default;
  LinearImage(int w, int h, float fill = 0.0f) : width(w), height(h), data(static_cast<size_t>(w) * h * 3, fill) {}

  float& at(int x, int y, int c) { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  float at(int x, int y, int c) const { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// Gamma-encoded sRGB raster, values in [0, 1]. File I/O representation.
struct SrgbImage {
  int width = 0;
  int height = 0;
  std::vector<float> data;

  SrgbImage() = default;
  SrgbImage(int w, int h, float fill = 0.0f) : width(w), height(h), data(static_cast<size_t>(w) * h * 3, fill) {}

  float& at(int x, int y, int c) { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  float at(int x, int y, int c) const { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// Single-channel multiply/divide layer, values in [0.1, 1].
struct LuminosityLayer {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // width * height

  LuminosityLayer() = default;
  LuminosityLayer(int w, int h, float fill = 1.0f) : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  float& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  float at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
};

// Color overlay layer with its own transparency channel, values in [0, 1].
struct RGBALayer {
  int width = 0;
  int height = 0;
  std::vector<float> rgb;    // width * height * 3
  std::vector<float> alpha;  // width * height

  RGBALayer() = default;
  RGBALayer(int w, int h)
      : width(w), height(h), rgb(static_cast<size_t>(w) * h * 3, 0.0f), alpha(static_cast<size_t>(w) * h, 0.0f) {}
};

inline constexpr float kLayerMin = 0.1f;  // lower clip of luminosity layers

void validate_unit_range(const LinearImage& img, const char* what);
void validate_unit_range(const SrgbImage& img, const char* what);
void validate_layer_range(const LuminosityLayer& layer, const char* what);

inline void require_same_size(int wa, int ha, int wb, int hb, const char* what) {
  if (wa != wb || ha != hb) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace layerlight
