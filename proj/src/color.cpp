#include "layerlight/color.hpp"

#include <cmath>

namespace layerlight {

void validate_unit_range(const LinearImage& img, const char* what) {
  if (img.width <= 0 || img.height <= 0) {
    throw std::invalid_argument(std::string(what) + ": non-positive dimensions");
  }
  for (float v : img.data) {
    if (!(v >= 0.0f && v <= 1.0f)) {
      throw std::invalid_argument(std::string(what) + ": value outside [0,1]");
    }
  }
}

void validate_unit_range(const SrgbImage& img, const char* what) {
  if (img.width <= 0 || img.height <= 0) {
    throw std::invalid_argument(std::string(what) + ": non-positive dimensions");
  }
  for (float v : img.data) {
    if (!(v >= 0.0f && v <= 1.0f)) {
      throw std::invalid_argument(std::string(what) + ": value outside [0,1]");
    }
  }
}

void validate_layer_range(const LuminosityLayer& layer, const char* what) {
  if (layer.width <= 0 || layer.height <= 0) {
    throw std::invalid_argument(std::string(what) + ": non-positive dimensions");
  }
  for (float v : layer.data) {
    if (!(v >= kLayerMin && v <= 1.0f)) {
      throw std::invalid_argument(std::string(what) + ": value outside [0.1,1]");
    }
  }
}

double srgb_to_linear_value(double v) {
  return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

double linear_to_srgb_value(double v) {
  return v <= 0.0031308 ? v * 12.92 : 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
}

LinearImage srgb_to_linear(const SrgbImage& img) {
  validate_unit_range(img, "srgb_to_linear");
  LinearImage out(img.width, img.height);
  for (size_t i = 0; i < img.data.size(); ++i) {
    out.data[i] = static_cast<float>(srgb_to_linear_value(img.data[i]));
  }
  return out;
}

SrgbImage linear_to_srgb(const LinearImage& img) {
  validate_unit_range(img, "linear_to_srgb");
  SrgbImage out(img.width, img.height);
  for (size_t i = 0; i < img.data.size(); ++i) {
    out.data[i] = static_cast<float>(linear_to_srgb_value(img.data[i]));
  }
  return out;
}

std::vector<float> luminance(const LinearImage& img) {
  std::vector<float> out(img.pixel_count());
  for (size_t p = 0; p < out.size(); ++p) {
    out[p] = 0.2126f * img.data[p * 3 + 0] + 0.7152f * img.data[p * 3 + 1] + 0.0722f * img.data[p * 3 + 2];
  }
  return out;
}

}  // namespace layerlight
