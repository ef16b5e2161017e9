#pragma once

#include <vector>

#include "layerlight/image.hpp"

namespace layerlight {

// IEC 61966-2-1 transfer functions, evaluated in double precision.
double srgb_to_linear_value(double v);
double linear_to_srgb_value(double v);

// Per-channel conversions; inputs must be in [0, 1] or a validation error is thrown.
LinearImage srgb_to_linear(const SrgbImage& img);
SrgbImage linear_to_srgb(const LinearImage& img);

// Rec.709 luma of linear RGB, one value per pixel.
std::vector<float> luminance(const LinearImage& img);

}  // namespace layerlight
