#pragma once

#include <string>
#include <vector>

#include "layerlight/image.hpp"

namespace layerlight {

// 8-bit RGB PNG carrying gamma-encoded sRGB. Values quantized as round(255*v).
void write_png_srgb(const std::string& path, const SrgbImage& img);
SrgbImage read_png_srgb(const std::string& path);

// Convenience wrappers that convert through the sRGB transfer.
void write_png_linear(const std::string& path, const LinearImage& img);
LinearImage read_png_linear(const std::string& path);

// Single-channel 16-bit PNG with the fixed-point mapping value = round(65535*v).
void write_png_gray16(const std::string& path, int width, int height, const std::vector<float>& data);
std::vector<float> read_png_gray16(const std::string& path, int* width, int* height);

void write_png_layer(const std::string& path, const LuminosityLayer& layer);
LuminosityLayer read_png_layer(const std::string& path);

}  // namespace layerlight
