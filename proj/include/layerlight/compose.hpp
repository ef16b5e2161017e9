#pragma once

#include "layerlight/image.hpp"

namespace layerlight {

// Relighting composition: out = clamp(base * shade / light, 0, 1) per pixel,
// the shade and light fields applied to all three channels. Wherever no
// channel clamps, cross-channel ratios of the base are preserved, so the edit
// can only move luminosity.
LinearImage compose_relight(const LinearImage& base, const LuminosityLayer& shade, const LuminosityLayer& light);

// Alpha-over composition: out = alpha * rgb + (1 - alpha) * base.
LinearImage compose_alpha(const LinearImage& base, const RGBALayer& overlay);

}  // namespace layerlight
