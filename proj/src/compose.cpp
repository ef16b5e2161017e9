#include "layerlight/compose.hpp"

#include <algorithm>

namespace layerlight {

LinearImage compose_relight(const LinearImage& base, const LuminosityLayer& shade, const LuminosityLayer& light) {
  require_same_size(base.width, base.height, shade.width, shade.height, "compose_relight");
  require_same_size(base.width, base.height, light.width, light.height, "compose_relight");
  validate_layer_range(shade, "compose_relight shade");
  validate_layer_range(light, "compose_relight light");

  LinearImage out(base.width, base.height);
  const size_t n = base.pixel_count();
  for (size_t p = 0; p < n; ++p) {
    // Multiply, then divide, then clamp. The layer lower bound keeps the
    // divide well away from zero.
    const float gain_num = shade.data[p];
    const float gain_den = light.data[p];
    for (int c = 0; c < 3; ++c) {
      const float v = base.data[p * 3 + c] * gain_num / gain_den;
      out.data[p * 3 + c] = std::clamp(v, 0.0f, 1.0f);
    }
  }
  return out;
}

LinearImage compose_alpha(const LinearImage& base, const RGBALayer& overlay) {
  require_same_size(base.width, base.height, overlay.width, overlay.height, "compose_alpha");

  LinearImage out(base.width, base.height);
  const size_t n = base.pixel_count();
  for (size_t p = 0; p < n; ++p) {
    const float a = overlay.alpha[p];
    for (int c = 0; c < 3; ++c) {
      out.data[p * 3 + c] = a * overlay.rgb[p * 3 + c] + (1.0f - a) * base.data[p * 3 + c];
    }
  }
  return out;
}

}  // namespace layerlight
