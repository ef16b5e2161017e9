#include "layerlight/scene.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "layerlight/rng.hpp"

namespace layerlight {

namespace {

constexpr double kAlbedoSoftness = 0.15;  // background weight in the albedo blend

// Unit-amplitude footprint of one blob at distance^2 r2.
inline double footprint(const Blob& b, double r2) {
  const double s = b.radius * 0.5;
  return std::exp(-r2 / (2.0 * s * s));
}

}  // namespace

const char* category_name(int category_id) {
  static const char* names[kNumCategories] = {
      "one small mound",  "two small mounds",  "three small mounds",  "four small mounds",
      "one large mound",  "two large mounds",  "three large mounds",  "four large mounds",
  };
  if (category_id < 0 || category_id >= kNumCategories) {
    throw std::invalid_argument("category_name: category_id out of range");
  }
  return names[category_id];
}

SceneSpec sample_scene(std::uint64_t seed, int size, int category_id) {
  if (size != 32 && size != 64 && size != 128) {
    throw std::invalid_argument("sample_scene: size must be 32, 64 or 128");
  }
  if (category_id < 0 || category_id >= kNumCategories) {
    throw std::invalid_argument("sample_scene: category_id out of range");
  }

  Rng rng(derive_seed(seed, "scene-spec"));
  SceneSpec scene;
  scene.seed = seed;
  scene.size = size;
  scene.category_id = category_id;

  const int blob_count = category_id % 4 + 1;
  const bool large = category_id >= 4;
  const double s = static_cast<double>(size);
  const double r_lo = large ? s / 5.0 : s / 8.0;
  const double r_hi = large ? s / 3.0 : s / 5.0;

  for (int i = 0; i < blob_count; ++i) {
    Blob b;
    b.cx = rng.uniform(0.25 * s, 0.75 * s);
    b.cy = rng.uniform(0.25 * s, 0.75 * s);
    b.radius = rng.uniform(r_lo, r_hi);
    // Amplitude proportional to the footprint sigma so peak slopes stay O(1).
    b.height = rng.uniform(0.8, 2.2) * (b.radius * 0.5);
    scene.blobs.push_back(b);

    std::array<double, 3> rgb;
    for (double& c : rgb) c = rng.uniform(0.05, 0.95);
    scene.blob_albedo.push_back(rgb);
  }
  for (double& c : scene.background_albedo) c = rng.uniform(0.05, 0.95);
  return scene;
}

double scene_height(const SceneSpec& scene, double x, double y) {
  double h = 0.0;
  for (const Blob& b : scene.blobs) {
    const double dx = x - b.cx;
    const double dy = y - b.cy;
    h += b.height * footprint(b, dx * dx + dy * dy);
  }
  return h;
}

void scene_height_gradient(const SceneSpec& scene, double x, double y, double* gx, double* gy) {
  double sx = 0.0, sy = 0.0;
  for (const Blob& b : scene.blobs) {
    const double dx = x - b.cx;
    const double dy = y - b.cy;
    const double s = b.radius * 0.5;
    const double g = b.height * footprint(b, dx * dx + dy * dy) / (s * s);
    sx -= dx * g;
    sy -= dy * g;
  }
  *gx = sx;
  *gy = sy;
}

void scene_albedo(const SceneSpec& scene, double x, double y, std::array<double, 3>* rgb) {
  double wsum = kAlbedoSoftness;
  std::array<double, 3> acc{
      kAlbedoSoftness * scene.background_albedo[0],
      kAlbedoSoftness * scene.background_albedo[1],
      kAlbedoSoftness * scene.background_albedo[2],
  };
  for (size_t i = 0; i < scene.blobs.size(); ++i) {
    const Blob& b = scene.blobs[i];
    const double dx = x - b.cx;
    const double dy = y - b.cy;
    const double w = footprint(b, dx * dx + dy * dy);
    wsum += w;
    for (int c = 0; c < 3; ++c) acc[c] += w * scene.blob_albedo[i][c];
  }
  for (int c = 0; c < 3; ++c) (*rgb)[c] = acc[c] / wsum;
}

NormalField height_and_normals(const SceneSpec& scene) {
  NormalField field;
  field.size = scene.size;
  field.normals.resize(static_cast<size_t>(scene.size) * scene.size);
  field.height.resize(field.normals.size());

  for (int row = 0; row < scene.size; ++row) {
    // Pixel centers; world y axis points up, raster rows go down.
    const double y = (scene.size - 1 - row) + 0.5;
    for (int col = 0; col < scene.size; ++col) {
      const double x = col + 0.5;
      double gx, gy;
      scene_height_gradient(scene, x, y, &gx, &gy);
      const double inv_len = 1.0 / std::sqrt(gx * gx + gy * gy + 1.0);
      const size_t p = static_cast<size_t>(row) * scene.size + col;
      field.normals[p] = {-gx * inv_len, -gy * inv_len, inv_len};
      field.height[p] = scene_height(scene, x, y);
    }
  }
  return field;
}

std::array<double, 3> light_direction(int index, double elevation_deg) {
  if (index < 0 || index >= kNumDirections) {
    throw std::invalid_argument("light_direction: index out of range");
  }
  const double az = (90.0 + 30.0 * index) * M_PI / 180.0;
  const double el = elevation_deg * M_PI / 180.0;
  return {std::cos(az) * std::cos(el), std::sin(az) * std::cos(el), std::sin(el)};
}

LinearImage render_relit(const SceneSpec& scene, const LightSpec& light) {
  const auto l = light_direction(light.direction_index, light.elevation_deg);
  const NormalField field = height_and_normals(scene);

  LinearImage out(scene.size, scene.size);
  for (int row = 0; row < scene.size; ++row) {
    const double y = (scene.size - 1 - row) + 0.5;
    for (int col = 0; col < scene.size; ++col) {
      const double x = col + 0.5;
      const size_t p = static_cast<size_t>(row) * scene.size + col;
      const auto& n = field.normals[p];
      const double ndotl = std::max(0.0, n[0] * l[0] + n[1] * l[1] + n[2] * l[2]);
      const double shade = light.ambient + (1.0 - light.ambient) * light.intensity * ndotl;
      std::array<double, 3> albedo;
      scene_albedo(scene, x, y, &albedo);
      for (int c = 0; c < 3; ++c) {
        out.data[p * 3 + c] = static_cast<float>(std::clamp(albedo[c] * shade, 0.0, 1.0));
      }
    }
  }
  return out;
}

LinearImage render_uniform(const SceneSpec& scene, double uniform_level) {
  LinearImage out(scene.size, scene.size);
  for (int row = 0; row < scene.size; ++row) {
    const double y = (scene.size - 1 - row) + 0.5;
    for (int col = 0; col < scene.size; ++col) {
      const double x = col + 0.5;
      const size_t p = static_cast<size_t>(row) * scene.size + col;
      std::array<double, 3> albedo;
      scene_albedo(scene, x, y, &albedo);
      for (int c = 0; c < 3; ++c) {
        out.data[p * 3 + c] = static_cast<float>(albedo[c] * uniform_level);
      }
    }
  }
  return out;
}

}  // namespace layerlight
