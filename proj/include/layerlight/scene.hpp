#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "layerlight/image.hpp"

namespace layerlight {

inline constexpr int kNumDirections = 12;
inline constexpr int kNumCategories = 8;  // blob-count (1-4) x size-class (small/large)

struct Blob {
  double cx = 0.0;  // world coords: x right, y up, in pixels
  double cy = 0.0;
  double radius = 0.0;  // footprint radius, pixels
  double height = 0.0;  // bump amplitude, pixels
};

// Parametric 2.5D height-field scene. Everything needed to re-render a sample
// bit-exactly lives here.
struct SceneSpec {
  std::uint64_t seed = 0;
  int size = 0;  // square raster
  int category_id = 0;
  std::vector<Blob> blobs;                          // 1-4 bumps
  std::vector<std::array<double, 3>> blob_albedo;   // RGB per blob, in [0.05, 0.95]
  std::array<double, 3> background_albedo{0.5, 0.5, 0.5};
};

struct LightSpec {
  int direction_index = 0;       // 0..11 on the azimuth ring
  double elevation_deg = 45.0;
  double intensity = 1.0;
  double ambient = 0.2;
};

struct NormalField {
  int size = 0;
  std::vector<std::array<double, 3>> normals;  // unit vectors, (x right, y up, z out)
  std::vector<double> height;
};

// Continuous height field and its analytic gradient at world position (x, y).
double scene_height(const SceneSpec& scene, double x, double y);
void scene_height_gradient(const SceneSpec& scene, double x, double y, double* dx, double* dy);

const char* category_name(int category_id);

// Deterministic scene synthesis. size must be one of {32, 64, 128}.
SceneSpec sample_scene(std::uint64_t seed, int size, int category_id);

// Per-pixel heights and unit normals, sampled at pixel centers.
NormalField height_and_normals(const SceneSpec& scene);

// Unit vector from the surface toward light source `index` on the ring:
// azimuth 90 + 30*index degrees counter-clockwise (0 = image top), fixed
// elevation. Coordinates are (x right, y up, z out of the image).
std::array<double, 3> light_direction(int index, double elevation_deg = 45.0);

// Lambertian render under one ring light:
// out = clamp(albedo * (ambient + (1-ambient) * intensity * max(0, n.l)), 0, 1).
LinearImage render_relit(const SceneSpec& scene, const LightSpec& light);

// Shading-free panel render: out = albedo * uniform_level.
LinearImage render_uniform(const SceneSpec& scene, double uniform_level = 0.9);

// Per-pixel albedo (soft blend of blob colors over the background).
void scene_albedo(const SceneSpec& scene, double x, double y, std::array<double, 3>* rgb);

}  // namespace layerlight
