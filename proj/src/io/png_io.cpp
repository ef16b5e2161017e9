#include "layerlight/io/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

#include "layerlight/color.hpp"

namespace layerlight {

namespace {

struct FileCloser {
  void operator()(FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

[[noreturn]] void fail(const std::string& path, const char* what) {
  throw std::runtime_error("png: " + std::string(what) + ": " + path);
}

}  // namespace

void write_png_srgb(const std::string& path, const SrgbImage& img) {
  validate_unit_range(img, "write_png_srgb");
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) fail(path, "cannot open for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) fail(path, "libpng init failed");
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(path, "write error");
  }
  png_init_io(png, fp.get());
  png_set_compression_level(png, 6);  // pinned so output bytes are reproducible
  png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  std::vector<png_byte> row(static_cast<size_t>(img.width) * 3);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      for (int c = 0; c < 3; ++c) {
        row[static_cast<size_t>(x) * 3 + c] = static_cast<png_byte>(std::lround(255.0 * img.at(x, y, c)));
      }
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

SrgbImage read_png_srgb(const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) fail(path, "cannot open for reading");

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) fail(path, "libpng init failed");
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "read error or not a PNG");
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);

  // Normalize whatever came in (palette, gray, alpha, 16-bit) to 8-bit RGB.
  png_set_expand(png);
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_set_gray_to_rgb(png);
  png_read_update_info(png, info);

  const int width = static_cast<int>(png_get_image_width(png, info));
  const int height = static_cast<int>(png_get_image_height(png, info));
  if (png_get_channels(png, info) != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "unexpected channel count after normalization");
  }

  SrgbImage img(width, height);
  std::vector<png_byte> row(static_cast<size_t>(width) * 3);
  for (int y = 0; y < height; ++y) {
    png_read_row(png, row.data(), nullptr);
    for (int x = 0; x < width; ++x) {
      for (int c = 0; c < 3; ++c) {
        img.at(x, y, c) = static_cast<float>(row[static_cast<size_t>(x) * 3 + c]) / 255.0f;
      }
    }
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

void write_png_linear(const std::string& path, const LinearImage& img) {
  write_png_srgb(path, linear_to_srgb(img));
}

LinearImage read_png_linear(const std::string& path) {
  return srgb_to_linear(read_png_srgb(path));
}

void write_png_gray16(const std::string& path, int width, int height, const std::vector<float>& data) {
  if (data.size() != static_cast<size_t>(width) * height) {
    throw std::invalid_argument("write_png_gray16: size mismatch");
  }
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) fail(path, "cannot open for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) fail(path, "libpng init failed");
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(path, "write error");
  }
  png_init_io(png, fp.get());
  png_set_compression_level(png, 6);
  png_set_IHDR(png, info, width, height, 16, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  // PNG 16-bit samples are big-endian.
  std::vector<png_byte> row(static_cast<size_t>(width) * 2);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const float v = data[static_cast<size_t>(y) * width + x];
      const long q = std::lround(65535.0 * static_cast<double>(v));
      const unsigned u = static_cast<unsigned>(std::min(std::max(q, 0L), 65535L));
      row[static_cast<size_t>(x) * 2 + 0] = static_cast<png_byte>(u >> 8);
      row[static_cast<size_t>(x) * 2 + 1] = static_cast<png_byte>(u & 0xff);
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

std::vector<float> read_png_gray16(const std::string& path, int* width, int* height) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) fail(path, "cannot open for reading");

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) fail(path, "libpng init failed");
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "read error or not a PNG");
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);

  if (png_get_bit_depth(png, info) != 16 || png_get_color_type(png, info) != PNG_COLOR_TYPE_GRAY) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "expected 16-bit grayscale");
  }
  *width = static_cast<int>(png_get_image_width(png, info));
  *height = static_cast<int>(png_get_image_height(png, info));

  std::vector<float> out(static_cast<size_t>(*width) * *height);
  std::vector<png_byte> row(static_cast<size_t>(*width) * 2);
  for (int y = 0; y < *height; ++y) {
    png_read_row(png, row.data(), nullptr);
    for (int x = 0; x < *width; ++x) {
      const unsigned u = (static_cast<unsigned>(row[static_cast<size_t>(x) * 2]) << 8) | row[static_cast<size_t>(x) * 2 + 1];
      out[static_cast<size_t>(y) * *width + x] = static_cast<float>(u) / 65535.0f;
    }
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

void write_png_layer(const std::string& path, const LuminosityLayer& layer) {
  write_png_gray16(path, layer.width, layer.height, layer.data);
}

LuminosityLayer read_png_layer(const std::string& path) {
  LuminosityLayer layer;
  layer.data = read_png_gray16(path, &layer.width, &layer.height);
  return layer;
}

}  // namespace layerlight
