#include <png.h>

#include <cstdio>
#include <fstream>
#include <memory>

#include "holomove/atlas.hpp"
#include "holomove/errors.hpp"

namespace holomove::atlas {

namespace {

Rgb color_of(const RasterClass& r, std::uint8_t label) {
  if (label >= label_count) throw input_error("label outside palette");
  return r.spec.palette[label];
}

void write_bytes(const std::string& bytes, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw input_error("write failed: " + path.string());
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((v >> (8 * k)) & 0xFF));
}

}  // namespace

std::string encode_ppm(const RasterClass& r) {
  std::string out = "P6\n" + std::to_string(r.width()) + " " + std::to_string(r.height()) + "\n255\n";
  out.reserve(out.size() + r.labels.size() * 3);
  for (auto label : r.labels) {
    const Rgb c = color_of(r, label);
    out.push_back(static_cast<char>(c.r));
    out.push_back(static_cast<char>(c.g));
    out.push_back(static_cast<char>(c.b));
  }
  return out;
}

void write_ppm(const RasterClass& r, const std::filesystem::path& path) { write_bytes(encode_ppm(r), path); }

void write_png(const RasterClass& r, const std::filesystem::path& path) {
  std::unique_ptr<FILE, int (*)(FILE*)> file(std::fopen(path.string().c_str(), "wb"), &std::fclose);
  if (!file) throw input_error("cannot open " + path.string() + " for writing");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw numerical_error("libpng initialisation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw numerical_error("libpng initialisation failed");
  }
  std::vector<png_byte> row(static_cast<std::size_t>(r.width()) * 3);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw input_error("PNG encoding failed: " + path.string());
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(r.width()), static_cast<png_uint_32>(r.height()), 8,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < r.height(); ++y) {
    for (int x = 0; x < r.width(); ++x) {
      const Rgb c = color_of(r, r.at(x, y));
      row[static_cast<std::size_t>(3 * x)] = c.r;
      row[static_cast<std::size_t>(3 * x + 1)] = c.g;
      row[static_cast<std::size_t>(3 * x + 2)] = c.b;
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

std::string encode_label_dump(const RasterClass& r) {
  std::string out;
  out.reserve(8 + r.labels.size());
  put_u32(out, static_cast<std::uint32_t>(r.width()));
  put_u32(out, static_cast<std::uint32_t>(r.height()));
  out.append(reinterpret_cast<const char*>(r.labels.data()), r.labels.size());
  return out;
}

void write_label_dump(const RasterClass& r, const std::filesystem::path& path) {
  write_bytes(encode_label_dump(r), path);
}

void write_image(const RasterClass& r, const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".ppm") return write_ppm(r, path);
  if (ext == ".png") return write_png(r, path);
  throw input_error("unsupported image extension '" + ext + "' (use .ppm or .png)");
}

}  // namespace holomove::atlas
