#include "pansharp/core/tile_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <nlohmann/json.hpp>

#include "pansharp/core/normalize.hpp"

namespace pansharp {

namespace fs = std::filesystem;
using nlohmann::json;

static constexpr char kTileMagic[8] = {'P', 'S', 'T', 'I', 'L', 'E', '0', '1'};

void write_tile(const fs::path& path, const RawTile& tile) {
  json header = {
      {"bands", tile.bands},
      {"height", tile.height},
      {"width", tile.width},
      {"bit_depth", tile.bit_depth},
      {"band_names", tile.band_names},
      {"dtype", tile.bit_depth <= 8 ? "u8" : "u16"},
  };
  std::string htext = header.dump();
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(ErrorKind::IoFailure, "cannot open for write: " + path.string());
  os.write(kTileMagic, sizeof(kTileMagic));
  uint32_t hlen = uint32_t(htext.size());
  os.write(reinterpret_cast<const char*>(&hlen), 4);
  os.write(htext.data(), std::streamsize(htext.size()));
  if (tile.bit_depth <= 8) {
    std::vector<uint8_t> buf(tile.data.size());
    for (size_t i = 0; i < buf.size(); ++i) buf[i] = uint8_t(tile.data[i]);
    os.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(buf.size()));
  } else {
    std::vector<uint16_t> buf(tile.data.size());
    for (size_t i = 0; i < buf.size(); ++i) buf[i] = uint16_t(tile.data[i]);
    os.write(reinterpret_cast<const char*>(buf.data()),
             std::streamsize(buf.size() * 2));
  }
  if (!os) fail(ErrorKind::IoFailure, "write failed: " + path.string());
}

static RawTile read_native_tile(std::ifstream& is, const fs::path& path) {
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kTileMagic, 8) != 0) {
    fail(ErrorKind::IoFailure, "not a tile file: " + path.string());
  }
  uint32_t hlen = 0;
  is.read(reinterpret_cast<char*>(&hlen), 4);
  std::string htext(hlen, '\0');
  is.read(htext.data(), hlen);
  if (!is) fail(ErrorKind::IoFailure, "truncated tile header: " + path.string());
  json header = json::parse(htext, nullptr, false);
  if (header.is_discarded()) {
    fail(ErrorKind::IoFailure, "bad tile header: " + path.string());
  }
  RawTile tile;
  tile.bands = header.at("bands").get<int>();
  tile.height = header.at("height").get<int>();
  tile.width = header.at("width").get<int>();
  tile.bit_depth = header.at("bit_depth").get<int>();
  tile.band_names = header.at("band_names").get<std::vector<std::string>>();
  std::string dtype = header.at("dtype").get<std::string>();
  tile.data.resize(size_t(tile.size()));
  if (dtype == "u8") {
    std::vector<uint8_t> buf(tile.data.size());
    is.read(reinterpret_cast<char*>(buf.data()), std::streamsize(buf.size()));
    if (!is) fail(ErrorKind::IoFailure, "truncated tile data: " + path.string());
    for (size_t i = 0; i < buf.size(); ++i) tile.data[i] = buf[i];
  } else if (dtype == "u16") {
    std::vector<uint16_t> buf(tile.data.size());
    is.read(reinterpret_cast<char*>(buf.data()), std::streamsize(buf.size() * 2));
    if (!is) fail(ErrorKind::IoFailure, "truncated tile data: " + path.string());
    for (size_t i = 0; i < buf.size(); ++i) tile.data[i] = buf[i];
  } else {
    fail(ErrorKind::IoFailure, "unknown tile dtype '" + dtype + "'");
  }
  return tile;
}

RawTile read_tile(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(ErrorKind::IoFailure, "cannot open: " + path.string());
  char probe[8] = {};
  is.read(probe, 8);
  is.seekg(0);
  if (std::memcmp(probe, kTileMagic, 8) == 0) return read_native_tile(is, path);
  static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (std::memcmp(probe, png_sig, 8) == 0) {
    is.close();
    return read_png(path);
  }
  fail(ErrorKind::IoFailure, "unrecognized tile format: " + path.string());
}

void save_tile(const fs::path& path, const RasterTile& tile) {
  write_tile(path, denormalize(tile));
}

RasterTile load_tile(const fs::path& path) { return normalize(read_tile(path)); }

// ---------------------------------------------------------------------------
// PNG

namespace {

struct PngWriteCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FILE* fp = nullptr;
  ~PngWriteCloser() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    if (fp) std::fclose(fp);
  }
};

struct PngReadCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FILE* fp = nullptr;
  ~PngReadCloser() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (fp) std::fclose(fp);
  }
};

}  // namespace

void write_png(const fs::path& path, const RawTile& tile) {
  if (tile.bands != 1 && tile.bands != 3) {
    fail(ErrorKind::BadShape, "PNG export supports 1 or 3 bands");
  }
  if (tile.bit_depth != 8 && tile.bit_depth != 16) {
    fail(ErrorKind::BadShape, "PNG export supports bit depth 8 or 16");
  }
  PngWriteCloser c;
  c.fp = std::fopen(path.string().c_str(), "wb");
  if (!c.fp) fail(ErrorKind::IoFailure, "cannot open for write: " + path.string());
  c.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  c.info = png_create_info_struct(c.png);
  if (setjmp(png_jmpbuf(c.png))) {
    fail(ErrorKind::IoFailure, "libpng write failure: " + path.string());
  }
  png_init_io(c.png, c.fp);
  int color = tile.bands == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
  png_set_IHDR(c.png, c.info, png_uint_32(tile.width), png_uint_32(tile.height),
               tile.bit_depth, color, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(c.png, c.info);

  const int bytes_per_sample = tile.bit_depth / 8;
  std::vector<uint8_t> row(size_t(tile.width) * tile.bands * bytes_per_sample);
  for (int y = 0; y < tile.height; ++y) {
    for (int x = 0; x < tile.width; ++x) {
      for (int b = 0; b < tile.bands; ++b) {
        int32_t v = tile.data[(int64_t(b) * tile.height + y) * tile.width + x];
        size_t off = (size_t(x) * tile.bands + b) * bytes_per_sample;
        if (bytes_per_sample == 1) {
          row[off] = uint8_t(v);
        } else {
          row[off] = uint8_t(v >> 8);  // PNG is big-endian
          row[off + 1] = uint8_t(v & 0xff);
        }
      }
    }
    png_write_row(c.png, row.data());
  }
  png_write_end(c.png, nullptr);
}

RawTile read_png(const fs::path& path) {
  PngReadCloser c;
  c.fp = std::fopen(path.string().c_str(), "rb");
  if (!c.fp) fail(ErrorKind::IoFailure, "cannot open: " + path.string());
  c.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  c.info = png_create_info_struct(c.png);
  if (setjmp(png_jmpbuf(c.png))) {
    fail(ErrorKind::IoFailure, "libpng read failure: " + path.string());
  }
  png_init_io(c.png, c.fp);
  png_read_info(c.png, c.info);
  png_uint_32 width = png_get_image_width(c.png, c.info);
  png_uint_32 height = png_get_image_height(c.png, c.info);
  int depth = png_get_bit_depth(c.png, c.info);
  int color = png_get_color_type(c.png, c.info);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(c.png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(c.png);
  png_set_strip_alpha(c.png);
  png_read_update_info(c.png, c.info);
  depth = png_get_bit_depth(c.png, c.info);
  int channels = png_get_channels(c.png, c.info);
  if (depth != 8 && depth != 16) {
    fail(ErrorKind::IoFailure, "unsupported PNG depth: " + path.string());
  }
  if (channels != 1 && channels != 3) {
    fail(ErrorKind::IoFailure, "unsupported PNG channel count: " + path.string());
  }
  RawTile tile;
  tile.bands = channels;
  tile.height = int(height);
  tile.width = int(width);
  tile.bit_depth = depth;
  tile.band_names = channels == 1 ? default_pan_band_names()
                                  : std::vector<std::string>{"R", "G", "B"};
  tile.data.resize(size_t(tile.size()));
  const int bytes_per_sample = depth / 8;
  std::vector<uint8_t> row(size_t(width) * channels * bytes_per_sample);
  for (png_uint_32 y = 0; y < height; ++y) {
    png_read_row(c.png, row.data(), nullptr);
    for (png_uint_32 x = 0; x < width; ++x) {
      for (int b = 0; b < channels; ++b) {
        size_t off = (size_t(x) * channels + b) * bytes_per_sample;
        int32_t v = bytes_per_sample == 1 ? row[off]
                                          : (int32_t(row[off]) << 8) | row[off + 1];
        tile.data[(int64_t(b) * tile.height + y) * tile.width + x] = v;
      }
    }
  }
  png_read_end(c.png, nullptr);
  return tile;
}

void write_png_rgb8(const fs::path& path, int height, int width,
                    const std::vector<uint8_t>& rgb_interleaved) {
  RawTile tile;
  tile.bands = 3;
  tile.height = height;
  tile.width = width;
  tile.bit_depth = 8;
  tile.band_names = {"R", "G", "B"};
  tile.data.resize(size_t(tile.size()));
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      for (int b = 0; b < 3; ++b) {
        tile.data[(int64_t(b) * height + y) * width + x] =
            rgb_interleaved[(size_t(y) * width + x) * 3 + b];
      }
    }
  }
  write_png(path, tile);
}

}  // namespace pansharp
