// Tile file I/O.
//
// Native container (.tile): magic "PSTILE01", a little-endian u32 header
// length, a JSON header carrying bands/size/bit depth/band names/dtype, then
// raw little-endian samples (u8 for depths <= 8, u16 otherwise). Lossless for
// quantized data.
//
// The loader also accepts 8/16-bit PNG (gray or RGB) for inspection exports.
#pragma once

#include <filesystem>

#include "pansharp/core/types.hpp"

namespace pansharp {

void write_tile(const std::filesystem::path& path, const RawTile& tile);
RawTile read_tile(const std::filesystem::path& path);  // dispatches on content

// Convenience: quantize per tile.bit_depth and write / read and normalize.
void save_tile(const std::filesystem::path& path, const RasterTile& tile);
RasterTile load_tile(const std::filesystem::path& path);

// PNG export/import. Gray for 1 band, RGB for 3 bands; depth must be 8 or 16.
void write_png(const std::filesystem::path& path, const RawTile& tile);
RawTile read_png(const std::filesystem::path& path);

// 8-bit RGB PNG from interleaved rows (used for false-colour exports).
void write_png_rgb8(const std::filesystem::path& path, int height, int width,
                    const std::vector<uint8_t>& rgb_interleaved);

}  // namespace pansharp
