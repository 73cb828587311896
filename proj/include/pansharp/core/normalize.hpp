// Quantized-integer <-> unit-range conversion. All internal computation runs
// on [0,1] reals; the bit depth is carried as metadata for the inverse.
#pragma once

#include "pansharp/core/types.hpp"

namespace pansharp {

// raw / (2^bit_depth - 1), clamped to [0,1].
// Throws NegativeValue / DepthOverflow when raw values fall outside
// [0, 2^bit_depth - 1].
RasterTile normalize(const RawTile& raw);

// Inverse: round(value * (2^bit_depth - 1)). Identity with normalize on
// valid raw tensors.
RawTile denormalize(const RasterTile& tile);

}  // namespace pansharp
