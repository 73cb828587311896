// Bicubic resampling (Keys kernel, a = -0.5), separable implementation with
// half-pixel centre alignment and clamped borders.
#pragma once

#include "pansharp/core/types.hpp"

namespace pansharp {

// Resize to an arbitrary target size. When clamp01 is set the final values
// are clipped back into [0,1] (cubic overshoot can leave the unit range).
RasterTile resize_bicubic(const RasterTile& in, int out_height, int out_width,
                          bool clamp01 = true);

// Keys cubic weight for normalized distance t (a = -0.5).
double bicubic_weight(double t);

}  // namespace pansharp
