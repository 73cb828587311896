// Synthetic 4-band scene generator. Scenes are built from seeded value-noise
// fields: a shared field (all bands, split into low- and high-frequency
// parts) plus per-band low-frequency fields that carry spectral variation no
// single-channel observation can reconstruct. Per-kind profiles give the six
// land-cover classes distinct statistics so stratified metrics differ.
#pragma once

#include "pansharp/core/types.hpp"

namespace pansharp {

struct SceneRecipe {
  SceneKind kind = SceneKind::Water;
  int height = 64;
  int width = 64;
  uint64_t seed = 0;
  // Texture parameters: octave band of the shared noise field and the value
  // range the tile is mapped into. A degenerate range collapses the tile to
  // per-band constants.
  int octave_min = 1;
  int octave_max = 5;
  double contrast_lo = 0.08;
  double contrast_hi = 0.92;

  void validate() const;
};

// Deterministic for a fixed recipe; 4 bands (R,G,B,NIR); values in [0,1].
RasterTile generate_scene(const SceneRecipe& recipe);

}  // namespace pansharp
