#pragma once

#include <cstdint>

#include "gentlekit/quiver.hpp"

namespace gentlekit {

/// Seeded random gentle quiver with at most max_vertices vertices and
/// max_arrows arrows. When require_band is set the algebra is resampled
/// until it admits a band of length <= 6.
GentleQuiver random_gentle(uint64_t seed, int max_vertices = 8, int max_arrows = 10,
                           bool require_band = false);

}  // namespace gentlekit
