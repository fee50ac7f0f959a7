#ifndef EULERINT_RENDER_HPP
#define EULERINT_RENDER_HPP

#include <string>

#include "eulerint/sensor.hpp"

namespace eulerint {

// Height-colored raster (plain PGM, P2) of the continuous PL extension of
// the node values; rendering uses doubles, which is fine for images.
void write_field_pgm(const std::string& path, const SensorNetwork& net,
                     const RatVec& node_values, int width = 256);

// Vector figure of the network: triangulation edges plus nodes colored by
// height (white = zero).
void write_network_svg(const std::string& path, const SensorNetwork& net,
                       const RatVec& node_values, int width = 640);

}  // namespace eulerint

#endif
