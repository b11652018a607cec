#pragma once

#include <cstdint>

namespace ssmkit::detail {

// Per-case bitmask of the 12 cube edges crossed by the isosurface.
extern const std::uint16_t kMcEdgeTable[256];

// Per-case triangle fans as edge-index triples, -1 terminated.
extern const std::int8_t kMcTriTable[256][16];

} // namespace ssmkit::detail
