#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace medsentry {

using Digest160 = std::array<uint8_t, 20>;

// SHA-1, the baseline digest the signature scheme is compared against.
Digest160 sha1_hash(std::span<const uint8_t> data);

}  // namespace medsentry
