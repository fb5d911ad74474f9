#pragma once

// Independent reference implementation of the Lesamnta-LW-256 construction
// used to generate and check fixture vectors. Deliberately written against
// the same pinned definition as src/lesamnta_lw.cpp but along a different
// implementation path: byte-array state instead of machine words, S-box from
// log/antilog tables instead of brute-force inverses, matrix-loop
// MixColumns. Tests require bit-exact agreement between the two.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace medsentry::testsupport {

using RefDigest = std::array<uint8_t, 32>;
using RefBlock = std::array<uint8_t, 16>;

std::vector<RefBlock> llw_pad_reference(std::span<const uint8_t> data);
RefDigest llw_compress_reference(const RefDigest& chain, const RefBlock& block);
RefDigest llw_hash_reference(std::span<const uint8_t> data);

}  // namespace medsentry::testsupport
