#pragma once

#include <cstdint>
#include <string_view>

namespace cuboid {

/// Machine-readable source text of the 14 kernel-basis polynomials
/// ~q1 .. ~q14 over the EL ring.
extern const char* const kKernelCorpus;

/// FNV-1a 64 checksum of kKernelCorpus, frozen at ingest time.
extern const std::uint64_t kKernelCorpusChecksum;

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace cuboid
