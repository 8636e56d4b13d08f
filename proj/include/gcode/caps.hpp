#pragma once

#include <cstddef>
#include <cstdint>

namespace gcode {

// Bounds for the exhaustive algorithms. Exceeding one raises CapExceeded.
struct Caps {
  std::size_t max_length = 13;                 // code length for paut / classification
  std::size_t max_group_elements = 100000;     // enumerated permutation group size
  std::size_t max_iso_order = 64;              // group isomorphism search
  std::uint64_t max_codewords = 2000000;       // q^k for exhaustive minimum distance
  std::uint64_t max_subspaces = 1000000;       // subspace enumeration
  std::uint64_t max_ambient_words = 1u << 22;  // q^n for orbit-based ideal enumeration
  std::uint32_t max_pgl_field = 16;            // q for PGL_2(F_q) enumeration
  std::uint64_t seed = 0;                      // search order only; never changes results
};

}  // namespace gcode
