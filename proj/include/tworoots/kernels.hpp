#pragma once

// Heavy loops with a serial reference and an OpenMP version of each.
// The parallel versions return exactly what the serial ones do.

#include <cstdint>
#include <vector>

#include "tworoots/tworoots.hpp"

namespace tworoots::kernels {

// Entry (r, c) is B'(elems[r], elems[c]); elements must lie in the 2-root lattice.
IntMatrix gram_serial(const IntMatrix& cartan, const std::vector<IntMatrix>& elems);
IntMatrix gram_parallel(const IntMatrix& cartan, const std::vector<IntMatrix>& elems);

struct SweepResult {
  std::uint64_t words = 0;
  std::uint64_t columns = 0;
  std::uint64_t violations = 0;  // mixed-sign or non-integral columns
  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

// Random words of length 0..max_len; word k draws from an rng seeded by (seed, k).
Word random_word(std::size_t n, std::size_t max_len, std::uint64_t seed, std::uint64_t k);
SweepResult coherence_sweep_serial(const CanonicalBasis& basis, std::uint64_t words, std::size_t max_len, std::uint64_t seed);
SweepResult coherence_sweep_parallel(const CanonicalBasis& basis, std::uint64_t words, std::size_t max_len, std::uint64_t seed);

// Order of the matrix group generated by `gens`. Each generator must be a
// signed sum of at most a few unit columns (true for simple reflections in
// the canonical basis). Throws std::length_error past `cap` elements.
std::uint64_t closure_size_serial(const std::vector<IntMatrix>& gens, std::uint64_t cap);
std::uint64_t closure_size_parallel(const std::vector<IntMatrix>& gens, std::uint64_t cap);

}  // namespace tworoots::kernels
