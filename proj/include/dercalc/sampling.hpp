#pragma once

#include <cstdint>

#include "dercalc/diagram.hpp"

namespace dercalc {

// Deterministic PRNG so reports are reproducible across platforms; the
// standard distributions are implementation-defined, this is not.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  long int_in(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

struct Policy {
  std::uint64_t seed = 7;
  std::size_t samples = 25;
  std::size_t max_dim = 4;
  long entry_min = -3;
  long entry_max = 3;
};

Matrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng, const Policy& pol);

// Random functorial diagram: dims <= max_dim, integer entries on a spanning
// tree of the indecomposable morphisms, the remaining generators completed by
// solving the parallel-path constraints, resampled when inconsistent.
Diagram random_diagram(const CatPtr& shape, SplitMix64& rng, const Policy& pol);

// Random element of Nat(x, y) with small integer coordinates in the basis
// from hom_space.
DiagramMap random_diagram_map(const Diagram& x, const Diagram& y, SplitMix64& rng,
                              const Policy& pol);

// Random matrix with full column rank (resampled until injective).
Matrix random_injective_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng,
                               const Policy& pol);

}  // namespace dercalc
