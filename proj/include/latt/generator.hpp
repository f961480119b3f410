#pragma once

#include <cstdint>

#include "latt/lattice.hpp"
#include "latt/pl.hpp"
#include "latt/subspace.hpp"

namespace latt {

/// SplitMix64 stream.  The three-step mix is pinned so that every
/// implementation seeded identically reproduces the same instances
/// bit for bit.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Draw from {0, ..., bound-1}.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Draw from {lo, ..., hi} inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

/// Canonical labels "1".."n" used by all generated instances.
std::vector<std::string> numbered_labels(std::size_t n);

/// Random d-dimensional subspace of Q^n with entries in {-3..3}; the draw
/// repeats until the span has dimension exactly d.
Subspace random_subspace(SplitMix64& rng, std::size_t n, std::size_t d);

/// Random sublattice of Q^n, built as the span of disjoint positive
/// generators over a random partition (entries in {1..4}); a sublattice by
/// construction.
Subspace random_sublattice(SplitMix64& rng, std::size_t n);

/// Random functional with coefficients in {-3..3}.
Functional random_functional(SplitMix64& rng, std::size_t n);

/// Random piecewise-linear function with values in {-2..2} at k+2 equally
/// spaced breakpoints, then canonicalized.
PLFunction random_pl(SplitMix64& rng, int k);

} // namespace latt
