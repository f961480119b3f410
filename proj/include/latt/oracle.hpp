#pragma once

#include <cstdint>
#include <optional>

#include "latt/lattice.hpp"
#include "latt/subspace.hpp"

namespace latt {

/// Brute-force ground truth: the smallest sublattice containing the given
/// vectors, computed by repeatedly spanning pairwise joins and meets until
/// the dimension stops growing.  Deliberately naive; used to validate the
/// constraint-based closure.
Subspace lattice_generated_subspace(const std::vector<std::string>& labels,
                                    const RatMatrix& generators);
Subspace lattice_generated_subspace(const FiniteVectorLattice& lattice,
                                    const std::vector<LatticeVector>& generators);

bool oracle_is_sublattice(const Subspace& y);

/// One engine-vs-oracle comparison sweep over seeded random subspaces,
/// cycling through every (ambient dim, dim) combination up to max_dim.
struct OracleSweep {
    struct Mismatch {
        std::size_t case_index;
        std::size_t ambient;
        std::size_t dimension;
        Subspace input;
        Subspace engine;
        Subspace oracle;
    };

    std::size_t cases = 0;
    std::size_t agreements = 0;
    std::optional<Mismatch> first_mismatch;

    bool ok() const { return agreements == cases; }
};

/// Runs the sweep; inject_fault tampers with one constraint on the first
/// opportunity, a self-test hook proving the harness can see a mismatch.
OracleSweep oracle_sweep(std::uint64_t seed, std::size_t cases, std::size_t max_dim,
                         bool inject_fault = false);

} // namespace latt
