#pragma once

#include <optional>
#include <utility>

#include "latt/lattice.hpp"
#include "latt/subspace.hpp"

namespace latt {

/// Order-theoretic profile of a linear functional on Q^labels.  On the
/// coordinate lattice the real-valued lattice homomorphisms are exactly
/// the nonnegative multiples of point evaluations, so every flag reduces
/// to the sign pattern and support of the coefficient vector.
struct FunctionalClassification {
    bool is_positive = false;
    bool is_negative = false;
    bool is_lattice_homomorphism = false;
    bool is_diff_of_two_homomorphisms = false;
    bool is_disjointness_preserving = false;
    std::size_t support_size = 0;
    /// (phi+, phi-); present exactly when phi is a difference of two
    /// lattice homomorphisms.
    std::optional<std::pair<Functional, Functional>> homomorphism_parts;
};

FunctionalClassification classify(const Functional& phi);

struct KernelResult {
    Subspace kernel;
    bool zero_functional; // flags the degenerate full-space kernel
};

KernelResult kernel_subspace(const Functional& phi);

/// Constructive evidence that a kernel is not full: the endpoints 0 and
/// combo lie in ker(phi), the midpoint z sits between them, yet
/// phi(z) != 0.
struct FullnessWitness {
    std::string s; // phi positive here
    std::string t; // phi negative here
    LatticeVector x;     // e_s
    LatticeVector y;     // scaled e_t with phi(x) + phi(y) = 0
    LatticeVector combo; // (x + y) / 2, inside ker(phi)
    LatticeVector z;     // x / 2, in [0, combo] but outside ker(phi)
};

/// Decides whether ker(phi) is a full subspace; phi must be nonzero.
/// False comes with the explicit violation triple.
std::pair<bool, std::optional<FullnessWitness>> is_full_codim1(const Functional& phi);

/// Largest pairwise-disjoint family on which phi vanishes nowhere; equals
/// the support size, witnessed by the coordinate vectors of the support.
std::size_t max_disjoint_nonvanishing(const Functional& phi);

/// A sampled order interval [lower, upper] with both endpoints inside a
/// subspace and a middle point outside it.
struct FullnessViolation {
    RatVector lower;
    RatVector middle;
    RatVector upper;
};

/// Best-effort randomized search for a fullness violation in an arbitrary
/// subspace: samples comparable pairs in Y and points between them.  A
/// returned triple disproves fullness; exhausting the attempt budget
/// proves nothing.
std::optional<FullnessViolation> fullness_falsifier(const Subspace& y, std::uint64_t seed,
                                                    std::size_t attempts);

} // namespace latt
