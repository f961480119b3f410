#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latt/lattice.hpp"
#include "latt/subspace.hpp"

namespace latt {

/// An ideal of Q^labels in zero-set form: J_F = {x : x_i = 0 for i in F}.
/// Every ideal of the coordinate lattice is of this shape, so F together
/// with the canonical subspace is a complete description.
struct IdealDescriptor {
    std::vector<std::string> labels;
    std::vector<std::size_t> zero_set; // sorted ambient indices F
    Subspace subspace;                 // J_F

    std::size_t codim() const { return zero_set.size(); }
    std::vector<std::string> zero_set_labels() const;

    bool operator==(const IdealDescriptor& o) const = default;
};

/// Builds J_F from the zero-set labels.
IdealDescriptor zero_set_ideal(const std::vector<std::string>& labels,
                               const std::vector<std::string>& f);
IdealDescriptor zero_set_ideal(std::vector<std::string> labels, std::vector<std::size_t> f);

/// Recognizes Y as an ideal: present exactly when Y equals the zero-set
/// ideal of its vanishing coordinates.
std::optional<IdealDescriptor> is_ideal(const Subspace& y);

/// The largest ideal contained in a sublattice Y: spanned by the unit
/// vectors of Y's singleton clans.  Its codimension is at most twice the
/// codimension of Y.
IdealDescriptor largest_ideal_in(const Subspace& y);

/// Quotient lattice X/J realized on the zero-set coordinates, plus the
/// quotient map as a matrix (a coordinate restriction).  Rejects the
/// full-space ideal, whose quotient would live on an empty label set.
std::pair<FiniteVectorLattice, RatMatrix> quotient_by_ideal(const IdealDescriptor& j);

/// Strictly increasing chain from J to the whole lattice, dropping the
/// largest remaining zero-set label at each step; each step lowers the
/// codimension by exactly one.
std::vector<IdealDescriptor> ideal_chain(const IdealDescriptor& j);

/// The unique family of codimension-1 ideals whose intersection is J:
/// the point kernels of the zero-set labels.
std::vector<std::size_t> codim1_ideal_decomposition(const IdealDescriptor& j);

/// Null ideal of a positive functional: the zero-set ideal of its support.
IdealDescriptor null_ideal(const Functional& phi);

} // namespace latt
