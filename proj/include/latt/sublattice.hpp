#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "latt/lattice.hpp"
#include "latt/subspace.hpp"

namespace latt {

/// One two-point constraint cutting out a closed sublattice: either
/// "f vanishes at s" or "f(s) = alpha * f(t)" with alpha > 0.  The
/// vanishing case absorbs alpha = 0, where the second point would be
/// irrelevant.  Proportionality is stored oriented: s precedes t in
/// ambient label order.
struct Constraint {
    enum class Kind { PointVanish, Proportionality };

    Kind kind;
    std::size_t s;
    std::size_t t;     // == s for PointVanish
    Rational alpha;    // 0 for PointVanish, > 0 otherwise

    static Constraint vanish(std::size_t s) { return {Kind::PointVanish, s, s, Rational(0)}; }
    static Constraint proportional(std::size_t s, std::size_t t, Rational alpha);

    /// Coefficient row of the induced functional delta_s - alpha*delta_t.
    RatVector functional(std::size_t ambient_dim) const;

    friend std::strong_ordering operator<=>(const Constraint& a, const Constraint& b) {
        if (auto c = a.kind <=> b.kind; c != 0)
            return c;
        if (auto c = a.s <=> b.s; c != 0)
            return c;
        return a.t <=> b.t;
    }
    friend bool operator==(const Constraint& a, const Constraint& b) {
        return a.kind == b.kind && a.s == b.s && a.t == b.t && a.alpha == b.alpha;
    }
};

/// The full constraint family of a closed sublattice, deduplicated and in
/// canonical (kind, s, t) order.
struct ConstraintSet {
    std::vector<std::string> labels;
    std::vector<Constraint> constraints;

    RatMatrix functionals() const;
    /// Common kernel of all constraint functionals.
    Subspace common_kernel() const;

    bool operator==(const ConstraintSet& o) const = default;
};

/// Partition of the coordinates induced by a sublattice: the kernel
/// carries the labels where every member vanishes; each clan carries the
/// labels on which all members are positively proportional, together with
/// the unique generator supported there and normalized to 1 at the clan's
/// minimal label.
struct ClanDecomposition {
    Subspace analyzed; // the sublattice the decomposition describes
    std::vector<std::size_t> kernel;
    std::vector<std::vector<std::size_t>> clans;
    std::vector<LatticeVector> generators;
};

/// Image of Y under the evaluation pair (s, t), canonical over labels {s,t}.
Subspace pair_image(const Subspace& y, const std::string& s, const std::string& t);

/// Smallest sublattice of the two-coordinate plane containing V: lines
/// through the open first/third quadrant and the axes are already closed;
/// a line through the second/fourth quadrant generates the whole plane.
Subspace pair_sublattice_closure(const Subspace& v);

/// Every constraint satisfied by all of Y; the common kernel of this
/// family is exactly the sublattice Y generates.
ConstraintSet constraint_set(const Subspace& y);

/// Smallest sublattice containing Y.
Subspace sublattice_closure(const Subspace& y);

bool is_sublattice(const Subspace& y);

/// Decomposes the sublattice generated by Y into kernel, clans and
/// disjoint positive generators.  With require_sublattice set, throws
/// NotASublattice (with a witness pair) when Y itself is not closed under
/// join and meet.
ClanDecomposition clan_decomposition(const Subspace& y, bool require_sublattice = false);

/// The canonical disjoint positive spanning family of a sublattice.
std::vector<LatticeVector> disjoint_positive_basis(const Subspace& y);

/// Writes a sublattice of codimension m as the intersection of exactly m
/// codimension-1 sublattice kernels, chosen greedily in canonical
/// constraint order.
std::vector<Constraint> factor_into_codim1(const Subspace& y);

/// Number of standard unit vectors contained in the sublattice
/// (equivalently, its singleton clans).
std::size_t unit_vector_census(const Subspace& y);

} // namespace latt
