#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latt/rational.hpp"
#include "latt/subspace.hpp"

namespace latt {

/// The finite-dimensional Archimedean vector lattice Q^labels with the
/// coordinatewise order.  Labels are distinct, nonempty strings in a
/// fixed ambient order.
class FiniteVectorLattice {
  public:
    explicit FiniteVectorLattice(std::vector<std::string> labels);

    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t dim() const { return labels_.size(); }
    std::size_t label_index(const std::string& label) const;

    bool operator==(const FiniteVectorLattice& o) const = default;

  private:
    std::vector<std::string> labels_;
};

/// Element of Q^labels: one rational per coordinate, in ambient order.
struct LatticeVector {
    FiniteVectorLattice lattice;
    RatVector values;

    LatticeVector(FiniteVectorLattice lat, RatVector vals);

    const Rational& at(const std::string& label) const {
        return values[lattice.label_index(label)];
    }
    bool is_zero() const;
    bool is_nonnegative() const;

    bool operator==(const LatticeVector& o) const = default;
};

/// Linear functional on Q^labels given by its coefficient vector.
struct Functional {
    FiniteVectorLattice lattice;
    RatVector coefficients;

    Functional(FiniteVectorLattice lat, RatVector coeffs);

    Rational operator()(const LatticeVector& x) const;
    Rational operator()(const RatVector& x) const;

    std::size_t support_size() const;
    bool is_zero() const;

    bool operator==(const Functional& o) const = default;
};

LatticeVector operator+(const LatticeVector& x, const LatticeVector& y);
LatticeVector operator-(const LatticeVector& x, const LatticeVector& y);
LatticeVector operator-(const LatticeVector& x);
LatticeVector operator*(const Rational& c, const LatticeVector& x);

LatticeVector join(const LatticeVector& x, const LatticeVector& y);
LatticeVector meet(const LatticeVector& x, const LatticeVector& y);
LatticeVector lattice_abs(const LatticeVector& x);
LatticeVector pos_part(const LatticeVector& x);
LatticeVector neg_part(const LatticeVector& x);

/// True iff |x| and |y| have no common support, i.e. meet(|x|,|y|) = 0.
bool is_disjoint(const LatticeVector& x, const LatticeVector& y);

/// Keeps the coordinates in `s`, zeroes the rest.  Every label in `s`
/// must belong to the lattice.
LatticeVector coordinate_projection(const LatticeVector& x, const std::vector<std::string>& s);

/// The lattice norm of x relative to e >= 0: the least lambda with
/// |x| <= lambda*e.  Returns nullopt (infinite) when x lives outside the
/// principal ideal of e, i.e. x is nonzero somewhere e vanishes.
std::optional<Rational> e_norm(const LatticeVector& x, const LatticeVector& e);

/// Sparse vector over a countable label universe; only the finitely many
/// nonzero coordinates are listed.
using SparseVector = std::map<std::string, Rational>;

/// Densifies finitely supported vectors onto the lattice induced by the
/// union of their supports (labels sorted lexicographically).  Fails when
/// the union is empty.
std::pair<FiniteVectorLattice, std::vector<LatticeVector>>
restrict_to_support_union(const std::vector<SparseVector>& sparse);

} // namespace latt
