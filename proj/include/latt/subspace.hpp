#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "latt/rational.hpp"

namespace latt {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

/// Reduced row echelon form: unit pivots in strictly increasing columns,
/// zeros above and below every pivot, zero rows removed.  The result is
/// the unique canonical representative of the row space.
RatMatrix rref(RatMatrix rows);

/// A linear subspace of Q^labels (or of its dual when `dual` is set),
/// stored as the canonical RREF basis.  Two subspaces over the same
/// labels are equal exactly when their basis matrices are identical.
class Subspace {
  public:
    /// Canonicalizes the span of the given vectors.  Idempotent and
    /// independent of the order of the spanning set.
    static Subspace span(std::vector<std::string> labels, const RatMatrix& spanning,
                         bool dual = false);
    static Subspace zero(std::vector<std::string> labels, bool dual = false);
    static Subspace full(std::vector<std::string> labels, bool dual = false);

    const std::vector<std::string>& labels() const { return labels_; }
    bool dual() const { return dual_; }
    const RatMatrix& basis() const { return basis_; }

    std::size_t ambient_dim() const { return labels_.size(); }
    std::size_t dim() const { return basis_.size(); }
    std::size_t codim() const { return labels_.size() - basis_.size(); }

    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == labels_.size(); }

    /// Exact membership test.
    bool contains(const RatVector& x) const;
    /// True when every basis vector of `other` lies in this subspace.
    bool contains(const Subspace& other) const;

    /// Index of a label in the ambient order; throws UnknownLabel.
    std::size_t label_index(const std::string& label) const;

    bool operator==(const Subspace& o) const = default;

  private:
    Subspace(std::vector<std::string> labels, RatMatrix basis, bool dual)
        : labels_(std::move(labels)), basis_(std::move(basis)), dual_(dual) {}

    std::vector<std::string> labels_;
    RatMatrix basis_;
    bool dual_ = false;
};

/// Exact membership of x in the row space of Y.
bool member(const Subspace& y, const RatVector& x);

Subspace intersect(const Subspace& y, const Subspace& z);
Subspace sum(const Subspace& y, const Subspace& z);

/// All functionals vanishing on y (or all vectors killed by y, when y is
/// dual).  Toggles the dual flag; involutive.
Subspace annihilator(const Subspace& y);

/// Common kernel of a family of functionals given as coefficient rows
/// over `labels`.  An empty family yields the full space.
Subspace pre_annihilator(std::vector<std::string> labels, const RatMatrix& functionals);

/// Decides x in (Span_n A / F-perp)-duality along two independent routes:
/// first by enumerating all n-element multisets of A and testing that x is
/// annihilated by Span(multiset) meet F-perp, second by checking that for
/// every choice of n functionals from A some y in F matches x on all of
/// them.  The two answers always agree; both are returned so callers can
/// cross-check.
std::pair<bool, bool> interpolation_equivalence(const Subspace& f, const RatMatrix& a,
                                                std::size_t n, const RatVector& x);

} // namespace latt
