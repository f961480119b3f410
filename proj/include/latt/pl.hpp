#pragma once

#include <optional>
#include <vector>

#include "latt/rational.hpp"

namespace latt {

/// Exact piecewise-linear (piecewise-affine) function on [0,1]: rational
/// breakpoints starting at 0 and ending at 1, with linear interpolation
/// between the stored values.  The representation is canonical (collinear
/// interior breakpoints are merged on construction), so equality of
/// functions is equality of the stored fields.
class PLFunction {
  public:
    PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);

    static PLFunction constant(const Rational& c);
    /// The identity t |-> t.
    static PLFunction identity();
    static PLFunction zero() { return constant(Rational(0)); }

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& values() const { return values_; }

    /// Exact evaluation; t must lie in [0,1].
    Rational operator()(const Rational& t) const;

    bool is_zero() const;
    bool is_nonnegative() const;

    bool operator==(const PLFunction& o) const = default;

  private:
    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
};

/// a*f + b*g, exact.
PLFunction pl_linear(const Rational& a, const PLFunction& f, const Rational& b,
                     const PLFunction& g);

/// Pointwise max/min with all crossing points inserted as exact rational
/// breakpoints.
PLFunction pl_join(const PLFunction& f, const PLFunction& g);
PLFunction pl_meet(const PLFunction& f, const PLFunction& g);
PLFunction pl_abs(const PLFunction& f);
PLFunction pl_pos_part(const PLFunction& f);

/// Least lambda with |f| <= lambda*e, for e >= 0; nullopt when no such
/// lambda exists.  On each refinement interval the ratio |f|/e is a ratio
/// of affine functions, hence monotone, so the supremum is attained at an
/// endpoint (or revealed infinite where e degenerates to 0 under
/// nonvanishing |f|).
std::optional<Rational> pl_e_norm(const PLFunction& f, const PLFunction& e);

/// True iff f is identically zero on its first segment, i.e. vanishes on
/// [0, r] for some r > 0 (or f == 0).
bool vanishes_near_zero(const PLFunction& f);

/// w_n = (t - 1/n)^+: vanishes on [0, 1/n] while staying uniformly within
/// 1/n of the identity: the certificate that the vanishing-near-zero
/// ideal is not uniformly closed.
PLFunction counterexample_witness(std::size_t n);

} // namespace latt
