#include "latt/pl.hpp"

#include <algorithm>

#include "latt/errors.hpp"

namespace latt {

namespace {

bool collinear(const Rational& x0, const Rational& v0, const Rational& x1, const Rational& v1,
               const Rational& x2, const Rational& v2) {
    return (v1 - v0) * (x2 - x1) == (v2 - v1) * (x1 - x0);
}

} // namespace

PLFunction::PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values) {
    if (breakpoints.size() != values.size())
        throw DimensionMismatch("breakpoint and value lists differ in length");
    if (breakpoints.size() < 2)
        throw Error("a piecewise-linear function needs at least the endpoints 0 and 1");
    if (!(breakpoints.front() == Rational(0)) || !(breakpoints.back() == Rational(1)))
        throw Error("breakpoints must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw Error("breakpoints must be strictly increasing");

    // Canonical form: drop interior points lying on the segment spanned by
    // their surviving neighbours.
    breakpoints_.push_back(breakpoints[0]);
    values_.push_back(values[0]);
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        while (breakpoints_.size() >= 2 &&
               collinear(breakpoints_[breakpoints_.size() - 2], values_[values_.size() - 2],
                         breakpoints_.back(), values_.back(), breakpoints[i], values[i])) {
            breakpoints_.pop_back();
            values_.pop_back();
        }
        breakpoints_.push_back(breakpoints[i]);
        values_.push_back(values[i]);
    }
}

PLFunction PLFunction::constant(const Rational& c) {
    return PLFunction({Rational(0), Rational(1)}, {c, c});
}

PLFunction PLFunction::identity() {
    return PLFunction({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
}

Rational PLFunction::operator()(const Rational& t) const {
    if (t < Rational(0) || t > Rational(1))
        throw Error("evaluation point outside [0,1]");
    std::size_t i = 0;
    while (i + 2 < breakpoints_.size() && breakpoints_[i + 1] <= t)
        ++i;
    const Rational& x0 = breakpoints_[i];
    const Rational& x1 = breakpoints_[i + 1];
    return values_[i] + (values_[i + 1] - values_[i]) * (t - x0) / (x1 - x0);
}

bool PLFunction::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rational& v) { return v.is_zero(); });
}

bool PLFunction::is_nonnegative() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rational& v) { return !v.is_negative(); });
}

namespace {

std::vector<Rational> merged_grid(const PLFunction& f, const PLFunction& g) {
    std::vector<Rational> grid;
    std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
               g.breakpoints().end(), std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

} // namespace

PLFunction pl_linear(const Rational& a, const PLFunction& f, const Rational& b,
                     const PLFunction& g) {
    std::vector<Rational> grid = merged_grid(f, g);
    std::vector<Rational> vals;
    vals.reserve(grid.size());
    for (const auto& t : grid)
        vals.push_back(a * f(t) + b * g(t));
    return PLFunction(std::move(grid), std::move(vals));
}

namespace {

template <typename Pick>
PLFunction envelope(const PLFunction& f, const PLFunction& g, Pick pick) {
    std::vector<Rational> grid = merged_grid(f, g);
    // Insert the interior points where f and g cross.
    std::vector<Rational> refined;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        refined.push_back(grid[i]);
        if (i + 1 == grid.size())
            break;
        Rational da = f(grid[i]) - g(grid[i]);
        Rational db = f(grid[i + 1]) - g(grid[i + 1]);
        if (da.sign() * db.sign() < 0)
            refined.push_back(grid[i] + (grid[i + 1] - grid[i]) * da / (da - db));
    }
    std::vector<Rational> vals;
    vals.reserve(refined.size());
    for (const auto& t : refined)
        vals.push_back(pick(f(t), g(t)));
    return PLFunction(std::move(refined), std::move(vals));
}

} // namespace

PLFunction pl_join(const PLFunction& f, const PLFunction& g) {
    return envelope(f, g, [](const Rational& a, const Rational& b) { return max(a, b); });
}

PLFunction pl_meet(const PLFunction& f, const PLFunction& g) {
    return envelope(f, g, [](const Rational& a, const Rational& b) { return min(a, b); });
}

PLFunction pl_abs(const PLFunction& f) {
    return pl_join(f, pl_linear(Rational(-1), f, Rational(0), f));
}

PLFunction pl_pos_part(const PLFunction& f) { return pl_join(f, PLFunction::zero()); }

std::optional<Rational> pl_e_norm(const PLFunction& f, const PLFunction& e) {
    if (!e.is_nonnegative())
        throw Error("e-norm requires a nonnegative reference function");
    PLFunction p = pl_abs(f);
    std::vector<Rational> grid = merged_grid(p, e);
    Rational best(0);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        Rational pa = p(grid[i]), pb = p(grid[i + 1]);
        Rational qa = e(grid[i]), qb = e(grid[i + 1]);
        if (qa.is_zero() && qb.is_zero()) {
            if (!pa.is_zero() || !pb.is_zero())
                return std::nullopt;
            continue;
        }
        if (qa.is_zero()) {
            // |f|/e tends to a finite limit at the left endpoint only if
            // |f| vanishes with e; the ratio is then constant on the piece.
            if (!pa.is_zero())
                return std::nullopt;
            best = max(best, pb / qb);
            continue;
        }
        if (qb.is_zero()) {
            if (!pb.is_zero())
                return std::nullopt;
            best = max(best, pa / qa);
            continue;
        }
        // e > 0 on the whole piece; the affine ratio is monotone, so the
        // endpoints dominate.
        best = max(best, max(pa / qa, pb / qb));
    }
    return best;
}

bool vanishes_near_zero(const PLFunction& f) {
    return f.values()[0].is_zero() && f.values()[1].is_zero();
}

PLFunction counterexample_witness(std::size_t n) {
    if (n == 0)
        throw Error("witness index must be at least 1");
    PLFunction shifted = pl_linear(Rational(1), PLFunction::identity(),
                                   Rational(-1), PLFunction::constant(Rational(1, BigInt(n))));
    return pl_pos_part(shifted);
}

} // namespace latt
