#include "latt/lattice.hpp"

#include <algorithm>
#include <set>

#include "latt/errors.hpp"

namespace latt {

FiniteVectorLattice::FiniteVectorLattice(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
    if (labels_.empty())
        throw Error("empty label set is not allowed");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size())
        throw Error("duplicate coordinate labels");
}

std::size_t FiniteVectorLattice::label_index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw UnknownLabel("unknown label \"" + label + "\"");
    return static_cast<std::size_t>(it - labels_.begin());
}

LatticeVector::LatticeVector(FiniteVectorLattice lat, RatVector vals)
    : lattice(std::move(lat)), values(std::move(vals)) {
    if (values.size() != lattice.dim())
        throw DimensionMismatch("vector has " + std::to_string(values.size()) +
                                " coordinates over " + std::to_string(lattice.dim()) + " labels");
}

bool LatticeVector::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v.is_zero(); });
}

bool LatticeVector::is_nonnegative() const {
    return std::all_of(values.begin(), values.end(),
                       [](const Rational& v) { return !v.is_negative(); });
}

Functional::Functional(FiniteVectorLattice lat, RatVector coeffs)
    : lattice(std::move(lat)), coefficients(std::move(coeffs)) {
    if (coefficients.size() != lattice.dim())
        throw DimensionMismatch("functional has " + std::to_string(coefficients.size()) +
                                " coefficients over " + std::to_string(lattice.dim()) + " labels");
}

Rational Functional::operator()(const RatVector& x) const {
    if (x.size() != coefficients.size())
        throw DimensionMismatch("functional applied to vector of wrong length");
    Rational acc(0);
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += coefficients[i] * x[i];
    return acc;
}

Rational Functional::operator()(const LatticeVector& x) const {
    if (x.lattice != lattice)
        throw LabelMismatch("functional and vector over different lattices");
    return (*this)(x.values);
}

std::size_t Functional::support_size() const {
    return static_cast<std::size_t>(std::count_if(
        coefficients.begin(), coefficients.end(), [](const Rational& v) { return !v.is_zero(); }));
}

bool Functional::is_zero() const { return support_size() == 0; }

namespace {

void require_same(const LatticeVector& x, const LatticeVector& y) {
    if (x.lattice != y.lattice)
        throw LabelMismatch("vectors over different lattices");
}

template <typename Op>
LatticeVector pointwise(const LatticeVector& x, const LatticeVector& y, Op op) {
    require_same(x, y);
    RatVector out(x.values.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = op(x.values[i], y.values[i]);
    return LatticeVector(x.lattice, std::move(out));
}

} // namespace

LatticeVector operator+(const LatticeVector& x, const LatticeVector& y) {
    return pointwise(x, y, [](const Rational& a, const Rational& b) { return a + b; });
}

LatticeVector operator-(const LatticeVector& x, const LatticeVector& y) {
    return pointwise(x, y, [](const Rational& a, const Rational& b) { return a - b; });
}

LatticeVector operator-(const LatticeVector& x) { return Rational(-1) * x; }

LatticeVector operator*(const Rational& c, const LatticeVector& x) {
    RatVector out(x.values.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = c * x.values[i];
    return LatticeVector(x.lattice, std::move(out));
}

LatticeVector join(const LatticeVector& x, const LatticeVector& y) {
    return pointwise(x, y, [](const Rational& a, const Rational& b) { return max(a, b); });
}

LatticeVector meet(const LatticeVector& x, const LatticeVector& y) {
    return pointwise(x, y, [](const Rational& a, const Rational& b) { return min(a, b); });
}

LatticeVector lattice_abs(const LatticeVector& x) {
    RatVector out(x.values.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = x.values[i].abs();
    return LatticeVector(x.lattice, std::move(out));
}

LatticeVector pos_part(const LatticeVector& x) {
    RatVector out(x.values.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = x.values[i].is_positive() ? x.values[i] : Rational(0);
    return LatticeVector(x.lattice, std::move(out));
}

LatticeVector neg_part(const LatticeVector& x) {
    RatVector out(x.values.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = x.values[i].is_negative() ? -x.values[i] : Rational(0);
    return LatticeVector(x.lattice, std::move(out));
}

bool is_disjoint(const LatticeVector& x, const LatticeVector& y) {
    require_same(x, y);
    for (std::size_t i = 0; i < x.values.size(); ++i)
        if (!x.values[i].is_zero() && !y.values[i].is_zero())
            return false;
    return true;
}

LatticeVector coordinate_projection(const LatticeVector& x, const std::vector<std::string>& s) {
    std::vector<bool> keep(x.values.size(), false);
    for (const auto& label : s)
        keep[x.lattice.label_index(label)] = true;
    RatVector out(x.values.size(), Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i)
        if (keep[i])
            out[i] = x.values[i];
    return LatticeVector(x.lattice, std::move(out));
}

std::optional<Rational> e_norm(const LatticeVector& x, const LatticeVector& e) {
    require_same(x, e);
    if (!e.is_nonnegative())
        throw Error("e-norm requires a nonnegative reference element");
    Rational best(0);
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        if (e.values[i].is_zero()) {
            if (!x.values[i].is_zero())
                return std::nullopt; // x escapes the principal ideal of e
            continue;
        }
        best = max(best, x.values[i].abs() / e.values[i]);
    }
    return best;
}

std::pair<FiniteVectorLattice, std::vector<LatticeVector>>
restrict_to_support_union(const std::vector<SparseVector>& sparse) {
    if (sparse.empty())
        throw Error("support reduction needs at least one vector");
    std::set<std::string> support;
    for (const auto& v : sparse)
        for (const auto& [label, value] : v)
            if (!value.is_zero())
                support.insert(label);
    if (support.empty())
        throw Error("support union is empty");

    FiniteVectorLattice lattice(std::vector<std::string>(support.begin(), support.end()));
    std::vector<LatticeVector> dense;
    dense.reserve(sparse.size());
    for (const auto& v : sparse) {
        RatVector vals(lattice.dim(), Rational(0));
        for (const auto& [label, value] : v)
            vals[lattice.label_index(label)] = value;
        dense.emplace_back(lattice, std::move(vals));
    }
    return {lattice, std::move(dense)};
}

} // namespace latt
