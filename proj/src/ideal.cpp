#include "latt/ideal.hpp"

#include <algorithm>
#include <set>

#include "latt/errors.hpp"
#include "latt/sublattice.hpp"

namespace latt {

std::vector<std::string> IdealDescriptor::zero_set_labels() const {
    std::vector<std::string> out;
    out.reserve(zero_set.size());
    for (std::size_t i : zero_set)
        out.push_back(labels[i]);
    return out;
}

IdealDescriptor zero_set_ideal(std::vector<std::string> labels, std::vector<std::size_t> f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (!f.empty() && f.back() >= labels.size())
        throw UnknownLabel("zero-set index out of range");

    std::vector<bool> zeroed(labels.size(), false);
    for (std::size_t i : f)
        zeroed[i] = true;
    RatMatrix gens;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (zeroed[i])
            continue;
        RatVector unit(labels.size(), Rational(0));
        unit[i] = Rational(1);
        gens.push_back(std::move(unit));
    }
    Subspace sub = Subspace::span(labels, gens);
    return {std::move(labels), std::move(f), std::move(sub)};
}

IdealDescriptor zero_set_ideal(const std::vector<std::string>& labels,
                               const std::vector<std::string>& f) {
    Subspace probe = Subspace::zero(labels); // validates the label set
    std::vector<std::size_t> indices;
    indices.reserve(f.size());
    for (const auto& label : f)
        indices.push_back(probe.label_index(label));
    return zero_set_ideal(labels, std::move(indices));
}

std::optional<IdealDescriptor> is_ideal(const Subspace& y) {
    std::vector<std::size_t> vanishing;
    for (std::size_t j = 0; j < y.ambient_dim(); ++j) {
        bool zero = std::all_of(y.basis().begin(), y.basis().end(),
                                [j](const RatVector& row) { return row[j].is_zero(); });
        if (zero)
            vanishing.push_back(j);
    }
    IdealDescriptor candidate = zero_set_ideal(y.labels(), std::move(vanishing));
    if (candidate.subspace == y)
        return candidate;
    return std::nullopt;
}

IdealDescriptor largest_ideal_in(const Subspace& y) {
    ClanDecomposition cd = clan_decomposition(y, /*require_sublattice=*/true);
    std::vector<std::size_t> f = cd.kernel;
    for (const auto& clan : cd.clans)
        if (clan.size() > 1)
            f.insert(f.end(), clan.begin(), clan.end());
    return zero_set_ideal(y.labels(), std::move(f));
}

std::pair<FiniteVectorLattice, RatMatrix> quotient_by_ideal(const IdealDescriptor& j) {
    if (j.zero_set.empty())
        throw Error("quotient by the full-space ideal is degenerate");
    FiniteVectorLattice quotient(j.zero_set_labels());
    RatMatrix q(j.zero_set.size(), RatVector(j.labels.size(), Rational(0)));
    for (std::size_t r = 0; r < j.zero_set.size(); ++r)
        q[r][j.zero_set[r]] = Rational(1);
    return {std::move(quotient), std::move(q)};
}

std::vector<IdealDescriptor> ideal_chain(const IdealDescriptor& j) {
    std::vector<IdealDescriptor> chain{j};
    std::vector<std::size_t> f = j.zero_set;
    while (!f.empty()) {
        f.pop_back(); // drop the largest remaining label
        chain.push_back(zero_set_ideal(j.labels, f));
    }
    return chain;
}

std::vector<std::size_t> codim1_ideal_decomposition(const IdealDescriptor& j) {
    return j.zero_set;
}

IdealDescriptor null_ideal(const Functional& phi) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < phi.coefficients.size(); ++i) {
        if (phi.coefficients[i].is_negative())
            throw Error("null ideal requires a positive functional");
        if (!phi.coefficients[i].is_zero())
            support.push_back(i);
    }
    return zero_set_ideal(phi.lattice.labels(), std::move(support));
}

} // namespace latt
