#include "latt/sublattice.hpp"

#include <algorithm>

#include "latt/errors.hpp"

namespace latt {

Constraint Constraint::proportional(std::size_t s, std::size_t t, Rational alpha) {
    if (s == t)
        throw Error("proportionality constraint needs two distinct points");
    if (!alpha.is_positive())
        throw Error("proportionality constant must be positive");
    return {Kind::Proportionality, s, t, std::move(alpha)};
}

RatVector Constraint::functional(std::size_t ambient_dim) const {
    RatVector row(ambient_dim, Rational(0));
    row[s] = Rational(1);
    if (kind == Kind::Proportionality)
        row[t] = -alpha;
    return row;
}

RatMatrix ConstraintSet::functionals() const {
    RatMatrix rows;
    rows.reserve(constraints.size());
    for (const auto& c : constraints)
        rows.push_back(c.functional(labels.size()));
    return rows;
}

Subspace ConstraintSet::common_kernel() const {
    return pre_annihilator(labels, functionals());
}

Subspace pair_image(const Subspace& y, const std::string& s, const std::string& t) {
    if (s == t)
        throw Error("pair image needs two distinct labels");
    const std::size_t is = y.label_index(s);
    const std::size_t it = y.label_index(t);
    RatMatrix rows;
    rows.reserve(y.dim());
    for (const auto& b : y.basis())
        rows.push_back({b[is], b[it]});
    return Subspace::span({s, t}, rows, y.dual());
}

Subspace pair_sublattice_closure(const Subspace& v) {
    if (v.ambient_dim() != 2)
        throw DimensionMismatch("pair closure is defined on two-coordinate subspaces");
    if (v.dim() != 1)
        return v; // {0} and the full plane are sublattices
    const RatVector& row = v.basis()[0];
    // RREF scales the leading entry to 1, so a line is either (1, b) or (0, 1).
    if (row[0].is_zero() || row[1].is_zero() || row[1].is_positive())
        return v;
    return Subspace::full(v.labels(), v.dual());
}

ConstraintSet constraint_set(const Subspace& y) {
    const auto& labels = y.labels();
    const std::size_t n = labels.size();
    std::vector<Constraint> out;

    if (n == 1) {
        // No pairs exist; the only admissible functional is the point
        // evaluation itself.
        if (y.is_zero())
            out.push_back(Constraint::vanish(0));
        return {labels, std::move(out)};
    }

    for (std::size_t s = 0; s + 1 < n; ++s) {
        for (std::size_t t = s + 1; t < n; ++t) {
            Subspace w = pair_sublattice_closure(pair_image(y, labels[s], labels[t]));
            if (w.dim() == 2)
                continue;
            if (w.dim() == 0) {
                out.push_back(Constraint::vanish(s));
                out.push_back(Constraint::vanish(t));
                continue;
            }
            const RatVector& row = w.basis()[0];
            if (row[0].is_zero()) {
                out.push_back(Constraint::vanish(s));
            } else if (row[1].is_zero()) {
                out.push_back(Constraint::vanish(t));
            } else {
                // y_s = alpha * y_t along the line spanned by (1, b).
                out.push_back(Constraint::proportional(s, t, Rational(1) / row[1]));
            }
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return {labels, std::move(out)};
}

Subspace sublattice_closure(const Subspace& y) {
    Subspace kernel = constraint_set(y).common_kernel();
    return Subspace::span(y.labels(), kernel.basis(), y.dual());
}

bool is_sublattice(const Subspace& y) { return sublattice_closure(y) == y; }

namespace {

[[noreturn]] void throw_not_a_sublattice(const Subspace& y) {
    const auto& labels = y.labels();
    for (std::size_t s = 0; s + 1 < labels.size(); ++s)
        for (std::size_t t = s + 1; t < labels.size(); ++t)
            if (pair_sublattice_closure(pair_image(y, labels[s], labels[t])).dim() == 2)
                throw NotASublattice(labels[s], labels[t]);
    throw NotASublattice(labels.front(), labels.back()); // unreachable: a proper
                                                         // closure always enlarges some pair
}

} // namespace

ClanDecomposition clan_decomposition(const Subspace& y, bool require_sublattice) {
    Subspace z = sublattice_closure(y);
    if (require_sublattice && !(z == y))
        throw_not_a_sublattice(y);

    const std::size_t n = z.ambient_dim();
    const RatMatrix& b = z.basis();

    auto column_zero = [&](std::size_t j) {
        return std::all_of(b.begin(), b.end(),
                           [j](const RatVector& row) { return row[j].is_zero(); });
    };

    ClanDecomposition result{z, {}, {}, {}};

    for (std::size_t j = 0; j < n; ++j) {
        if (column_zero(j)) {
            result.kernel.push_back(j);
            continue;
        }
        bool placed = false;
        for (std::size_t c = 0; c < result.clans.size() && !placed; ++c) {
            const std::size_t rep = result.clans[c].front();
            // column j proportional to column rep with a positive ratio?
            std::size_t r = 0;
            while (b[r][rep].is_zero())
                ++r;
            Rational ratio = b[r][j] / b[r][rep];
            if (!ratio.is_positive())
                continue;
            bool proportional = true;
            for (std::size_t row = 0; row < b.size() && proportional; ++row)
                proportional = b[row][j] == ratio * b[row][rep];
            if (proportional) {
                result.clans[c].push_back(j);
                placed = true;
            }
        }
        if (!placed)
            result.clans.push_back({j});
    }

    // One generator per clan: supported exactly on the clan, value 1 at the
    // minimal label, positive elsewhere by the clan relation.
    FiniteVectorLattice lat(z.labels());
    for (const auto& clan : result.clans) {
        const std::size_t m = clan.front();
        std::size_t r = 0;
        while (b[r][m].is_zero())
            ++r;
        RatVector vals(n, Rational(0));
        for (std::size_t j : clan)
            vals[j] = b[r][j] / b[r][m];
        result.generators.emplace_back(lat, std::move(vals));
    }
    return result;
}

std::vector<LatticeVector> disjoint_positive_basis(const Subspace& y) {
    return clan_decomposition(y, /*require_sublattice=*/true).generators;
}

std::vector<Constraint> factor_into_codim1(const Subspace& y) {
    if (!is_sublattice(y))
        throw_not_a_sublattice(y);
    const std::size_t target = y.codim();
    ConstraintSet cs = constraint_set(y);

    std::vector<Constraint> chosen;
    RatMatrix selected;
    for (const auto& c : cs.constraints) {
        if (chosen.size() == target)
            break;
        RatMatrix probe = selected;
        probe.push_back(c.functional(y.ambient_dim()));
        probe = rref(std::move(probe));
        if (probe.size() > selected.size()) {
            selected = std::move(probe);
            chosen.push_back(c);
        }
    }
    // The constraint family spans the annihilator of the sublattice, so the
    // greedy pass always reaches full rank.
    if (chosen.size() != target)
        throw Error("constraint family failed to reach the expected rank");
    return chosen;
}

std::size_t unit_vector_census(const Subspace& y) {
    if (!is_sublattice(y))
        throw_not_a_sublattice(y);
    std::size_t count = 0;
    for (std::size_t i = 0; i < y.ambient_dim(); ++i) {
        RatVector unit(y.ambient_dim(), Rational(0));
        unit[i] = Rational(1);
        if (y.contains(unit))
            ++count;
    }
    return count;
}

} // namespace latt
