#include "latt/subspace.hpp"

#include <algorithm>
#include <set>

#include "latt/errors.hpp"

namespace latt {

RatMatrix rref(RatMatrix rows) {
    if (rows.empty())
        return rows;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        Rational inv = Rational(1) / rows[rank][col];
        for (auto& v : rows[rank])
            v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero())
                continue;
            Rational factor = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c)
                rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

namespace {

void check_labels(const std::vector<std::string>& labels) {
    if (labels.empty())
        throw Error("empty label set is not allowed");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
        throw Error("duplicate coordinate labels");
}

} // namespace

Subspace Subspace::span(std::vector<std::string> labels, const RatMatrix& spanning, bool dual) {
    check_labels(labels);
    for (const auto& row : spanning)
        if (row.size() != labels.size())
            throw DimensionMismatch("spanning vector of length " + std::to_string(row.size()) +
                                    " over " + std::to_string(labels.size()) + " labels");
    return Subspace(std::move(labels), rref(spanning), dual);
}

Subspace Subspace::zero(std::vector<std::string> labels, bool dual) {
    check_labels(labels);
    return Subspace(std::move(labels), {}, dual);
}

Subspace Subspace::full(std::vector<std::string> labels, bool dual) {
    check_labels(labels);
    RatMatrix id(labels.size(), RatVector(labels.size(), Rational(0)));
    for (std::size_t i = 0; i < labels.size(); ++i)
        id[i][i] = Rational(1);
    return Subspace(std::move(labels), std::move(id), dual);
}

bool Subspace::contains(const RatVector& x) const {
    if (x.size() != labels_.size())
        throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " over " +
                                std::to_string(labels_.size()) + " labels");
    RatVector rem = x;
    for (const auto& row : basis_) {
        std::size_t pivot = 0;
        while (row[pivot].is_zero())
            ++pivot;
        if (rem[pivot].is_zero())
            continue;
        Rational factor = rem[pivot];
        for (std::size_t c = pivot; c < rem.size(); ++c)
            rem[c] -= factor * row[c];
    }
    return std::all_of(rem.begin(), rem.end(), [](const Rational& v) { return v.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
    if (labels_ != other.labels_ || dual_ != other.dual_)
        throw LabelMismatch("subspaces over different coordinate systems");
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const RatVector& row) { return contains(row); });
}

std::size_t Subspace::label_index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw UnknownLabel("unknown label \"" + label + "\"");
    return static_cast<std::size_t>(it - labels_.begin());
}

bool member(const Subspace& y, const RatVector& x) { return y.contains(x); }

namespace {

void require_compatible(const Subspace& y, const Subspace& z) {
    if (y.labels() != z.labels() || y.dual() != z.dual())
        throw LabelMismatch("subspaces over different coordinate systems");
}

} // namespace

Subspace sum(const Subspace& y, const Subspace& z) {
    require_compatible(y, z);
    RatMatrix rows = y.basis();
    rows.insert(rows.end(), z.basis().begin(), z.basis().end());
    return Subspace::span(y.labels(), rows, y.dual());
}

Subspace annihilator(const Subspace& y) {
    // Null space of the basis matrix, read off the RREF: one generator per
    // free column.
    const RatMatrix& b = y.basis();
    const std::size_t n = y.ambient_dim();
    std::vector<std::size_t> pivot_of_row(b.size());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < b.size(); ++r) {
        std::size_t p = 0;
        while (b[r][p].is_zero())
            ++p;
        pivot_of_row[r] = p;
        is_pivot[p] = true;
    }
    RatMatrix gens;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j])
            continue;
        RatVector v(n, Rational(0));
        v[j] = Rational(1);
        for (std::size_t r = 0; r < b.size(); ++r)
            v[pivot_of_row[r]] = -b[r][j];
        gens.push_back(std::move(v));
    }
    return Subspace::span(y.labels(), gens, !y.dual());
}

Subspace intersect(const Subspace& y, const Subspace& z) {
    require_compatible(y, z);
    // (Y meet Z) = (Y-perp + Z-perp)-perp; both annihilator calls toggle the
    // flag, so the result carries the inputs' flag.
    return annihilator(sum(annihilator(y), annihilator(z)));
}

Subspace pre_annihilator(std::vector<std::string> labels, const RatMatrix& functionals) {
    Subspace dual_span = Subspace::span(std::move(labels), functionals, true);
    return annihilator(dual_span);
}

namespace {

// Sorted index tuples of length n drawn with repetition from {0..count-1}.
std::vector<std::vector<std::size_t>> multisets(std::size_t count, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < count; ++i) {
            cur.push_back(i);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

RatVector apply_rows(const RatMatrix& rows, const RatVector& x) {
    RatVector img(rows.size(), Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < x.size(); ++c)
            img[i] += rows[i][c] * x[c];
    return img;
}

} // namespace

std::pair<bool, bool> interpolation_equivalence(const Subspace& f, const RatMatrix& a,
                                                std::size_t n, const RatVector& x) {
    if (x.size() != f.ambient_dim())
        throw DimensionMismatch("interpolation vector has wrong length");
    for (const auto& phi : a)
        if (phi.size() != f.ambient_dim())
            throw DimensionMismatch("interpolation functional has wrong length");
    if (n == 0)
        throw Error("interpolation order must be at least 1");

    const Subspace f_perp = annihilator(f);
    const auto tuples = a.empty() ? std::vector<std::vector<std::size_t>>{{}}
                                  : multisets(a.size(), n);

    // Route 1: x must be annihilated by Span(multiset) meet F-perp for
    // every n-element multiset of A.
    bool annihilated = true;
    for (const auto& tuple : tuples) {
        RatMatrix chosen;
        for (std::size_t idx : tuple)
            chosen.push_back(a[idx]);
        Subspace w = intersect(Subspace::span(f.labels(), chosen, true), f_perp);
        for (const auto& psi : w.basis()) {
            Rational val(0);
            for (std::size_t c = 0; c < x.size(); ++c)
                val += psi[c] * x[c];
            if (!val.is_zero()) {
                annihilated = false;
                break;
            }
        }
        if (!annihilated)
            break;
    }

    // Route 2: every choice of n functionals from A must admit y in F
    // agreeing with x on all of them, i.e. the image of x under the choice
    // map lies in the image of F.
    bool interpolable = true;
    for (const auto& tuple : tuples) {
        RatMatrix chosen;
        for (std::size_t idx : tuple)
            chosen.push_back(a[idx]);
        if (chosen.empty())
            continue;
        RatMatrix image_gens;
        for (const auto& y : f.basis())
            image_gens.push_back(apply_rows(chosen, y));
        std::vector<std::string> coords(chosen.size());
        for (std::size_t i = 0; i < coords.size(); ++i)
            coords[i] = "c" + std::to_string(i);
        Subspace image = Subspace::span(coords, image_gens);
        if (!image.contains(apply_rows(chosen, x))) {
            interpolable = false;
            break;
        }
    }

    return {annihilated, interpolable};
}

} // namespace latt
