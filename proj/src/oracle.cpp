#include "latt/oracle.hpp"

#include "latt/errors.hpp"
#include "latt/generator.hpp"
#include "latt/sublattice.hpp"

namespace latt {

namespace {

RatVector pointwise_max(const RatVector& a, const RatVector& b) {
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = max(a[i], b[i]);
    return out;
}

RatVector pointwise_min(const RatVector& a, const RatVector& b) {
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = min(a[i], b[i]);
    return out;
}

} // namespace

Subspace lattice_generated_subspace(const std::vector<std::string>& labels,
                                    const RatMatrix& generators) {
    Subspace current = Subspace::span(labels, generators);
    for (;;) {
        // Close the basis under joins and meets of +/- basis vectors and 0,
        // so positive and negative parts are reached too.  At a fixed point
        // the echelon basis is nonnegative (each pivot row r satisfies
        // r = r^+) and pairwise disjoint (r ^ s lies in the span yet is
        // pinched to zero at every pivot), and a span of disjoint
        // nonnegative vectors is closed under all joins and meets.
        RatMatrix candidates = current.basis();
        RatMatrix signed_set = current.basis();
        for (const auto& row : current.basis()) {
            RatVector neg(row.size());
            for (std::size_t i = 0; i < row.size(); ++i)
                neg[i] = -row[i];
            signed_set.push_back(std::move(neg));
        }
        signed_set.emplace_back(current.ambient_dim(), Rational(0));
        for (std::size_t i = 0; i < signed_set.size(); ++i) {
            for (std::size_t j = i + 1; j < signed_set.size(); ++j) {
                candidates.push_back(pointwise_max(signed_set[i], signed_set[j]));
                candidates.push_back(pointwise_min(signed_set[i], signed_set[j]));
            }
        }
        Subspace next = Subspace::span(labels, candidates);
        if (next.dim() == current.dim())
            return current;
        current = next;
    }
}

Subspace lattice_generated_subspace(const FiniteVectorLattice& lattice,
                                    const std::vector<LatticeVector>& generators) {
    RatMatrix rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.lattice != lattice)
            throw LabelMismatch("generator over a different lattice");
        rows.push_back(g.values);
    }
    return lattice_generated_subspace(lattice.labels(), rows);
}

bool oracle_is_sublattice(const Subspace& y) {
    return lattice_generated_subspace(y.labels(), y.basis()).dim() == y.dim();
}

OracleSweep oracle_sweep(std::uint64_t seed, std::size_t cases, std::size_t max_dim,
                         bool inject_fault) {
    if (max_dim == 0 || max_dim > 8)
        throw Error("max dimension must be between 1 and 8");

    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (std::size_t n = 1; n <= max_dim; ++n)
        for (std::size_t d = 0; d <= n; ++d)
            shapes.emplace_back(n, d);

    SplitMix64 rng{seed};
    OracleSweep sweep;
    sweep.cases = cases;
    bool fault_pending = inject_fault;

    for (std::size_t i = 0; i < cases; ++i) {
        auto [n, d] = shapes[i % shapes.size()];
        Subspace input = random_subspace(rng, n, d);
        Subspace engine = sublattice_closure(input);
        if (fault_pending) {
            ConstraintSet cs = constraint_set(input);
            if (!cs.constraints.empty()) {
                ConstraintSet tampered = cs;
                tampered.constraints.pop_back();
                Subspace flipped = tampered.common_kernel();
                if (!(flipped == engine)) {
                    engine = flipped;
                    fault_pending = false;
                }
            }
        }
        Subspace truth = lattice_generated_subspace(input.labels(), input.basis());
        if (engine == truth) {
            ++sweep.agreements;
        } else if (!sweep.first_mismatch) {
            sweep.first_mismatch = OracleSweep::Mismatch{i, n, d, input, engine, truth};
        }
    }
    return sweep;
}

} // namespace latt
