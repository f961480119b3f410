#include "latt/generator.hpp"

#include "latt/errors.hpp"

namespace latt {

std::vector<std::string> numbered_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back(std::to_string(i));
    return labels;
}

Subspace random_subspace(SplitMix64& rng, std::size_t n, std::size_t d) {
    if (d > n)
        throw Error("requested dimension exceeds the ambient dimension");
    if (n == 0 || n > 8)
        throw Error("ambient dimension must be between 1 and 8");
    auto labels = numbered_labels(n);
    if (d == 0)
        return Subspace::zero(labels);
    for (;;) {
        RatMatrix rows(d, RatVector(n));
        for (auto& row : rows)
            for (auto& v : row)
                v = Rational(rng.range(-3, 3));
        Subspace s = Subspace::span(labels, rows);
        if (s.dim() == d)
            return s;
    }
}

Subspace random_sublattice(SplitMix64& rng, std::size_t n) {
    if (n == 0)
        throw Error("ambient dimension must be at least 1");
    auto labels = numbered_labels(n);
    // Bucket 0 is the kernel; the other buckets become clans carrying one
    // positive generator each, so the span is a sublattice by construction.
    const std::uint64_t buckets = rng.below(n + 1);
    std::vector<std::vector<std::size_t>> clans(buckets);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t b = rng.below(buckets + 1);
        if (b > 0)
            clans[b - 1].push_back(i);
    }
    RatMatrix gens;
    for (const auto& clan : clans) {
        if (clan.empty())
            continue;
        RatVector g(n, Rational(0));
        for (std::size_t i : clan)
            g[i] = Rational(rng.range(1, 4));
        gens.push_back(std::move(g));
    }
    return Subspace::span(labels, gens);
}

Functional random_functional(SplitMix64& rng, std::size_t n) {
    RatVector coeffs(n);
    for (auto& v : coeffs)
        v = Rational(rng.range(-3, 3));
    return Functional(FiniteVectorLattice(numbered_labels(n)), std::move(coeffs));
}

PLFunction random_pl(SplitMix64& rng, int k) {
    if (k < 0)
        throw Error("breakpoint count must be nonnegative");
    const std::size_t points = static_cast<std::size_t>(k) + 2;
    std::vector<Rational> bps(points);
    std::vector<Rational> vals(points);
    for (std::size_t i = 0; i < points; ++i) {
        bps[i] = Rational(BigInt(i), BigInt(points - 1));
        vals[i] = Rational(rng.range(-2, 2));
    }
    return PLFunction(std::move(bps), std::move(vals));
}

} // namespace latt
