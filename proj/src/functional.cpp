#include "latt/functional.hpp"

#include <algorithm>

#include "latt/errors.hpp"
#include "latt/generator.hpp"

namespace latt {

FunctionalClassification classify(const Functional& phi) {
    FunctionalClassification c;
    c.is_positive = std::none_of(phi.coefficients.begin(), phi.coefficients.end(),
                                 [](const Rational& v) { return v.is_negative(); });
    c.is_negative = std::none_of(phi.coefficients.begin(), phi.coefficients.end(),
                                 [](const Rational& v) { return v.is_positive(); });
    c.support_size = phi.support_size();

    RatVector plus(phi.coefficients.size(), Rational(0));
    RatVector minus(phi.coefficients.size(), Rational(0));
    std::size_t plus_support = 0;
    std::size_t minus_support = 0;
    for (std::size_t i = 0; i < phi.coefficients.size(); ++i) {
        if (phi.coefficients[i].is_positive()) {
            plus[i] = phi.coefficients[i];
            ++plus_support;
        } else if (phi.coefficients[i].is_negative()) {
            minus[i] = -phi.coefficients[i];
            ++minus_support;
        }
    }

    c.is_lattice_homomorphism = c.support_size <= 1 && c.is_positive;
    c.is_diff_of_two_homomorphisms = plus_support <= 1 && minus_support <= 1;
    c.is_disjointness_preserving = c.support_size <= 1;
    if (c.is_diff_of_two_homomorphisms)
        c.homomorphism_parts.emplace(Functional(phi.lattice, std::move(plus)),
                                     Functional(phi.lattice, std::move(minus)));
    return c;
}

KernelResult kernel_subspace(const Functional& phi) {
    Subspace kernel = pre_annihilator(phi.lattice.labels(), {phi.coefficients});
    return {std::move(kernel), phi.is_zero()};
}

std::pair<bool, std::optional<FullnessWitness>> is_full_codim1(const Functional& phi) {
    if (phi.is_zero())
        throw Error("fullness test requires a nonzero functional");
    FunctionalClassification c = classify(phi);
    if (c.is_positive || c.is_negative)
        return {true, std::nullopt};

    std::size_t s = 0;
    while (!phi.coefficients[s].is_positive())
        ++s;
    std::size_t t = 0;
    while (!phi.coefficients[t].is_negative())
        ++t;

    const std::size_t n = phi.lattice.dim();
    RatVector xv(n, Rational(0));
    xv[s] = Rational(1);
    RatVector yv(n, Rational(0));
    yv[t] = phi.coefficients[s] / -phi.coefficients[t]; // phi(y) = -phi(x)
    LatticeVector x(phi.lattice, std::move(xv));
    LatticeVector y(phi.lattice, std::move(yv));
    Rational half(1, 2);
    LatticeVector combo = half * (x + y);
    LatticeVector z = half * x;

    FullnessWitness w{phi.lattice.labels()[s], phi.lattice.labels()[t],
                      std::move(x), std::move(y), std::move(combo), std::move(z)};
    return {false, std::move(w)};
}

std::size_t max_disjoint_nonvanishing(const Functional& phi) { return phi.support_size(); }

std::optional<FullnessViolation> fullness_falsifier(const Subspace& y, std::uint64_t seed,
                                                    std::size_t attempts) {
    if (y.dim() == 0)
        return std::nullopt; // {0} contains only the trivial interval
    SplitMix64 rng{seed};
    const std::size_t n = y.ambient_dim();
    auto sample_member = [&] {
        RatVector v(n, Rational(0));
        for (const auto& row : y.basis()) {
            Rational c(rng.range(-3, 3));
            for (std::size_t i = 0; i < n; ++i)
                v[i] += c * row[i];
        }
        return v;
    };
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        RatVector lo = sample_member();
        RatVector hi = sample_member();
        bool comparable = true;
        for (std::size_t i = 0; i < n && comparable; ++i)
            comparable = lo[i] <= hi[i];
        if (!comparable)
            continue;
        RatVector mid(n);
        for (std::size_t i = 0; i < n; ++i)
            mid[i] = lo[i] + (hi[i] - lo[i]) * Rational(BigInt(rng.below(5)), BigInt(4));
        if (!y.contains(mid))
            return FullnessViolation{std::move(lo), std::move(mid), std::move(hi)};
    }
    return std::nullopt;
}

} // namespace latt
