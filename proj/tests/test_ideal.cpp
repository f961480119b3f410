#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latt/generator.hpp"
#include "latt/ideal.hpp"
#include "latt/sublattice.hpp"

using namespace latt;

namespace {

RatVector rv(std::initializer_list<int> xs) {
    RatVector out;
    for (int x : xs)
        out.emplace_back(x);
    return out;
}

RatMatrix rm(std::initializer_list<std::initializer_list<int>> rows) {
    RatMatrix out;
    for (auto row : rows)
        out.push_back(rv(row));
    return out;
}

Subspace sp(std::initializer_list<std::initializer_list<int>> rows) {
    RatMatrix m = rm(rows);
    return Subspace::span(numbered_labels(m.empty() ? 1 : m[0].size()), m);
}

std::vector<std::string> labels(std::size_t n) { return numbered_labels(n); }

} // namespace

TEST_CASE("ideal recognition") {
    auto d = is_ideal(sp({{1, 0, 0}, {0, 0, 1}}));
    REQUIRE(d.has_value());
    CHECK(d->zero_set == std::vector<std::size_t>{1});

    CHECK_FALSE(is_ideal(sp({{1, 1}})).has_value());

    auto zero = is_ideal(Subspace::zero(labels(3)));
    REQUIRE(zero.has_value());
    CHECK(zero->zero_set == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("zero-set ideal") {
    CHECK(zero_set_ideal(labels(3), std::vector<std::string>{}).subspace ==
          Subspace::full(labels(3)));
    CHECK(zero_set_ideal(labels(3), std::vector<std::string>{"1", "2", "3"}).subspace ==
          Subspace::zero(labels(3)));
    IdealDescriptor j = zero_set_ideal(labels(3), std::vector<std::string>{"1", "2"});
    CHECK(j.subspace == sp({{0, 0, 1}}));
    CHECK(j.codim() == 2);
    CHECK_THROWS_AS(zero_set_ideal(labels(3), std::vector<std::string>{"9"}), UnknownLabel);
}

TEST_CASE("largest ideal inside a sublattice") {
    IdealDescriptor j = largest_ideal_in(sp({{1, 1, 0}, {0, 0, 1}}));
    CHECK(j.zero_set == std::vector<std::size_t>{0, 1});
    CHECK(j.subspace == sp({{0, 0, 1}}));
    CHECK(j.codim() == 2);

    IdealDescriptor diag = largest_ideal_in(sp({{1, 1}}));
    CHECK(diag.subspace == Subspace::zero(labels(2)));
    CHECK(diag.codim() == 2); // tight: codim Y = 1

    IdealDescriptor full = largest_ideal_in(Subspace::full(labels(3)));
    CHECK(full.subspace == Subspace::full(labels(3)));

    CHECK_THROWS_AS(largest_ideal_in(sp({{1, -1}})), NotASublattice);
}

TEST_CASE("largest ideal: containment, maximality, bound") {
    SplitMix64 rng{31};
    for (int i = 0; i < 400; ++i) {
        std::size_t n = 1 + rng.below(8);
        Subspace y = random_sublattice(rng, n);
        IdealDescriptor j = largest_ideal_in(y);
        CHECK(y.contains(j.subspace));
        CHECK(j.codim() <= 2 * y.codim());
        // maximality: rejoining any zeroed coordinate leaves y
        for (std::size_t i2 : j.zero_set) {
            RatVector unit(n, Rational(0));
            unit[i2] = Rational(1);
            CHECK_FALSE(y.contains(unit));
        }
    }
}

TEST_CASE("quotient by an ideal") {
    IdealDescriptor j = zero_set_ideal(labels(3), std::vector<std::string>{"1", "2"});
    auto [lat, q] = quotient_by_ideal(j);
    CHECK(lat.labels() == std::vector<std::string>{"1", "2"});
    CHECK(q == rm({{1, 0, 0}, {0, 1, 0}}));

    IdealDescriptor zero = zero_set_ideal(labels(2), std::vector<std::string>{"1", "2"});
    auto [lat2, q2] = quotient_by_ideal(zero);
    CHECK(q2 == rm({{1, 0}, {0, 1}}));

    IdealDescriptor full = zero_set_ideal(labels(2), std::vector<std::string>{});
    CHECK_THROWS_AS(quotient_by_ideal(full), Error);
}

TEST_CASE("quotient map is a lattice homomorphism with kernel J") {
    SplitMix64 rng{32};
    FiniteVectorLattice lat(labels(4));
    IdealDescriptor j = zero_set_ideal(labels(4), std::vector<std::string>{"2", "4"});
    auto [qlat, q] = quotient_by_ideal(j);
    auto apply = [&](const LatticeVector& x) {
        RatVector out(q.size(), Rational(0));
        for (std::size_t r = 0; r < q.size(); ++r)
            for (std::size_t c = 0; c < x.values.size(); ++c)
                out[r] += q[r][c] * x.values[c];
        return LatticeVector(qlat, std::move(out));
    };
    for (int i = 0; i < 200; ++i) {
        RatVector xv(4), yv(4);
        for (auto& v : xv)
            v = Rational(rng.range(-3, 3));
        for (auto& v : yv)
            v = Rational(rng.range(-3, 3));
        LatticeVector x(lat, xv), y(lat, yv);
        CHECK(apply(join(x, y)) == join(apply(x), apply(y)));
        CHECK(apply(meet(x, y)) == meet(apply(x), apply(y)));
        CHECK((apply(x).is_zero()) == member(j.subspace, x.values));
    }
}

TEST_CASE("ideal chain") {
    IdealDescriptor j = zero_set_ideal(labels(3), std::vector<std::string>{"1", "2"});
    auto chain = ideal_chain(j);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == j);
    CHECK(chain[1].zero_set == std::vector<std::size_t>{0}); // label "2" dropped first
    CHECK(chain[2].subspace == Subspace::full(labels(3)));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        CHECK(chain[i].codim() == chain[i + 1].codim() + 1);
        CHECK(chain[i + 1].subspace.contains(chain[i].subspace));
    }

    auto full_chain = ideal_chain(zero_set_ideal(labels(2), std::vector<std::string>{}));
    CHECK(full_chain.size() == 1);

    auto two = ideal_chain(zero_set_ideal(labels(2), std::vector<std::string>{"2"}));
    REQUIRE(two.size() == 2);
    CHECK(two[1].subspace == Subspace::full(labels(2)));
}

TEST_CASE("codimension-1 decomposition is the zero set") {
    CHECK(codim1_ideal_decomposition(zero_set_ideal(labels(3), std::vector<std::string>{"1", "2"})) ==
          std::vector<std::size_t>{0, 1});
    CHECK(codim1_ideal_decomposition(zero_set_ideal(labels(3), std::vector<std::string>{})).empty());
    CHECK(codim1_ideal_decomposition(
              zero_set_ideal(labels(3), std::vector<std::string>{"1", "2", "3"})) ==
          std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("codimension-1 decomposition is unique, exhaustively over small lattices") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<std::size_t> f;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i))
                    f.push_back(i);
            IdealDescriptor j = zero_set_ideal(labels(n), f);
            CHECK(is_sublattice(j.subspace));
            CHECK(is_ideal(j.subspace).has_value());

            // J is the intersection of exactly |F| point kernels, and the
            // codim-1 ideals containing J are exactly those point kernels.
            Subspace acc = Subspace::full(labels(n));
            for (std::size_t t : codim1_ideal_decomposition(j))
                acc = intersect(acc, zero_set_ideal(labels(n), std::vector<std::size_t>{t}).subspace);
            CHECK(acc == j.subspace);
            for (std::size_t t = 0; t < n; ++t) {
                bool contains_j = zero_set_ideal(labels(n), std::vector<std::size_t>{t})
                                      .subspace.contains(j.subspace);
                bool in_f = std::find(f.begin(), f.end(), t) != f.end();
                CHECK(contains_j == in_f);
            }
        }
    }
}

TEST_CASE("null ideal of a positive functional") {
    FiniteVectorLattice lat3(labels(3));
    CHECK(null_ideal(Functional(lat3, rv({1, 0, 2}))).zero_set ==
          std::vector<std::size_t>{0, 2});
    CHECK(null_ideal(Functional(lat3, rv({0, 0, 0}))).subspace == Subspace::full(labels(3)));
    FiniteVectorLattice lat2(labels(2));
    CHECK(null_ideal(Functional(lat2, rv({1, 1}))).subspace == Subspace::zero(labels(2)));
    CHECK_THROWS_AS(null_ideal(Functional(lat2, rv({1, -1}))), Error);
}

TEST_CASE("ideals are sublattices with singleton clans") {
    SplitMix64 rng{33};
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 1 + rng.below(6);
        Subspace y = random_subspace(rng, n, rng.below(n + 1));
        auto d = is_ideal(y);
        if (!d)
            continue;
        CHECK(is_sublattice(y));
        for (const auto& clan : clan_decomposition(y).clans)
            CHECK(clan.size() == 1);
    }
}
