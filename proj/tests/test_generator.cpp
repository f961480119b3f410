#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden_fixtures.hpp"
#include "latt/generator.hpp"
#include "latt/json_io.hpp"
#include "latt/sublattice.hpp"

using namespace latt;

TEST_CASE("splitmix64 matches the published reference streams") {
    SplitMix64 s0{0};
    CHECK(s0.next() == 0xE220A8397B1DCDAFULL);
    CHECK(s0.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(s0.next() == 0x06C45D188009454FULL);
    CHECK(s0.next() == 0xF88BB8A8724C81ECULL);
    CHECK(s0.next() == 0x1B39896A51A8749BULL);

    SplitMix64 s1{1};
    CHECK(s1.next() == 0x910A2DEC89025CC1ULL);
    CHECK(s1.next() == 0xBEEB8DA1658EEC67ULL);
    CHECK(s1.next() == 0xF893A2EEFB32555EULL);
    CHECK(s1.next() == 0x71C18690EE42C90BULL);
}

TEST_CASE("identical seeds give identical streams and instances") {
    SplitMix64 a{777}, b{777};
    for (int i = 0; i < 100; ++i)
        CHECK(a.next() == b.next());

    SplitMix64 ra{42}, rb{42};
    CHECK(random_subspace(ra, 4, 2) == random_subspace(rb, 4, 2));
    CHECK(random_sublattice(ra, 5) == random_sublattice(rb, 5));
    CHECK(random_functional(ra, 3) == random_functional(rb, 3));
    CHECK(random_pl(ra, 3) == random_pl(rb, 3));
}

TEST_CASE("random subspace shape") {
    SplitMix64 rng{1};
    CHECK(random_subspace(rng, 3, 0) == Subspace::zero(numbered_labels(3)));
    CHECK(random_subspace(rng, 2, 2) == Subspace::full(numbered_labels(2)));
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + rng.below(6);
        std::size_t d = rng.below(n + 1);
        Subspace s = random_subspace(rng, n, d);
        CHECK(s.dim() == d);
        CHECK(s.ambient_dim() == n);
    }
    CHECK_THROWS_AS(random_subspace(rng, 2, 3), Error);
    CHECK_THROWS_AS(random_subspace(rng, 9, 1), Error);
}

TEST_CASE("random sublattice is always a sublattice") {
    SplitMix64 rng{2};
    for (int i = 0; i < 300; ++i) {
        std::size_t n = 1 + rng.below(8);
        CHECK(is_sublattice(random_sublattice(rng, n)));
    }
    SplitMix64 tiny{5};
    for (int i = 0; i < 20; ++i) {
        Subspace s = random_sublattice(tiny, 1);
        CHECK((s.dim() == 0 || s.dim() == 1));
    }
}

TEST_CASE("random piecewise-linear functions are canonical and bounded") {
    SplitMix64 rng{3};
    for (int i = 0; i < 200; ++i) {
        PLFunction f = random_pl(rng, static_cast<int>(rng.below(6)));
        for (const auto& v : f.values()) {
            CHECK(v <= Rational(2));
            CHECK(Rational(-2) <= v);
        }
        CHECK(PLFunction(f.breakpoints(), f.values()) == f);
    }
    CHECK_THROWS_AS(random_pl(rng, -1), Error);
}

TEST_CASE("golden fixtures pinned by the splitmix stream") {
    SplitMix64 a{42};
    Subspace s = random_subspace(a, 4, 2);
    CHECK(canonical_dump(subspace_to_json(s)) == std::string(GOLDEN_SUBSPACE_42));

    SplitMix64 b{7};
    Subspace sub = random_sublattice(b, 5);
    CHECK(canonical_dump(subspace_to_json(sub)) == std::string(GOLDEN_SUBLATTICE_7));

    SplitMix64 c{9};
    Functional phi = random_functional(c, 3);
    CHECK(canonical_dump(coords_to_json(phi.lattice.labels(), phi.coefficients)) ==
          std::string(GOLDEN_FUNCTIONAL_9));

    SplitMix64 d{11};
    PLFunction f = random_pl(d, 3);
    CHECK(canonical_dump(pl_to_json(f)) == std::string(GOLDEN_PL_11));
}
