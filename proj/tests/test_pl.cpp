#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latt/generator.hpp"
#include "latt/pl.hpp"

using namespace latt;

namespace {

Rational q(int n, int d = 1) { return Rational(BigInt(n), BigInt(d)); }

} // namespace

TEST_CASE("construction and canonical form") {
    // collinear interior points are merged
    PLFunction f({q(0), q(1, 2), q(1)}, {q(0), q(1, 2), q(1)});
    CHECK(f == PLFunction::identity());
    CHECK(f.breakpoints().size() == 2);

    CHECK_THROWS_AS(PLFunction({q(0)}, {q(0)}), Error);
    CHECK_THROWS_AS(PLFunction({q(0), q(2)}, {q(0), q(0)}), Error);
    CHECK_THROWS_AS(PLFunction({q(1, 4), q(1)}, {q(0), q(0)}), Error);
    CHECK_THROWS_AS(PLFunction({q(0), q(1, 2), q(1, 2), q(1)}, {q(0), q(1), q(2), q(3)}), Error);
    CHECK_THROWS_AS(PLFunction({q(0), q(1)}, {q(0)}), DimensionMismatch);
}

TEST_CASE("evaluation") {
    PLFunction f0 = PLFunction::identity();
    CHECK(f0(q(1, 2)) == q(1, 2));
    CHECK(PLFunction::constant(q(1))(q(3, 7)) == q(1));

    PLFunction hinge = pl_pos_part(pl_linear(q(1), f0, q(-1), PLFunction::constant(q(1, 3))));
    CHECK(hinge(q(1, 4)) == q(0));
    CHECK(hinge(q(1, 3)) == q(0));
    CHECK(hinge(q(1)) == q(2, 3));

    CHECK_THROWS_AS(f0(q(2)), Error);
    CHECK_THROWS_AS(f0(q(-1, 2)), Error);
}

TEST_CASE("join, meet, abs") {
    PLFunction f0 = PLFunction::identity();
    PLFunction mirrored = pl_linear(q(-1), f0, q(1), PLFunction::constant(q(1))); // 1 - t

    PLFunction tent = pl_meet(f0, mirrored);
    CHECK(tent.breakpoints() == std::vector<Rational>{q(0), q(1, 2), q(1)});
    CHECK(tent.values() == std::vector<Rational>{q(0), q(1, 2), q(0)});

    CHECK(pl_join(tent, tent) == tent);

    PLFunction vee = pl_abs(pl_linear(q(2), f0, q(-1), PLFunction::constant(q(1))));
    CHECK(vee.breakpoints() == std::vector<Rational>{q(0), q(1, 2), q(1)});
    CHECK(vee.values() == std::vector<Rational>{q(1), q(0), q(1)});
}

TEST_CASE("lattice axioms on random piecewise-linear pairs") {
    SplitMix64 rng{61};
    for (int i = 0; i < 500; ++i) {
        PLFunction f = random_pl(rng, static_cast<int>(rng.below(5)));
        PLFunction g = random_pl(rng, static_cast<int>(rng.below(5)));
        PLFunction h = random_pl(rng, static_cast<int>(rng.below(4)));
        CHECK(pl_join(f, g) == pl_join(g, f));
        CHECK(pl_meet(f, g) == pl_meet(g, f));
        CHECK(pl_join(f, f) == f);
        CHECK(pl_join(pl_join(f, g), h) == pl_join(f, pl_join(g, h)));
        CHECK(pl_meet(f, pl_join(f, g)) == f); // absorption
        CHECK(pl_linear(q(1), pl_join(f, g), q(1), pl_meet(f, g)) ==
              pl_linear(q(1), f, q(1), g));
    }
}

TEST_CASE("e-norm") {
    PLFunction f0 = PLFunction::identity();
    PLFunction one = PLFunction::constant(q(1));
    CHECK(pl_e_norm(f0, one) == q(1));
    CHECK(pl_e_norm(f0, f0) == q(1));
    CHECK(pl_e_norm(one, f0) == std::nullopt);
    CHECK(pl_e_norm(PLFunction::zero(), f0) == q(0));
    CHECK_THROWS_AS(pl_e_norm(f0, pl_linear(q(-1), one, q(0), one)), Error);

    // sup of |f|/e attained strictly inside the refinement
    PLFunction tent = pl_meet(f0, pl_linear(q(-1), f0, q(1), one));
    CHECK(pl_e_norm(tent, one) == q(1, 2));
}

TEST_CASE("e-norm certifies domination exactly") {
    SplitMix64 rng{62};
    PLFunction one = PLFunction::constant(q(1));
    for (int i = 0; i < 200; ++i) {
        PLFunction f = random_pl(rng, static_cast<int>(rng.below(5)));
        auto norm = pl_e_norm(f, one);
        REQUIRE(norm.has_value());
        PLFunction bound = pl_linear(*norm, one, q(0), one);
        PLFunction absf = pl_abs(f);
        CHECK(pl_meet(absf, bound) == absf); // |f| <= norm * 1
        if (!norm->is_zero()) {
            // the norm is minimal: shrinking it breaks domination
            Rational smaller = *norm * q(99, 100);
            PLFunction too_low = pl_linear(smaller, one, q(0), one);
            CHECK(pl_meet(absf, too_low) != absf);
        }
    }
}

TEST_CASE("vanishing near zero") {
    PLFunction f0 = PLFunction::identity();
    CHECK(vanishes_near_zero(pl_pos_part(
        pl_linear(q(1), f0, q(-1), PLFunction::constant(q(1, 4))))));
    CHECK_FALSE(vanishes_near_zero(f0));
    CHECK(vanishes_near_zero(PLFunction::zero()));
}

TEST_CASE("witness sequence certifies the non-closed ideal") {
    PLFunction f0 = PLFunction::identity();
    PLFunction one = PLFunction::constant(q(1));

    PLFunction w1 = counterexample_witness(1);
    CHECK(w1 == PLFunction::zero());
    CHECK(pl_e_norm(pl_linear(q(1), f0, q(-1), w1), one) == q(1));

    PLFunction w2 = counterexample_witness(2);
    CHECK(w2.breakpoints() == std::vector<Rational>{q(0), q(1, 2), q(1)});
    CHECK(w2.values() == std::vector<Rational>{q(0), q(0), q(1, 2)});

    PLFunction w10 = counterexample_witness(10);
    CHECK(w10(q(1, 10)) == q(0));
    CHECK(vanishes_near_zero(w10));

    for (std::size_t n = 1; n <= 100; ++n) {
        PLFunction w = counterexample_witness(n);
        CHECK(vanishes_near_zero(w));
        CHECK(pl_e_norm(pl_linear(q(1), f0, q(-1), w), one) ==
              Rational(BigInt(1), BigInt(n)));
    }
    CHECK_THROWS_AS(counterexample_witness(0), Error);
}

TEST_CASE("the vanishing-near-zero set is an ideal") {
    SplitMix64 rng{63};
    PLFunction f0 = PLFunction::identity();
    for (int i = 0; i < 200; ++i) {
        // members of J: random functions forced to vanish on a head interval
        PLFunction raw = random_pl(rng, static_cast<int>(rng.below(4)));
        PLFunction mask = pl_pos_part(
            pl_linear(q(1), f0, q(-1), PLFunction::constant(q(1, 1 + static_cast<int>(rng.below(4))))));
        PLFunction f = pl_meet(pl_join(raw, pl_linear(q(-3), mask, q(0), mask)),
                               pl_linear(q(3), mask, q(0), mask));
        REQUIRE(vanishes_near_zero(f));
        PLFunction g = pl_meet(pl_join(random_pl(rng, 2), pl_linear(q(-2), mask, q(0), mask)),
                               pl_linear(q(2), mask, q(0), mask));
        REQUIRE(vanishes_near_zero(g));
        // closed under linear combinations
        CHECK(vanishes_near_zero(pl_linear(q(rng.range(-3, 3)), f, q(rng.range(-3, 3)), g)));
        // closed under domination: |h| <= |f| forces h in J
        PLFunction h = pl_meet(pl_abs(random_pl(rng, 3)), pl_abs(f));
        CHECK(vanishes_near_zero(h));
    }
}

TEST_CASE("chain J inside {f(0)=0} inside X, with f0 separating the levels") {
    SplitMix64 rng{65};
    PLFunction f0 = PLFunction::identity();
    auto in_y = [](const PLFunction& f) { return f(Rational(0)).is_zero(); };

    CHECK(in_y(f0));                     // f0 lies in Y = {f : f(0) = 0}
    CHECK_FALSE(vanishes_near_zero(f0)); // but not in J
    CHECK_FALSE(in_y(PLFunction::constant(Rational(1))));

    // J is a proper subset of Y: every member of J vanishes at 0, and the
    // witness sequence lives in J while its limit f0 does not.
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + rng.below(30);
        PLFunction w = counterexample_witness(n);
        CHECK(vanishes_near_zero(w));
        CHECK(in_y(w));
    }
}

TEST_CASE("codimension-2 residue decomposition") {
    SplitMix64 rng{64};
    PLFunction f0 = PLFunction::identity();
    PLFunction one = PLFunction::constant(q(1));
    for (int i = 0; i < 200; ++i) {
        PLFunction f = random_pl(rng, static_cast<int>(rng.below(5)));
        Rational at_zero = f(q(0));
        Rational slope = (f.values()[1] - f.values()[0]) / f.breakpoints()[1];
        PLFunction affine_head = pl_linear(at_zero, one, slope, f0);
        PLFunction residue = pl_linear(q(1), f, q(-1), affine_head);
        CHECK(vanishes_near_zero(residue)); // f - f(0)*1 - f'(0+)*f0 lies in J
    }
    // and the complement is exact: a nonzero affine combination never lies in J
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            if (a == 0 && b == 0)
                continue;
            CHECK_FALSE(vanishes_near_zero(pl_linear(q(a), one, q(b), f0)));
        }
}
