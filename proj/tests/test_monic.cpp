// Monic family on P^2: the normal-form map, the five generator
// polynomials, the quintic hypersurface, and the fiber probe.

#include "doctest.h"
#include "multspec/monic.hpp"
#include "test_util.hpp"

using namespace multspec;

TEST_CASE("monic map shape") {
    MonicParams zero{Rat(0), Rat(0), Rat(0), Rat(0)};
    auto f = monic_map(zero);
    Ring r = coord_ring(3);
    CHECK(f.coords[0] == parse_poly(r, "x0^2"));
    CHECK(f.coords[1] == parse_poly(r, "x1^2"));
    CHECK(f.coords[2] == parse_poly(r, "x2^2"));

    // (1:0:1) is fixed for any parameters
    auto rng = testutil::make_rng(13);
    for (int k = 0; k < 3; ++k) {
        MonicParams p{testutil::rand_rat(rng), testutil::rand_rat(rng),
                      testutil::rand_rat(rng), testutil::rand_rat(rng)};
        auto g = monic_map(p);
        std::vector<Rat> img;
        for (auto& c : g.coords) img.push_back(c.evaluate({Rat(1), Rat(0), Rat(1)}));
        CHECK(ProjectivePoint::make(img) ==
              ProjectivePoint::make({Rat(1), Rat(0), Rat(1)}));
        // the hyperplane z = 0 is invariant with restriction [x^2 : y^2];
        // the tuple may carry a common denominator-clearing factor c
        Rat c = g.coords[2].evaluate({Rat(0), Rat(0), Rat(1)});
        CHECK(c != 0);
        CHECK(g.coords[0].substitute_rat(2, Rat(0)) == c * Poly::variable(3, 0).pow(2));
        CHECK(g.coords[1].substitute_rat(2, Rat(0)) == c * Poly::variable(3, 1).pow(2));
        CHECK(g.coords[2].substitute_rat(2, Rat(0)).is_zero());
    }
}

TEST_CASE("generator formulas") {
    MonicSigmaVector anchor = monic_sigma_generators({Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(anchor == MonicSigmaVector{Rat(4), Rat(60), Rat(24), Rat(0), Rat(176)});

    MonicSigmaVector ones = monic_sigma_generators({Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK(ones[0] == 12);
}

TEST_CASE("pipeline matches the generator formulas") {
    auto rng = testutil::make_rng(14);
    // the anchor point, exactly
    MonicParams zero{Rat(0), Rat(0), Rat(0), Rat(0)};
    CHECK(monic_sigma_from_pipeline(zero) == monic_sigma_generators(zero));
    // random parameters: entrywise equality (no sign flips observed; the
    // anchor pins the convention)
    for (int k = 0; k < 5; ++k) {
        MonicParams p{testutil::rand_rat(rng), testutil::rand_rat(rng),
                      testutil::rand_rat(rng), testutil::rand_rat(rng)};
        CHECK(monic_sigma_from_pipeline(p) == monic_sigma_generators(p));
    }
    // chow Sigma_1 has w-degree exactly 7
    auto S = sigma_poly(monic_map(zero), 1, SigmaMode::chow);
    CHECK(S.poly.degree_in(0) == 7);
}

TEST_CASE("hypersurface evaluation") {
    auto rng = testutil::make_rng(15);
    CHECK(hypersurface_eval(monic_sigma_generators({Rat(0), Rat(0), Rat(0), Rat(0)})) == 0);
    for (int k = 0; k < 10; ++k) {
        MonicParams p{testutil::rand_rat(rng), testutil::rand_rat(rng),
                      testutil::rand_rat(rng), testutil::rand_rat(rng)};
        CHECK(hypersurface_eval(monic_sigma_generators(p)) == 0);
    }
    int zeros = 0;
    for (int k = 0; k < 20; ++k) {
        MonicSigmaVector v{testutil::rand_rat(rng, 20), testutil::rand_rat(rng, 20),
                           testutil::rand_rat(rng, 20), testutil::rand_rat(rng, 20),
                           testutil::rand_rat(rng, 20)};
        if (hypersurface_eval(v) == 0) ++zeros;
    }
    CHECK(zeros <= 1);
}

TEST_CASE("fiber probe") {
    auto anchor = monic_sigma_generators({Rat(0), Rat(0), Rat(0), Rat(0)});
    auto rep = monic_fiber_probe(anchor);
    CHECK(!rep.empty);
    CHECK(rep.zero_dimensional);
    CHECK(rep.fiber_degree > 0);
    bool has_zero = false;
    for (auto& s : rep.rational_solutions)
        if (s == std::array<Rat, 4>{Rat(0), Rat(0), Rat(0), Rat(0)}) has_zero = true;
    CHECK(has_zero);

    auto ones = monic_sigma_generators({Rat(1), Rat(1), Rat(1), Rat(1)});
    auto rep2 = monic_fiber_probe(ones);
    CHECK(!rep2.empty);
    CHECK(rep2.zero_dimensional);

    // off the hypersurface: empty fiber
    MonicSigmaVector off = anchor;
    off[0] += 1;
    if (hypersurface_eval(off) != 0) {
        auto rep3 = monic_fiber_probe(off);
        CHECK(rep3.empty);
    }
}
