// Inverse problems: Milnor-parameter inversion for quadratics, split
// quadratic invariants, the binomial guard, interpolation, and the full
// degree-2 / dimension-2 triangular recovery.

#include "doctest.h"
#include "multspec/families.hpp"
#include "multspec/recovery.hpp"
#include "multspec/sigma.hpp"
#include "test_util.hpp"

using namespace multspec;

namespace {

EigenPair pair2(Rat a, Rat b) {
    std::vector<Rat> e{std::move(a), std::move(b)};
    std::sort(e.begin(), e.end());
    return EigenPair{std::move(e), 1};
}

DynamicalSystem triangular(const Rat& c, const Rat& a, const Rat& b, const Rat& cc) {
    Ring r2 = make_ring({"x1", "x2"});
    std::string F2 = "x2^2 + (" + to_string(a) + ")*x1^2 + (" + to_string(b) + ")*x1 + (" +
                     to_string(cc) + ")";
    TriangularSpec spec{{parse_poly(r2, "x1^2 + (" + to_string(c) + ")"), parse_poly(r2, F2)}};
    return triangular_endomorphism(spec);
}

}  // namespace

TEST_CASE("quadratic from multipliers") {
    auto c = quadratic_from_multipliers(Rat(3), Rat(-1));
    REQUIRE(c.has_value());
    CHECK(*c == make_rat(-3, 4));

    auto c2 = quadratic_from_multipliers(make_rat(1, 2), make_rat(3, 2));
    REQUIRE(c2.has_value());
    CHECK(*c2 == make_rat(3, 16));

    CHECK(!quadratic_from_multipliers(Rat(0), Rat(0)).has_value());
}

TEST_CASE("split quadratic invariants") {
    CHECK(split_quadratic_invariants(Rat(0), Rat(0)) == std::pair<Rat, Rat>(Rat(60), Rat(24)));
    CHECK(split_quadratic_invariants(Rat(1), Rat(-1)) ==
          std::pair<Rat, Rat>(Rat(60), Rat(24)));  // depends only on c + d

    // cross-check against the pipeline on [x^2 + cz^2 : y^2 + dz^2 : z^2]
    auto rng = testutil::make_rng(11);
    for (int k = 0; k < 3; ++k) {
        Rat c = testutil::rand_rat(rng), d = testutil::rand_rat(rng);
        SplitSpec spec{{UniPoly{c, Rat(0), Rat(1)}, UniPoly{d, Rat(0), Rat(1)}}};
        auto T = extract_sigmas(sigma_poly(split_endomorphism(spec), 1, SigmaMode::chow));
        auto [s22, s23] = split_quadratic_invariants(c, d);
        CHECK(T.sigma(2, 2) == s22);
        CHECK(T.sigma(2, 3) == s23);
    }
}

TEST_CASE("binomial guard") {
    CHECK(binomial_guard(2, 1));  // 3 <= 3
    CHECK(binomial_guard(3, 2));  // 10 <= 13
    CHECK(binomial_guard(2, 4));  // 15 <= 31
    for (unsigned d = 2; d <= 12; ++d)
        for (unsigned n = 1; n <= 12; ++n) CHECK(binomial_guard(d, n));
}

TEST_CASE("interpolation solve") {
    // the worked system: F2(x, y, 1) = y^2 + a x^2 + b x + c with a = -3/4
    // known, nodes x = -1/2 and x = 3/2 constraining b x + c
    std::vector<Monomial> basis{Monomial(std::vector<unsigned>{1}),
                                Monomial(std::vector<unsigned>{0})};
    Rat a = make_rat(-3, 4);
    auto res = interpolation_solve(
        {{make_rat(-1, 2)}, {make_rat(3, 2)}},
        {make_rat(3, 16) - a * make_rat(1, 4), make_rat(-357, 16) - a * make_rat(9, 4)},
        basis);
    REQUIRE(res.status == InterpolationStatus::unique);
    CHECK(res.coeffs[0] == make_rat(-21, 2));
    CHECK(res.coeffs[1] == make_rat(-39, 8));

    // single node, single monomial
    auto res2 = interpolation_solve({{Rat(2)}}, {Rat(6)},
                                    {Monomial(std::vector<unsigned>{1})});
    REQUIRE(res2.status == InterpolationStatus::unique);
    CHECK(res2.coeffs[0] == Rat(3));

    // duplicated node: rank-deficient
    auto res3 = interpolation_solve({{Rat(1)}, {Rat(1)}}, {Rat(0), Rat(0)}, basis);
    CHECK(res3.status == InterpolationStatus::underdetermined);

    // inconsistent
    auto res4 = interpolation_solve({{Rat(1)}, {Rat(1)}}, {Rat(0), Rat(1)}, basis);
    CHECK(res4.status == InterpolationStatus::inconsistent);
}

TEST_CASE("eigen pairs from a spectrum") {
    auto sp = rational_periodic_spectrum(triangular(Rat(0), Rat(0), Rat(0), Rat(0)), 1);
    auto pairs = eigen_pairs_from_spectrum(sp);
    size_t total = 0;
    for (auto& p : pairs) total += p.multiplicity;
    CHECK(total == 7);
}

TEST_CASE("triangular recovery: worked example") {
    EigenPairMultiset pairs{pair2(Rat(0), Rat(0)),
                            pair2(Rat(0), Rat(0)),
                            pair2(Rat(3), make_rat(21, 2)),
                            pair2(Rat(-1), make_rat(3, 2)),
                            pair2(Rat(-1), make_rat(1, 2)),
                            pair2(Rat(3), make_rat(-17, 2)),
                            pair2(Rat(0), Rat(-1))};
    auto maps = recover_triangular_2_2(pairs);
    REQUIRE(!maps.empty());
    auto expect = triangular(make_rat(-3, 4), make_rat(-3, 4), make_rat(-21, 2),
                             make_rat(-39, 8));
    CHECK(maps[0].map.coords == expect.coords);
    // one input pair does not match the true spectrum of the recovered map
    CHECK(maps[0].spectrum_mismatch == 1);
}

TEST_CASE("triangular recovery: powering round trip") {
    auto f = triangular(Rat(0), Rat(0), Rat(0), Rat(0));  // [x^2 : y^2 : z^2]
    auto pairs = eigen_pairs_from_spectrum(rational_periodic_spectrum(f, 1));
    auto maps = recover_triangular_2_2(pairs);
    REQUIRE(!maps.empty());
    bool found = false;
    auto S = sigma_poly(f, 1, SigmaMode::chow).poly;
    for (auto& m : maps) {
        CHECK(m.spectrum_mismatch == 0);  // consistent inputs reproduce exactly
        if (sigma_poly(m.map, 1, SigmaMode::chow).poly == S) found = true;
    }
    CHECK(found);
}

TEST_CASE("triangular recovery: random round trip") {
    auto rng = testutil::make_rng(12);
    int done = 0;
    for (int attempt = 0; attempt < 30 && done < 2; ++attempt) {
        // base quadratic x^2 + c with rational fixed points (1 +- s)/2 and
        // fiber parameters solved so both fiber discriminants are squares,
        // making the whole spectrum rational by construction
        Rat s(testutil::rand_int(rng, 1, 3));
        Rat u = testutil::rand_rat(rng, 3);
        Rat v = testutil::rand_rat(rng, 3);
        Rat c = (Rat(1) - s * s) / 4;
        Rat x1 = (Rat(1) + s) / 2;
        Rat b = (v * v - u * u) / (4 * s);
        Rat cc = (Rat(1) - u * u) / 4 - b * x1;
        DynamicalSystem f;
        EigenPairMultiset pairs;
        try {
            f = triangular(c, Rat(0), b, cc);
            pairs = eigen_pairs_from_spectrum(rational_periodic_spectrum(f, 1));
        } catch (const std::exception&) {
            continue;  // degenerate draw
        }
        auto maps = recover_triangular_2_2(pairs);
        REQUIRE(!maps.empty());
        bool found = false;
        auto S = sigma_poly(f, 1, SigmaMode::chow).poly;
        for (auto& m : maps)
            if (sigma_poly(m.map, 1, SigmaMode::chow).poly == S) found = true;
        CHECK(found);
        ++done;
    }
    CHECK(done > 0);
}

TEST_CASE("triangular recovery: inconsistent spectrum yields nothing") {
    EigenPairMultiset pairs{pair2(Rat(0), Rat(0)),
                            pair2(Rat(0), Rat(0)),
                            pair2(Rat(3), Rat(11)),  // perturbed eigenvalue
                            pair2(Rat(-1), make_rat(3, 2)),
                            pair2(Rat(-1), make_rat(1, 2)),
                            pair2(Rat(3), make_rat(-17, 2)),
                            pair2(Rat(0), Rat(-1))};
    CHECK(recover_triangular_2_2(pairs).empty());

    EigenPairMultiset short_list{pair2(Rat(0), Rat(0))};
    CHECK_THROWS(recover_triangular_2_2(short_list));
}
