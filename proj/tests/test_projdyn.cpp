// Projective dynamics: map validation, iteration, conjugation, charts,
// fixed ideals, multipliers, and rational periodic spectra.

#include "doctest.h"
#include "multspec/projdyn.hpp"
#include "test_util.hpp"

using namespace multspec;

namespace {

DynamicalSystem make_map(size_t nv, const std::vector<std::string>& coords) {
    Ring r = coord_ring(nv);
    std::vector<Poly> polys;
    for (auto& s : coords) polys.push_back(parse_poly(r, s));
    return new_dynamical_system(std::move(polys));
}

DynamicalSystem powering(size_t N, unsigned d) {
    std::vector<Poly> coords;
    for (size_t i = 0; i <= N; ++i) coords.push_back(Poly::variable(N + 1, i).pow(d));
    return new_dynamical_system(std::move(coords));
}

}  // namespace

TEST_CASE("map validation") {
    auto f = make_map(2, {"x0^2", "x1^2"});
    CHECK(f.N == 1);
    CHECK(f.d == 2);
    CHECK_THROWS_AS(make_map(2, {"x0^2", "x0*x1"}), InvalidMapError);
    // monic normal form is always a morphism
    CHECK_NOTHROW(make_map(3, {"x0^2 + 2*x0*x2 + 1/3*x1*x2 - 2*x2^2",
                               "x1^2 - x0*x2 + 5*x1*x2 + x2^2", "x2^2"}));
    CHECK_THROWS_AS(make_map(2, {"x0^2", "x1^3"}), InvalidMapError);  // mixed degrees
}

TEST_CASE("iteration") {
    auto f = make_map(2, {"x0^2", "x1^2"});
    auto f2 = iterate(f, 2);
    CHECK(f2.d == 4);
    CHECK(f2.coords[0] == Poly::variable(2, 0).pow(4));
    auto f1 = iterate(f, 1);
    CHECK(f1.coords == f.coords);
    CHECK_THROWS(iterate(f, 0));

    auto rng = testutil::make_rng(3);
    auto g = testutil::random_morphism(rng, 2, 2);
    auto g2 = iterate(g, 2);
    CHECK(g2.d == 4);  // passed validation inside new_dynamical_system
}

TEST_CASE("conjugation") {
    auto f = make_map(3, {"x0^2 + x1*x2", "x1^2 - x0*x2", "x2^2"});
    std::vector<std::vector<Rat>> id(3, std::vector<Rat>(3, Rat(0)));
    for (int i = 0; i < 3; ++i) id[i][i] = 1;
    CHECK(conjugate(f, id).coords == f.coords);

    // unipotent matrix with last column (a, b, 1) applied to the generic
    // monic form: the x-coordinate xz-coefficient becomes 2a + a1
    Rat a(2), b(-1), a1 = make_rat(1, 2), a2(3), b1(1), b2(0);
    auto monic = make_map(3, {"x0^2 + 1/2*x0*x2 + 3*x1*x2 - 1/2*x2^2",
                              "x1^2 + x0*x2 - x2^2", "x2^2"});
    std::vector<std::vector<Rat>> m{{Rat(1), Rat(0), a}, {Rat(0), Rat(1), b},
                                    {Rat(0), Rat(0), Rat(1)}};
    auto g = conjugate(monic, m);
    // read the x0*x2 coefficient of the first coordinate
    Monomial xz(3);
    xz.exps[0] = 1;
    xz.exps[2] = 1;
    Rat coeff(0), lead(0);
    Monomial xx(3);
    xx.exps[0] = 2;
    for (auto& t : g.coords[0].terms) {
        if (t.mon == xz) coeff = t.coeff;
        if (t.mon == xx) lead = t.coeff;
    }
    CHECK(coeff / lead == 2 * a + a1);

    std::vector<std::vector<Rat>> sing(3, std::vector<Rat>(3, Rat(1)));
    CHECK_THROWS(conjugate(f, sing));
}

TEST_CASE("dehomogenization") {
    auto f = make_map(2, {"x0^2", "x1^2"});
    auto c1 = dehomogenize(f, 1);
    CHECK(c1.numerators.size() == 1);
    CHECK(c1.numerators[0] == Poly::variable(2, 0).pow(2));
    CHECK(c1.denominator == Poly::constant(2, Rat(1)));
    auto c0 = dehomogenize(f, 0);
    CHECK(c0.numerators[0] == Poly::variable(2, 1).pow(2));

    auto monic = make_map(3, {"x0^2 + x0*x2 - x2^2", "x1^2 + x1*x2", "x2^2"});
    auto c2 = dehomogenize(monic, 2);
    CHECK(c2.denominator == Poly::constant(3, Rat(1)));
    CHECK(c2.numerators.size() == 2);
}

TEST_CASE("fixed ideals per chart") {
    auto f = make_map(2, {"x0^2", "x1^2"});
    auto I = fixed_ideal_chart(f, 1, 1);
    REQUIRE(I.generators.size() == 1);
    Poly x = Poly::variable(2, 0);
    CHECK(I.generators[0] == x * x - x);

    auto g = powering(2, 2);
    auto I2 = fixed_ideal_chart(g, 1, 2);
    CHECK(I2.generators.size() == 2);
}

TEST_CASE("multiplier characteristic polynomials") {
    auto f = make_map(2, {"x0^2", "x1^2"});
    auto P = ProjectivePoint::make({Rat(1), Rat(1)});
    CHECK(multiplier_charpoly(f, P, 1) == UniPoly{Rat(-2), Rat(1)});  // t - 2

    auto g = powering(2, 2);
    auto Q = ProjectivePoint::make({Rat(1), Rat(1), Rat(1)});
    CHECK(multiplier_charpoly(g, Q, 1) == UniPoly{Rat(4), Rat(-4), Rat(1)});  // (t-2)^2

    // x^2 - 3/4 on P^1 at the fixed point -1/2: multiplier -1
    auto h = make_map(2, {"x0^2 - 3/4*x1^2", "x1^2"});
    auto R = ProjectivePoint::make({make_rat(-1, 2), Rat(1)});
    CHECK(multiplier_charpoly(h, R, 1) == UniPoly{Rat(1), Rat(1)});  // t + 1

    // non-periodic point is rejected
    auto S = ProjectivePoint::make({Rat(5), Rat(1)});
    CHECK_THROWS(multiplier_charpoly(f, S, 1));
}

TEST_CASE("multiplier charpoly is conjugation invariant") {
    auto rng = testutil::make_rng(4);
    auto f = testutil::random_morphism(rng, 2, 2);
    SpectrumList sp;
    try {
        sp = rational_periodic_spectrum(f, 1);
    } catch (const IrrationalSpectrumError&) {
        return;  // nothing to compare for this draw
    }
    auto m = testutil::random_unimodular(rng, 3);
    auto g = conjugate(f, m);
    auto mi = invert_rational(m);
    REQUIRE(mi.has_value());
    for (auto& e : sp) {
        std::vector<Rat> q(3, Rat(0));
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) q[i] += (*mi)[i][k] * e.point.coords[k];
        auto Q = ProjectivePoint::make(q);
        CHECK(multiplier_charpoly(g, Q, 1) == e.charpoly);
    }
}

TEST_CASE("rational periodic spectra") {
    auto g = powering(2, 2);
    auto sp = rational_periodic_spectrum(g, 1);
    Int total = 0;
    std::map<UniPoly, unsigned> byPoly;
    for (auto& e : sp) {
        total += Int(e.multiplicity);
        byPoly[e.charpoly] += e.multiplicity;
    }
    CHECK(total == period_count(2, 2, 1));
    CHECK(byPoly[UniPoly{Rat(0), Rat(0), Rat(1)}] == 3);           // t^2
    CHECK(byPoly[UniPoly{Rat(0), Rat(-2), Rat(1)}] == 3);          // t^2 - 2t
    CHECK(byPoly[UniPoly{Rat(4), Rat(-4), Rat(1)}] == 1);          // (t-2)^2

    auto f = make_map(2, {"x0^2", "x1^2"});
    auto sp1 = rational_periodic_spectrum(f, 1);
    std::multiset<UniPoly> polys;
    for (auto& e : sp1)
        for (unsigned k = 0; k < e.multiplicity; ++k) polys.insert(e.charpoly);
    CHECK(polys == std::multiset<UniPoly>{{Rat(0), Rat(1)}, {Rat(0), Rat(1)},
                                          {Rat(-2), Rat(1)}});

    // fixed points over Q(sqrt(2)): x^2 - 2 has irrational fixed points? use
    // a map whose fixed-point polynomial is x^2 - x - 1 (roots irrational)
    auto h = make_map(2, {"x0^2 + x1^2", "x1^2"});
    CHECK_THROWS_AS(rational_periodic_spectrum(h, 1), IrrationalSpectrumError);
}

TEST_CASE("period counts") {
    CHECK(period_count(1, 2, 1) == 3);
    CHECK(period_count(2, 2, 1) == 7);
    CHECK(period_count(3, 4, 1) == 85);
    CHECK(period_count(1, 2, 2) == 5);   // (4^2 - 1)/(4 - 1)
    CHECK(period_count(2, 2, 2) == 21);  // (4^3 - 1)/(4 - 1)
}
