// Exact arithmetic layer: rationals, monomials, multivariate and univariate
// polynomials, resultants, and rational root extraction.

#include "doctest.h"
#include "multspec/polynomial.hpp"
#include "multspec/rational_roots.hpp"
#include "multspec/resultant.hpp"
#include "test_util.hpp"

using namespace multspec;

namespace {

Ring xy() { return make_ring({"x", "y"}); }

Poly P(const Ring& r, const std::string& s) { return parse_poly(r, s); }

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(*parse_rat("2/4") == make_rat(1, 2));
    CHECK(*parse_rat("-6/3") == Rat(-2));
    CHECK(to_string(*parse_rat("10/-4")) == "-5/2");
    CHECK(!parse_rat("1/0").has_value());
    CHECK(!parse_rat("abc").has_value());
    CHECK(!parse_rat("").has_value());
    CHECK(is_integer(Rat(7)));
    CHECK(!is_integer(make_rat(1, 2)));
}

TEST_CASE("binomial and powers") {
    CHECK(binomial(7, 2) == 21);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(Int(7), 3) == 35);
    CHECK(binomial(Int(-1), 2) == 0);
    CHECK(int_pow(Int(2), 10) == 1024);
    CHECK(rat_pow(make_rat(2, 3), 3) == make_rat(8, 27));
}

TEST_CASE("polynomial ring arithmetic") {
    Ring r = xy();
    CHECK(P(r, "(x+y)*(x-y)") == P(r, "x^2 - y^2"));
    Poly p = P(r, "3*x^2*y - y + 1/2");
    CHECK(p + Poly::zero(2) == p);
    CHECK(P(r, "(x+1)^3") == P(r, "x^3 + 3*x^2 + 3*x + 1"));
    CHECK(P(r, "x*y") * P(r, "0") == Poly::zero(2));
}

TEST_CASE("ring axioms on random inputs") {
    auto rng = testutil::make_rng(1);
    Ring r = xy();
    for (int k = 0; k < 20; ++k) {
        auto rand_poly = [&] {
            Poly p(2);
            for (int t = 0; t < 4; ++t) {
                Monomial m(2);
                m.exps[0] = static_cast<unsigned>(testutil::rand_int(rng, 0, 3));
                m.exps[1] = static_cast<unsigned>(testutil::rand_int(rng, 0, 3));
                p += Poly::term(2, m, testutil::rand_rat(rng));
            }
            return p;
        };
        Poly p = rand_poly(), q = rand_poly(), s = rand_poly();
        CHECK((p + q) * s == p * s + q * s);
        CHECK(p * q == q * p);
        // product rule
        CHECK((p * q).derivative(0) == p * q.derivative(0) + q * p.derivative(0));
    }
}

TEST_CASE("partial derivatives") {
    Ring r = xy();
    CHECK(P(r, "x^2*y").derivative(0) == P(r, "2*x*y"));
    CHECK(P(r, "5/3").derivative(0) == Poly::zero(2));
    // Mordell numerator at a = 1
    CHECK(P(r, "x^4 - 8*x*y^3").derivative(0) == P(r, "4*x^3 - 8*y^3"));
}

TEST_CASE("substitution") {
    Ring r = xy();
    CHECK(P(r, "x^2 + y^2").substitute_rat(1, Rat(0)) == P(r, "x^2"));
    Poly x = Poly::variable(2, 0);
    CHECK(x.substitute_rat(1, Rat(5)) == x);
    CHECK(P(r, "x^2 - 3*x*y + y^2").evaluate({Rat(2), Rat(1)}) == Rat(-1));
}

TEST_CASE("embedding into a larger ring") {
    Ring r2 = xy();
    Poly p = P(r2, "x^2 - 8*x*y^3");  // inhomogeneous on purpose
    Poly q = p.embedded(4, {0, 2});
    Ring r4 = make_ring({"u0", "u1", "u2", "u3"});
    CHECK(q == parse_poly(r4, "u0^2 - 8*u0*u2^3"));
}

TEST_CASE("parse and format round-trip") {
    Ring r = xy();
    for (const char* s : {"x^2 - y^2", "3*x^2*y - y + 1/2", "0", "-x + 1",
                          "7/2*x^3*y^2 - 5*x - 1/3"}) {
        Poly p = P(r, s);
        CHECK(P(r, format_poly(r, p)) == p);
    }
    CHECK_THROWS(P(r, "x +"));
    CHECK_THROWS(P(r, "z^2"));
}

TEST_CASE("univariate resultants") {
    // Res_z(z^2 - z, w - 2z): coefficients in a 1-variable ring for w
    size_t nv = 1;
    Poly w = Poly::variable(nv, 0), one = Poly::constant(nv, Rat(1));
    std::vector<Poly> F{Poly::zero(nv), -one, one};          // z^2 - z
    std::vector<Poly> G{w, Poly::constant(nv, Rat(-2))};     // w - 2z
    Poly res = resultant_univar(F, G, nv);
    // Poisson product over roots z in {0,1}: w * (w - 2), up to sign from
    // the Sylvester convention
    Poly expect = w * (w - 2 * one);
    CHECK((res == expect || res == -expect));

    // linear F: Res_z(z - a, G(z)) = G(a), with a = 3 and G = z^2 + 1
    std::vector<Poly> F2{Poly::constant(nv, Rat(-3)), one};
    std::vector<Poly> G2{one, Poly::zero(nv), one};
    CHECK(resultant_univar(F2, G2, nv) == Poly::constant(nv, Rat(10)));

    // constant G
    CHECK(resultant_univar(F, {one}, nv) == one);

    // swap symmetry: Res(F,G) = (-1)^{deg F deg G} Res(G,F)
    Poly a = resultant_univar(F, G2, nv);
    Poly b = resultant_univar(G2, F, nv);
    CHECK(a == b);  // deg 2 * deg 2 is even
}

TEST_CASE("rational roots") {
    // z^3 - z
    auto rr = rational_roots(UniPoly{Rat(0), Rat(-1), Rat(0), Rat(1)});
    REQUIRE(rr.roots.size() == 3);
    CHECK(rr.remaining_degree == 0);

    // x^2 - x - 3/4: fixed points of x^2 - 3/4 are {-1/2, 3/2}
    auto rr2 = rational_roots(UniPoly{make_rat(-3, 4), Rat(-1), Rat(1)});
    REQUIRE(rr2.roots.size() == 2);
    std::vector<Rat> roots{rr2.roots[0].root, rr2.roots[1].root};
    std::sort(roots.begin(), roots.end());
    CHECK(roots[0] == make_rat(-1, 2));
    CHECK(roots[1] == make_rat(3, 2));

    // z^2 + 1: no rational roots
    auto rr3 = rational_roots(UniPoly{Rat(1), Rat(0), Rat(1)});
    CHECK(rr3.roots.empty());
    CHECK(rr3.remaining_degree == 2);

    // multiplicity: (z - 2)^2
    auto rr4 = rational_roots(UniPoly{Rat(4), Rat(-4), Rat(1)});
    REQUIRE(rr4.roots.size() == 1);
    CHECK(rr4.roots[0].root == Rat(2));
    CHECK(rr4.roots[0].multiplicity == 2);
}

TEST_CASE("univariate helpers") {
    UniPoly p{Rat(1), Rat(2)};       // 1 + 2t
    UniPoly q{Rat(-1), Rat(0), Rat(1)};  // t^2 - 1
    CHECK(uni_eval(q, Rat(3)) == Rat(8));
    CHECK(uni_mul(p, q) == UniPoly{Rat(-1), Rat(-2), Rat(1), Rat(2)});
    CHECK(uni_sub(q, q).empty());
    auto [quo, rem] = uni_divmod(q, UniPoly{Rat(1), Rat(1)});  // by t + 1
    CHECK(rem.empty());
    CHECK(quo == UniPoly{Rat(-1), Rat(1)});
    CHECK(uni_gcd(q, UniPoly{Rat(1), Rat(1)}) == UniPoly{Rat(1), Rat(1)});
}
