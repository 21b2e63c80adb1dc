#pragma once

// The family of monic polynomial endomorphisms of P^2 in normal form:
// the map constructor, the five explicit sigma generators, the quintic
// hypersurface cut out by their image, and a fiber probe over a given
// sigma vector.

#include <array>
#include <optional>

#include "sigma.hpp"

namespace multspec {

struct MonicParams {
    Rat a1, a2, b1, b2;
};

// (sigma_{1,2}, sigma_{2,2}, sigma_{2,3}, sigma_{2,4}, sigma_{3,3})
using MonicSigmaVector = std::array<Rat, 5>;

// [x^2 + a1 xz + a2 yz - a1 z^2 : y^2 + b1 xz + b2 yz - b1 z^2 : z^2];
// fixes (1:1:0), (0:1:0), (1:0:0) and (1:0:1).
inline DynamicalSystem monic_map(const MonicParams& p) {
    size_t nv = 3;
    Poly x = Poly::variable(nv, 0), y = Poly::variable(nv, 1), z = Poly::variable(nv, 2);
    Poly f0 = x * x + p.a1 * (x * z) + p.a2 * (y * z) - p.a1 * (z * z);
    Poly f1 = y * y + p.b1 * (x * z) + p.b2 * (y * z) - p.b1 * (z * z);
    return new_dynamical_system({f0, f1, z * z});
}

// The five generator polynomials evaluated at the parameters.
inline MonicSigmaVector monic_sigma_generators(const MonicParams& p) {
    const Rat &a1 = p.a1, &a2 = p.a2, &b1 = p.b1, &b2 = p.b2;
    MonicSigmaVector s;
    s[0] = 8 * a2 * b1 + 4;
    s[1] = -2 * a1 * a1 - 4 * a1 * b1 + 36 * a2 * b1 - 4 * a2 * b2 - 2 * b2 * b2 - 4 * a1 +
           4 * a2 - 4 * b1 + 4 * b2 + 60;
    s[2] = 8 * a1 * a1 * b1 + 16 * a1 * a2 * b1 + 16 * a2 * b1 * b2 + 8 * a2 * b2 * b2 -
           4 * a1 * a1 + 8 * a1 * b1 + 40 * a2 * b1 - 24 * a2 * b2 - 4 * b2 * b2 - 8 * a1 +
           16 * a2 + 8 * b2 + 24;
    s[3] = -4 * a1 * a1 * a1 * b1 + 18 * a2 * a2 * b1 * b1 - 8 * a1 * a2 * b1 * b2 -
           2 * a1 * a1 * b2 * b2 - 4 * a2 * b2 * b2 * b2 - 4 * a1 * a1 * b1 +
           24 * a1 * a2 * b1 + 4 * a1 * a1 * b2 + 8 * a2 * b1 * b2 - 4 * a1 * b2 * b2 +
           20 * a2 * b2 * b2 - 4 * a1 * a1 + 20 * a2 * b1 + 8 * a1 * b2 - 32 * a2 * b2 -
           4 * b2 * b2 - 8 * a1 + 16 * a2 + 8 * b2;
    s[4] = 32 * a1 * a1 * b1 + 64 * a1 * a2 * b1 - 8 * a2 * a2 * b1 - 8 * a2 * b1 * b1 +
           64 * a2 * b1 * b2 + 32 * a2 * b2 * b2 - 32 * a1 * a1 + 128 * a2 * b1 -
           128 * a2 * b2 - 32 * b2 * b2 - 64 * a1 + 96 * a2 - 32 * b1 + 64 * b2 + 176;
    return s;
}

// The same five values read off the elimination pipeline.
inline MonicSigmaVector monic_sigma_from_pipeline(const MonicParams& p,
                                                  const ResourceCaps& caps = {}) {
    SigmaTable T = extract_sigmas(sigma_poly(monic_map(p), 1, SigmaMode::chow, caps));
    return {T.sigma(1, 2), T.sigma(2, 2), T.sigma(2, 3), T.sigma(2, 4), T.sigma(3, 3)};
}

namespace detail {

// The hypersurface polynomial in (s12, s22, s23, s24, s33), transcribed
// term by term; validated against generator vectors in the test suite.
inline const char* monic_hypersurface_text() {
    return "36*s12^5 - 18*s12^4*s22 + 2*s12^3*s22^2 + 17712*s12^4 - 8384*s12^3*s22"
           " + 1292*s12^2*s22^2 - 64*s12*s22^3 - 2456*s12^3*s23 + 476*s12^2*s22*s23"
           " + 73*s12^2*s23^2 + 16*s12*s22*s23^2 + 16*s12^3*s24 + 792*s12^3*s33"
           " - 196*s12^2*s22*s33 + 8*s12*s22^2*s33 - 54*s12^2*s23*s33 - 4*s12*s22*s23*s33"
           " + 9*s12^2*s33^2 + 197280*s12^3 - 105984*s12^2*s22 + 22464*s12*s22^2"
           " - 1792*s22^3 + 48256*s12^2*s23 - 12064*s12*s22*s23 - 11336*s12*s23^2"
           " + 1472*s22*s23^2 + 512*s23^3 - 51392*s12^2*s24 + 20480*s12*s22*s24"
           " - 2048*s22^2*s24 + 10240*s12*s23*s24 - 2048*s22*s23*s24 - 512*s23^2*s24"
           " + 3008*s12^2*s33 - 2400*s12*s22*s33 + 480*s22^2*s33 + 2992*s12*s23*s33"
           " - 240*s22*s23*s33 - 256*s23^2*s33 - 2560*s12*s24*s33 + 512*s22*s24*s33"
           " + 256*s23*s24*s33 - 40*s12*s33^2 - 32*s22*s33^2 + 32*s23*s33^2 - 32*s24*s33^2"
           " + 2411904*s12^2 - 1307136*s12*s22 + 171968*s22^2 + 268416*s12*s23"
           " + 16064*s22*s23 - 38768*s23^2 - 613632*s12*s24 + 122880*s22*s24"
           " + 61440*s23*s24 + 85376*s12*s33 - 32320*s22*s33 + 4768*s23*s33"
           " - 15360*s24*s33 + 1232*s33^2 + 20517376*s12 - 5436928*s22 - 459776*s23"
           " - 1844224*s24 + 532480*s33 + 56702976";
}

inline const Poly& monic_hypersurface_poly() {
    static const Poly q = [] {
        Ring r{{"s12", "s22", "s23", "s24", "s33"}};
        return parse_poly(r, monic_hypersurface_text());
    }();
    return q;
}

}  // namespace detail

// Evaluates the hypersurface polynomial; the vector lies on the image of
// the monic family exactly when the result is 0.
inline Rat hypersurface_eval(const MonicSigmaVector& v) {
    return detail::monic_hypersurface_poly().evaluate({v[0], v[1], v[2], v[3], v[4]});
}

struct MonicFiberReport {
    bool empty = false;             // no parameters attain the vector
    bool zero_dimensional = false;  // finitely many fiber points
    size_t fiber_degree = 0;        // vector-space dimension of the quotient
    std::vector<std::array<Rat, 4>> rational_solutions;  // (a1,a2,b1,b2)
    bool nonrational_present = false;
};

// Probes the fiber of the generator map over a target sigma vector by
// eliminating from (gen_i - v_i) in Q[a1,a2,b1,b2].
inline MonicFiberReport monic_fiber_probe(const MonicSigmaVector& v,
                                          const ResourceCaps& caps = {}) {
    size_t nv = 4;
    Ring pr{{"a1", "a2", "b1", "b2"}};
    std::vector<Poly> gens;
    {
        // symbolic generator polynomials: evaluate the formulas on variables
        Poly a1 = Poly::variable(nv, 0), a2 = Poly::variable(nv, 1);
        Poly b1 = Poly::variable(nv, 2), b2 = Poly::variable(nv, 3);
        std::array<Poly, 5> g;
        g[0] = 8 * (a2 * b1) + Poly::constant(nv, Rat(4));
        g[1] = -2 * (a1 * a1) - 4 * (a1 * b1) + 36 * (a2 * b1) - 4 * (a2 * b2) -
               2 * (b2 * b2) - 4 * a1 + 4 * a2 - 4 * b1 + 4 * b2 + Poly::constant(nv, Rat(60));
        g[2] = 8 * (a1 * a1 * b1) + 16 * (a1 * a2 * b1) + 16 * (a2 * b1 * b2) +
               8 * (a2 * b2 * b2) - 4 * (a1 * a1) + 8 * (a1 * b1) + 40 * (a2 * b1) -
               24 * (a2 * b2) - 4 * (b2 * b2) - 8 * a1 + 16 * a2 + 8 * b2 +
               Poly::constant(nv, Rat(24));
        g[3] = -4 * (a1 * a1 * a1 * b1) + 18 * (a2 * a2 * b1 * b1) - 8 * (a1 * a2 * b1 * b2) -
               2 * (a1 * a1 * b2 * b2) - 4 * (a2 * b2 * b2 * b2) - 4 * (a1 * a1 * b1) +
               24 * (a1 * a2 * b1) + 4 * (a1 * a1 * b2) + 8 * (a2 * b1 * b2) -
               4 * (a1 * b2 * b2) + 20 * (a2 * b2 * b2) - 4 * (a1 * a1) + 20 * (a2 * b1) +
               8 * (a1 * b2) - 32 * (a2 * b2) - 4 * (b2 * b2) - 8 * a1 + 16 * a2 + 8 * b2;
        g[4] = 32 * (a1 * a1 * b1) + 64 * (a1 * a2 * b1) - 8 * (a2 * a2 * b1) -
               8 * (a2 * b1 * b1) + 64 * (a2 * b1 * b2) + 32 * (a2 * b2 * b2) -
               32 * (a1 * a1) + 128 * (a2 * b1) - 128 * (a2 * b2) - 32 * (b2 * b2) -
               64 * a1 + 96 * a2 - 32 * b1 + 64 * b2 + Poly::constant(nv, Rat(176));
        for (size_t i = 0; i < 5; ++i) gens.push_back(g[i] - Poly::constant(nv, v[i]));
    }

    MonicFiberReport rep;
    Ideal I{nv, gens, MonomialOrder::lex(nv)};
    auto gb = buchberger(I, caps);
    if (gb.basis.size() == 1 && gb.basis[0].is_constant() && !gb.basis[0].is_zero()) {
        rep.empty = true;
        return rep;
    }
    std::vector<size_t> active{0, 1, 2, 3};
    auto qd = quotient_dimension(gb, nv);
    if (!qd) return rep;  // positive-dimensional fiber
    rep.zero_dimensional = true;
    rep.fiber_degree = *qd;

    std::vector<std::vector<Rat>> sols;
    std::vector<Rat> partial(nv, Rat(0));
    try {
        detail::solve_rational_points(gens, active, nv, partial, sols, caps);
    } catch (const DomainError&) {
        rep.nonrational_present = true;
        return rep;
    }
    for (auto& s : sols) rep.rational_solutions.push_back({s[0], s[1], s[2], s[3]});
    std::sort(rep.rational_solutions.begin(), rep.rational_solutions.end());
    if (rep.rational_solutions.size() < rep.fiber_degree) rep.nonrational_present = true;
    (void)pr;
    return rep;
}

}  // namespace multspec
