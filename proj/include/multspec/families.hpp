#pragma once

// Constructors for structured endomorphism families: cartesian products,
// Segre products with a powering map, split and triangular polynomial
// endomorphisms, the Mordell Lattes map, and a stored 2-symmetric Lattes
// family on P^2.

#include <stdexcept>
#include <vector>

#include "projdyn.hpp"

namespace multspec {

// h = f x g on P^{N+M+1}: f's coordinates in the first N+1 variables,
// g's in the last M+1.
inline DynamicalSystem cartesian_product(const DynamicalSystem& f, const DynamicalSystem& g) {
    if (f.d != g.d)
        throw InvalidMapError("cartesian product requires equal degrees");
    size_t nf = f.N + 1, ng = g.N + 1;
    size_t nv = nf + ng;
    std::vector<size_t> fmap(nf), gmap(ng);
    for (size_t i = 0; i < nf; ++i) fmap[i] = i;
    for (size_t i = 0; i < ng; ++i) gmap[i] = nf + i;
    std::vector<Poly> coords;
    for (auto& p : f.coords) coords.push_back(p.embedded(nv, fmap));
    for (auto& p : g.coords) coords.push_back(p.embedded(nv, gmap));
    return new_dynamical_system(std::move(coords));
}

enum class SegreFlattening {
    row_major,   // (i,j) -> i*(M+1) + j
    column_major // (i,j) -> j*(N+1) + i
};

// Segre product of f with the degree-d powering map on P^M: the induced
// endomorphism of P^{(N+1)(M+1)-1}. Coordinate (i,j) of the product is
// f_i with x_k replaced by u_{(k,j)}; because the second factor is the
// powering map, the result is polynomial in the u's.
inline DynamicalSystem segre_power_product(const DynamicalSystem& f, size_t M,
                                           SegreFlattening flat = SegreFlattening::row_major) {
    if (M < 1) throw InvalidMapError("segre product needs M >= 1");
    size_t n1 = f.N + 1, m1 = M + 1;
    size_t nv = n1 * m1;
    auto idx = [&](size_t i, size_t j) {
        return flat == SegreFlattening::row_major ? i * m1 + j : j * n1 + i;
    };
    std::vector<Poly> coords(nv, Poly(nv));
    for (size_t i = 0; i < n1; ++i) {
        for (size_t j = 0; j < m1; ++j) {
            std::vector<size_t> where(n1);
            for (size_t k = 0; k < n1; ++k) where[k] = idx(k, j);
            coords[idx(i, j)] = f.coords[i].embedded(nv, where);
        }
    }
    return new_dynamical_system(std::move(coords));
}

// Univariate components with rational coefficients, F_k(x) as dense
// coefficient lists (coeffs[i] multiplies x^i).
struct SplitSpec {
    std::vector<UniPoly> components;
};

// F_k in the variables x_1..x_k, all of total degree d.
struct TriangularSpec {
    std::vector<Poly> components;  // component k uses variables 0..k-1 of an N-variable ring
};

namespace detail {

// z^d * F(x/z) for a univariate F of degree <= d, in an nv-variable ring
// with x at position xi and z last.
inline Poly homogenize_uni(const UniPoly& F, unsigned d, size_t nv, size_t xi) {
    Poly out(nv);
    Poly x = Poly::variable(nv, xi), z = Poly::variable(nv, nv - 1);
    for (size_t i = 0; i < F.size(); ++i) {
        if (F[i] == 0) continue;
        out += x.pow(static_cast<unsigned>(i)) * z.pow(d - static_cast<unsigned>(i)) *
               Poly::constant(nv, F[i]);
    }
    return out;
}

}  // namespace detail

// Homogenization of (F_1(x_1), ..., F_N(x_N)): coordinate i is
// z^d F_i(x_i / z), last coordinate z^d.
inline DynamicalSystem split_endomorphism(const SplitSpec& spec) {
    size_t N = spec.components.size();
    if (N == 0) throw InvalidMapError("split endomorphism needs at least one component");
    int d = uni_degree(spec.components[0]);
    for (auto& F : spec.components)
        if (uni_degree(F) != d) throw InvalidMapError("split components must share a degree");
    if (d < 2) throw InvalidMapError("split components must have degree >= 2");
    size_t nv = N + 1;
    std::vector<Poly> coords;
    for (size_t i = 0; i < N; ++i)
        coords.push_back(detail::homogenize_uni(spec.components[i], static_cast<unsigned>(d),
                                                nv, i));
    coords.push_back(Poly::variable(nv, N).pow(static_cast<unsigned>(d)));
    return new_dynamical_system(std::move(coords));
}

// Homogenization of a triangular tuple (F_1(x_1), F_2(x_1,x_2), ...): the
// same z^d trick applied per monomial. Component k may only mention
// x_1..x_k.
inline DynamicalSystem triangular_endomorphism(const TriangularSpec& spec) {
    size_t N = spec.components.size();
    if (N == 0) throw InvalidMapError("triangular endomorphism needs at least one component");
    size_t nv = N + 1;
    unsigned d = spec.components[0].total_degree();
    for (size_t k = 0; k < N; ++k) {
        const Poly& F = spec.components[k];
        if (F.nvars() != N)
            throw InvalidMapError("triangular components must live in an N-variable ring");
        if (F.total_degree() != d)
            throw InvalidMapError("triangular components must share a total degree");
        for (const Term& tm : F.terms)
            for (size_t v = k + 1; v < N; ++v)
                if (tm.mon.exps[v] != 0)
                    throw InvalidMapError("triangular component uses a later variable");
    }
    std::vector<size_t> where(N);
    for (size_t v = 0; v < N; ++v) where[v] = v;
    std::vector<Poly> coords;
    Poly z = Poly::variable(nv, N);
    for (size_t k = 0; k < N; ++k) {
        Poly F = spec.components[k].embedded(nv, where);
        Poly out(nv);
        for (const Term& tm : F.terms) {
            Monomial m = tm.mon;
            m.exps[N] = d - tm.mon.degree();
            out += Poly::term(nv, m, tm.coeff);
        }
        coords.push_back(out);
    }
    coords.push_back(z.pow(d));
    return new_dynamical_system(std::move(coords));
}

// Multiplication by 2 on the elliptic curve y^2 = x^3 + a, written on P^1:
// [u^4 - 8a uv^3 : 4u^3 v + 4a v^4].
inline DynamicalSystem lattes_mordell(const Rat& a) {
    if (a == 0) throw InvalidMapError("lattes parameter a = 0 gives a singular curve");
    size_t nv = 2;
    Poly u = Poly::variable(nv, 0), v = Poly::variable(nv, 1);
    Poly f0 = u.pow(4) - (8 * a) * (u * v.pow(3));
    Poly f1 = 4 * (u.pow(3) * v) + (4 * a) * v.pow(4);
    return new_dynamical_system({f0, f1});
}

// Multiplication by 2 on the Legendre curve y^2 = x(x-1)(x-a), on P^1:
// [(u^2 - a v^2)^2 : 4uv(u-v)(u-av)]. Degenerate at a in {0, 1}.
inline DynamicalSystem lattes_legendre(const Rat& a) {
    if (a == 0 || a == 1) throw InvalidMapError("legendre lattes parameter must avoid {0,1}");
    size_t nv = 2;
    Poly u = Poly::variable(nv, 0), v = Poly::variable(nv, 1);
    Poly f0 = (u * u - a * (v * v)).pow(2);
    Poly f1 = 4 * (u * v * (u - v) * (u - a * v));
    return new_dynamical_system({f0, f1});
}

// Stored 2-symmetric product of the Legendre Lattes family: a degree-4
// endomorphism of P^2 whose multiplier spectrum does not depend on a.
inline DynamicalSystem symmetric_lattes_fixture(const Rat& a) {
    if (a == 0 || a == 1) throw InvalidMapError("symmetric fixture parameter must avoid {0,1}");
    size_t nv = 3;
    Poly x = Poly::variable(nv, 0), y = Poly::variable(nv, 1), z = Poly::variable(nv, 2);
    Poly s = x + a * z;
    Poly f0 = (s * s - a * (y * y)).pow(2);
    Poly f1 = 4 * (s.pow(3) * y + (2 * (a + 1)) * (s * s * x * z) + a * (s * y.pow(3)) -
                   (8 * a) * (x * y * z * s) - (a + 1) * (x * x * y * y + (a * a) * (y * y * z * z)));
    Poly f2 = 16 * (x * z * (x - y + z) * (x - a * y + (a * a) * z));
    return new_dynamical_system({f0, f1, f2});
}

// [x^4 - 8a xy^3 : 4x^3 y + 4a y^4 : z^4]: the Mordell Lattes map extended
// to P^2 by powering in the last coordinate.
inline DynamicalSystem lattes_mordell_extended(const Rat& a) {
    DynamicalSystem f = lattes_mordell(a);
    size_t nv = 3;
    std::vector<Poly> coords{f.coords[0].embedded(nv, {0, 1}),
                             f.coords[1].embedded(nv, {0, 1}),
                             Poly::variable(nv, 2).pow(4)};
    return new_dynamical_system(std::move(coords));
}

}  // namespace multspec
