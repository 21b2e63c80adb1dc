#pragma once

// Projective dynamical systems on P^N: validation, iteration, conjugation,
// affine charts, fixed-point ideals, and per-point multiplier characteristic
// polynomials.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational_roots.hpp"

namespace multspec {

class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

class IrrationalSpectrumError : public DomainError {
  public:
    explicit IrrationalSpectrumError(const std::string& msg) : DomainError(msg) {}
};

class InvalidMapError : public std::runtime_error {
  public:
    explicit InvalidMapError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ProjectivePoint {
    std::vector<Rat> coords;  // last nonzero coordinate scaled to 1

    static ProjectivePoint make(std::vector<Rat> c) {
        size_t last = c.size();
        for (size_t i = c.size(); i-- > 0;)
            if (c[i] != 0) {
                last = i;
                break;
            }
        if (last == c.size()) throw std::invalid_argument("projective point with all zeros");
        Rat inv = Rat(1) / c[last];
        for (auto& v : c) v *= inv;
        return ProjectivePoint{std::move(c)};
    }

    size_t last_nonzero() const {
        for (size_t i = coords.size(); i-- > 0;)
            if (coords[i] != 0) return i;
        throw std::logic_error("invalid projective point");
    }

    bool operator==(const ProjectivePoint& o) const { return coords == o.coords; }
    bool operator<(const ProjectivePoint& o) const { return coords < o.coords; }
};

struct DynamicalSystem {
    size_t N = 0;     // ambient dimension
    unsigned d = 0;   // common degree
    std::vector<Poly> coords;  // N+1 homogeneous polynomials in x0..xN

    size_t nvars() const { return N + 1; }
    Ring ring() const { return coord_ring(N + 1); }
};

// Points of period n counted with multiplicity: fixed points of f^n, a map
// of degree d^n, so (d^{n(N+1)} - 1)/(d^n - 1).
inline Int period_count(size_t N, unsigned d, unsigned n) {
    Int e = int_pow(Int(d), n);
    return (int_pow(e, N + 1) - 1) / (e - 1);
}

namespace detail {

// Divides all coordinates by one common scalar (gcd of contents, sign fixed
// by the first coordinate's lex-leading coefficient). Per-coordinate scaling
// would change the map.
inline void normalize_tuple(std::vector<Poly>& coords) {
    Int num_gcd = 0, den_lcm = 1;
    for (auto& p : coords) {
        Rat c = p.content();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return;
    Rat scale(num_gcd, den_lcm);
    scale.canonicalize();
    for (auto& p : coords)
        if (!p.is_zero()) {
            if (p.terms.front().coeff < 0) scale = -scale;
            break;
        }
    for (auto& p : coords)
        for (auto& t : p.terms) t.coeff /= scale;
}

}  // namespace detail

// Validates homogeneity, common degree >= 2, and the morphism condition
// (V(f_0..f_N) = {0}, i.e. every variable nilpotent modulo the ideal).
inline DynamicalSystem new_dynamical_system(std::vector<Poly> polys,
                                            const ResourceCaps& caps = {}) {
    if (polys.empty()) throw InvalidMapError("no coordinates");
    size_t nv = polys[0].nvars();
    if (polys.size() != nv)
        throw InvalidMapError("need N+1 polynomials in N+1 variables");
    unsigned d = 0;
    for (auto& p : polys) {
        if (p.is_zero()) throw InvalidMapError("zero coordinate");
        if (!p.is_homogeneous()) throw InvalidMapError("coordinate is not homogeneous");
        unsigned dp = p.total_degree();
        if (d == 0) d = dp;
        if (dp != d) throw InvalidMapError("coordinates have mismatched degrees");
    }
    if (d < 2) throw InvalidMapError("degree must be at least 2");

    Ideal I{nv, polys, MonomialOrder::lex(nv)};
    auto gb = buchberger(I, caps);
    if (!quotient_dimension(gb, nv))
        throw InvalidMapError("not a morphism: coordinates share a projective zero");

    DynamicalSystem f;
    f.N = nv - 1;
    f.d = d;
    f.coords = std::move(polys);
    detail::normalize_tuple(f.coords);
    return f;
}

inline DynamicalSystem iterate(const DynamicalSystem& f, unsigned n) {
    if (n == 0) throw std::invalid_argument("iterate: n must be at least 1");
    DynamicalSystem g = f;
    for (unsigned k = 1; k < n; ++k) {
        std::vector<Poly> next;
        for (auto& c : f.coords) {
            Poly p = c;
            // substitute all variables simultaneously
            Poly acc(p.nvars());
            for (auto& t : p.terms) {
                Poly piece = Poly::constant(p.nvars(), t.coeff);
                for (size_t v = 0; v < p.nvars(); ++v)
                    if (t.mon.exps[v]) piece *= g.coords[v].pow(t.mon.exps[v]);
                acc += piece;
            }
            next.push_back(std::move(acc));
        }
        detail::normalize_tuple(next);
        g.coords = std::move(next);
        g.d *= f.d;
    }
    return g;
}

// f^m = m^{-1} o f o m for an invertible rational matrix m.
inline DynamicalSystem conjugate(const DynamicalSystem& f,
                                 const std::vector<std::vector<Rat>>& m) {
    size_t nv = f.nvars();
    if (m.size() != nv) throw std::invalid_argument("conjugate: matrix size mismatch");
    auto minv = invert_rational(m);
    if (!minv) throw std::invalid_argument("conjugate: singular matrix");

    std::vector<Poly> mx(nv, Poly(nv));
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = 0; j < nv; ++j)
            if (m[i][j] != 0) mx[i] += m[i][j] * Poly::variable(nv, j);

    std::vector<Poly> fmx;
    for (auto& c : f.coords) {
        Poly acc(nv);
        for (auto& t : c.terms) {
            Poly piece = Poly::constant(nv, t.coeff);
            for (size_t v = 0; v < nv; ++v)
                if (t.mon.exps[v]) piece *= mx[v].pow(t.mon.exps[v]);
            acc += piece;
        }
        fmx.push_back(std::move(acc));
    }

    DynamicalSystem g;
    g.N = f.N;
    g.d = f.d;
    for (size_t i = 0; i < nv; ++i) {
        Poly acc(nv);
        for (size_t j = 0; j < nv; ++j)
            if ((*minv)[i][j] != 0) acc += (*minv)[i][j] * fmx[j];
        g.coords.push_back(std::move(acc));
    }
    detail::normalize_tuple(g.coords);
    return g;
}

// Affine chart at x_j = 1. Polynomials stay in the full ring with x_j
// substituted; chart_vars lists the N active variable indices in order.
struct AffineChart {
    size_t j;
    std::vector<size_t> chart_vars;   // {0..N} \ {j}
    std::vector<Poly> numerators;     // f_i|_{x_j=1} for i != j, in chart_vars order
    Poly denominator;                 // f_j|_{x_j=1}
};

inline AffineChart dehomogenize(const DynamicalSystem& f, size_t j) {
    if (j > f.N) throw std::invalid_argument("dehomogenize: chart index out of range");
    AffineChart c;
    c.j = j;
    c.denominator = f.coords[j].substitute_rat(j, Rat(1));
    for (size_t i = 0; i <= f.N; ++i) {
        if (i == j) continue;
        c.chart_vars.push_back(i);
        c.numerators.push_back(f.coords[i].substitute_rat(j, Rat(1)));
    }
    return c;
}

// Generators { f^n_i|_{x_j=1} - x_i f^n_j|_{x_j=1} : i != j } in the chart
// variables, as an Ideal over the full ring.
inline Ideal fixed_ideal_chart(const DynamicalSystem& f, unsigned n, size_t j) {
    DynamicalSystem g = iterate(f, n);
    AffineChart c = dehomogenize(g, j);
    Ideal I;
    I.nvars = f.nvars();
    I.order = MonomialOrder::lex(f.nvars());
    for (size_t k = 0; k < c.chart_vars.size(); ++k) {
        size_t i = c.chart_vars[k];
        I.generators.push_back(c.numerators[k] -
                               Poly::variable(f.nvars(), i) * c.denominator);
    }
    return I;
}

// Monic degree-N characteristic polynomial gamma(t) of the differential at a
// rational periodic point, returned as dense coefficients in t.
inline UniPoly multiplier_charpoly(const DynamicalSystem& f, const ProjectivePoint& P,
                                   unsigned n, std::optional<size_t> chart = std::nullopt) {
    size_t nv = f.nvars();
    if (P.coords.size() != nv) throw std::invalid_argument("point dimension mismatch");
    size_t j = chart ? *chart : P.last_nonzero();
    if (P.coords[j] == 0) throw std::invalid_argument("chart coordinate vanishes at point");

    DynamicalSystem g = iterate(f, n);

    // periodicity check: g(P) == P projectively
    {
        std::vector<Rat> img;
        for (auto& c : g.coords) img.push_back(c.evaluate(P.coords));
        bool all_zero = true;
        for (auto& v : img) all_zero = all_zero && v == 0;
        if (all_zero || !(ProjectivePoint::make(img) == ProjectivePoint::make(P.coords)))
            throw DomainError("point is not periodic of the given period");
    }

    // rescale so the chart coordinate is 1
    std::vector<Rat> pt = P.coords;
    {
        Rat inv = Rat(1) / pt[j];
        for (auto& v : pt) v *= inv;
    }

    AffineChart c = dehomogenize(g, j);
    size_t N = f.N;
    Rat den = c.denominator.evaluate(pt);
    if (den == 0) throw DomainError("chart denominator vanishes at point");

    // J_{rk} = (d_k f_r * den - f_r * d_k den) / den^2 at the point
    std::vector<std::vector<Rat>> A(N, std::vector<Rat>(N));
    Rat s = den * den;
    for (size_t r = 0; r < N; ++r) {
        Rat fr = c.numerators[r].evaluate(pt);
        for (size_t k = 0; k < N; ++k) {
            size_t var = c.chart_vars[k];
            Rat dfr = c.numerators[r].derivative(var).evaluate(pt);
            Rat dden = c.denominator.derivative(var).evaluate(pt);
            A[r][k] = (dfr * den - fr * dden) / s;
        }
    }

    // det(t I - A) via Bareiss over Q[t]
    Ring rt = make_ring({"t"});
    std::vector<std::vector<Poly>> M(N, std::vector<Poly>(N, Poly(1)));
    for (size_t r = 0; r < N; ++r)
        for (size_t k = 0; k < N; ++k) {
            M[r][k] = Poly::constant(1, -A[r][k]);
            if (r == k) M[r][k] += Poly::variable(1, 0);
        }
    Poly det = N == 0 ? Poly::constant(1, Rat(1)) : det_bareiss(M);
    UniPoly out(N + 1, Rat(0));
    for (auto& t : det.terms) out[t.mon.exps[0]] = t.coeff;
    return out;
}

struct SpectrumEntry {
    ProjectivePoint point;
    UniPoly charpoly;        // monic, degree N, in t
    unsigned multiplicity;
};

using SpectrumList = std::vector<SpectrumEntry>;

namespace detail {

// Back-substitution solver for a zero-dimensional ideal restricted to
// `active` variables (all other variables already specialized to constants
// inside the generators). Returns rational solutions; irrational branches
// are silently dropped (completeness is checked by the caller via
// multiplicity counting).
inline void solve_rational_points(const std::vector<Poly>& gens,
                                  std::vector<size_t> active, size_t nv,
                                  std::vector<Rat>& partial_fixed,
                                  std::vector<std::vector<Rat>>& out,
                                  const ResourceCaps& caps) {
    // partial_fixed holds the full nv-length assignment being built
    bool all_zero = true;
    for (auto& g : gens) all_zero = all_zero && g.is_zero();
    if (active.empty()) {
        if (all_zero) out.push_back(partial_fixed);
        return;
    }
    if (all_zero) return;  // positive-dimensional over the actives; caller detects shortfall
    for (auto& g : gens)
        if (!g.is_zero() && g.is_constant()) return;  // inconsistent

    // lex GB with the last active variable least significant
    MonomialOrder ord;
    for (size_t v = 0; v < nv; ++v) {
        bool is_active = false;
        for (size_t a : active) is_active = is_active || a == v;
        if (!is_active) ord.priority.push_back(v);
    }
    for (size_t a : active) ord.priority.push_back(a);

    Ideal I{nv, {}, ord};
    for (auto& g : gens)
        if (!g.is_zero()) I.generators.push_back(g);
    auto gb = buchberger(I, caps);

    size_t low = active.back();
    const Poly* uni = nullptr;
    for (auto& g : gb.basis) {
        bool only_low = true;
        for (size_t v = 0; v < nv && only_low; ++v)
            if (v != low && g.uses(v)) only_low = false;
        if (only_low && g.uses(low)) {
            uni = &g;
            break;
        }
    }
    if (!uni) return;  // no univariate generator: shortfall detected by caller

    UniPoly u(uni->degree_in(low) + 1, Rat(0));
    for (auto& t : uni->terms) u[t.mon.exps[low]] = t.coeff;
    auto roots = rational_roots(u);

    std::vector<size_t> rest(active.begin(), active.end() - 1);
    for (auto& rt : roots.roots) {
        std::vector<Poly> sub;
        for (auto& g : gb.basis) sub.push_back(g.substitute_rat(low, rt.root));
        partial_fixed[low] = rt.root;
        solve_rational_points(sub, rest, nv, partial_fixed, out, caps);
    }
    partial_fixed[low] = 0;
}

// Local multiplicity of a zero-dimensional ideal at a rational point:
// dim_Q Q[x]/(I + m_P^k) stabilized over k. Variables outside `active` must
// not occur in the generators.
inline size_t local_multiplicity(const std::vector<Poly>& gens,
                                 const std::vector<size_t>& active, size_t nv,
                                 const std::vector<Rat>& point,
                                 const ResourceCaps& caps) {
    // translate the point to the origin
    std::vector<Poly> shifted;
    for (auto& g : gens) {
        Poly s = g;
        for (size_t v : active)
            if (point[v] != 0)
                s = s.substitute(v, Poly::variable(nv, v) + Poly::constant(nv, point[v]));
        shifted.push_back(std::move(s));
    }

    size_t prev = 0;
    for (unsigned k = 1;; ++k) {
        Ideal I{nv, shifted, MonomialOrder::lex(nv)};
        // m^k: all degree-k monomials in the active variables
        std::vector<std::vector<unsigned>> stack;
        std::vector<unsigned> cur(active.size(), 0);
        // enumerate compositions of k into active.size() parts
        std::vector<Monomial> mk;
        std::function<void(size_t, unsigned)> gen = [&](size_t idx, unsigned rem) {
            if (idx + 1 == active.size()) {
                cur[idx] = rem;
                Monomial m(nv);
                for (size_t a = 0; a < active.size(); ++a) m.exps[active[a]] = cur[a];
                mk.push_back(m);
                return;
            }
            for (unsigned e = 0; e <= rem; ++e) {
                cur[idx] = e;
                gen(idx + 1, rem - e);
            }
        };
        gen(0, k);
        for (auto& m : mk) I.generators.push_back(Poly::term(nv, m, Rat(1)));
        // inactive variables are cut to keep the quotient finite
        for (size_t v = 0; v < nv; ++v) {
            bool is_active = false;
            for (size_t a : active) is_active = is_active || a == v;
            if (!is_active) I.generators.push_back(Poly::variable(nv, v));
        }
        auto gb = buchberger(I, caps);
        auto dim = quotient_dimension(gb, nv);
        if (!dim) throw std::logic_error("local multiplicity quotient not finite");
        if (*dim == prev) return prev;
        prev = *dim;
    }
}

}  // namespace detail

// Complete list of rational period-n points with multiplicities and
// charpolys; throws IrrationalSpectrumError when the multiplicity count
// falls short of D_n.
inline SpectrumList rational_periodic_spectrum(const DynamicalSystem& f, unsigned n,
                                               const ResourceCaps& caps = {}) {
    size_t nv = f.nvars();
    SpectrumList out;
    Int total = 0;

    for (size_t j = f.N + 1; j-- > 0;) {
        Ideal fixed = fixed_ideal_chart(f, n, j);

        // stratify: points whose last nonzero coordinate is x_j
        std::vector<Poly> gens;
        for (auto& g : fixed.generators) {
            Poly s = g;
            for (size_t v = j + 1; v < nv; ++v) s = s.substitute_rat(v, Rat(0));
            gens.push_back(std::move(s));
        }
        std::vector<size_t> active;
        for (size_t v = 0; v < j; ++v) active.push_back(v);

        std::vector<std::vector<Rat>> sols;
        std::vector<Rat> partial(nv, Rat(0));
        detail::solve_rational_points(gens, active, nv, partial, sols, caps);

        std::vector<size_t> chart_vars;
        for (size_t v = 0; v < nv; ++v)
            if (v != j) chart_vars.push_back(v);

        for (auto& s : sols) {
            std::vector<Rat> coords(nv, Rat(0));
            for (size_t v : active) coords[v] = s[v];
            coords[j] = 1;
            ProjectivePoint P = ProjectivePoint::make(coords);
            // multiplicity lives in the full chart fixed ideal, not the
            // stratified one
            size_t mult = detail::local_multiplicity(fixed.generators, chart_vars, nv,
                                                     coords, caps);
            out.push_back({P, multiplier_charpoly(f, P, n), static_cast<unsigned>(mult)});
            total += static_cast<unsigned long>(mult);
        }
    }

    if (total != period_count(f.N, f.d, n))
        throw IrrationalSpectrumError(
            "irrational spectrum: rational points account for " + total.get_str() +
            " of " + period_count(f.N, f.d, n).get_str() + " periodic points");
    std::sort(out.begin(), out.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.point < b.point; });
    return out;
}

}  // namespace multspec
