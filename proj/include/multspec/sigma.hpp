#pragma once

// Multiplier invariants: Sigma_n(f) by per-chart Groebner elimination, in
// plain (per-chart, duplicate-free) and chow (multiplicity-preserving)
// modes, plus the sigma_{i,j} table extraction, the dimension-1 resultant
// shortcut, and isospectral scans over parametric families.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "projdyn.hpp"
#include "resultant.hpp"

namespace multspec {

enum class SigmaMode { plain, chow };

// Engine choices: `groebner` follows the elimination algorithm verbatim;
// `multop` computes each chart factor from multiplication operators on the
// finite quotient algebra (charpoly of the operator pencil in chow mode,
// minimal polynomial in plain mode). Both produce identical results; multop
// is the fast default.
enum class SigmaEngine { multop, groebner };

inline std::string to_string(SigmaMode m) { return m == SigmaMode::plain ? "plain" : "chow"; }

// Ring for Sigma polynomials: w then t.
inline Ring sigma_ring() { return make_ring({"w", "t"}); }

struct SigmaPolynomial {
    Poly poly;     // in sigma_ring(), monic in w
    unsigned n = 1;
    size_t N = 0;
    unsigned d = 0;
    Int Dn;
    SigmaMode mode = SigmaMode::chow;
};

struct SigmaTable {
    std::map<std::pair<unsigned long, unsigned long>, Rat> entries;  // nonzero sigma_{i,j}
    unsigned n = 1;
    size_t N = 0;
    unsigned d = 0;
    Int Dn;
    unsigned long deg_w = 0;  // extraction degree (equals Dn in chow mode)
    SigmaMode mode = SigmaMode::chow;
    bool degree_deficient = false;

    Rat sigma(unsigned long i, unsigned long j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? Rat(0) : it->second;
    }
};

namespace detail {

// w - gamma(t) in sigma_ring for a dense charpoly gamma.
inline Poly w_minus_charpoly(const UniPoly& gamma) {
    Poly p = Poly::variable(2, 0);
    for (size_t k = 0; k < gamma.size(); ++k)
        p -= Poly::term(2, Monomial({0, static_cast<unsigned>(k)}), gamma[k]);
    return p;
}

// Normalizes a (w,t)-polynomial to be monic in w; the leading w-coefficient
// must be constant in t.
inline Poly monic_in_w(const Poly& p) {
    unsigned dw = p.degree_in(0);
    Poly lead = p.coeff_of(0, dw);
    if (!lead.is_constant())
        throw DomainError("sigma factor has non-constant leading w-coefficient");
    return p.scaled(Rat(1) / lead.constant_value());
}

// Chart factor from multiplication operators on A = Q[x]/X: the values of
// any h on the stratum scheme, with multiplicity, are the eigenvalues of
// multiplication by h. Chow factor: det(w M_den - M_num(t)); plain factor:
// minimal polynomial of M_den^{-1} M_num(t) over Q(t).
inline Poly chart_factor_multop(const std::vector<Poly>& gens,
                                const std::vector<size_t>& active, size_t nv,
                                size_t it_idx, const Poly& g_num, const Poly& g_den,
                                SigmaMode mode, const ResourceCaps& caps) {
    MonomialOrder ord = MonomialOrder::lex(nv);
    Ideal I{nv, gens, ord};
    auto gb = buchberger(I, caps);
    auto basis_opt = quotient_monomial_basis(gb, active, nv);
    if (!basis_opt) throw DomainError("chart stratum is not zero-dimensional");
    const auto& B = *basis_opt;
    size_t D = B.size();
    if (D == 0) return Poly::constant(2, Rat(1));  // empty stratum

    std::map<std::vector<unsigned>, size_t> index;
    for (size_t i = 0; i < D; ++i) index[B[i].exps] = i;

    auto mult_matrix = [&](const Poly& c) {
        std::vector<std::vector<Rat>> M(D, std::vector<Rat>(D, Rat(0)));
        for (size_t col = 0; col < D; ++col) {
            Poly nf = normal_form(Poly::term(nv, B[col], Rat(1)) * c, gb.basis, ord);
            for (auto& tm : nf.terms) {
                auto itp = index.find(tm.mon.exps);
                if (itp == index.end())
                    throw std::logic_error("normal form left the standard basis");
                M[itp->second][col] = tm.coeff;
            }
        }
        return M;
    };

    auto M_den = mult_matrix(g_den);
    unsigned tdeg = g_num.degree_in(it_idx);
    std::vector<std::vector<std::vector<Rat>>> M_num_k;
    for (unsigned k = 0; k <= tdeg; ++k) M_num_k.push_back(mult_matrix(g_num.coeff_of(it_idx, k)));

    if (mode == SigmaMode::chow) {
        // det(w M_den - M_num(t)) over Q[w,t]
        std::vector<std::vector<Poly>> E(D, std::vector<Poly>(D, Poly(2)));
        for (size_t i = 0; i < D; ++i)
            for (size_t j = 0; j < D; ++j) {
                Poly e = Poly::term(2, Monomial({1, 0}), M_den[i][j]);
                for (unsigned k = 0; k <= tdeg; ++k)
                    e -= Poly::term(2, Monomial({0, k}), M_num_k[k][i][j]);
                E[i][j] = std::move(e);
            }
        Poly det = det_bareiss(E);
        Poly lead = det.coeff_of(0, static_cast<unsigned>(D));
        if (!lead.is_constant() || lead.is_zero())
            throw DomainError("chart charpoly denominator operator is singular");
        return detail::monic_in_w(det);
    }

    // plain: minimal polynomial of M = M_den^{-1} M_num(t)
    auto inv = invert_rational(M_den);
    if (!inv) throw DomainError("chart charpoly denominator operator is singular");
    // M entries in Q[t]
    std::vector<std::vector<UniPoly>> M(D, std::vector<UniPoly>(D));
    for (size_t i = 0; i < D; ++i)
        for (size_t j = 0; j < D; ++j) {
            UniPoly e;
            for (unsigned k = 0; k <= tdeg; ++k) {
                Rat v(0);
                for (size_t l = 0; l < D; ++l) v += (*inv)[i][l] * M_num_k[k][l][j];
                if (v != 0) {
                    if (e.size() < k + 1) e.resize(k + 1, Rat(0));
                    e[k] = v;
                }
            }
            uni_trim(e);
            M[i][j] = std::move(e);
        }

    // Krylov powers of M
    std::vector<std::vector<std::vector<UniPoly>>> pw;
    std::vector<std::vector<UniPoly>> ident(D, std::vector<UniPoly>(D));
    for (size_t i = 0; i < D; ++i) ident[i][i] = uni_const(Rat(1));
    pw.push_back(ident);
    for (size_t s = 1; s <= D; ++s) {
        std::vector<std::vector<UniPoly>> nxt(D, std::vector<UniPoly>(D));
        for (size_t i = 0; i < D; ++i)
            for (size_t j = 0; j < D; ++j) {
                UniPoly acc;
                for (size_t l = 0; l < D; ++l)
                    acc = uni_add(acc, uni_mul(pw[s - 1][i][l], M[l][j]));
                nxt[i][j] = std::move(acc);
            }
        pw.push_back(std::move(nxt));
    }

    RatFunc zero, one(Rat(1));
    for (size_t s = 1; s <= D; ++s) {
        std::vector<std::vector<RatFunc>> A(D * D, std::vector<RatFunc>(s, zero));
        std::vector<RatFunc> b(D * D, zero);
        for (size_t i = 0; i < D; ++i)
            for (size_t j = 0; j < D; ++j) {
                for (size_t k = 0; k < s; ++k) A[i * D + j][k] = RatFunc(pw[k][i][j]);
                b[i * D + j] = RatFunc(pw[s][i][j]);
            }
        auto sol = solve_linear_field<RatFunc>(std::move(A), std::move(b), zero, one);
        if (!sol) continue;
        Poly m = Poly::term(2, Monomial({static_cast<unsigned>(s), 0}), Rat(1));
        for (size_t k = 0; k < s; ++k) {
            const RatFunc& c = (*sol)[k];
            if (c.is_zero()) continue;
            if (uni_degree(c.den) != 0)
                throw DomainError("chart minimal polynomial has non-polynomial coefficients");
            for (size_t q = 0; q < c.num.size(); ++q)
                if (c.num[q] != 0)
                    m -= Poly::term(2, Monomial({static_cast<unsigned>(k),
                                                 static_cast<unsigned>(q)}),
                                    c.num[q] / c.den[0]);
        }
        return m;
    }
    throw std::logic_error("minimal polynomial search failed");
}

}  // namespace detail

inline SigmaPolynomial sigma_poly(const DynamicalSystem& f, unsigned n, SigmaMode mode,
                                  const ResourceCaps& caps = {},
                                  SigmaEngine engine = SigmaEngine::multop) {
    size_t N = f.N;
    size_t nx = N + 1;
    size_t nu = mode == SigmaMode::chow ? N + 1 : 0;
    size_t nv = nx + nu + 2;  // x..., u..., w, t
    size_t iw = nx + nu, it = nx + nu + 1;

    DynamicalSystem g = iterate(f, n);
    Poly acc = Poly::constant(2, Rat(1));

    std::vector<size_t> embed_map(nx);
    for (size_t i = 0; i < nx; ++i) embed_map[i] = i;

    for (size_t j = nx; j-- > 0;) {
        AffineChart chart = dehomogenize(g, j);
        Poly den = chart.denominator.embedded(nv, embed_map);
        std::vector<Poly> num;
        for (auto& p : chart.numerators) num.push_back(p.embedded(nv, embed_map));

        // stratify: points whose last nonzero coordinate is x_j
        auto strat = [&](Poly p) {
            for (size_t v = j + 1; v < nx; ++v) p = p.substitute_rat(v, Rat(0));
            return p;
        };
        Poly den_s = strat(den);
        std::vector<Poly> num_s;
        for (auto& p : num) num_s.push_back(strat(p));

        // A_rk = d_k f_r * den - f_r * d_k den;  J = A / den^2. The chart map
        // is specialized to the stratum before differentiating, so columns for
        // the zeroed trailing variables vanish identically.
        std::vector<std::vector<Poly>> A(N, std::vector<Poly>(N, Poly(nv)));
        for (size_t r = 0; r < N; ++r)
            for (size_t k = 0; k < N; ++k) {
                size_t var = chart.chart_vars[k];
                A[r][k] = num_s[r].derivative(var) * den_s - num_s[r] * den_s.derivative(var);
            }
        Poly s_s = den_s * den_s;

        // fixed ideal generators on the stratum
        std::vector<Poly> gens;
        for (size_t k = 0; k < chart.chart_vars.size(); ++k) {
            size_t i = chart.chart_vars[k];
            Poly xi = i > j ? Poly(nv) : Poly::variable(nv, i);
            Poly gen = num_s[k] - xi * den_s;
            if (!gen.is_zero()) gens.push_back(std::move(gen));
        }

        Poly factor(2);
        if (den_s.is_zero()) {
            // degenerate chart: symbolic charpoly denominator vanishes on the
            // stratum; fall back to per-point multipliers
            bool unit = false;
            for (auto& gp : gens)
                if (gp.is_constant() && !gp.is_zero()) unit = true;
            if (!unit) {
                Ideal I{nv, gens, MonomialOrder::lex(nv)};
                auto gb = buchberger(I, caps);
                unit = gb.basis.size() == 1 && gb.basis[0].is_constant();
            }
            if (unit) {
                factor = Poly::constant(2, Rat(1));
            } else {
                std::vector<size_t> active;
                for (size_t v = 0; v < j; ++v) active.push_back(v);
                std::vector<std::vector<Rat>> sols;
                std::vector<Rat> partial(nv, Rat(0));
                detail::solve_rational_points(gens, active, nv, partial, sols, caps);
                if (sols.empty())
                    throw DomainError("degenerate chart without rational stratum points");

                // multiplicities live in the unstratified chart fixed ideal
                std::vector<Poly> full_gens;
                std::vector<size_t> chart_active;
                for (size_t k = 0; k < chart.chart_vars.size(); ++k) {
                    size_t i = chart.chart_vars[k];
                    full_gens.push_back(num[k] - Poly::variable(nv, i) * den);
                    chart_active.push_back(i);
                }
                factor = Poly::constant(2, Rat(1));
                std::vector<UniPoly> seen;
                for (auto& sol : sols) {
                    std::vector<Rat> coords(nx, Rat(0));
                    for (size_t v : active) coords[v] = sol[v];
                    coords[j] = 1;
                    ProjectivePoint P = ProjectivePoint::make(coords);
                    UniPoly gamma = multiplier_charpoly(f, P, n);
                    std::vector<Rat> cpt(nv, Rat(0));
                    for (size_t v = 0; v < nx; ++v) cpt[v] = coords[v];
                    if (mode == SigmaMode::chow) {
                        size_t mult = detail::local_multiplicity(full_gens, chart_active,
                                                                 nv, cpt, caps);
                        factor *= detail::w_minus_charpoly(gamma).pow(
                            static_cast<unsigned>(mult));
                    } else {
                        bool dup = false;
                        for (auto& sgm : seen) dup = dup || sgm == gamma;
                        if (!dup) {
                            seen.push_back(gamma);
                            factor *= detail::w_minus_charpoly(gamma);
                        }
                    }
                }
            }
        } else {
            // symbolic charpoly: g = g_num / g_den with g_num = det(s t I - A),
            // g_den = s^N, all stratified
            Poly g_num;
            if (N == 0) {
                g_num = Poly::constant(nv, Rat(1));
            } else {
                std::vector<std::vector<Poly>> M(N, std::vector<Poly>(N, Poly(nv)));
                for (size_t r = 0; r < N; ++r)
                    for (size_t k = 0; k < N; ++k) {
                        M[r][k] = -A[r][k];
                        if (r == k) M[r][k] += s_s * Poly::variable(nv, it);
                    }
                g_num = det_bareiss(M);
            }
            Poly g_den = s_s.pow(static_cast<unsigned>(N));

            if (engine == SigmaEngine::multop) {
                std::vector<size_t> active;
                for (size_t v = 0; v < j; ++v) active.push_back(v);
                factor = detail::chart_factor_multop(gens, active, nv, it, g_num, g_den,
                                                     mode, caps);
                acc *= factor;
                continue;
            }

            Poly w = Poly::variable(nv, iw);

            std::vector<Poly> ideal_gens = gens;
            if (mode == SigmaMode::chow) {
                Poly chow_sum(nv);
                for (size_t k = 0; k < N; ++k) {
                    size_t i = chart.chart_vars[k];
                    if (i > j) continue;  // stratified away
                    chow_sum += Poly::variable(nv, nx + 1 + k) * Poly::variable(nv, i);
                }
                ideal_gens.push_back(Poly::variable(nv, nx) * (w * g_den - g_num) +
                                     g_den * chow_sum);
            } else {
                ideal_gens.push_back(w * g_den - g_num);
            }

            MonomialOrder ord;  // x > u > w > t
            for (size_t v = 0; v < nv; ++v) ord.priority.push_back(v);
            Ideal I{nv, ideal_gens, ord};
            auto gb = buchberger(I, caps);

            std::vector<bool> keep(nv, false);
            for (size_t v = nx; v < nv; ++v) keep[v] = true;  // u,w,t (or just w,t)
            auto elim = elimination_ideal(gb, keep);
            if (elim.size() != 1)
                throw DomainError("chart " + std::to_string(j) +
                                  ": elimination ideal has " + std::to_string(elim.size()) +
                                  " generators, expected 1");
            Poly G = elim[0];
            if (mode == SigmaMode::chow) {
                G = G.substitute_rat(nx, Rat(1));  // u_0 = 1
                for (size_t k = 1; k <= N; ++k) G = G.substitute_rat(nx + k, Rat(0));
            }
            // project to (w,t)
            Poly f2(2);
            for (auto& tm : G.terms) {
                for (size_t v = 0; v < nx + nu; ++v)
                    if (tm.mon.exps[v])
                        throw DomainError("elimination generator uses an eliminated variable");
                f2 += Poly::term(2, Monomial({tm.mon.exps[iw], tm.mon.exps[it]}), tm.coeff);
            }
            factor = f2.is_zero() ? Poly::constant(2, Rat(1)) : detail::monic_in_w(f2);
        }

        acc *= factor;
    }

    SigmaPolynomial out;
    out.poly = detail::monic_in_w(acc);
    out.n = n;
    out.N = N;
    out.d = f.d;
    out.Dn = period_count(N, f.d, n);
    out.mode = mode;

    // structural invariants
    unsigned dw = out.poly.degree_in(0);
    if (mode == SigmaMode::chow && Int(dw) != out.Dn)
        throw DomainError("chow Sigma has w-degree " + std::to_string(dw) +
                          ", expected D_n = " + out.Dn.get_str());
    for (auto& tm : out.poly.terms) {
        unsigned long i = dw - tm.mon.exps[0];
        if (tm.mon.exps[1] > N * i)
            throw DomainError("Sigma violates the t-degree bound");
    }
    return out;
}

// Direct product over a complete rational spectrum; the oracle counterpart
// of sigma_poly.
inline SigmaPolynomial sigma_from_spectrum(const SpectrumList& sp, size_t N, unsigned d,
                                           unsigned n, SigmaMode mode) {
    Poly acc = Poly::constant(2, Rat(1));
    if (mode == SigmaMode::chow) {
        for (auto& e : sp)
            acc *= detail::w_minus_charpoly(e.charpoly).pow(e.multiplicity);
    } else {
        // per-chart duplicate collapse
        std::map<size_t, std::vector<UniPoly>> seen;
        for (auto& e : sp) {
            size_t chart = e.point.last_nonzero();
            auto& v = seen[chart];
            bool dup = false;
            for (auto& gmm : v) dup = dup || gmm == e.charpoly;
            if (!dup) {
                v.push_back(e.charpoly);
                acc *= detail::w_minus_charpoly(e.charpoly);
            }
        }
    }
    SigmaPolynomial out;
    out.poly = acc;
    out.n = n;
    out.N = N;
    out.d = d;
    out.Dn = period_count(N, d, n);
    out.mode = mode;
    return out;
}

inline SigmaTable extract_sigmas(const SigmaPolynomial& S) {
    SigmaTable tab;
    tab.n = S.n;
    tab.N = S.N;
    tab.d = S.d;
    tab.Dn = S.Dn;
    tab.mode = S.mode;

    unsigned dw = S.poly.degree_in(0);
    if (S.mode == SigmaMode::chow) {
        if (Int(dw) != S.Dn) throw DomainError("chow sigma table: w-degree below D_n");
    } else if (Int(dw) < S.Dn) {
        tab.degree_deficient = true;
    }
    tab.deg_w = dw;

    for (auto& tm : S.poly.terms) {
        unsigned long i = dw - tm.mon.exps[0];
        unsigned long tdeg = tm.mon.exps[1];
        if (tdeg > S.N * i) throw DomainError("sigma table: t-degree bound violated");
        unsigned long j = S.N * i - tdeg;
        Rat v = ((i + j) % 2 == 0) ? tm.coeff : -tm.coeff;
        tab.entries[{i, j}] = v;
    }
    return tab;
}

// N = 1 shortcut: Sigma_n via the Poisson product form of the resultant,
// Res_z(Phi, (w - t) G^2 + (F'G - F G')) with Phi = F - z G the fixed-point
// polynomial, plus the factor for a fixed point at infinity.
inline SigmaPolynomial sigma_dim1_resultant(const DynamicalSystem& f, unsigned n,
                                            const ResourceCaps& caps = {}) {
    if (f.N != 1) throw std::invalid_argument("sigma_dim1_resultant requires N = 1");
    DynamicalSystem g = iterate(f, n);
    AffineChart chart = dehomogenize(g, 1);  // z = x0
    const Poly& F = chart.numerators[0];
    const Poly& G = chart.denominator;
    Poly z = Poly::variable(2, 0);
    Poly phi = F - z * G;

    Poly dF = F.derivative(0), dG = G.derivative(0);
    Poly wronsk = dF * G - F * dG;
    Poly G2 = G * G;

    // coefficients in z of phi and H = (w - t) G^2 + wronsk, entries in (w,t)
    // ring; variable layout for intermediate work: (z=x0, x1, w, t) -> use a
    // 4-var ring then project
    size_t nv = 4, iw = 2, it = 3;
    std::vector<size_t> em{0, 1};
    Poly phi4 = phi.embedded(nv, em);
    Poly H4 = (Poly::variable(nv, iw) - Poly::variable(nv, it)) * G2.embedded(nv, em) +
              wronsk.embedded(nv, em);

    auto coeffs_in_z = [&](const Poly& p) {
        std::vector<Poly> out(p.degree_in(0) + 1, Poly(nv));
        for (unsigned k = 0; k <= p.degree_in(0); ++k) out[k] = p.coeff_of(0, k);
        return out;
    };
    Poly res = resultant_univar(coeffs_in_z(phi4), coeffs_in_z(H4), nv);

    Poly acc(2);
    for (auto& tm : res.terms)
        acc += Poly::term(2, Monomial({tm.mon.exps[iw], tm.mon.exps[it]}), tm.coeff);
    if (acc.is_zero()) acc = Poly::constant(2, Rat(1));

    // fixed point at infinity: multiplicity d^n + 1 - deg(phi)
    unsigned deg_phi = phi.is_zero() ? 0 : phi.degree_in(0);
    unsigned full = g.d + 1;
    if (deg_phi < full) {
        ProjectivePoint inf = ProjectivePoint::make({Rat(1), Rat(0)});
        UniPoly gamma = multiplier_charpoly(f, inf, n);
        acc *= detail::w_minus_charpoly(gamma).pow(full - deg_phi);
    }

    SigmaPolynomial out;
    out.poly = detail::monic_in_w(acc);
    out.n = n;
    out.N = 1;
    out.d = f.d;
    out.Dn = period_count(1, f.d, n);
    out.mode = SigmaMode::chow;

    if (Int(out.poly.degree_in(0)) != out.Dn)
        throw DomainError("dim-1 resultant sigma has wrong w-degree");
    (void)caps;
    return out;
}

struct ScanSample {
    Rat parameter;
    std::optional<SigmaPolynomial> sigma;
    std::string error;  // nonempty when the builder or pipeline failed
};

struct ScanReport {
    std::vector<ScanSample> samples;
    bool all_agree = false;
    std::optional<Poly> common;  // set when all samples succeeded and agree
};

inline ScanReport isospectral_scan(
    const std::function<DynamicalSystem(const Rat&)>& builder,
    const std::vector<Rat>& samples, unsigned n, SigmaMode mode,
    const ResourceCaps& caps = {}) {
    ScanReport rep;
    for (auto& a : samples) {
        ScanSample s;
        s.parameter = a;
        try {
            DynamicalSystem f = builder(a);
            s.sigma = sigma_poly(f, n, mode, caps);
        } catch (const std::exception& e) {
            s.error = e.what();
        }
        rep.samples.push_back(std::move(s));
    }
    rep.all_agree = true;
    for (auto& s : rep.samples) {
        if (!s.sigma) {
            rep.all_agree = false;
            break;
        }
        if (!rep.common) rep.common = s.sigma->poly;
        if (!(s.sigma->poly == *rep.common)) rep.all_agree = false;
    }
    if (!rep.all_agree) rep.common.reset();
    return rep;
}

}  // namespace multspec
