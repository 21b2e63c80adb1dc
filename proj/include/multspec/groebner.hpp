#pragma once

// Buchberger's algorithm over Q with lexicographic orders, multivariate
// division, elimination ideals, and ideal membership. The engine permutes
// variables so the active order becomes the ambient lex order; leading terms
// are then always the front of the sorted term vector.

#include <chrono>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace multspec {

enum class ResourceKind { pairs, coeff_bits, time };

class ResourceLimitError : public std::runtime_error {
  public:
    ResourceKind kind;
    ResourceLimitError(ResourceKind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

struct ResourceCaps {
    size_t max_pairs = 2000000;
    size_t max_coeff_bits = 1u << 22;
    double time_limit_seconds = 0;  // 0 means unlimited
};

struct Ideal {
    size_t nvars = 0;
    std::vector<Poly> generators;
    MonomialOrder order;
};

struct GroebnerBasis {
    std::vector<Poly> basis;
    MonomialOrder order;
    bool reduced = false;
};

namespace detail {

// Content-normalize with the sign convention tied to the front (lex-leading)
// term; assumes the engine's permuted world where front = leading.
inline Poly primitive_front(const Poly& p) {
    if (p.is_zero()) return p;
    Rat c = p.content();
    if (p.terms.front().coeff < 0) c = -c;
    Poly r(p);
    for (auto& t : r.terms) t.coeff /= c;
    return r;
}

// Full fraction-free reduction modulo `basis`, permuted world. The result is
// primitive and no term is divisible by any basis leading monomial. The
// return value is a positive scalar multiple of the true remainder.
inline Poly reduce_full(Poly p, const std::vector<Poly>& basis) {
    size_t checked = 0;
    while (checked < p.terms.size()) {
        const Monomial& m = p.terms[checked].mon;
        const Poly* red = nullptr;
        for (auto& g : basis)
            if (g.terms.front().mon.divides(m)) {
                red = &g;
                break;
            }
        if (!red) {
            ++checked;
            continue;
        }
        Monomial q = red->terms.front().mon.quotient_of(m);
        Rat c = p.terms[checked].coeff;
        Rat lg = red->terms.front().coeff;
        p = p.scaled(lg) - red->mul_term(q, c);
        p = primitive_front(p);
        // terms before `checked` were irreducible and only got rescaled;
        // the cancelled slot now holds strictly smaller monomials
    }
    return p;
}

struct PairKey {
    unsigned lcm_deg;
    Monomial lcm;
    size_t i, j;

    bool operator<(const PairKey& o) const {
        if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
        int c = lex_compare(lcm, o.lcm);
        if (c != 0) return c < 0;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

// Buchberger on already-permuted, primitive, nonzero generators.
inline std::vector<Poly> buchberger_lex(std::vector<Poly> basis, const ResourceCaps& caps) {
    auto start = std::chrono::steady_clock::now();
    auto check_time = [&] {
        if (caps.time_limit_seconds <= 0) return;
        double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (el > caps.time_limit_seconds)
            throw ResourceLimitError(ResourceKind::time, "groebner: time limit exceeded");
    };

    std::set<PairKey> pairs;
    std::set<std::pair<size_t, size_t>> done;
    auto add_pair = [&](size_t i, size_t j) {
        const Monomial& a = basis[i].terms.front().mon;
        const Monomial& b = basis[j].terms.front().mon;
        Monomial l = Monomial::lcm(a, b);
        pairs.insert({l.degree(), std::move(l), i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) add_pair(i, j);

    size_t processed = 0;
    while (!pairs.empty()) {
        check_time();
        if (++processed > caps.max_pairs)
            throw ResourceLimitError(ResourceKind::pairs, "groebner: S-pair cap exceeded");
        PairKey pk = *pairs.begin();
        pairs.erase(pairs.begin());
        done.insert({pk.i, pk.j});

        const Monomial& li = basis[pk.i].terms.front().mon;
        const Monomial& lj = basis[pk.j].terms.front().mon;
        if (Monomial::coprime(li, lj)) continue;  // first criterion
        bool chained = false;  // second (chain) criterion
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!basis[k].terms.front().mon.divides(pk.lcm)) continue;
            auto key = [](size_t a, size_t b) {
                return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
            };
            if (done.count(key(pk.i, k)) && done.count(key(pk.j, k))) chained = true;
        }
        if (chained) continue;

        Poly s = basis[pk.i].mul_term(li.quotient_of(pk.lcm), basis[pk.j].terms.front().coeff) -
                 basis[pk.j].mul_term(lj.quotient_of(pk.lcm), basis[pk.i].terms.front().coeff);
        Poly r = reduce_full(primitive_front(s), basis);
        if (r.is_zero()) continue;
        if (r.max_coeff_bits() > caps.max_coeff_bits)
            throw ResourceLimitError(ResourceKind::coeff_bits,
                                     "groebner: coefficient size cap exceeded");
        size_t t = basis.size();
        basis.push_back(std::move(r));
        for (size_t i = 0; i < t; ++i) add_pair(i, t);
    }
    return basis;
}

// Minimal then reduced basis, monic leading coefficients, sorted by leading
// monomial ascending. Permuted world.
inline std::vector<Poly> interreduce_lex(std::vector<Poly> basis) {
    std::vector<Poly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = basis[i].terms.front().mon;
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = basis[j].terms.front().mon;
            if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Poly> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = others.empty() ? minimal[i] : reduce_full(minimal[i], others);
        out.push_back(r.scaled(Rat(1) / r.terms.front().coeff));
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        return lex_compare(a.terms.front().mon, b.terms.front().mon) < 0;
    });
    return out;
}

// Permutation sending the order's k-th priority variable to slot k.
inline std::vector<size_t> order_permutation(const MonomialOrder& ord, size_t nvars) {
    std::vector<size_t> where(nvars);
    if (ord.priority.empty()) {
        for (size_t i = 0; i < nvars; ++i) where[i] = i;
        return where;
    }
    if (ord.priority.size() != nvars)
        throw std::invalid_argument("order priority does not cover all variables");
    for (size_t k = 0; k < nvars; ++k) where[ord.priority[k]] = k;
    return where;
}

inline std::vector<size_t> inverse_permutation(const std::vector<size_t>& where) {
    std::vector<size_t> inv(where.size());
    for (size_t i = 0; i < where.size(); ++i) inv[where[i]] = i;
    return inv;
}

}  // namespace detail

// Remainder of multivariate division of p by `basis` under `order`; genuine
// remainder semantics (no overall rescaling).
inline Poly normal_form(const Poly& p, const std::vector<Poly>& basis,
                        const MonomialOrder& order) {
    size_t nv = p.nvars();
    for (auto& g : basis)
        if (g.nvars() != nv) throw std::invalid_argument("normal_form: ambient mismatch");
    auto where = detail::order_permutation(order, nv);
    auto inv = detail::inverse_permutation(where);
    Poly r = p.embedded(nv, where);
    std::vector<Poly> bs;
    for (auto& g : basis)
        if (!g.is_zero()) bs.push_back(g.embedded(nv, where));

    size_t checked = 0;
    while (checked < r.terms.size()) {
        const Monomial& m = r.terms[checked].mon;
        const Poly* red = nullptr;
        for (auto& g : bs)
            if (g.terms.front().mon.divides(m)) {
                red = &g;
                break;
            }
        if (!red) {
            ++checked;
            continue;
        }
        Monomial q = red->terms.front().mon.quotient_of(m);
        Rat c = r.terms[checked].coeff / red->terms.front().coeff;
        r -= red->mul_term(q, c);
    }
    return r.embedded(nv, inv);
}

inline GroebnerBasis buchberger(const Ideal& ideal, const ResourceCaps& caps = {}) {
    size_t nv = ideal.nvars;
    auto where = detail::order_permutation(ideal.order, nv);
    auto inv = detail::inverse_permutation(where);

    std::vector<Poly> gens;
    for (auto& g : ideal.generators) {
        if (g.nvars() != nv) throw std::invalid_argument("buchberger: ambient mismatch");
        if (g.is_zero()) continue;
        gens.push_back(detail::primitive_front(g.embedded(nv, where)));
    }
    GroebnerBasis out;
    out.order = ideal.order;
    out.reduced = true;
    if (gens.empty()) return out;

    auto gb = detail::interreduce_lex(detail::buchberger_lex(std::move(gens), caps));
    for (auto& g : gb) out.basis.push_back(g.embedded(nv, inv));
    return out;
}

// Basis elements using only the kept variables. `keep[v]` marks variable v
// as kept; the kept set must be a suffix of the order's priority.
inline std::vector<Poly> elimination_ideal(const GroebnerBasis& gb,
                                           const std::vector<bool>& keep) {
    size_t nv = keep.size();
    const auto& pr = gb.order.priority;
    if (pr.size() != nv)
        throw std::invalid_argument("elimination_ideal: order must list all variables");
    size_t kept = 0;
    for (bool k : keep) kept += k;
    for (size_t i = nv - kept; i < nv; ++i)
        if (!keep[pr[i]])
            throw std::invalid_argument("elimination_ideal: kept set is not an order suffix");

    std::vector<Poly> out;
    for (auto& g : gb.basis) {
        bool ok = true;
        for (size_t v = 0; v < nv && ok; ++v)
            if (!keep[v] && g.uses(v)) ok = false;
        if (ok) out.push_back(g);
    }
    return out;
}

inline bool ideal_membership(const Poly& p, const GroebnerBasis& gb) {
    return normal_form(p, gb.basis, gb.order).is_zero();
}

// Dimension over Q of the quotient ring by a zero-dimensional ideal: the
// number of standard monomials below the leading-term staircase. Returns
// nullopt when the quotient is infinite dimensional.
inline std::optional<size_t> quotient_dimension(const GroebnerBasis& gb, size_t nvars) {
    std::vector<Monomial> lts;
    for (auto& g : gb.basis) lts.push_back(g.leading_term(gb.order).mon);
    // each variable must appear as a pure power among the leading terms
    std::vector<unsigned> bound(nvars, 0);
    for (size_t v = 0; v < nvars; ++v) {
        bool found = false;
        for (auto& m : lts) {
            bool pure = m.exps[v] > 0;
            for (size_t u = 0; u < nvars && pure; ++u)
                if (u != v && m.exps[u]) pure = false;
            if (pure) {
                found = true;
                if (!bound[v] || m.exps[v] < bound[v]) bound[v] = m.exps[v];
            }
        }
        if (!found) {
            for (auto& m : lts)
                if (m.is_one()) return 0;  // unit ideal
            return std::nullopt;
        }
    }
    size_t count = 0;
    // enumerate exponent boxes below the per-variable bounds, skip staircase
    std::vector<unsigned> e(nvars, 0);
    for (;;) {
        Monomial m(nvars);
        m.exps.assign(e.begin(), e.end());
        bool standard = true;
        for (auto& lt : lts)
            if (lt.divides(m)) {
                standard = false;
                break;
            }
        if (standard) ++count;
        size_t v = 0;
        while (v < nvars) {
            if (++e[v] < bound[v]) break;
            e[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    return count;
}

// Standard monomial basis of the quotient by a zero-dimensional ideal over
// the `active` variables (all basis elements must involve only those).
// Returns nullopt when the quotient is not finite dimensional; the unit
// ideal yields an empty basis.
inline std::optional<std::vector<Monomial>> quotient_monomial_basis(
    const GroebnerBasis& gb, const std::vector<size_t>& active, size_t nvars) {
    std::vector<Monomial> lts;
    for (auto& g : gb.basis) {
        lts.push_back(g.leading_term(gb.order).mon);
        if (lts.back().is_one()) return std::vector<Monomial>{};
    }
    std::vector<unsigned> bound(active.size(), 0);
    for (size_t a = 0; a < active.size(); ++a) {
        size_t v = active[a];
        bool found = false;
        for (auto& m : lts) {
            bool pure = m.exps[v] > 0;
            for (size_t u = 0; u < nvars && pure; ++u)
                if (u != v && m.exps[u]) pure = false;
            if (pure) {
                found = true;
                if (!bound[a] || m.exps[v] < bound[a]) bound[a] = m.exps[v];
            }
        }
        if (!found) return std::nullopt;
    }
    std::vector<Monomial> basis;
    std::vector<unsigned> e(active.size(), 0);
    for (;;) {
        Monomial m(nvars);
        for (size_t a = 0; a < active.size(); ++a) m.exps[active[a]] = e[a];
        bool standard = true;
        for (auto& lt : lts)
            if (lt.divides(m)) {
                standard = false;
                break;
            }
        if (standard) basis.push_back(m);
        size_t a = 0;
        while (a < active.size()) {
            if (++e[a] < bound[a]) break;
            e[a] = 0;
            ++a;
        }
        if (a == active.size()) break;
    }
    std::sort(basis.begin(), basis.end(),
              [](const Monomial& x, const Monomial& y) { return lex_compare(x, y) < 0; });
    return basis;
}

}  // namespace multspec
