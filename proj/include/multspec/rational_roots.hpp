#pragma once

// Rational roots of univariate polynomials over Q, with multiplicities.
// Candidates u/v come from divisors of the trailing and leading integer
// coefficients; divisor enumeration factors via trial division with a
// Pollard rho fallback.

#include <algorithm>
#include <map>
#include <vector>

#include "unipoly.hpp"

namespace multspec {

// Synthetic division by (x - r); returns the quotient, throws if r is not
// actually a root.
inline UniPoly uni_deflate(const UniPoly& p, const Rat& r) {
    if (p.empty()) return {};
    UniPoly q(p.size() - 1);
    Rat carry = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * r;
    }
    if (carry != 0) throw std::logic_error("uni_deflate: not a root");
    uni_trim(q);
    return q;
}

namespace detail {

inline Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x9e3779b9ul);
    for (;;) {
        Int x = rng.get_z_range(n - 2) + 2;
        Int y = x, c = rng.get_z_range(n - 1) + 1, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    Int m = abs(n);
    if (m <= 1) return;
    for (long p = 2; p < 100000 && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (p > 3 && m > 1) {
            Int pp(p);
            if (pp * pp > m) break;
        }
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Int(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    // what remains has no small factors; split recursively
    std::vector<Int> stack;
    if (m > 1) stack.push_back(m);
    while (!stack.empty()) {
        Int v = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (mpz_probab_prime_p(v.get_mpz_t(), 32)) {
            ++out[v];
            continue;
        }
        Int d = pollard_rho(v);
        stack.push_back(d);
        stack.push_back(v / d);
    }
}

inline std::vector<Int> positive_divisors(const Int& n) {
    std::map<Int, unsigned> f;
    factor_into(n, f);
    std::vector<Int> divs{Int(1)};
    for (auto& [p, e] : f) {
        size_t base = divs.size();
        Int pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace detail

struct RationalRoot {
    Rat root;
    unsigned multiplicity;
};

struct RationalRootsResult {
    std::vector<RationalRoot> roots;   // sorted ascending
    int remaining_degree = 0;          // degree of the rootless cofactor
};

// All rational roots with multiplicities via candidate testing + deflation.
inline RationalRootsResult rational_roots(UniPoly p) {
    uni_trim(p);
    RationalRootsResult res;
    if (p.empty() || uni_degree(p) == 0) return res;

    std::map<Rat, unsigned> found;

    // x = 0 roots first
    while (!p.empty() && p.front() == 0) {
        ++found[Rat(0)];
        p.erase(p.begin());
    }

    while (uni_degree(p) >= 1) {
        // clear denominators to get integer trailing/leading coefficients
        Int den_lcm = 1;
        for (auto& c : p)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        Int trail = Rat(p.front() * Rat(den_lcm)).get_num();
        Int lead = Rat(p.back() * Rat(den_lcm)).get_num();

        auto us = detail::positive_divisors(trail);
        auto vs = detail::positive_divisors(lead);
        bool hit = false;
        for (const Int& u : us) {
            for (const Int& v : vs) {
                for (int sign : {1, -1}) {
                    Rat cand(sign > 0 ? u : -u, v);
                    cand.canonicalize();
                    if (uni_eval(p, cand) == 0) {
                        ++found[cand];
                        p = uni_deflate(p, cand);
                        hit = true;
                        break;
                    }
                }
                if (hit) break;
            }
            if (hit) break;
        }
        if (!hit) break;
    }

    res.remaining_degree = p.empty() ? 0 : uni_degree(p);
    for (auto& [r, m] : found) res.roots.push_back({r, m});
    return res;
}

}  // namespace multspec
