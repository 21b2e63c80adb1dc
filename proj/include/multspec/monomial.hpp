#pragma once

// Monomials as exponent vectors over a fixed ambient variable list, and the
// lexicographic monomial order (with an explicit variable priority).

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace multspec {

struct Monomial {
    std::vector<unsigned> exps;

    Monomial() = default;
    explicit Monomial(size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> e) : exps(std::move(e)) {}

    size_t nvars() const { return exps.size(); }

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned e : exps) d += e;
        return d;
    }

    bool is_one() const {
        for (unsigned e : exps)
            if (e) return false;
        return true;
    }

    bool operator==(const Monomial& o) const = default;

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > o.exps[i]) return false;
        return true;
    }

    // Quotient o / this; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& o) const {
        Monomial r(o);
        for (size_t i = 0; i < exps.size(); ++i) r.exps[i] -= exps[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.exps.size(); ++i)
            if (b.exps[i] > r.exps[i]) r.exps[i] = b.exps[i];
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] && b.exps[i]) return false;
        return true;
    }
};

// Lexicographic order. `priority` lists variable indices from most to least
// significant; an empty priority means the ambient variable order as given.
struct MonomialOrder {
    std::vector<size_t> priority;

    static MonomialOrder lex(size_t nvars) {
        MonomialOrder o;
        o.priority.resize(nvars);
        std::iota(o.priority.begin(), o.priority.end(), 0);
        return o;
    }

    // negative: a < b, zero: equal, positive: a > b
    int compare(const Monomial& a, const Monomial& b) const {
        if (priority.empty()) {
            for (size_t i = 0; i < a.exps.size(); ++i) {
                if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
            }
            return 0;
        }
        for (size_t i : priority) {
            if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

// Plain lex comparison in the ambient order; polynomials keep their terms
// sorted descending under this.
inline int lex_compare(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
    return 0;
}

}  // namespace multspec
