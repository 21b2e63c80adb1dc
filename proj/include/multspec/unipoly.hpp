#pragma once

// Dense univariate polynomials over Q and the rational function field Q(t):
// arithmetic, exact division, gcd via the primitive Euclidean remainder
// sequence.

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace multspec {

// coeffs[i] is the coefficient of x^i; no trailing zeros ({} is zero).
using UniPoly = std::vector<Rat>;

inline void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline bool uni_is_zero(const UniPoly& p) { return p.empty(); }

inline UniPoly uni_const(const Rat& c) {
    if (c == 0) return {};
    return {c};
}

inline Rat uni_eval(const UniPoly& p, const Rat& x) {
    Rat r(0);
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

inline UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    uni_trim(r);
    return r;
}

inline UniPoly uni_neg(const UniPoly& a) {
    UniPoly r(a);
    for (auto& c : r) c = -c;
    return r;
}

inline UniPoly uni_sub(const UniPoly& a, const UniPoly& b) { return uni_add(a, uni_neg(b)); }

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline UniPoly uni_scale(const UniPoly& a, const Rat& c) {
    if (c == 0) return {};
    UniPoly r(a);
    for (auto& x : r) x *= c;
    return r;
}

// Quotient and remainder of a / b.
inline std::pair<UniPoly, UniPoly> uni_divmod(UniPoly a, const UniPoly& b) {
    if (b.empty()) throw std::invalid_argument("uni_divmod by zero");
    if (a.size() < b.size()) return {{}, a};
    UniPoly q(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        uni_trim(a);
        if (a.empty()) break;
    }
    return {q, a};
}

// Divides by content, leading coefficient made positive.
inline UniPoly uni_primitive(const UniPoly& a) {
    if (a.empty()) return a;
    Int ng = 0, dl = 1;
    for (auto& c : a) {
        mpz_gcd(ng.get_mpz_t(), ng.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content(ng, dl);
    content.canonicalize();
    if (a.back() < 0) content = -content;
    return uni_scale(a, Rat(1) / content);
}

// Monic gcd.
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    a = uni_primitive(a);
    b = uni_primitive(b);
    while (!b.empty()) {
        auto [q, r] = uni_divmod(a, b);
        a = std::move(b);
        b = uni_primitive(r);
    }
    if (a.empty()) return a;
    return uni_scale(a, Rat(1) / a.back());
}

// Element of Q(t): num/den with den monic and gcd(num, den) = 1.
struct RatFunc {
    UniPoly num;
    UniPoly den{Rat(1)};

    RatFunc() = default;
    RatFunc(UniPoly n, UniPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    explicit RatFunc(UniPoly n) : num(std::move(n)) { uni_trim(num); }
    explicit RatFunc(const Rat& c) : num(uni_const(c)) {}

    void normalize() {
        uni_trim(num);
        uni_trim(den);
        if (den.empty()) throw std::invalid_argument("rational function with zero denominator");
        if (num.empty()) {
            den = {Rat(1)};
            return;
        }
        UniPoly g = uni_gcd(num, den);
        if (uni_degree(g) > 0) {
            num = uni_divmod(num, g).first;
            den = uni_divmod(den, g).first;
        }
        Rat lc = den.back();
        if (lc != 1) {
            num = uni_scale(num, Rat(1) / lc);
            den = uni_scale(den, Rat(1) / lc);
        }
    }

    bool is_zero() const { return num.empty(); }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(uni_add(uni_mul(num, o.den), uni_mul(o.num, den)), uni_mul(den, o.den));
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(uni_sub(uni_mul(num, o.den), uni_mul(o.num, den)), uni_mul(den, o.den));
    }
    RatFunc operator*(const RatFunc& o) const {
        return RatFunc(uni_mul(num, o.num), uni_mul(den, o.den));
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::invalid_argument("rational function division by zero");
        return RatFunc(uni_mul(num, o.den), uni_mul(den, o.num));
    }
    RatFunc operator-() const {
        RatFunc r(*this);
        r.num = uni_neg(r.num);
        return r;
    }
    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
};

}  // namespace multspec
