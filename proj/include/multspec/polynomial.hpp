#pragma once

// Sparse multivariate polynomials over Q with exact rational coefficients.
// Terms are kept sorted in descending ambient lex order; the zero polynomial
// has no terms. Variable names live in a Ring so polynomials stay light.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"

namespace multspec {

struct Ring {
    std::vector<std::string> vars;

    size_t nvars() const { return vars.size(); }

    std::optional<size_t> index_of(std::string_view name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        return std::nullopt;
    }
};

inline Ring make_ring(std::vector<std::string> names) { return Ring{std::move(names)}; }

// Standard coordinate ring x0..xN plus optional extra variables appended.
inline Ring coord_ring(size_t n_plus_1, std::vector<std::string> extra = {}) {
    Ring r;
    for (size_t i = 0; i < n_plus_1; ++i) r.vars.push_back("x" + std::to_string(i));
    for (auto& e : extra) r.vars.push_back(std::move(e));
    return r;
}

struct Term {
    Monomial mon;
    Rat coeff;
};

class Poly {
  public:
    std::vector<Term> terms;  // descending ambient lex, nonzero coeffs
    size_t nv = 0;

    Poly() = default;
    explicit Poly(size_t nvars) : nv(nvars) {}

    static Poly zero(size_t nvars) { return Poly(nvars); }

    static Poly constant(size_t nvars, const Rat& c) {
        Poly p(nvars);
        if (c != 0) p.terms.push_back({Monomial(nvars), c});
        return p;
    }

    static Poly variable(size_t nvars, size_t i, unsigned e = 1) {
        Poly p(nvars);
        Monomial m(nvars);
        m.exps[i] = e;
        p.terms.push_back({std::move(m), Rat(1)});
        return p;
    }

    static Poly term(size_t nvars, Monomial m, const Rat& c) {
        Poly p(nvars);
        if (c != 0) p.terms.push_back({std::move(m), c});
        return p;
    }

    size_t nvars() const { return nv; }
    bool is_zero() const { return terms.empty(); }

    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms[0].mon.is_one());
    }

    Rat constant_value() const {
        if (terms.empty()) return Rat(0);
        if (!is_constant()) throw std::logic_error("constant_value on non-constant");
        return terms[0].coeff;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& t : terms) d = std::max(d, t.mon.degree());
        return d;
    }

    unsigned degree_in(size_t var) const {
        unsigned d = 0;
        for (auto& t : terms) d = std::max(d, t.mon.exps[var]);
        return d;
    }

    bool uses(size_t var) const {
        for (auto& t : terms)
            if (t.mon.exps[var]) return true;
        return false;
    }

    bool operator==(const Poly& o) const {
        if (nv != o.nv || terms.size() != o.terms.size()) return false;
        for (size_t i = 0; i < terms.size(); ++i)
            if (!(terms[i].mon == o.terms[i].mon) || terms[i].coeff != o.terms[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms) t.coeff = -t.coeff;
        return r;
    }

    Poly operator+(const Poly& o) const {
        Poly r(nv);
        r.terms.reserve(terms.size() + o.terms.size());
        size_t i = 0, j = 0;
        while (i < terms.size() && j < o.terms.size()) {
            int c = lex_compare(terms[i].mon, o.terms[j].mon);
            if (c > 0) {
                r.terms.push_back(terms[i++]);
            } else if (c < 0) {
                r.terms.push_back(o.terms[j++]);
            } else {
                Rat s = terms[i].coeff + o.terms[j].coeff;
                if (s != 0) r.terms.push_back({terms[i].mon, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < terms.size(); ++i) r.terms.push_back(terms[i]);
        for (; j < o.terms.size(); ++j) r.terms.push_back(o.terms[j]);
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly scaled(const Rat& c) const {
        if (c == 0) return Poly(nv);
        Poly r(*this);
        for (auto& t : r.terms) t.coeff *= c;
        return r;
    }

    // this * (c * m)
    Poly mul_term(const Monomial& m, const Rat& c) const {
        if (c == 0) return Poly(nv);
        Poly r(nv);
        r.terms.reserve(terms.size());
        for (auto& t : terms) r.terms.push_back({t.mon * m, t.coeff * c});
        return r;
    }

    Poly operator*(const Poly& o) const {
        if (terms.empty() || o.terms.empty()) return Poly(nv);
        struct LexGreater {
            bool operator()(const Monomial& a, const Monomial& b) const {
                return lex_compare(a, b) > 0;
            }
        };
        std::map<Monomial, Rat, LexGreater> acc;
        for (auto& a : terms)
            for (auto& b : o.terms) {
                Monomial m = a.mon * b.mon;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), a.coeff * b.coeff);
                else
                    it->second += a.coeff * b.coeff;
            }
        Poly r(nv);
        r.terms.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) r.terms.push_back({m, c});
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(unsigned e) const {
        Poly r = constant(nv, Rat(1));
        Poly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Poly derivative(size_t var) const {
        Poly r(nv);
        for (auto& t : terms) {
            unsigned e = t.mon.exps[var];
            if (!e) continue;
            Term nt{t.mon, t.coeff * Rat(e)};
            nt.mon.exps[var] = e - 1;
            r.terms.push_back(std::move(nt));
        }
        std::sort(r.terms.begin(), r.terms.end(),
                  [](const Term& a, const Term& b) { return lex_compare(a.mon, b.mon) > 0; });
        return r;
    }

    // Substitute a polynomial for one variable.
    Poly substitute(size_t var, const Poly& value) const {
        unsigned dmax = degree_in(var);
        std::vector<Poly> powers(dmax + 1, Poly(nv));
        powers[0] = constant(nv, Rat(1));
        for (unsigned e = 1; e <= dmax; ++e) powers[e] = powers[e - 1] * value;
        Poly r(nv);
        for (auto& t : terms) {
            Term base{t.mon, t.coeff};
            unsigned e = base.mon.exps[var];
            base.mon.exps[var] = 0;
            Poly piece(nv);
            piece.terms.push_back(std::move(base));
            r += piece * powers[e];
        }
        return r;
    }

    Poly substitute_rat(size_t var, const Rat& value) const {
        return substitute(var, constant(nv, value));
    }

    Rat evaluate(const std::vector<Rat>& point) const {
        if (point.size() != nv) throw std::invalid_argument("evaluate: wrong point size");
        Rat r(0);
        for (auto& t : terms) {
            Rat v = t.coeff;
            for (size_t i = 0; i < nv; ++i)
                if (t.mon.exps[i]) v *= rat_pow(point[i], t.mon.exps[i]);
            r += v;
        }
        return r;
    }

    bool is_homogeneous() const {
        if (terms.empty()) return true;
        unsigned d = terms[0].mon.degree();
        for (auto& t : terms)
            if (t.mon.degree() != d) return false;
        return true;
    }

    // Coefficient of var^e, as a polynomial in the remaining variables
    // (still expressed in the full ring).
    Poly coeff_of(size_t var, unsigned e) const {
        Poly r(nv);
        for (auto& t : terms)
            if (t.mon.exps[var] == e) {
                Term nt = t;
                nt.mon.exps[var] = 0;
                r.terms.push_back(std::move(nt));
            }
        std::sort(r.terms.begin(), r.terms.end(),
                  [](const Term& a, const Term& b) { return lex_compare(a.mon, b.mon) > 0; });
        return r;
    }

    // Leading term under an explicit order.
    const Term& leading_term(const MonomialOrder& ord) const {
        if (terms.empty()) throw std::logic_error("leading_term of zero");
        const Term* best = &terms[0];
        for (auto& t : terms)
            if (ord.compare(t.mon, best->mon) > 0) best = &t;
        return *best;
    }

    // gcd of coefficient numerators over lcm of denominators; positive.
    Rat content() const {
        if (terms.empty()) return Rat(0);
        Int num_gcd = 0, den_lcm = 1;
        for (auto& t : terms) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        }
        Rat c(num_gcd, den_lcm);
        c.canonicalize();
        return c;
    }

    // Divides by the content and makes the leading coefficient (under ord)
    // positive. Result has coprime integer coefficients.
    Poly primitive(const MonomialOrder& ord) const {
        if (terms.empty()) return *this;
        Rat c = content();
        if (leading_term(ord).coeff < 0) c = -c;
        Poly r(*this);
        for (auto& t : r.terms) t.coeff /= c;
        return r;
    }

    // Scales so the leading coefficient under ord is 1.
    Poly monic(const MonomialOrder& ord) const {
        if (terms.empty()) return *this;
        return scaled(Rat(1) / leading_term(ord).coeff);
    }

    size_t max_coeff_bits() const {
        size_t b = 0;
        for (auto& t : terms) b = std::max(b, coeff_bits(t.coeff));
        return b;
    }

    // Reinterprets in a larger ring; `where[i]` is the destination index of
    // source variable i.
    Poly embedded(size_t new_nvars, const std::vector<size_t>& where) const {
        Poly r(new_nvars);
        r.terms.reserve(terms.size());
        for (auto& t : terms) {
            Monomial m(new_nvars);
            for (size_t i = 0; i < nv; ++i) m.exps[where[i]] = t.mon.exps[i];
            r.terms.push_back({std::move(m), t.coeff});
        }
        std::sort(r.terms.begin(), r.terms.end(),
                  [](const Term& a, const Term& b) { return lex_compare(a.mon, b.mon) > 0; });
        return r;
    }
};

inline Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }

// ---------------------------------------------------------------------------
// Parsing. Grammar: expr := term (('+'|'-') term)*; term := factor ('*'
// factor)*; factor := base ('^' uint)?; base := rational | variable |
// '(' expr ')'. Juxtaposition is not a product.

namespace detail {

struct PolyParser {
    const Ring& ring;
    std::string_view s;
    size_t pos = 0;

    explicit PolyParser(const Ring& r, std::string_view text) : ring(r), s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + msg);
    }

    Poly parse() {
        Poly p = parse_expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return p;
    }

    Poly parse_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly p = parse_term();
        if (neg) p = -p;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                p += parse_term();
            } else if (c == '-') {
                ++pos;
                p -= parse_term();
            } else {
                break;
            }
        }
        return p;
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (eat('*')) p *= parse_factor();
        return p;
    }

    Poly parse_factor() {
        Poly b = parse_base();
        if (eat('^')) {
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected exponent");
            unsigned e = static_cast<unsigned>(std::stoul(std::string(s.substr(start, pos - start))));
            b = b.pow(e);
        }
        return b;
    }

    Poly parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Poly p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
        fail("expected number, variable, or '('");
    }

    Poly parse_number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string num(s.substr(start, pos - start));
        std::string den = "1";
        size_t save = pos;
        if (eat('/')) {
            skip_ws();
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) {
                pos = save;  // not a fraction after all
            } else {
                den = std::string(s.substr(dstart, pos - dstart));
            }
        }
        auto r = parse_rat(num + "/" + den);
        if (!r) fail("bad rational literal");
        return Poly::constant(ring.nvars(), *r);
    }

    Poly parse_variable() {
        skip_ws();
        size_t start = pos;
        ++pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        std::string name(s.substr(start, pos - start));
        auto idx = ring.index_of(name);
        if (!idx) fail("unknown variable '" + name + "'");
        return Poly::variable(ring.nvars(), *idx);
    }
};

}  // namespace detail

inline Poly parse_poly(const Ring& ring, std::string_view text) {
    return detail::PolyParser(ring, text).parse();
}

// Canonical printing: terms in descending order (ambient lex by default),
// integer coefficients without /1, unit coefficients elided on non-constant
// monomials, exponent 1 elided.
inline std::string format_poly(const Ring& ring, const Poly& p,
                               const MonomialOrder* ord = nullptr) {
    if (p.is_zero()) return "0";
    std::vector<const Term*> ts;
    ts.reserve(p.terms.size());
    for (auto& t : p.terms) ts.push_back(&t);
    if (ord)
        std::sort(ts.begin(), ts.end(),
                  [&](const Term* a, const Term* b) { return ord->compare(a->mon, b->mon) > 0; });
    std::ostringstream out;
    bool first = true;
    for (const Term* t : ts) {
        Rat c = t->coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed_coeff = false;
        if (c != 1 || t->mon.is_one()) {
            out << to_string(c);
            printed_coeff = true;
        }
        for (size_t i = 0; i < p.nvars(); ++i) {
            unsigned e = t->mon.exps[i];
            if (!e) continue;
            if (printed_coeff) out << "*";
            printed_coeff = true;
            out << ring.vars[i];
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace multspec
