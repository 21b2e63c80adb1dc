#pragma once

// Exact rational arithmetic. Thin layer over GMP's mpq_class: canonical
// (reduced, positive denominator) by construction, plus the parsing and
// formatting helpers the rest of the library needs.

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace multspec {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Parses "p", "-p", or "p/q". Whitespace is not accepted.
inline std::optional<Rat> parse_rat(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::string buf(s);
    Rat r;
    if (r.set_str(buf, 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) {
    return r.get_str();
}

// Bit size of the larger of |numerator| and denominator; used by the
// Groebner resource caps.
inline size_t coeff_bits(const Rat& r) {
    size_t nb = mpz_sizeinbase(r.get_num().get_mpz_t(), 2);
    size_t db = mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
    return nb > db ? nb : db;
}

inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int b;
    if (k > n) return 0;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Int binomial(const Int& n, unsigned long k) {
    Int b;
    if (n < 0 || Int(k) > n) return 0;
    mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), k);
    return b;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

}  // namespace multspec
