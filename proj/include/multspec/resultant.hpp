#pragma once

// Univariate resultants with polynomial coefficients, via the Sylvester
// matrix and fraction-free Bareiss elimination.

#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace multspec {

// a, b: dense coefficient vectors in the eliminated variable (index =
// degree), entries living in a common ring. Trailing zero entries are
// ignored; actual degrees are used.
inline Poly resultant_univar(std::vector<Poly> a, std::vector<Poly> b, size_t nvars) {
    auto trim = [](std::vector<Poly>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return Poly(nvars);
    size_t da = a.size() - 1, db = b.size() - 1;
    if (da == 0) return a[0].pow(static_cast<unsigned>(db));
    if (db == 0) return b[0].pow(static_cast<unsigned>(da));

    size_t n = da + db;
    std::vector<std::vector<Poly>> syl(n, std::vector<Poly>(n, Poly(nvars)));
    for (size_t r = 0; r < db; ++r)
        for (size_t k = 0; k <= da; ++k) syl[r][r + (da - k)] = a[k];
    for (size_t r = 0; r < da; ++r)
        for (size_t k = 0; k <= db; ++k) syl[db + r][r + (db - k)] = b[k];
    return det_bareiss(syl);
}

}  // namespace multspec
