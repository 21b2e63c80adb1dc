#pragma once

// Inverse problems: Milnor-parameter inversion for quadratic polynomials,
// split quadratic invariants, the binomial interpolation guard, and
// recovery of a degree-2 triangular endomorphism of P^2 from its
// fixed-point eigenvalue pairs.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <vector>

#include "families.hpp"
#include "matrix.hpp"
#include "rational_roots.hpp"

namespace multspec {

// Unordered eigenvalue tuple of one fixed point.
struct EigenPair {
    std::vector<Rat> eigenvalues;  // kept sorted
    unsigned multiplicity = 1;
};

using EigenPairMultiset = std::vector<EigenPair>;

// Milnor parameters of a quadratic polynomial satisfy sigma_1 = 2 and
// sigma_2 = 4c; inverts when possible.
inline std::optional<Rat> quadratic_from_multipliers(const Rat& l1, const Rat& l2) {
    if (l1 + l2 != 2) return std::nullopt;
    return l1 * l2 / 4;
}

// The two sigma invariants of [x^2+cz^2 : y^2+dz^2 : z^2] that see the
// parameters: sigma_{2,2} = 8(c+d)+60 and sigma_{2,3} = 16(c+d)+24.
inline std::pair<Rat, Rat> split_quadratic_invariants(const Rat& c, const Rat& d) {
    return {8 * (c + d) + 60, 16 * (c + d) + 24};
}

// binomial(d+n, d) <= sum_{i=0}^n d^i; a theorem, exposed as a runtime
// assertion point for the interpolation step.
inline bool binomial_guard(unsigned d, unsigned n) {
    if (d < 2 || n < 1) throw std::invalid_argument("binomial_guard needs d >= 2, n >= 1");
    Int lhs = binomial(static_cast<unsigned long>(d) + n, d);
    Int rhs = 0;
    for (unsigned i = 0; i <= n; ++i) rhs += int_pow(Int(d), i);
    return lhs <= rhs;
}

enum class InterpolationStatus { unique, underdetermined, inconsistent };

struct InterpolationResult {
    InterpolationStatus status = InterpolationStatus::inconsistent;
    std::vector<Rat> coeffs;      // set when unique
    size_t solution_space_dim = 0;  // set when underdetermined
};

// Solves for polynomial coefficients from point evaluations: row per node,
// column per basis monomial, entry = monomial evaluated at the node.
inline InterpolationResult interpolation_solve(const std::vector<std::vector<Rat>>& nodes,
                                               const std::vector<Rat>& values,
                                               const std::vector<Monomial>& basis) {
    if (nodes.size() != values.size())
        throw std::invalid_argument("interpolation: node/value count mismatch");
    size_t rows = nodes.size(), cols = basis.size();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols, Rat(0)));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            Rat v(1);
            for (size_t k = 0; k < basis[c].exps.size(); ++k)
                v *= rat_pow(nodes[r][k], basis[c].exps[k]);
            a[r][c] = v;
        }

    // rank bookkeeping to distinguish the three outcomes
    std::vector<std::vector<Rat>> m = a;
    std::vector<Rat> b = values;
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        std::swap(b[rank], b[piv]);
        Rat inv = Rat(1) / m[rank][c];
        for (size_t j = c; j < cols; ++j) m[rank][j] *= inv;
        b[rank] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    InterpolationResult res;
    for (size_t i = rank; i < rows; ++i)
        if (b[i] != 0) {
            res.status = InterpolationStatus::inconsistent;
            return res;
        }
    if (rank < cols) {
        res.status = InterpolationStatus::underdetermined;
        res.solution_space_dim = cols - rank;
        return res;
    }
    res.status = InterpolationStatus::unique;
    res.coeffs.assign(cols, Rat(0));
    for (size_t r = 0; r < rank; ++r) res.coeffs[pivot_col[r]] = b[r];
    return res;
}

// Eigenvalue pairs of a complete rational fixed-point spectrum on P^2;
// errors out if a characteristic polynomial has an irrational root.
inline EigenPairMultiset eigen_pairs_from_spectrum(const SpectrumList& spectrum) {
    EigenPairMultiset out;
    for (auto& e : spectrum) {
        auto rr = rational_roots(e.charpoly);
        std::vector<Rat> eig;
        for (auto& r : rr.roots)
            for (unsigned k = 0; k < r.multiplicity; ++k) eig.push_back(r.root);
        if (rr.remaining_degree != 0)
            throw IrrationalSpectrumError("irrational multiplier eigenvalue");
        std::sort(eig.begin(), eig.end());
        out.push_back({eig, e.multiplicity});
    }
    return out;
}

namespace detail {

using Pair2 = std::array<Rat, 2>;  // sorted

inline std::vector<Pair2> flatten_pairs(const EigenPairMultiset& pairs) {
    std::vector<Pair2> flat;
    for (auto& p : pairs) {
        if (p.eigenvalues.size() != 2)
            throw std::invalid_argument("recovery needs eigenvalue pairs (N = 2)");
        Pair2 q{p.eigenvalues[0], p.eigenvalues[1]};
        if (q[1] < q[0]) std::swap(q[0], q[1]);
        for (unsigned k = 0; k < p.multiplicity; ++k) flat.push_back(q);
    }
    return flat;
}

// removes one occurrence of a pair containing `lam` whose other component
// is `other`; true on success
inline bool take_pair(std::vector<Pair2>& pool, const Rat& lam, const Rat& other) {
    Pair2 want{lam, other};
    if (want[1] < want[0]) std::swap(want[0], want[1]);
    auto it = std::find(pool.begin(), pool.end(), want);
    if (it == pool.end()) return false;
    pool.erase(it);
    return true;
}

// number of pairs of `a` not matched in `b` (multiset difference size)
inline size_t pair_mismatch(std::vector<Pair2> a, std::vector<Pair2> b) {
    size_t miss = 0;
    for (auto& p : a) {
        auto it = std::find(b.begin(), b.end(), p);
        if (it == b.end())
            ++miss;
        else
            b.erase(it);
    }
    return miss;
}

}  // namespace detail

struct RecoveredMap {
    DynamicalSystem map;
    size_t spectrum_mismatch = 0;  // unmatched pairs against the input
};

// Recovers degree-2 triangular endomorphisms
// [F1(x,z) : y^2 + a x^2 + b xz + c z^2 : z^2] from the multiset of
// fixed-point eigenvalue pairs. The search enumerates the multiplier pair
// of F1 among values occurring in at least two input pairs, reconstructs
// each fiber quadratic from Milnor parameters, and determines the top
// coefficient `a` from the invariant line at infinity. Inputs that no
// candidate map reproduces up to one eigenvalue pair yield an empty list.
inline std::vector<RecoveredMap> recover_triangular_2_2(const EigenPairMultiset& pairs,
                                                        const ResourceCaps& caps = {}) {
    auto flat = detail::flatten_pairs(pairs);
    if (flat.size() != 7)
        throw std::invalid_argument("recovery needs the 7 fixed-point pairs of (N,d) = (2,2)");

    // values occurring in at least two distinct pairs are candidates for
    // the affine multipliers of F1
    std::vector<Rat> values;
    for (auto& p : flat)
        for (auto& v : p) values.push_back(v);
    std::set<Rat> candidates;
    for (auto& v : std::set<Rat>(values.begin(), values.end())) {
        size_t hits = 0;
        for (auto& p : flat) hits += (p[0] == v || p[1] == v) ? 1 : 0;
        if (hits >= 2) candidates.insert(v);
    }

    std::vector<RecoveredMap> results;
    auto consider = [&](const DynamicalSystem& F) {
        SpectrumList sp;
        try {
            sp = rational_periodic_spectrum(F, 1);
        } catch (const DomainError&) {
            return;
        }
        size_t miss = detail::pair_mismatch(flat,
                                            detail::flatten_pairs(eigen_pairs_from_spectrum(sp)));
        if (miss > 1) return;
        for (auto& r : results)
            if (r.map.coords == F.coords) return;
        results.push_back({F, miss});
    };

    std::vector<std::pair<Rat, Rat>> lam_pairs;
    for (auto& l1 : candidates)
        for (auto& l2 : candidates) {
            if (l2 < l1) continue;
            if (quadratic_from_multipliers(l1, l2)) lam_pairs.push_back({l1, l2});
        }

    for (auto& [l1, l2] : lam_pairs) {
        if (l1 == l2) continue;  // double fixed point: interpolation nodes collide
        Rat c1 = *quadratic_from_multipliers(l1, l2);
        // fixed points of x^2 + c1 with multipliers l1, l2 sit at l/2
        Rat p1 = l1 / 2, p2 = l2 / 2;

        // per-fiber Milnor inversion; branch over admissible mu-subsets
        auto fiber_constants = [&](const Rat& lam, const std::vector<detail::Pair2>& pool) {
            std::vector<Rat> others;
            for (auto& p : pool) {
                if (p[0] == lam) others.push_back(p[1]);
                else if (p[1] == lam) others.push_back(p[0]);
            }
            std::set<Rat> ks;
            for (size_t i = 0; i < others.size(); ++i)
                for (size_t j = i + 1; j < others.size(); ++j)
                    if (auto k = quadratic_from_multipliers(others[i], others[j])) ks.insert(*k);
            return ks;
        };

        for (const Rat& k1 : fiber_constants(l1, flat)) {
            for (const Rat& k2 : fiber_constants(l2, flat)) {
                // consume the four affine pairs to expose the three at infinity
                auto pool = flat;
                // the fiber constant determines the fiber multipliers: roots of
                // y^2 - y + k, multipliers 2y
                auto consume_fiber = [&](const Rat& lam, const Rat& k) {
                    UniPoly fix{k, Rat(-1), Rat(1)};
                    auto rr = rational_roots(fix);
                    std::vector<Rat> mus;
                    for (auto& r : rr.roots)
                        for (unsigned m = 0; m < r.multiplicity; ++m) mus.push_back(2 * r.root);
                    if (mus.size() != 2) return false;
                    return detail::take_pair(pool, lam, mus[0]) &&
                           detail::take_pair(pool, lam, mus[1]);
                };
                if (!consume_fiber(l1, k1) || !consume_fiber(l2, k2)) continue;

                // candidates for the top coefficient: strict assignment of the
                // remaining pairs as (in-line multiplier, 0), then a fallback
                // over all eigenvalues when the strict reading is inconsistent
                std::set<Rat> a_candidates;
                {
                    std::vector<Rat> line;
                    bool strict = true;
                    for (auto& p : pool) {
                        if (p[0] == 0) line.push_back(p[1]);
                        else if (p[1] == 0) line.push_back(p[0]);
                        else strict = false;
                    }
                    if (strict && line.size() == 3) {
                        for (size_t z = 0; z < 3; ++z) {
                            if (line[z] != 0) continue;  // the line's own point at infinity
                            Rat m1 = line[(z + 1) % 3], m2 = line[(z + 2) % 3];
                            if (auto a = quadratic_from_multipliers(m1, m2))
                                a_candidates.insert(*a);
                        }
                    }
                }
                if (a_candidates.empty()) {
                    for (size_t i = 0; i < values.size(); ++i)
                        for (size_t j = i + 1; j < values.size(); ++j)
                            if (auto a = quadratic_from_multipliers(values[i], values[j]))
                                a_candidates.insert(*a);
                }

                for (const Rat& a : a_candidates) {
                    // F2 = y^2 + a x^2 + b xz + c z^2 from the two affine fibers
                    auto sol = interpolation_solve(
                        {{p1}, {p2}}, {k1 - a * p1 * p1, k2 - a * p2 * p2},
                        {Monomial(std::vector<unsigned>{1}), Monomial(std::vector<unsigned>{0})});
                    if (sol.status != InterpolationStatus::unique) continue;
                    Rat b = sol.coeffs[0], c = sol.coeffs[1];
                    size_t nv = 2;
                    Poly x = Poly::variable(nv, 0), y = Poly::variable(nv, 1);
                    TriangularSpec spec{{x * x + Poly::constant(nv, c1),
                                         y * y + a * (x * x) + b * x + Poly::constant(nv, c)}};
                    try {
                        consider(triangular_endomorphism(spec));
                    } catch (const InvalidMapError&) {
                    }
                }
            }
        }
    }

    auto map_key = [](const DynamicalSystem& f) {
        Ring r = coord_ring(f.N + 1);
        std::string key;
        for (auto& co : f.coords) key += format_poly(r, co) + ";";
        return key;
    };
    std::sort(results.begin(), results.end(),
              [&](const RecoveredMap& a, const RecoveredMap& b) {
                  if (a.spectrum_mismatch != b.spectrum_mismatch)
                      return a.spectrum_mismatch < b.spectrum_mismatch;
                  return map_key(a.map) < map_key(b.map);
              });
    // exact reproductions shadow near misses
    if (!results.empty() && results.front().spectrum_mismatch == 0)
        while (results.back().spectrum_mismatch > 0) results.pop_back();
    (void)caps;
    return results;
}

}  // namespace multspec
