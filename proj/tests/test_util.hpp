#pragma once

// Shared test helpers: a seeded RNG (seed printed once, overridable via
// MULTSPEC_SEED), random rationals, and random degree-d morphisms built as
// perturbations of the powering map.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>

#include "multspec/groebner.hpp"
#include "multspec/projdyn.hpp"

namespace testutil {

inline std::uint64_t global_seed() {
    static std::uint64_t seed = [] {
        std::uint64_t s = 20250823;
        if (const char* v = std::getenv("MULTSPEC_SEED")) s = std::strtoull(v, nullptr, 10);
        std::cout << "random seed: " << s << "\n";
        return s;
    }();
    return seed;
}

inline std::mt19937_64 make_rng(std::uint64_t stream) {
    return std::mt19937_64(global_seed() ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
}

inline multspec::Rat rand_rat(std::mt19937_64& rng, long num_bound = 5, long den_bound = 4) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return multspec::make_rat(num(rng), den(rng));
}

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// x_i^d plus a random rational multiple of one off-diagonal degree-d
// monomial per coordinate; retried until the tuple is a morphism. Small
// perturbations keep fixed points simple and generically off the
// coordinate hyperplanes.
inline multspec::DynamicalSystem random_morphism(std::mt19937_64& rng, size_t N, unsigned d,
                                                 long coeff_bound = 3) {
    using namespace multspec;
    size_t nv = N + 1;
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Poly> coords;
        for (size_t i = 0; i < nv; ++i) {
            Poly c = Poly::variable(nv, i).pow(d);
            Monomial m(nv);
            unsigned left = d;
            for (size_t v = 0; v + 1 < nv; ++v) {
                unsigned e = static_cast<unsigned>(rand_int(rng, 0, left));
                m.exps[v] = e;
                left -= e;
            }
            m.exps[nv - 1] = left;
            Rat a = rand_rat(rng, coeff_bound);
            c += Poly::term(nv, m, a);
            coords.push_back(c);
        }
        try {
            return new_dynamical_system(std::move(coords));
        } catch (const InvalidMapError&) {
            continue;
        }
    }
    throw std::runtime_error("random_morphism: no morphism found in 100 attempts");
}

// True when every fixed point of f lies in the affine chart x_N != 0
// (counted with multiplicity): the affine fixed ideal has quotient
// dimension D_1. Such maps have no fixed points on the hyperplane at
// infinity in any chart stratum.
inline bool all_fixed_points_affine(const multspec::DynamicalSystem& f) {
    using namespace multspec;
    auto I = fixed_ideal_chart(f, 1, f.N);
    try {
        auto gb = buchberger(I);
        auto qd = quotient_dimension(gb, f.N);
        return qd && Int(*qd) == period_count(f.N, f.d, 1);
    } catch (const std::exception&) {
        return false;
    }
}

// random_morphism filtered so that all fixed points are affine; such maps
// keep their multiplier data under linear conjugation.
inline multspec::DynamicalSystem random_affine_morphism(std::mt19937_64& rng, size_t N,
                                                        unsigned d, long coeff_bound = 3) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        auto f = random_morphism(rng, N, d, coeff_bound);
        if (all_fixed_points_affine(f)) return f;
    }
    throw std::runtime_error("random_affine_morphism: no candidate in 200 attempts");
}

// Random unimodular integer matrix: a product of elementary row additions
// applied to the identity (determinant stays 1).
inline std::vector<std::vector<multspec::Rat>> random_unimodular(std::mt19937_64& rng,
                                                                 size_t n, int ops = 4) {
    using multspec::Rat;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    for (int k = 0; k < ops; ++k) {
        size_t i = static_cast<size_t>(rand_int(rng, 0, static_cast<long>(n) - 1));
        size_t j = static_cast<size_t>(rand_int(rng, 0, static_cast<long>(n) - 1));
        if (i == j) continue;
        Rat c(rand_int(rng, -2, 2));
        for (size_t col = 0; col < n; ++col) m[i][col] += c * m[j][col];
    }
    return m;
}

}  // namespace testutil
