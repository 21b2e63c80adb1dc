#pragma once

// Identities on multiplier spectra: Ueda's fixed-point relation, the
// corollary relation between the last two sigma rows, and the linear
// dependence of sigma_{i,j} (i > j) on the first j entries of column j.

#include <vector>

#include "sigma.hpp"

namespace multspec {

struct UedaReport {
    UniPoly lhs;  // sum over fixed points of mult * gamma_P(t) / gamma_P(1)
    UniPoly rhs;  // sum_{k=0}^{N} d^k t^{N-k}
    bool holds = false;
};

// Checks sum_P gamma_P(t)/gamma_P(1) = sum_{k=0}^N d^k t^{N-k} over a
// complete fixed-point spectrum (n = 1, counted with multiplicity).
inline UedaReport check_ueda(const SpectrumList& spectrum, size_t N, unsigned d) {
    Int total = 0;
    for (auto& e : spectrum) total += Int(e.multiplicity);
    if (total != period_count(N, d, 1))
        throw DomainError("ueda check needs a complete fixed-point spectrum");

    UedaReport rep;
    for (auto& e : spectrum) {
        Rat at_one = uni_eval(e.charpoly, Rat(1));
        if (at_one == 0)
            throw DomainError("ueda relation hypothesis fails: a fixed point has multiplier 1");
        rep.lhs = uni_add(rep.lhs, uni_scale(e.charpoly, Rat(e.multiplicity) / at_one));
    }
    rep.rhs.assign(N + 1, Rat(0));
    for (size_t k = 0; k <= N; ++k) rep.rhs[N - k] = rat_pow(Rat(d), k);
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

// (D_1 - 1) + sum_{k=1}^{N D_1} (-1)^{k+1} (sigma_{D_1,k} - sigma_{D_1-1,k}) = 0.
inline bool check_corollary_relation(const SigmaTable& T) {
    if (T.mode != SigmaMode::chow || T.n != 1)
        throw DomainError("corollary relation needs a chow-mode table at period 1");
    Int D1 = T.Dn;
    size_t D = static_cast<size_t>(D1.get_si());
    Rat acc = Rat(D1 - 1);
    for (size_t k = 1; k <= T.N * D; ++k) {
        Rat diff = T.sigma(D, k) - T.sigma(D - 1, k);
        acc += (k % 2 == 1) ? diff : -diff;
    }
    return acc == 0;
}

// Coefficients z_k of the representation
// sigma_{i,j} = sum_{k=1}^{min(i,j)} binomial(D_n - k, i - k) z_k.
struct PartitionPredictor {
    size_t j = 0;
    Int Dn;
    std::vector<Rat> z;
};

// Solves the unit lower triangular system given the column entries
// sigma_{1,j} .. sigma_{j,j}.
inline PartitionPredictor fit_partition_predictor(const std::vector<Rat>& sigma_col, size_t j,
                                                  const Int& Dn) {
    if (j < 1 || sigma_col.size() != j)
        throw std::invalid_argument("fit needs exactly j column values");
    PartitionPredictor pred{j, Dn, std::vector<Rat>(j, Rat(0))};
    for (size_t i = 1; i <= j; ++i) {
        Rat acc = sigma_col[i - 1];
        for (size_t k = 1; k < i; ++k)
            acc -= Rat(binomial(Dn - Int(k), i - k)) * pred.z[k - 1];
        pred.z[i - 1] = acc;  // diagonal coefficient binomial(Dn - i, 0) = 1
    }
    return pred;
}

inline Rat predict_sigma(const PartitionPredictor& pred, size_t i) {
    if (Int(i) > pred.Dn || i <= pred.j)
        throw std::invalid_argument("prediction index must satisfy j < i <= D_n");
    Rat acc(0);
    for (size_t k = 1; k <= pred.j; ++k)
        acc += Rat(binomial(pred.Dn - Int(k), i - k)) * pred.z[k - 1];
    return acc;
}

}  // namespace multspec
