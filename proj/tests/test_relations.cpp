// Relations among multiplier invariants: Ueda's fixed-point identity, the
// corollary relation on the last two sigma rows, and the dependence
// predictor.

#include "doctest.h"
#include "multspec/relations.hpp"
#include "test_util.hpp"

using namespace multspec;

namespace {

DynamicalSystem powering(size_t N, unsigned d) {
    std::vector<Poly> coords;
    for (size_t i = 0; i <= N; ++i) coords.push_back(Poly::variable(N + 1, i).pow(d));
    return new_dynamical_system(std::move(coords));
}

SpectrumEntry entry(std::vector<Rat> pt, UniPoly gamma, unsigned mult) {
    return SpectrumEntry{ProjectivePoint::make(std::move(pt)), std::move(gamma), mult};
}

}  // namespace

TEST_CASE("ueda on P^1 powering") {
    auto sp = rational_periodic_spectrum(powering(1, 2), 1);
    auto rep = check_ueda(sp, 1, 2);
    CHECK(rep.holds);
    // t/1 + t/1 + (t-2)/(-1) = t + 2
    CHECK(rep.lhs == UniPoly{Rat(2), Rat(1)});
}

TEST_CASE("ueda on P^2 powering") {
    auto sp = rational_periodic_spectrum(powering(2, 2), 1);
    auto rep = check_ueda(sp, 2, 2);
    CHECK(rep.holds);
    CHECK(rep.rhs == UniPoly{Rat(4), Rat(2), Rat(1)});  // t^2 + 2t + 4
}

TEST_CASE("ueda N=1 specialization: sum of 1/(1 - lambda) = 1") {
    // spectrum {0, 0, 2} of the P^1 powering map
    std::vector<Rat> lambdas{Rat(0), Rat(0), Rat(2)};
    Rat acc(0);
    for (auto& l : lambdas) acc += Rat(1) / (Rat(1) - l);
    CHECK(acc == 1);
}

TEST_CASE("ueda error paths") {
    // gamma(1) = 0: a fixed point of multiplier 1
    SpectrumList bad{entry({Rat(0), Rat(1)}, {Rat(-1), Rat(1)}, 1),   // t - 1
                     entry({Rat(1), Rat(1)}, {Rat(-2), Rat(1)}, 1),
                     entry({Rat(1), Rat(0)}, {Rat(0), Rat(1)}, 1)};
    CHECK_THROWS_AS(check_ueda(bad, 1, 2), DomainError);

    // incomplete spectrum rejected
    SpectrumList incomplete{entry({Rat(0), Rat(1)}, {Rat(0), Rat(1)}, 1)};
    CHECK_THROWS_AS(check_ueda(incomplete, 1, 2), DomainError);
}

TEST_CASE("corollary relation") {
    auto T = extract_sigmas(sigma_poly(powering(2, 2), 1, SigmaMode::chow));
    CHECK(check_corollary_relation(T));

    auto rng = testutil::make_rng(9);
    auto f = testutil::random_affine_morphism(rng, 2, 2);
    CHECK(check_corollary_relation(extract_sigmas(sigma_poly(f, 1, SigmaMode::chow))));

    // N = 1, d = 2 reduces to Milnor's sigma_3 + 2 = sigma_1: multipliers
    // {0, 0, 2} give sigma_1 = 2, sigma_3 = 0
    auto T1 = extract_sigmas(sigma_poly(powering(1, 2), 1, SigmaMode::chow));
    CHECK(check_corollary_relation(T1));
    CHECK(T1.sigma(3, 3) + 2 == T1.sigma(1, 1));

    // wrong mode or period is rejected
    auto Tp = extract_sigmas(sigma_poly(powering(2, 2), 1, SigmaMode::plain));
    CHECK_THROWS_AS(check_corollary_relation(Tp), DomainError);
    auto T2 = extract_sigmas(sigma_poly(powering(1, 2), 2, SigmaMode::chow));
    CHECK_THROWS_AS(check_corollary_relation(T2), DomainError);
}

TEST_CASE("partition predictor fit") {
    // j = 1: z1 = sigma_{1,1}
    auto p1 = fit_partition_predictor({Rat(5)}, 1, Int(7));
    CHECK(p1.z == std::vector<Rat>{Rat(5)});

    // j = 2 on the P^2 powering column (4, 60)
    auto p2 = fit_partition_predictor({Rat(4), Rat(60)}, 2, Int(7));
    CHECK(p2.z.size() == 2);
    // first equation: binomial(6,0) z1 = 4
    CHECK(p2.z[0] == 4);
    // second: binomial(6,1) z1 + binomial(5,0) z2 = 60
    CHECK(Rat(6) * p2.z[0] + p2.z[1] == 60);

    // all-zero column
    auto p0 = fit_partition_predictor({Rat(0), Rat(0)}, 2, Int(7));
    CHECK(p0.z == std::vector<Rat>(2, Rat(0)));
    CHECK(predict_sigma(p0, 5) == 0);

    CHECK_THROWS(fit_partition_predictor({Rat(1)}, 2, Int(7)));
    CHECK_THROWS(predict_sigma(p2, 2));   // i must exceed j
    CHECK_THROWS(predict_sigma(p2, 8));   // i must not exceed D_n
}

TEST_CASE("dependence theorem on the P^2 powering map") {
    auto T = extract_sigmas(sigma_poly(powering(2, 2), 1, SigmaMode::chow));
    size_t D = 7;
    for (size_t j = 1; j < D; ++j) {
        std::vector<Rat> col;
        for (size_t i = 1; i <= j; ++i) col.push_back(T.sigma(i, j));
        auto pred = fit_partition_predictor(col, j, T.Dn);
        for (size_t i = j + 1; i <= D; ++i) CHECK(predict_sigma(pred, i) == T.sigma(i, j));
    }
}

TEST_CASE("dependence theorem on a random morphism") {
    auto rng = testutil::make_rng(10);
    auto f = testutil::random_morphism(rng, 1, 3);
    auto T = extract_sigmas(sigma_poly(f, 1, SigmaMode::chow));
    size_t D = static_cast<size_t>(T.Dn.get_si());
    for (size_t j = 1; j <= T.N * D && j < D; ++j) {
        std::vector<Rat> col;
        for (size_t i = 1; i <= j; ++i) col.push_back(T.sigma(i, j));
        auto pred = fit_partition_predictor(col, j, T.Dn);
        for (size_t i = j + 1; i <= D; ++i) CHECK(predict_sigma(pred, i) == T.sigma(i, j));
    }
}
