#include "freeprob/exactcount.hpp"
#include "freeprob/series.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace freeprob;

namespace {
MomentSequence mp_moments(const Rat& t, long order) {
    MomentSequence m;
    for (long k = 1; k <= order; ++k) m.m.push_back(fuss_narayana(Rat(1), k, t));
    return m;
}
MomentSequence poisson_moments(const Rat& t, long order) {
    MomentSequence m;
    for (long k = 1; k <= order; ++k) {
        Rat v = 0;
        for (long b = 1; b <= k; ++b) v += Rat(stirling2(k, b)) * rpow(t, b);
        m.m.push_back(v);
    }
    return m;
}
MomentSequence semicircle_moments(const Rat& t, long order) {
    MomentSequence m;
    for (long k = 1; k <= order; ++k)
        m.m.push_back(k % 2 ? Rat(0) : Rat(catalan(k / 2)) * rpow(t, k / 2));
    return m;
}
} // namespace

TEST_CASE("series helpers") {
    std::mt19937_64 gen(21);
    auto rnd = [&] { return Rat((long)(gen() % 9) - 4, (long)(gen() % 3) + 1); };
    for (int rep = 0; rep < 6; ++rep) {
        std::vector<Rat> a(8);
        for (auto& x : a) x = rnd();
        if (a[0] == 0) a[0] = 1;
        auto prod = series_mul(a, series_inv(a, 7), 7);
        CHECK(prod[0] == 1);
        for (int j = 1; j <= 7; ++j) CHECK(prod[(size_t)j] == 0);

        std::vector<Rat> u(8);
        u[0] = 0;
        u[1] = rnd();
        if (u[1] == 0) u[1] = 1;
        for (size_t j = 2; j < 8; ++j) u[j] = rnd();
        auto comp = series_compose(u, series_comp_inverse(u, 7), 7);
        CHECK(comp[0] == 0);
        CHECK(comp[1] == 1);
        for (int j = 2; j <= 7; ++j) CHECK(comp[(size_t)j] == 0);
    }
    CHECK_THROWS(series_inv({Rat(0), Rat(1)}, 3));
    CHECK_THROWS(series_comp_inverse({Rat(0), Rat(0), Rat(1)}, 3));
}

TEST_CASE("cauchy transform layout") {
    MomentSequence m{{Rat(1), Rat(2), Rat(6)}};
    auto G = cauchy_from_moments(m);
    CHECK(G.var == FormalSeries::Var::xi_inv);
    REQUIRE(G.order() == 4);
    CHECK(G.c[0] == 0);
    CHECK(G.c[1] == 1);
    CHECK(G.c[2] == 1);
    CHECK(G.c[3] == 2);
    CHECK(G.c[4] == 6);
}

TEST_CASE("R and S transforms of the free Poisson family") {
    for (Rat t : {Rat(1, 2), Rat(1), Rat(2)}) {
        auto R = r_from_moments(mp_moments(t, 10));
        CHECK(R.var == FormalSeries::Var::z);
        for (long j = 0; j <= R.order(); ++j) CHECK(R.c[(size_t)j] == t); // t/(1-z)
        auto S = s_from_moments(mp_moments(t, 10));
        for (long j = 0; j <= S.order(); ++j)
            CHECK(S.c[(size_t)j] == rpow(Rat(1) / t, j + 1) * (j % 2 ? -1 : 1)); // 1/(t+z)
    }
    // semicircle: R(z) = t z
    auto R = r_from_moments(semicircle_moments(Rat(3), 8));
    CHECK(R.c[0] == 0);
    CHECK(R.c[1] == 3);
    for (long j = 2; j <= R.order(); ++j) CHECK(R.c[(size_t)j] == 0);
}

TEST_CASE("convolution semigroups") {
    Rat s(1, 3), t(1, 4), sum = s + t;
    auto p = classical_convolution(poisson_moments(s, 8), poisson_moments(t, 8));
    CHECK(p.m == poisson_moments(sum, 8).m);
    auto g = free_additive_convolution(semicircle_moments(s, 8), semicircle_moments(t, 8));
    CHECK(g.m == semicircle_moments(sum, 8).m);
    auto mp = free_additive_convolution(mp_moments(s, 8), mp_moments(t, 8));
    CHECK(mp.m == mp_moments(sum, 8).m);
}

TEST_CASE("free multiplicative convolution") {
    // pi boxtimes pi is the order-2 Fuss-Catalan law
    auto sq = free_multiplicative_convolution(mp_moments(Rat(1), 6), mp_moments(Rat(1), 6));
    for (long k = 1; k <= 6; ++k) CHECK(sq.m[(size_t)k - 1] == fuss_catalan(Rat(2), k));
    // boxtimes with a point mass dilates
    MomentSequence delta3;
    for (long k = 1; k <= 6; ++k) delta3.m.push_back(rpow(Rat(3), k));
    auto dil = free_multiplicative_convolution(mp_moments(Rat(1, 2), 6), delta3);
    auto base = mp_moments(Rat(1, 2), 6);
    for (long k = 1; k <= 6; ++k) CHECK(dil.m[(size_t)k - 1] == rpow(Rat(3), k) * base.m[(size_t)k - 1]);
}

TEST_CASE("hankel check") {
    CHECK(hankel_check(semicircle_moments(Rat(1), 8)).ok);
    CHECK(hankel_check(poisson_moments(Rat(1, 2), 8)).ok);
    auto bad = hankel_check(MomentSequence{{Rat(0), Rat(1), Rat(0), Rat(-1)}});
    CHECK_FALSE(bad.ok);
    CHECK(bad.first_failure == 2);
}

TEST_CASE("stieltjes inversion from a closed-form transform") {
    // semicircle: G(xi) = (xi - sqrt(xi-2) sqrt(xi+2)) / 2
    CauchyFn G = [](std::complex<double> xi) {
        return (xi - std::sqrt(xi - 2.0) * std::sqrt(xi + 2.0)) / 2.0;
    };
    std::vector<double> grid;
    for (double x = -1.5; x <= 1.5 + 1e-12; x += 0.25) grid.push_back(x);
    auto dg = stieltjes_invert(G, grid, 1e-5);
    CHECK(dg.atoms.empty());
    for (size_t i = 0; i < grid.size(); ++i) {
        double expect = std::sqrt(4 - grid[i] * grid[i]) / (2 * 3.14159265358979323846);
        CHECK(std::fabs(dg.density[i] - expect) < 2e-3);
    }
}

TEST_CASE("pade evaluator reproduces the series moments") {
    // G from exact MP(2) moments, checked against the closed form far from the cut
    MomentSequence m = mp_moments(Rat(2), 12);
    auto G = series_cauchy_evaluator(cauchy_from_moments(m));
    std::complex<double> xi(9.0, 1.0);
    // closed form with principal branches: a,b = (1 -+ sqrt t)^2
    double a = (1 - std::sqrt(2.0)) * (1 - std::sqrt(2.0));
    double b = (1 + std::sqrt(2.0)) * (1 + std::sqrt(2.0));
    std::complex<double> closed =
        (xi + 1.0 - 2.0 - std::sqrt(xi - a) * std::sqrt(xi - b)) / (2.0 * xi);
    CHECK(std::abs(G(xi) - closed) < 1e-8);
}
