#include <doctest.h>

#include "freeprob/randmat.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

using namespace freeprob;

TEST_CASE("seed derivation") {
    // splitmix64 test vector: first output from state 0
    CHECK(mix64(0) == 0xe220a8397b1dcdafULL);

    auto seeds = expand_seeds(42, 100);
    REQUIRE(seeds.size() == 100);
    for (long i = 0; i < 100; ++i) CHECK(seeds[(size_t)i] == trial_seed(42, (std::uint64_t)i));
    CHECK(std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() == 100);
    CHECK(trial_seed(42, 0) != trial_seed(43, 0));
}

TEST_CASE("rng stream") {
    Rng a(7), b(7);
    for (int i = 0; i < 16; ++i) CHECK(a.gauss() == b.gauss());
    Rng u(11);
    for (int i = 0; i < 4096; ++i) {
        double v = u.u01();
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("ensemble specs") {
    auto w = EnsembleSpec::parse("Wigner", 10, 0, 2.0, 0, 0, 0, "identity");
    CHECK(w.dim() == 10);
    CHECK(w.self_adjoint());
    CHECK(w.moment_scale() == doctest::Approx(1.0 / std::sqrt(10.0)));

    auto ws = EnsembleSpec::parse("Wishart", 10, 5, 1.0, 0, 0, 0, "identity");
    CHECK(ws.moment_scale() == doctest::Approx(0.1));
    CHECK(ws.spectrum_scale() == doctest::Approx(0.1));

    auto bw = EnsembleSpec::parse("BlockWishart", 0, 0, 1.0, 8, 2, 3, "trace_one");
    CHECK(bw.dim() == 16);
    CHECK(bw.moment_scale() == doctest::Approx(1.0 / 8));
    CHECK(bw.spectrum_scale() == doctest::Approx(1.0 / 24));

    auto cg = EnsembleSpec::parse("ComplexGaussian", 10, 0, 1.0, 0, 0, 0, "identity");
    CHECK_FALSE(cg.self_adjoint());

    CHECK_THROWS_AS(EnsembleSpec::parse("GOE", 10, 0, 1.0, 0, 0, 0, "identity"),
                    std::invalid_argument);
    CHECK_THROWS_AS(EnsembleSpec::parse("Wigner", 0, 0, 1.0, 0, 0, 0, "identity"),
                    std::invalid_argument);
    CHECK_THROWS_AS(EnsembleSpec::parse("Wigner", 10, 0, -1.0, 0, 0, 0, "identity"),
                    std::invalid_argument);
    CHECK_THROWS_AS(EnsembleSpec::parse("BlockWishart", 0, 0, 1.0, 8, 2, 3, "squash"),
                    std::invalid_argument);
    // dimension cap
    CHECK_THROWS_AS(EnsembleSpec::parse("Wigner", 5000, 0, 1.0, 0, 0, 0, "identity"),
                    std::invalid_argument);
}

TEST_CASE("sampling is deterministic and has the right shape") {
    auto w = EnsembleSpec::parse("Wigner", 40, 0, 1.0, 0, 0, 0, "identity");
    auto A = sample(w, 123), B = sample(w, 123), C = sample(w, 124);
    CHECK((A - B).norm() == 0.0);
    CHECK((A - C).norm() > 0.0);
    CHECK((A - A.adjoint()).norm() == 0.0);

    auto ws = EnsembleSpec::parse("Wishart", 30, 12, 1.0, 0, 0, 0, "identity");
    auto W = sample(ws, 5);
    CHECK(W.rows() == 30);
    CHECK((W - W.adjoint()).norm() <= 1e-12 * W.norm());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(W, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10 * W.norm());
}

TEST_CASE("block modification") {
    Eigen::MatrixXcd W(4, 4);
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j) W(i, j) = (double)(4 * i + j + 1);

    auto T = block_modify(W, 2, BlockMap::transpose);
    CHECK(T(0, 1).real() == 5.0);
    CHECK(T(1, 0).real() == 2.0);
    CHECK(T(0, 3).real() == 7.0);
    CHECK((block_modify(T, 2, BlockMap::transpose) - W).norm() == 0.0);

    auto R = block_modify(W, 2, BlockMap::trace_one);
    CHECK(R(0, 0).real() == doctest::Approx(3.5));
    CHECK(R(0, 1).real() == 0.0);
    CHECK(R(1, 1).real() == doctest::Approx(3.5));
    CHECK(R(0, 2).real() == doctest::Approx(5.5));
    CHECK(R(2, 2).real() == doctest::Approx(13.5)); // tr([[11,12],[15,16]]) / 2
    CHECK(std::abs(R.trace() - W.trace()) <= 1e-12);

    auto D = block_modify(W, 2, BlockMap::diagonal);
    CHECK(D(0, 0).real() == 1.0);
    CHECK(D(0, 1).real() == 0.0);
    CHECK(D(0, 2).real() == 3.0);
    CHECK((block_modify(D, 2, BlockMap::diagonal) - D).norm() == 0.0);

    CHECK((block_modify(W, 2, BlockMap::identity) - W).norm() == 0.0);
    Eigen::MatrixXcd I6 = Eigen::MatrixXcd::Identity(6, 6);
    CHECK((block_modify(I6, 3, BlockMap::trace_one) - I6).norm() == 0.0);

    Eigen::MatrixXcd odd = Eigen::MatrixXcd::Identity(5, 5);
    CHECK_THROWS_AS(block_modify(odd, 2, BlockMap::diagonal), std::invalid_argument);
}

TEST_CASE("empirical moments") {
    SUBCASE("seed order does not matter") {
        auto w = EnsembleSpec::parse("Wigner", 60, 0, 1.0, 0, 0, 0, "identity");
        auto a = empirical_moments(w, {3, 1, 2}, 3);
        auto b = empirical_moments(w, {1, 2, 3}, 3);
        REQUIRE(a.size() == 3);
        for (size_t p = 0; p < 3; ++p) {
            CHECK(a[p].mean == b[p].mean);
            CHECK(a[p].stderr_ == b[p].stderr_);
            CHECK(a[p].trials == 3);
        }
        CHECK(a[1].stderr_ > 0.0);
    }

    SUBCASE("semicircle moments") {
        auto w = EnsembleSpec::parse("Wigner", 300, 0, 2.0, 0, 0, 0, "identity");
        auto st = empirical_moments(w, expand_seeds(1, 3), 4);
        CHECK(std::fabs(st[1].mean - 2.0) <= 0.1);       // M2 = t
        CHECK(std::fabs(st[3].mean - 8.0) <= 0.8);       // M4 = 2 t^2
        CHECK(std::fabs(st[0].mean) <= 0.05);            // odd moments vanish
    }

    SUBCASE("Marchenko-Pastur moments") {
        auto ws = EnsembleSpec::parse("Wishart", 300, 150, 1.0, 0, 0, 0, "identity");
        auto st = empirical_moments(ws, expand_seeds(2, 3), 2);
        CHECK(std::fabs(st[0].mean - 0.5) <= 0.025);     // M1 = t
        CHECK(std::fabs(st[1].mean - 0.75) <= 0.0375);   // M2 = t + t^2
    }

    SUBCASE("explicit scale override") {
        auto w = EnsembleSpec::parse("Wigner", 50, 0, 1.0, 0, 0, 0, "identity");
        auto a = empirical_moments(w, {9}, 2);
        auto b = empirical_moments(w, {9}, 2, 2.0 * w.moment_scale());
        CHECK(b[1].mean == doctest::Approx(4.0 * a[1].mean).epsilon(1e-12));
    }

    CHECK_THROWS_AS(empirical_moments(EnsembleSpec::parse("Wigner", 10, 0, 1.0, 0, 0, 0,
                                                          "identity"),
                                      {}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(empirical_moments(EnsembleSpec::parse("Wigner", 10, 0, 1.0, 0, 0, 0,
                                                          "identity"),
                                      {1}, 0),
                    std::invalid_argument);
}

TEST_CASE("colored word moments of a Ginibre matrix") {
    auto cg = EnsembleSpec::parse("ComplexGaussian", 300, 0, 1.0, 0, 0, 0, "identity");
    auto seeds = expand_seeds(3, 3);
    // circular element: tr(cc*) -> t, tr(cc*cc*) -> 2t^2, tr(ccc*c*) -> t^2
    CHECK(std::fabs(empirical_colored_moment(cg, seeds, ColoredWord::parse("ob")).mean - 1.0) <=
          0.05);
    CHECK(std::fabs(empirical_colored_moment(cg, seeds, ColoredWord::parse("obob")).mean - 2.0) <=
          0.15);
    CHECK(std::fabs(empirical_colored_moment(cg, seeds, ColoredWord::parse("oobb")).mean - 1.0) <=
          0.15);
    // odd words have no balanced pairing
    CHECK(std::fabs(empirical_colored_moment(cg, seeds, ColoredWord::parse("oo")).mean) <= 0.05);
    CHECK_THROWS_AS(empirical_colored_moment(cg, seeds, ColoredWord()), std::invalid_argument);
}

TEST_CASE("spectra") {
    SUBCASE("sorted, bounded semicircle spectrum") {
        auto w = EnsembleSpec::parse("Wigner", 100, 0, 1.0, 0, 0, 0, "identity");
        auto ev = spectrum_sample(w, 17);
        REQUIRE(ev.size() == 100);
        CHECK(std::is_sorted(ev.begin(), ev.end()));
        CHECK(ev.front() >= -2.4);
        CHECK(ev.back() <= 2.4);
    }

    SUBCASE("histogram integrates to one") {
        auto w = EnsembleSpec::parse("Wigner", 150, 0, 1.0, 0, 0, 0, "identity");
        auto grid = empirical_spectrum(w, expand_seeds(4, 2), 0.1);
        double mass = 0;
        for (double d : grid.density) mass += d * 0.1;
        CHECK(std::fabs(mass - 1.0) <= 1e-9);
        CHECK(grid.x.size() == grid.density.size());
    }

    SUBCASE("Wishart zero eigenvalues show up as an atom") {
        // t = 1/2: half of the spectrum sits at zero
        auto ws = EnsembleSpec::parse("Wishart", 300, 150, 1.0, 0, 0, 0, "identity");
        auto grid = empirical_spectrum(ws, expand_seeds(5, 2), 0.1);
        double near_zero = 0;
        for (size_t i = 0; i < grid.x.size(); ++i)
            if (grid.x[i] < 0.1) near_zero += grid.density[i] * 0.1;
        CHECK(near_zero >= 0.49);
        CHECK(near_zero <= 0.60);
    }

    auto cg = EnsembleSpec::parse("ComplexGaussian", 50, 0, 1.0, 0, 0, 0, "identity");
    CHECK_THROWS_AS(empirical_spectrum(cg, {1}, 0.1), std::invalid_argument);
    auto w = EnsembleSpec::parse("Wigner", 20, 0, 1.0, 0, 0, 0, "identity");
    CHECK_THROWS_AS(empirical_spectrum(w, {1}, 0.0), std::invalid_argument);
}

TEST_CASE("independent Wigner matrices become asymptotically free") {
    auto w = EnsembleSpec::parse("Wigner", 300, 0, 1.0, 0, 0, 0, "identity");
    const double root_n = std::sqrt(300.0);
    double mixed = 0, factor = 0;
    for (std::uint64_t r = 0; r < 3; ++r) {
        Eigen::MatrixXcd A = sample(w, trial_seed(99, 2 * r)) / root_n;
        Eigen::MatrixXcd B = sample(w, trial_seed(99, 2 * r + 1)) / root_n;
        mixed += (A * B * A * B).trace().real() / 300.0;
        factor += (A * A * B * B).trace().real() / 300.0;
    }
    CHECK(std::fabs(mixed / 3) <= 0.05);
    CHECK(std::fabs(factor / 3 - 1.0) <= 0.1); // tr(a^2 b^2) -> M2(a) M2(b)
}

TEST_CASE("block Wishart with the trace-one map") {
    // d x d scalar blocks: (n/d) X has the t = nm compound limit
    auto bw = EnsembleSpec::parse("BlockWishart", 0, 0, 1.0, 150, 2, 2, "trace_one");
    double scale = 2.0 / 150.0;
    auto st = empirical_moments(bw, expand_seeds(6, 4), 3, scale);
    CHECK(std::fabs(st[0].mean - 4.0) <= 0.4);
    CHECK(std::fabs(st[1].mean - 20.0) <= 2.0);
    CHECK(std::fabs(st[2].mean - 116.0) <= 12.0);
}

TEST_CASE("permutations and truncated characters") {
    SUBCASE("Fisher-Yates emits uniform permutations") {
        Rng rng(31);
        auto sigma = sample_permutation(rng, 6);
        std::vector<long> sorted = sigma;
        std::sort(sorted.begin(), sorted.end());
        for (long i = 0; i < 6; ++i) CHECK(sorted[(size_t)i] == i);

        // full distribution over S_3
        std::map<std::vector<long>, long> hits;
        Rng rng3(32);
        for (int i = 0; i < 6000; ++i) ++hits[sample_permutation(rng3, 3)];
        CHECK(hits.size() == 6);
        for (const auto& [perm, count] : hits) {
            CHECK(count > 800);
            CHECK(count < 1200);
        }
    }

    SUBCASE("Monte Carlo agrees with the exact truncated moments") {
        auto st = truncated_character_mc(50, 0.5, 2, 77, 2000);
        REQUIRE(st.size() == 2);
        CHECK(st[0].trials == 2000);
        CHECK(std::fabs(st[0].mean - 0.5) <= 0.06);
        // exact N = 20 reference: Sum_b S(k,b) falling(s,b)/falling(N,b)
        auto mc = truncated_character_mc(20, 0.5, 2, 78, 4000);
        CHECK(std::fabs(mc[0].mean - 0.5) <= 5 * mc[0].stderr_ + 1e-12);
        CHECK(std::fabs(mc[1].mean - (0.5 + 90.0 / 380.0)) <= 5 * mc[1].stderr_ + 1e-12);
    }

    CHECK_THROWS_AS(truncated_character_mc(0, 0.5, 2, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(truncated_character_mc(10, 1.5, 2, 1, 10), std::invalid_argument);
}
