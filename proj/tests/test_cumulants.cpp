#include "freeprob/cumulants.hpp"
#include "freeprob/exactcount.hpp"

#include <doctest.h>

#include <random>

using namespace freeprob;

namespace {
Rat rnd(std::mt19937_64& g) {
    return Rat((long)(g() % 13) - 6, (long)(g() % 3) + 1);
}
} // namespace

TEST_CASE("classical moment-cumulant closed form through order 4") {
    std::mt19937_64 gen(11);
    for (int rep = 0; rep < 8; ++rep) {
        Rat k1 = rnd(gen), k2 = rnd(gen), k3 = rnd(gen), k4 = rnd(gen);
        CumulantSequence c{{k1, k2, k3, k4}, Flavor::classical};
        auto m = moments_from_cumulants(c);
        CHECK(m.at(1) == k1);
        CHECK(m.at(2) == k2 + k1 * k1);
        CHECK(m.at(3) == k3 + 3 * k2 * k1 + k1 * k1 * k1);
        CHECK(m.at(4) == k4 + 4 * k3 * k1 + 3 * k2 * k2 + 6 * k2 * k1 * k1 + k1 * k1 * k1 * k1);
    }
}

TEST_CASE("free moment-cumulant closed form through order 4") {
    std::mt19937_64 gen(12);
    for (int rep = 0; rep < 8; ++rep) {
        Rat k1 = rnd(gen), k2 = rnd(gen), k3 = rnd(gen), k4 = rnd(gen);
        CumulantSequence c{{k1, k2, k3, k4}, Flavor::free};
        auto m = moments_from_cumulants(c);
        CHECK(m.at(1) == k1);
        CHECK(m.at(2) == k2 + k1 * k1);
        CHECK(m.at(3) == k3 + 3 * k2 * k1 + k1 * k1 * k1);
        // the free fourth moment has 2 k2^2 where the classical one has 3
        CHECK(m.at(4) == k4 + 4 * k3 * k1 + 2 * k2 * k2 + 6 * k2 * k1 * k1 + k1 * k1 * k1 * k1);
    }
}

TEST_CASE("round trips through order 10") {
    std::mt19937_64 gen(13);
    for (Flavor f : {Flavor::classical, Flavor::free}) {
        MomentSequence m;
        for (int i = 0; i < 10; ++i) m.m.push_back(rnd(gen));
        auto c = cumulants_from_moments(m, f);
        auto back = moments_from_cumulants(c);
        CHECK(back.m == m.m);
        CumulantSequence c2{{}, f};
        for (int i = 0; i < 10; ++i) c2.c.push_back(rnd(gen));
        auto m2 = moments_from_cumulants(c2);
        CHECK(cumulants_from_moments(m2, f).c == c2.c);
    }
}

TEST_CASE("semicircle and gaussian from pure second cumulants") {
    CumulantSequence sc{{0, 1, 0, 0, 0, 0, 0, 0}, Flavor::free};
    auto msc = moments_from_cumulants(sc);
    for (long k = 1; k <= 8; ++k)
        CHECK(msc.at(k) == (k % 2 ? Rat(0) : Rat(catalan(k / 2))));
    CumulantSequence g{{0, 1, 0, 0, 0, 0, 0, 0}, Flavor::classical};
    auto mg = moments_from_cumulants(g);
    for (long k = 1; k <= 8; ++k)
        CHECK(mg.at(k) == (k % 2 ? Rat(0) : Rat(df_std(k - 1))));
}

TEST_CASE("bercovici-pata maps bell to catalan") {
    MomentSequence bells{{1, 2, 5, 15, 52}};
    auto free_side = bercovici_pata(bells, Flavor::classical, Flavor::free);
    CHECK(free_side.m == std::vector<Rat>{1, 2, 5, 14, 42});
    auto back = bercovici_pata(free_side, Flavor::free, Flavor::classical);
    CHECK(back.m == bells.m);
}

TEST_CASE("partition weighted moments") {
    Rat t(2);
    // NC with weight t is Fuss-Narayana at s=1
    for (long k = 1; k <= 6; ++k)
        CHECK(partition_weighted_moment(Category::parse("NC"), t, ColoredWord::all_white(k)) ==
              fuss_narayana(Rat(1), k, t));
    // P with weight t is the Stirling expansion
    for (long k = 1; k <= 6; ++k) {
        Rat expect = 0;
        for (long b = 1; b <= k; ++b) expect += Rat(stirling2(k, b)) * rpow(t, b);
        CHECK(partition_weighted_moment(Category::parse("P"), t, ColoredWord::all_white(k)) == expect);
    }
    // pairings carry t^(k/2)
    CHECK(partition_weighted_moment(Category::parse("P2"), t, ColoredWord::all_white(4)) == 3 * t * t);
    CHECK(partition_weighted_moment(Category::parse("NC2"), t, ColoredWord::all_white(4)) == 2 * t * t);
    // colored matchings
    CHECK(partition_weighted_moment(Category::parse("MatchP2"), t, ColoredWord::parse("oobb")) ==
          2 * t * t);
    CHECK(partition_weighted_moment(Category::parse("MatchNC2"), t, ColoredWord::parse("oobb")) ==
          t * t);
    CHECK(partition_weighted_moment(Category::parse("MatchNC2"), t, ColoredWord::parse("obob")) ==
          2 * t * t);
    CHECK(partition_weighted_moment(Category::parse("MatchNC2"), t, ColoredWord::parse("oob")) == 0);
}
