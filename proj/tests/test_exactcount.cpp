#include "freeprob/exactcount.hpp"

#include <doctest.h>

#include <map>

using namespace freeprob;

TEST_CASE("catalan and bell") {
    const long cat[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    const long bel[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int k = 0; k <= 10; ++k) CHECK(catalan(k) == cat[k]);
    for (int k = 0; k <= 8; ++k) CHECK(bell(k) == bel[k]);
}

TEST_CASE("double factorial convention") {
    // this library: m!! = (m-1)(m-3)..., one step below the common one
    CHECK(df_shifted(4) == 3);
    CHECK(df_shifted(5) == 8);
    CHECK(df_shifted(6) == 15);
    // standard double factorial of odds, used for |P2(2k)|
    CHECK(df_std(5) == 15);
    CHECK(df_std(7) == 105);
    CHECK(df_std(-1) == 1);
}

TEST_CASE("fuss-catalan and fuss-narayana") {
    for (long k = 0; k <= 8; ++k) CHECK(fuss_catalan(Rat(1), k) == Rat(catalan(k)));
    const long fc2[] = {1, 1, 3, 12, 55, 273};
    for (long k = 0; k <= 5; ++k) CHECK(fuss_catalan(Rat(2), k) == Rat(fc2[k]));
    // t = 1 collapses the Narayana refinement
    for (long k = 1; k <= 6; ++k) {
        CHECK(fuss_narayana(Rat(1), k, Rat(1)) == Rat(catalan(k)));
        CHECK(fuss_narayana(Rat(2), k, Rat(1)) == fuss_catalan(Rat(2), k));
        CHECK(fuss_narayana(Rat(5, 2), k, Rat(1)) == fuss_catalan(Rat(5, 2), k));
    }
    // against the NC(3) block profile: t + 3t^2 + t^3
    Rat t(3, 7);
    CHECK(fuss_narayana(Rat(1), 3, t) == t + 3 * t * t + t * t * t);
}

TEST_CASE("derangement profile") {
    // N = 4: 9 derangements of 24
    CHECK(derangement_profile(4, 0) == Rat(9, 24));
    CHECK(derangement_profile(4, 4) == Rat(1, 24));
    CHECK(derangement_profile(4, 3) == 0); // cannot fix exactly N-1 points
    for (long N = 1; N <= 7; ++N) {
        Rat total = 0;
        for (long r = 0; r <= N; ++r) total += derangement_profile(N, r);
        CHECK(total == 1);
    }
}

TEST_CASE("stirling2") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(6, 1) == 1);
    CHECK(stirling2(6, 6) == 1);
    CHECK(stirling2(3, 5) == 0);
    // row sums give Bell numbers
    for (long r = 0; r <= 8; ++r) {
        Int total = 0;
        for (long b = 0; b <= r; ++b) total += stirling2(r, b);
        CHECK(total == bell(r));
    }
}

TEST_CASE("poker over the 32-card deck") {
    auto published = poker_probabilities();
    std::map<std::string, Rat> pub(published.begin(), published.end());
    CHECK(pub.at("one_pair") == Rat(480, 899));
    CHECK(pub.at("two_pairs") == Rat(108, 899));
    CHECK(pub.at("three_of_a_kind") == Rat(48, 899));
    CHECK(pub.at("full_house") == Rat(6, 899));
    CHECK(pub.at("straight") == Rat(9, 1798));
    CHECK(pub.at("four_of_a_kind") == Rat(1, 899));
    CHECK(pub.at("flush") == Rat(9, 25172));
    CHECK(pub.at("straight_flush") == Rat(1, 12586));

    // the full scan, against independent closed-form counts out of C(32,5) = 201376
    auto scanned = poker_probabilities_enumerated();
    std::map<std::string, Rat> scan(scanned.begin(), scanned.end());
    const Rat deck(201376);
    CHECK(scan.at("one_pair") == Rat(107520) / deck);
    CHECK(scan.at("two_pairs") == Rat(24192) / deck);
    CHECK(scan.at("three_of_a_kind") == Rat(10752) / deck);
    CHECK(scan.at("full_house") == Rat(1344) / deck);
    CHECK(scan.at("four_of_a_kind") == Rat(224) / deck);
    CHECK(scan.at("straight") == Rat(4080) / deck);
    CHECK(scan.at("flush") == Rat(208) / deck);
    CHECK(scan.at("straight_flush") == Rat(16) / deck);
    CHECK(scan.at("high_card") == Rat(53040) / deck);
    Rat total = 0;
    for (const auto& [name, p] : scanned) total += p;
    CHECK(total == 1);

    // six of the eight published classes agree with the scan; straight and
    // flush do not (documented discrepancy, surfaced by the acceptance gate)
    for (const auto& name : {"one_pair", "two_pairs", "three_of_a_kind", "full_house",
                             "four_of_a_kind", "straight_flush"})
        CHECK(pub.at(name) == scan.at(name));
    CHECK(pub.at("straight") != scan.at("straight"));
    CHECK(pub.at("flush") != scan.at("flush"));
}

TEST_CASE("sphere volume ratio") {
    // vol(B^N)/2^N = c (pi/2)^e with c = 1/(N+1)!! in the shifted convention
    auto [c1, e1] = sphere_volume_ratio(1);
    CHECK(c1 == 1);
    CHECK(e1 == 0);
    auto [c2, e2] = sphere_volume_ratio(2);
    CHECK(c2 == Rat(1, 2));
    CHECK(e2 == 1);
    auto [c3, e3] = sphere_volume_ratio(3);
    CHECK(c3 == Rat(1, 3));
    CHECK(e3 == 1);
    auto [c4, e4] = sphere_volume_ratio(4);
    CHECK(c4 == Rat(1, 8));
    CHECK(e4 == 2);
    auto [c5, e5] = sphere_volume_ratio(5);
    CHECK(c5 == Rat(1, 15));
    CHECK(e5 == 2);
}
