#include "freeprob/exactcount.hpp"

#include <array>
#include <stdexcept>

namespace freeprob {

Int catalan(long k) {
    if (k < 0) throw std::invalid_argument("catalan: k >= 0");
    return binomial(2 * k, k) / Int(k + 1);
}

Int bell(long k) {
    if (k < 0) throw std::invalid_argument("bell: k >= 0");
    std::vector<Int> b(k + 1);
    b[0] = 1;
    for (long n = 1; n <= k; ++n) {
        Int t = 0;
        for (long m = 0; m < n; ++m) t += binomial(n - 1, m) * b[m];
        b[n] = t;
    }
    return b[k];
}

Rat fuss_catalan(const Rat& s, long k) {
    if (k < 0) throw std::invalid_argument("fuss_catalan: k >= 0");
    if (s <= 0) throw std::invalid_argument("fuss_catalan: s > 0");
    Rat num = 1;
    for (long j = 2; j <= k; ++j) num *= s * k + j;
    return num / Rat(factorial(k));
}

Rat fuss_narayana(const Rat& s, long k, const Rat& t) {
    if (k < 1) throw std::invalid_argument("fuss_narayana: k >= 1");
    if (s <= 0) throw std::invalid_argument("fuss_narayana: s > 0");
    Rat acc = 0;
    Rat tb = 1;
    for (long b = 1; b <= k; ++b) {
        tb *= t;
        acc += Rat(binomial(k - 1, b - 1)) * binomial_rat(s * k, b - 1) * tb / Rat(b);
    }
    return acc;
}

Rat derangement_profile(long N, long r) {
    if (N < 0 || r < 0 || r > N) throw std::invalid_argument("derangement_profile: 0 <= r <= N");
    long m = N - r;
    // D_m = m! sum_{j=0..m} (-1)^j / j!, via D_m = m D_{m-1} + (-1)^m
    Int D = 1;
    for (long j = 1; j <= m; ++j) D = Int(j) * D + (j % 2 ? Int(-1) : Int(1));
    return Rat(binomial(N, r) * D) / Rat(factorial(N));
}

Int stirling2(long r, long b) {
    if (r < 0 || b < 0) throw std::invalid_argument("stirling2: nonnegative arguments");
    if (b > r) return 0;
    if (r == 0) return 1; // b == 0 here
    if (b == 0) return 0;
    std::vector<Int> row(b + 1, Int(0));
    row[0] = 1; // S(0,0)
    for (long n = 1; n <= r; ++n) {
        for (long j = std::min(b, n); j >= 1; --j)
            row[j] = Int(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[b];
}

std::vector<std::pair<std::string, Rat>> poker_probabilities() {
    // the table as published, top class first
    return {
        {"one_pair", Rat(480, 899)},
        {"two_pairs", Rat(108, 899)},
        {"three_of_a_kind", Rat(48, 899)},
        {"straight", Rat(9, 1798)},
        {"flush", Rat(9, 25172)},
        {"full_house", Rat(6, 899)},
        {"four_of_a_kind", Rat(1, 899)},
        {"straight_flush", Rat(1, 12586)},
    };
}

std::vector<std::pair<std::string, Rat>> poker_probabilities_enumerated() {
    // deck: 8 ranks x 4 suits, card id = 4*rank + suit
    long counts[9] = {0};
    enum { HIGH, PAIR, TWOPAIR, TRIPS, STRAIGHT, FLUSH, FULL, QUADS, SFLUSH };
    std::array<int, 5> c;
    long total = 0;
    for (c[0] = 0; c[0] < 32; ++c[0])
    for (c[1] = c[0] + 1; c[1] < 32; ++c[1])
    for (c[2] = c[1] + 1; c[2] < 32; ++c[2])
    for (c[3] = c[2] + 1; c[3] < 32; ++c[3])
    for (c[4] = c[3] + 1; c[4] < 32; ++c[4]) {
        ++total;
        int rankmult[8] = {0};
        bool flush = true;
        for (int i = 0; i < 5; ++i) {
            ++rankmult[c[i] / 4];
            if (c[i] % 4 != c[0] % 4) flush = false;
        }
        int pairs = 0, trips = 0, quads = 0, distinct = 0, lo = 8, hi = -1;
        for (int r = 0; r < 8; ++r) {
            if (!rankmult[r]) continue;
            ++distinct;
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            if (rankmult[r] == 2) ++pairs;
            if (rankmult[r] == 3) ++trips;
            if (rankmult[r] == 4) ++quads;
        }
        bool straight = (distinct == 5 && hi - lo == 4); // no wrap-around in this deck
        int cls = HIGH;
        if (straight && flush) cls = SFLUSH;
        else if (quads) cls = QUADS;
        else if (trips && pairs) cls = FULL;
        else if (flush) cls = FLUSH;
        else if (straight) cls = STRAIGHT;
        else if (trips) cls = TRIPS;
        else if (pairs == 2) cls = TWOPAIR;
        else if (pairs == 1) cls = PAIR;
        ++counts[cls];
    }
    auto frac = [&](long n) { return Rat(n, total); };
    return {
        {"one_pair", frac(counts[PAIR])},
        {"two_pairs", frac(counts[TWOPAIR])},
        {"three_of_a_kind", frac(counts[TRIPS])},
        {"straight", frac(counts[STRAIGHT])},
        {"flush", frac(counts[FLUSH])},
        {"full_house", frac(counts[FULL])},
        {"four_of_a_kind", frac(counts[QUADS])},
        {"straight_flush", frac(counts[SFLUSH])},
        {"high_card", frac(counts[HIGH])},
    };
}

std::pair<Rat, long> sphere_volume_ratio(long N) {
    if (N < 1) throw std::invalid_argument("sphere_volume_ratio: N >= 1");
    return {Rat(1) / Rat(df_shifted(N + 1)), N / 2};
}

} // namespace freeprob
