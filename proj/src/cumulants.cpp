#include "freeprob/cumulants.hpp"

#include <stdexcept>

namespace freeprob {

Rat MomentSequence::at(long n) const {
    if (n == 0) return 1;
    if (n < 1 || n > order()) throw std::out_of_range("moment index out of range");
    return m[n - 1];
}

namespace {

// A[j][n] = sum over j-tuples (i1..ij >= 0, i1+..+ij = n) of M_{i1}...M_{ij},
// the coefficient multiplying kappa_j in the free moment recursion
std::vector<std::vector<Rat>> tuple_sums(const std::vector<Rat>& M, long order) {
    std::vector<std::vector<Rat>> A(order + 1, std::vector<Rat>(order + 1, Rat(0)));
    for (long n = 0; n <= order; ++n) A[0][n] = (n == 0) ? 1 : 0;
    for (long j = 1; j <= order; ++j)
        for (long n = 0; n <= order; ++n)
            for (long r = 0; r <= n; ++r) A[j][n] += M[r] * A[j - 1][n - r];
    return A;
}

} // namespace

MomentSequence moments_from_cumulants(const CumulantSequence& cs) {
    long n = cs.order();
    std::vector<Rat> M(n + 1);
    M[0] = 1;
    if (cs.flavor == Flavor::classical) {
        // M_n = sum_j C(n-1, j-1) k_j M_{n-j}
        for (long i = 1; i <= n; ++i) {
            Rat t = 0;
            for (long j = 1; j <= i; ++j)
                t += Rat(binomial(i - 1, j - 1)) * cs.c[j - 1] * M[i - j];
            M[i] = t;
        }
    } else {
        // M_n = sum_j kappa_j * (sum over j interleaved gaps of products of lower moments)
        for (long i = 1; i <= n; ++i) {
            // rows through j = i; the top entry A[i][0] = 1 carries kappa_i itself
            auto A = tuple_sums(M, i);
            Rat t = 0;
            for (long j = 1; j <= i; ++j) t += cs.c[j - 1] * A[j][i - j];
            M[i] = t;
        }
    }
    MomentSequence out;
    out.m.assign(M.begin() + 1, M.end());
    return out;
}

CumulantSequence cumulants_from_moments(const MomentSequence& ms, Flavor flavor) {
    long n = ms.order();
    std::vector<Rat> M(n + 1);
    M[0] = 1;
    for (long i = 1; i <= n; ++i) M[i] = ms.m[i - 1];
    CumulantSequence out;
    out.flavor = flavor;
    out.c.assign(n, Rat(0));
    if (flavor == Flavor::classical) {
        for (long i = 1; i <= n; ++i) {
            Rat t = M[i];
            for (long j = 1; j < i; ++j)
                t -= Rat(binomial(i - 1, j - 1)) * out.c[j - 1] * M[i - j];
            out.c[i - 1] = t; // binom(i-1,i-1) * k_i * M_0
        }
    } else {
        auto A = tuple_sums(M, n);
        for (long i = 1; i <= n; ++i) {
            Rat t = M[i];
            for (long j = 1; j < i; ++j) t -= out.c[j - 1] * A[j][i - j];
            out.c[i - 1] = t; // A[i][0] = 1
        }
    }
    return out;
}

MomentSequence bercovici_pata(const MomentSequence& m, Flavor from, Flavor to) {
    CumulantSequence cs = cumulants_from_moments(m, from);
    cs.flavor = to;
    return moments_from_cumulants(cs);
}

Rat partition_weighted_moment(const Category& cat, const Rat& t, const ColoredWord& word) {
    Rat acc = 0;
    for (const auto& p : enumerate_cat(cat, word)) acc += rpow(t, p.blocks());
    return acc;
}

} // namespace freeprob
