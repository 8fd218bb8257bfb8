#pragma once

#include "freeprob/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace freeprob {

Int catalan(long k);
Int bell(long k);

// product form (sk+2)(sk+3)...(sk+k)/k!, a polynomial in s of degree k-1
Rat fuss_catalan(const Rat& s, long k);

// sum_{b=1}^{k} (1/b) C(k-1,b-1) binom(sk, b-1) t^b
Rat fuss_narayana(const Rat& s, long k, const Rat& t);

// probability that a uniform permutation of N points has exactly r fixed points
Rat derangement_profile(long N, long r);

Int stirling2(long r, long b);

// 32-card deck, 5-card hands: the published table of the eight ranked classes
std::vector<std::pair<std::string, Rat>> poker_probabilities();
// same classes (plus high_card) from a full scan of all C(32,5) hands
std::vector<std::pair<std::string, Rat>> poker_probabilities_enumerated();

// (c, e) with vol(ball)/2^N = c * (pi/2)^e, c = 1/(N+1)!!, e = floor(N/2)
std::pair<Rat, long> sphere_volume_ratio(long N);

} // namespace freeprob
