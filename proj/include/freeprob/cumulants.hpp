#pragma once

#include "freeprob/partition.hpp"
#include "freeprob/rational.hpp"

#include <vector>

namespace freeprob {

enum class Flavor { classical, free };

struct MomentSequence {
    std::vector<Rat> m; // m[i] is M_{i+1}; M_0 is implicitly 1
    long order() const { return (long)m.size(); }
    Rat at(long n) const; // M_n, n >= 0
};

struct CumulantSequence {
    std::vector<Rat> c; // c[i] is the (i+1)-st cumulant
    Flavor flavor = Flavor::classical;
    long order() const { return (long)c.size(); }
};

MomentSequence moments_from_cumulants(const CumulantSequence& c);
CumulantSequence cumulants_from_moments(const MomentSequence& m, Flavor flavor);

// read cumulants in `from` flavor, reinterpret them in `to` flavor, re-expand
MomentSequence bercovici_pata(const MomentSequence& m, Flavor from, Flavor to);

// sum over the category of t^(number of blocks)
Rat partition_weighted_moment(const Category& cat, const Rat& t, const ColoredWord& word);

} // namespace freeprob
