#pragma once

#include "freeprob/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace freeprob {

// Rooted bipartite multigraph given by its a-part x b-part multiplicity
// matrix; the root lives in the a-part. L = E E^t acts on the a-part.
struct RootedBipartiteGraph {
    std::vector<std::vector<Int>> E;
    long root = 0;
    long truncation_depth = 0; // > 0 when the graph truncates an infinite one
    std::string name;

    long na() const { return (long)E.size(); }
    long nb() const { return E.empty() ? 0 : (long)E[0].size(); }
    void validate() const; // rectangular, root in range, connected
};

// build from a plain vertex/edge list; the bipartition is inferred by walking
// from the root (odd cycles rejected)
RootedBipartiteGraph from_adjacency(long n_vertices,
                                    const std::vector<std::array<long, 3>>& edges,
                                    long root, const std::string& name = "",
                                    long truncation_depth = 0);

// names: A<k> (k>=2), D<k> (k>=3), A~<2k> (k>=1), D~<k> (k>=4), E6 E7 E8,
// E~6 E~7 E~8, A_inf, D_inf ("~" may be spelled "tilde"); depth is required
// for the two infinite families and ignored otherwise
RootedBipartiteGraph ade_graph(const std::string& name, long depth = 0);

// number of 2n-loops at the root, i.e. (L^n)_{root,root}
Int loop_count(const RootedBipartiteGraph& g, long n);

// Poincare coefficients c_0..c_order
std::vector<Int> poincare(const RootedBipartiteGraph& g, long order);

// theta coefficients a_0..a_order from the closed per-coefficient formula;
// a_0 = c_0, and the lone q of Theta(q) = q + (1-q)/(1+q) f(q/(1+q)^2)
// contributes the +1 at s = 1
std::vector<Int> theta_from_poincare(const std::vector<Int>& c, long order);

// same coefficients by direct truncated-series substitution into Theta(q)
std::vector<Int> theta_direct(const std::vector<Int>& c, long order);

// even moments of the circular measure: 2*integral of u^(2n) read off
// 1 + Theta(q) - q; entries n = 0..order
std::vector<Rat> circular_even_moments(const RootedBipartiteGraph& g, long order);

} // namespace freeprob
