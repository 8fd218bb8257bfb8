#pragma once

#include "freeprob/partition.hpp"
#include "freeprob/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace freeprob {

struct EasyGroup {
    enum class Series { S, O, U, B, H, K, Hs };
    Series series = Series::O;
    bool free = false; // the + versions
    long s = 1;        // parameter of the Hs series

    Category category() const;
    std::string name() const;
    static EasyGroup parse(const std::string& name, bool free_flag = false, long s = 1);
};

// the conventional word behind an integer k: S/B/H/Hs read k points, O reads
// k pairs (2k points, uncolored), U/K read k alternating ob pairs
ColoredWord default_word(const EasyGroup& g, long k);

struct WeingartenTable {
    EasyGroup group;
    ColoredWord word;
    long N = 0;
    std::vector<Partition> basis;
    std::vector<std::vector<Rat>> gram;
    std::vector<std::vector<Rat>> wg; // exact inverse of gram
};

std::vector<std::vector<Rat>> gram_matrix(const EasyGroup& g, const ColoredWord& word, long N);
// cached per (group, word, N); throws on singular gram
std::shared_ptr<const WeingartenTable> weingarten(const EasyGroup& g, const ColoredWord& word, long N);

// determinant of the gram matrix over the full lattice P(k), exact
Int gram_determinant(long k, long N);

// Haar integral of g_{r1 c1} g_{r2 c2} ... (conjugates per the colors);
// indices are 1-based
Rat integrate_monomial(const EasyGroup& g, long N, const std::vector<long>& rows,
                       const std::vector<long>& cols, const ColoredWord& colors);

// independent S_N oracle: (N - |ker i|)!/N! when ker i = ker j, else 0
Rat integrate_sn(long N, const std::vector<long>& rows, const std::vector<long>& cols);

// real case: x1^{e1} x2^{e2} ... over the real sphere; complex case reads the
// exponents as |z_a|^{2 e_a}
Rat sphere_integrate(bool complex_field, long N, const std::vector<long>& exponents);

// k-th moment of g_11 + ... + g_ss with s = floor(t N), as Tr(W_kN G_ks)
Rat truncated_character_moment(const EasyGroup& g, long N, const Rat& t, long k);

struct AsymptoticEstimate {
    long exponent = 0;          // N^{exponent} leading order
    Rat coefficient = 0;        // category-lattice Moebius when comparable
    bool coefficient_known = false;
};
AsymptoticEstimate weingarten_asymptotics(const EasyGroup& g, const Partition& pi,
                                          const Partition& nu, const ColoredWord& word);

// joint moments of two matrix entries in generic position over O_N
Rat on_two_generic_coordinates(long N, long alpha, long beta);

} // namespace freeprob
