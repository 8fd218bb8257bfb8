#pragma once

#include "freeprob/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace freeprob {

// Set partition of {1..k} in canonical restricted-growth form: rgs[i] is the
// block label of point i (0-based), labels appear in first-use order.
struct Partition {
    std::vector<int> rgs;

    Partition() = default;
    explicit Partition(std::vector<int> r) : rgs(std::move(r)) {}

    int size() const { return (int)rgs.size(); }
    int blocks() const;
    std::vector<std::vector<int>> block_list() const; // 0-based positions per block
    std::vector<int> block_sizes() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string str() const; // e.g. {1,3}{2}
};

// canonical relabeling: i,j share a block iff idx[i] == idx[j]
Partition kernel(const std::vector<long>& idx);
Partition rgs_checked(std::vector<int> labels); // validates the RGS property

bool leq(const Partition& a, const Partition& b); // every a-block inside a b-block
Partition join(const Partition& a, const Partition& b);
Partition meet(const Partition& a, const Partition& b);
bool is_noncrossing(const Partition& p);
int even_block_count(const Partition& p); // the quantity ||pi||

Partition fatten(const Partition& p); // NC(k) -> NC2(2k), legs doubled
Partition shrink(const Partition& q); // inverse, collapse {2i-1,2i}

enum class Color : uint8_t { white, black };

struct ColoredWord {
    std::vector<Color> w;

    ColoredWord() = default;
    explicit ColoredWord(std::vector<Color> v) : w(std::move(v)) {}
    static ColoredWord all_white(int k) { return ColoredWord(std::vector<Color>(k, Color::white)); }
    static ColoredWord alternating(int pairs); // wbwb... length 2*pairs
    static ColoredWord parse(const std::string& ob); // letters o/b (also w for white)
    std::string str() const;
    int size() const { return (int)w.size(); }
};

// s = 1: no color constraint; s = 2: even case; s = kInfinity: exact balance.
inline constexpr long kInfinity = -1;

struct Category {
    enum class Kind {
        P, P2, Peven, Ps, P12, NC, NC2, NCeven, NCs, NC12,
        MatchP2, MatchNC2, MatchPeven, MatchNCeven
    };
    Kind kind = Kind::P;
    long s = 1; // parameter of Ps/NCs

    bool noncrossing() const;
    bool pairs_only() const;      // all blocks of size exactly 2
    bool singletons_pairs() const; // block sizes <= 2
    bool uses_colors() const;
    long color_modulus() const; // 1, 2, s, or kInfinity
    std::string name() const;
    static Category parse(const std::string& name, long s = 1);
};

bool in_category(const Partition& p, const Category& cat, const ColoredWord& word);

// every member exactly once, sorted by (block count, lexicographic rgs)
std::vector<Partition> enumerate_cat(const Category& cat, const ColoredWord& word);
std::vector<Partition> enumerate_cat(const Category& cat, int k);
Int count_cat(const Category& cat, const ColoredWord& word);
Int count_cat(const Category& cat, int k);

// Moebius function of the full partition lattice (nc=false) or of the
// noncrossing lattice (nc=true; rejects crossing arguments).
Int mobius(const Partition& a, const Partition& b, bool nc_lattice);

// Moebius function of an arbitrary finite sub-poset given by its elements
Int mobius_in(const std::vector<Partition>& poset, const Partition& a, const Partition& b);

} // namespace freeprob
