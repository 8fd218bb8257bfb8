#include "freeprob/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

namespace freeprob {

int Partition::blocks() const {
    int m = 0;
    for (int v : rgs) m = std::max(m, v + 1);
    return m;
}

std::vector<std::vector<int>> Partition::block_list() const {
    std::vector<std::vector<int>> out(blocks());
    for (int i = 0; i < size(); ++i) out[rgs[i]].push_back(i);
    return out;
}

std::vector<int> Partition::block_sizes() const {
    std::vector<int> out(blocks(), 0);
    for (int v : rgs) ++out[v];
    return out;
}

std::string Partition::str() const {
    auto bl = block_list();
    std::string s;
    for (const auto& b : bl) {
        s += '{';
        for (size_t j = 0; j < b.size(); ++j) {
            if (j) s += ',';
            s += std::to_string(b[j] + 1);
        }
        s += '}';
    }
    if (s.empty()) s = "{}";
    return s;
}

Partition kernel(const std::vector<long>& idx) {
    std::map<long, int> seen;
    std::vector<int> r(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) {
        auto it = seen.find(idx[i]);
        if (it == seen.end()) it = seen.emplace(idx[i], (int)seen.size()).first;
        r[i] = it->second;
    }
    return Partition(std::move(r));
}

Partition rgs_checked(std::vector<int> labels) {
    int mx = -1;
    for (int v : labels) {
        if (v < 0 || v > mx + 1) throw std::invalid_argument("not a restricted growth string");
        mx = std::max(mx, v);
    }
    return Partition(std::move(labels));
}

bool leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("partition size mismatch");
    // a <= b iff each a-block maps into a single b-block
    std::vector<int> img(a.blocks(), -1);
    for (int i = 0; i < a.size(); ++i) {
        int& m = img[a.rgs[i]];
        if (m == -1) m = b.rgs[i];
        else if (m != b.rgs[i]) return false;
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { for (int i = 0; i < n; ++i) up[i] = i; }
    int find(int x) { while (up[x] != x) x = up[x] = up[up[x]]; return x; }
    void unite(int a, int b) { up[find(a)] = find(b); }
};

} // namespace

Partition join(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("partition size mismatch");
    int n = a.size();
    UnionFind uf(n);
    std::vector<int> firstA(a.blocks(), -1), firstB(b.blocks(), -1);
    for (int i = 0; i < n; ++i) {
        int& fa = firstA[a.rgs[i]];
        if (fa == -1) fa = i; else uf.unite(i, fa);
        int& fb = firstB[b.rgs[i]];
        if (fb == -1) fb = i; else uf.unite(i, fb);
    }
    std::vector<long> lab(n);
    for (int i = 0; i < n; ++i) lab[i] = uf.find(i);
    return kernel(lab);
}

Partition meet(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("partition size mismatch");
    std::vector<long> lab(a.size());
    for (int i = 0; i < a.size(); ++i)
        lab[i] = (long)a.rgs[i] * (a.size() + 1) + b.rgs[i];
    return kernel(lab);
}

bool is_noncrossing(const Partition& p) {
    int n = p.size();
    std::vector<int> lastpos(p.blocks(), -1);
    for (int i = 0; i < n; ++i) lastpos[p.rgs[i]] = i;
    std::vector<int> open; // stack of currently open blocks
    for (int i = 0; i < n; ++i) {
        int b = p.rgs[i];
        if (open.empty() || open.back() != b) {
            for (int c : open)
                if (c == b) return false; // reappears under another open block
            open.push_back(b);
        }
        if (lastpos[b] == i) open.pop_back();
    }
    return true;
}

int even_block_count(const Partition& p) {
    int n = 0;
    for (int s : p.block_sizes())
        if (s % 2 == 0) ++n;
    return n;
}

Partition fatten(const Partition& p) {
    if (!is_noncrossing(p)) throw std::invalid_argument("fatten requires a noncrossing partition");
    int k = p.size();
    // point i splits into legs 2i (left) and 2i+1 (right); each block
    // {i1<...<im} turns into pairs (2ij+1, 2i(j+1)) plus the wrap (2i1, 2im+1)
    std::vector<long> lab(2 * k);
    int next = 0;
    for (const auto& b : p.block_list()) {
        int m = (int)b.size();
        for (int j = 0; j + 1 < m; ++j) {
            lab[2 * b[j] + 1] = next;
            lab[2 * b[j + 1]] = next;
            ++next;
        }
        lab[2 * b[0]] = next;
        lab[2 * b[m - 1] + 1] = next;
        ++next;
    }
    return kernel(lab);
}

Partition shrink(const Partition& q) {
    if (q.size() % 2 != 0) throw std::invalid_argument("shrink requires an even number of points");
    for (int s : q.block_sizes())
        if (s != 2) throw std::invalid_argument("shrink requires a pairing");
    if (!is_noncrossing(q)) throw std::invalid_argument("shrink requires a noncrossing pairing");
    int k = q.size() / 2;
    UnionFind uf(k);
    std::vector<int> firstleg(q.blocks(), -1);
    for (int i = 0; i < q.size(); ++i) {
        int& f = firstleg[q.rgs[i]];
        if (f == -1) f = i; else uf.unite(i / 2, f / 2);
    }
    std::vector<long> lab(k);
    for (int i = 0; i < k; ++i) lab[i] = uf.find(i);
    return kernel(lab);
}

ColoredWord ColoredWord::alternating(int pairs) {
    std::vector<Color> v;
    v.reserve(2 * pairs);
    for (int i = 0; i < pairs; ++i) {
        v.push_back(Color::white);
        v.push_back(Color::black);
    }
    return ColoredWord(std::move(v));
}

ColoredWord ColoredWord::parse(const std::string& ob) {
    std::vector<Color> v;
    v.reserve(ob.size());
    for (char c : ob) {
        if (c == 'o' || c == 'O' || c == 'w') v.push_back(Color::white);
        else if (c == 'b' || c == 'B') v.push_back(Color::black);
        else throw std::invalid_argument("color word must use letters o (white) and b (black)");
    }
    return ColoredWord(std::move(v));
}

std::string ColoredWord::str() const {
    std::string s;
    for (Color c : w) s += (c == Color::white ? 'o' : 'b');
    return s;
}

bool Category::noncrossing() const {
    switch (kind) {
        case Kind::NC: case Kind::NC2: case Kind::NCeven: case Kind::NCs: case Kind::NC12:
        case Kind::MatchNC2: case Kind::MatchNCeven:
            return true;
        default:
            return false;
    }
}

bool Category::pairs_only() const {
    return kind == Kind::P2 || kind == Kind::NC2 || kind == Kind::MatchP2 || kind == Kind::MatchNC2;
}

bool Category::singletons_pairs() const {
    return kind == Kind::P12 || kind == Kind::NC12;
}

bool Category::uses_colors() const {
    switch (kind) {
        case Kind::Ps: case Kind::NCs:
        case Kind::MatchP2: case Kind::MatchNC2:
        case Kind::MatchPeven: case Kind::MatchNCeven:
            return true;
        default:
            return false;
    }
}

long Category::color_modulus() const {
    switch (kind) {
        case Kind::Ps: case Kind::NCs: return s;
        case Kind::MatchP2: case Kind::MatchNC2:
        case Kind::MatchPeven: case Kind::MatchNCeven: return kInfinity;
        default: return 1;
    }
}

std::string Category::name() const {
    switch (kind) {
        case Kind::P: return "P";
        case Kind::P2: return "P2";
        case Kind::Peven: return "Peven";
        case Kind::Ps: return "Ps(" + std::to_string(s) + ")";
        case Kind::P12: return "P12";
        case Kind::NC: return "NC";
        case Kind::NC2: return "NC2";
        case Kind::NCeven: return "NCeven";
        case Kind::NCs: return "NCs(" + std::to_string(s) + ")";
        case Kind::NC12: return "NC12";
        case Kind::MatchP2: return "MatchP2";
        case Kind::MatchNC2: return "MatchNC2";
        case Kind::MatchPeven: return "MatchPeven";
        case Kind::MatchNCeven: return "MatchNCeven";
    }
    return "?";
}

Category Category::parse(const std::string& name, long s) {
    std::string base = name;
    auto lp = name.find('(');
    if (lp != std::string::npos && name.back() == ')') {
        base = name.substr(0, lp);
        s = std::stol(name.substr(lp + 1, name.size() - lp - 2));
    }
    Category c;
    c.s = s;
    if (base == "P") c.kind = Kind::P;
    else if (base == "P2") c.kind = Kind::P2;
    else if (base == "Peven") c.kind = Kind::Peven;
    else if (base == "Ps") c.kind = Kind::Ps;
    else if (base == "P12") c.kind = Kind::P12;
    else if (base == "NC") c.kind = Kind::NC;
    else if (base == "NC2") c.kind = Kind::NC2;
    else if (base == "NCeven") c.kind = Kind::NCeven;
    else if (base == "NCs") c.kind = Kind::NCs;
    else if (base == "NC12") c.kind = Kind::NC12;
    else if (base == "MatchP2") c.kind = Kind::MatchP2;
    else if (base == "MatchNC2") c.kind = Kind::MatchNC2;
    else if (base == "MatchPeven") c.kind = Kind::MatchPeven;
    else if (base == "MatchNCeven") c.kind = Kind::MatchNCeven;
    else throw std::invalid_argument("unknown partition category: " + name);
    if ((c.kind == Kind::Ps || c.kind == Kind::NCs) && c.s < 1)
        throw std::invalid_argument("category parameter s must be >= 1");
    return c;
}

bool in_category(const Partition& p, const Category& cat, const ColoredWord& word) {
    if (cat.uses_colors() && word.size() != p.size())
        throw std::invalid_argument("color word length must match partition size");
    auto sizes = p.block_sizes();
    for (int sz : sizes) {
        if (cat.pairs_only() && sz != 2) return false;
        if (cat.singletons_pairs() && sz > 2) return false;
        if ((cat.kind == Category::Kind::Peven || cat.kind == Category::Kind::NCeven) && sz % 2 != 0)
            return false;
    }
    long mod = cat.color_modulus();
    if (mod != 1) {
        std::vector<long> signedcnt(p.blocks(), 0);
        for (int i = 0; i < p.size(); ++i)
            signedcnt[p.rgs[i]] += (word.w[i] == Color::white) ? 1 : -1;
        for (long v : signedcnt) {
            if (mod == kInfinity) { if (v != 0) return false; }
            else if (((v % mod) + mod) % mod != 0) return false;
        }
    }
    if (cat.noncrossing() && !is_noncrossing(p)) return false;
    return true;
}

namespace {

long env_cap(long dflt) {
    if (const char* e = std::getenv("FREEPROB_MAX_K")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return dflt;
}

// minimum number of further points a block needs before it can close legally
long deficit(const Category& cat, int size, long signedcnt) {
    switch (cat.kind) {
        case Category::Kind::P2: case Category::Kind::NC2:
            return size >= 2 ? 0 : 2 - size;
        case Category::Kind::MatchP2: case Category::Kind::MatchNC2:
            return size >= 2 ? 0 : 2 - size;
        case Category::Kind::Peven: case Category::Kind::NCeven:
            return size % 2;
        case Category::Kind::MatchPeven: case Category::Kind::MatchNCeven:
            return signedcnt < 0 ? -signedcnt : signedcnt;
        case Category::Kind::Ps: case Category::Kind::NCs: {
            long v = ((signedcnt % cat.s) + cat.s) % cat.s;
            return std::min(v, cat.s - v);
        }
        default:
            return 0;
    }
}

struct RgsEnum {
    int k;
    const Category& cat;
    const std::vector<Color>& colors;
    std::vector<Partition>& out;
    std::vector<int> rgs;
    std::vector<int> size, minpos, lastpos;
    std::vector<long> signedcnt;
    long totaldeficit = 0;

    RgsEnum(int k_, const Category& c, const std::vector<Color>& col, std::vector<Partition>& o)
        : k(k_), cat(c), colors(col), out(o), rgs(k_) {}

    void rec(int i) {
        if (i == k) {
            if (totaldeficit == 0) out.emplace_back(rgs);
            return;
        }
        long delta = (colors[i] == Color::white) ? 1 : -1;
        int nb = (int)size.size();
        for (int b = 0; b <= nb; ++b) {
            if (b < nb) {
                if (cat.pairs_only() && size[b] >= 2) continue;
                if (cat.singletons_pairs() && size[b] >= 2) continue;
                if (cat.noncrossing()) {
                    bool blocked = false;
                    for (int c = 0; c < nb && !blocked; ++c)
                        if (c != b && minpos[c] < lastpos[b] && lastpos[b] < lastpos[c])
                            blocked = true;
                    if (blocked) continue;
                }
            }
            int oldlast = 0;
            long olddef;
            if (b == nb) {
                size.push_back(1);
                minpos.push_back(i);
                lastpos.push_back(i);
                signedcnt.push_back(delta);
                olddef = 0;
            } else {
                olddef = deficit(cat, size[b], signedcnt[b]);
                oldlast = lastpos[b];
                ++size[b];
                lastpos[b] = i;
                signedcnt[b] += delta;
            }
            long newdef = deficit(cat, size[b], signedcnt[b]);
            totaldeficit += newdef - olddef;
            rgs[i] = b;
            if (totaldeficit <= k - i - 1) rec(i + 1);
            totaldeficit -= newdef - olddef;
            if (b == nb) {
                size.pop_back();
                minpos.pop_back();
                lastpos.pop_back();
                signedcnt.pop_back();
            } else {
                --size[b];
                lastpos[b] = oldlast;
                signedcnt[b] -= delta;
            }
        }
    }
};

// dedicated engine for pair categories: match the first free point in turn
struct PairEnum {
    int k;
    const Category& cat;
    const std::vector<Color>& colors;
    std::vector<Partition>& out;
    std::vector<int> partner;

    PairEnum(int k_, const Category& c, const std::vector<Color>& col, std::vector<Partition>& o)
        : k(k_), cat(c), colors(col), out(o), partner(k_, -1) {}

    void rec() {
        int i = 0;
        while (i < k && partner[i] != -1) ++i;
        if (i == k) {
            std::vector<long> lab(k);
            for (int a = 0; a < k; ++a) lab[a] = std::min(a, partner[a]);
            out.push_back(kernel(lab));
            return;
        }
        bool mixed = cat.color_modulus() == kInfinity;
        for (int j = i + 1; j < k; ++j) {
            if (partner[j] != -1) continue;
            if (mixed && colors[i] == colors[j]) continue;
            if (cat.noncrossing()) {
                bool cross = false;
                for (int a = 0; a < k && !cross; ++a) {
                    int b = partner[a];
                    if (b <= a) continue;
                    if ((a < i && i < b && b < j) || (i < a && a < j && j < b)) cross = true;
                }
                if (cross) continue;
            }
            partner[i] = j;
            partner[j] = i;
            rec();
            partner[i] = -1;
            partner[j] = -1;
        }
    }
};

void sort_canonical(std::vector<Partition>& v) {
    std::sort(v.begin(), v.end(), [](const Partition& a, const Partition& b) {
        int ba = a.blocks(), bb = b.blocks();
        if (ba != bb) return ba < bb;
        return a.rgs < b.rgs;
    });
}

Int count_blocksize_recurrence(int k, const std::function<bool(int)>& ok) {
    // partitions of {1..k} with every block size allowed by ok:
    // a(n) = sum_m C(n-1, m-1) [ok(m)] a(n-m), block of the last point has size m
    std::vector<Int> a(k + 1);
    a[0] = 1;
    for (int n = 1; n <= k; ++n) {
        Int t = 0;
        for (int m = 1; m <= n; ++m)
            if (ok(m)) t += binomial(n - 1, m - 1) * a[n - m];
        a[n] = t;
    }
    return a[k];
}

Int motzkin(int k) {
    std::vector<Int> m(k + 1);
    m[0] = 1;
    for (int n = 1; n <= k; ++n) {
        Int t = m[n - 1];
        for (int i = 0; i + 2 <= n; ++i) t += m[i] * m[n - 2 - i];
        m[n] = t;
    }
    return m[k];
}

Int catalan_int(int n) {
    return binomial(2 * n, n) / Int(n + 1);
}

Int fuss_catalan_int(long s, long n) {
    // 1/(s n + 1) * C((s+1) n, n) = (sn+2)(sn+3)...(sn+n) / n!
    Int num = 1;
    for (long j = 2; j <= n; ++j) num *= (s * n + j);
    return num / factorial(n);
}

} // namespace

std::vector<Partition> enumerate_cat(const Category& cat, const ColoredWord& word) {
    int k = word.size();
    long cap = env_cap(12);
    if (k > cap)
        throw std::domain_error("enumeration limited to k <= " + std::to_string(cap) +
                                " points (set FREEPROB_MAX_K to raise)");
    std::vector<Partition> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    if (cat.pairs_only()) {
        if (k % 2 == 0) {
            PairEnum e(k, cat, word.w, out);
            e.rec();
        }
    } else {
        RgsEnum e(k, cat, word.w, out);
        e.rec(0);
        if (cat.noncrossing() || cat.color_modulus() != 1) {
            // the pruning is exact, but keep the authoritative predicate as a net
            std::erase_if(out, [&](const Partition& p) { return !in_category(p, cat, word); });
        }
    }
    sort_canonical(out);
    return out;
}

std::vector<Partition> enumerate_cat(const Category& cat, int k) {
    return enumerate_cat(cat, ColoredWord::all_white(k));
}

Int count_cat(const Category& cat, const ColoredWord& word) {
    int k = word.size();
    if (k == 0) return 1;
    int whites = 0;
    for (Color c : word.w)
        if (c == Color::white) ++whites;
    int blacks = k - whites;
    bool allwhite = (blacks == 0);
    using K = Category::Kind;
    switch (cat.kind) {
        case K::P: {
            std::vector<Int> bell(k + 1);
            bell[0] = 1;
            for (int n = 1; n <= k; ++n) {
                Int t = 0;
                for (int m = 0; m < n; ++m) t += binomial(n - 1, m) * bell[m];
                bell[n] = t;
            }
            return bell[k];
        }
        case K::P2:
            return k % 2 ? Int(0) : df_std(k - 1);
        case K::NC:
            return catalan_int(k);
        case K::NC2:
            return k % 2 ? Int(0) : catalan_int(k / 2);
        case K::P12: {
            std::vector<Int> inv(k + 1);
            inv[0] = 1;
            if (k >= 1) inv[1] = 1;
            for (int n = 2; n <= k; ++n) inv[n] = inv[n - 1] + Int(n - 1) * inv[n - 2];
            return inv[k];
        }
        case K::NC12:
            return motzkin(k);
        case K::Peven:
            return count_blocksize_recurrence(k, [](int m) { return m % 2 == 0; });
        case K::NCeven:
            return k % 2 ? Int(0) : fuss_catalan_int(2, k / 2);
        case K::MatchP2:
            return whites == blacks ? factorial(whites) : Int(0);
        case K::Ps:
            if (allwhite)
                return count_blocksize_recurrence(k, [&](int m) { return m % cat.s == 0; });
            break;
        case K::NCs:
            if (allwhite)
                return k % cat.s ? Int(0) : fuss_catalan_int(cat.s, k / cat.s);
            break;
        default:
            break;
    }
    return Int(enumerate_cat(cat, word).size());
}

Int count_cat(const Category& cat, int k) {
    return count_cat(cat, ColoredWord::all_white(k));
}

namespace {

Int mobius_interval(const std::vector<Partition>& interval, const Partition& a, const Partition& b) {
    // interval holds every c with a <= c <= b; mu(a,c) = -sum_{a<=d<c} mu(a,d),
    // filled in order of decreasing block count (refinement goes downward)
    std::vector<int> order(interval.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return interval[x].blocks() > interval[y].blocks();
    });
    std::vector<Int> mu(interval.size());
    Int mub = 0;
    for (size_t oi = 0; oi < order.size(); ++oi) {
        int c = order[oi];
        if (interval[c] == a) {
            mu[c] = 1;
        } else {
            Int t = 0;
            for (size_t oj = 0; oj < oi; ++oj) {
                int d = order[oj];
                if (leq(interval[d], interval[c])) t += mu[d];
            }
            mu[c] = -t;
        }
        if (interval[c] == b) mub = mu[c];
    }
    return mub;
}

} // namespace

Int mobius(const Partition& a, const Partition& b, bool nc_lattice) {
    if (a.size() != b.size()) throw std::invalid_argument("partition size mismatch");
    if (!leq(a, b)) return 0;
    if (!nc_lattice) {
        // [a,b] in P(k) factors over blocks of b; each factor contributes
        // (-1)^(n-1) (n-1)! where n = number of a-blocks inside
        std::vector<int> count(b.blocks(), 0);
        std::vector<int> seen(a.blocks(), 0);
        for (int i = 0; i < a.size(); ++i) {
            if (!seen[a.rgs[i]]) {
                seen[a.rgs[i]] = 1;
                ++count[b.rgs[i]];
            }
        }
        Int m = 1;
        for (int n : count) {
            Int f = factorial(n - 1);
            m *= (n % 2 == 0) ? -f : f;
        }
        return m;
    }
    if (!is_noncrossing(a) || !is_noncrossing(b))
        throw std::invalid_argument("noncrossing lattice Moebius needs noncrossing arguments");
    if (a == b) return 1;
    auto all = enumerate_cat(Category{Category::Kind::NC, 1}, a.size());
    std::vector<Partition> interval;
    for (auto& c : all)
        if (leq(a, c) && leq(c, b)) interval.push_back(c);
    return mobius_interval(interval, a, b);
}

Int mobius_in(const std::vector<Partition>& poset, const Partition& a, const Partition& b) {
    if (!leq(a, b)) return 0;
    if (a == b) return 1;
    std::vector<Partition> interval;
    for (const auto& c : poset)
        if (leq(a, c) && leq(c, b)) interval.push_back(c);
    bool hasA = false, hasB = false;
    for (const auto& c : interval) {
        if (c == a) hasA = true;
        if (c == b) hasB = true;
    }
    if (!hasA || !hasB) throw std::invalid_argument("interval endpoints missing from poset");
    return mobius_interval(interval, a, b);
}

} // namespace freeprob
