#include "freeprob/graphs.hpp"

#include "freeprob/series.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace freeprob {

void RootedBipartiteGraph::validate() const {
    if (E.empty() || E[0].empty()) throw std::invalid_argument("graph needs both parts nonempty");
    for (const auto& row : E) {
        if ((long)row.size() != nb()) throw std::invalid_argument("ragged multiplicity matrix");
        for (const auto& x : row)
            if (x < 0) throw std::invalid_argument("negative edge multiplicity");
    }
    if (root < 0 || root >= na()) throw std::invalid_argument("root out of range");
    // connectivity over both parts
    std::vector<char> seen_a((size_t)na(), 0), seen_b((size_t)nb(), 0);
    std::deque<std::pair<char, long>> q{{'a', root}};
    seen_a[(size_t)root] = 1;
    while (!q.empty()) {
        auto [side, v] = q.front();
        q.pop_front();
        if (side == 'a') {
            for (long j = 0; j < nb(); ++j)
                if (E[(size_t)v][(size_t)j] > 0 && !seen_b[(size_t)j]) {
                    seen_b[(size_t)j] = 1;
                    q.emplace_back('b', j);
                }
        } else {
            for (long i = 0; i < na(); ++i)
                if (E[(size_t)i][(size_t)v] > 0 && !seen_a[(size_t)i]) {
                    seen_a[(size_t)i] = 1;
                    q.emplace_back('a', i);
                }
        }
    }
    if (std::count(seen_a.begin(), seen_a.end(), 1) != na() ||
        std::count(seen_b.begin(), seen_b.end(), 1) != nb())
        throw std::invalid_argument("graph is not connected");
}

RootedBipartiteGraph from_adjacency(long n_vertices,
                                    const std::vector<std::array<long, 3>>& edges,
                                    long root, const std::string& name,
                                    long truncation_depth) {
    if (n_vertices < 1 || root < 0 || root >= n_vertices)
        throw std::invalid_argument("bad vertex count or root");
    std::vector<std::vector<std::pair<long, long>>> adj((size_t)n_vertices);
    for (const auto& [u, v, mult] : edges) {
        if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices || u == v || mult < 1)
            throw std::invalid_argument("bad edge");
        adj[(size_t)u].emplace_back(v, mult);
        adj[(size_t)v].emplace_back(u, mult);
    }
    std::vector<int> side((size_t)n_vertices, -1);
    side[(size_t)root] = 0;
    std::deque<long> q{root};
    while (!q.empty()) {
        long v = q.front();
        q.pop_front();
        for (auto [w, mult] : adj[(size_t)v]) {
            if (side[(size_t)w] == -1) {
                side[(size_t)w] = 1 - side[(size_t)v];
                q.push_back(w);
            } else if (side[(size_t)w] == side[(size_t)v]) {
                throw std::invalid_argument("graph is not bipartite");
            }
        }
    }
    std::vector<long> idx((size_t)n_vertices, -1);
    long na = 0, nb = 0;
    for (long v = 0; v < n_vertices; ++v) {
        if (side[(size_t)v] == -1) throw std::invalid_argument("graph is not connected");
        idx[(size_t)v] = side[(size_t)v] == 0 ? na++ : nb++;
    }
    RootedBipartiteGraph g;
    g.E.assign((size_t)na, std::vector<Int>((size_t)nb, 0));
    for (const auto& [u, v, mult] : edges) {
        long a = side[(size_t)u] == 0 ? u : v;
        long b = side[(size_t)u] == 0 ? v : u;
        g.E[(size_t)idx[(size_t)a]][(size_t)idx[(size_t)b]] += mult;
    }
    g.root = idx[(size_t)root];
    g.name = name;
    g.truncation_depth = truncation_depth;
    g.validate();
    return g;
}

namespace {

using EdgeList = std::vector<std::array<long, 3>>;

EdgeList path_edges(long k) {
    EdgeList e;
    for (long i = 0; i + 1 < k; ++i) e.push_back({i, i + 1, 1});
    return e;
}

// accepted spellings: A5, A~4, Atilde4, E~7, A_inf, Ainf, D_inf
bool parse_ade_name(const std::string& name, char& letter, bool& tilde, long& k, bool& inf) {
    size_t p = 0;
    if (p >= name.size()) return false;
    letter = name[p++];
    tilde = false;
    if (p < name.size() && name[p] == '~') {
        tilde = true;
        ++p;
    } else if (name.compare(p, 5, "tilde") == 0) {
        tilde = true;
        p += 5;
    }
    if (p < name.size() && name[p] == '_') ++p;
    inf = name.compare(p, std::string::npos, "inf") == 0;
    if (inf) return true;
    if (p >= name.size()) return false;
    k = 0;
    for (; p < name.size(); ++p) {
        if (name[p] < '0' || name[p] > '9') return false;
        k = k * 10 + (name[p] - '0');
    }
    return true;
}

} // namespace

RootedBipartiteGraph ade_graph(const std::string& name, long depth) {
    char letter = 0;
    bool tilde = false, inf = false;
    long k = 0;
    if (!parse_ade_name(name, letter, tilde, k, inf))
        throw std::invalid_argument("unrecognized graph name: " + name);
    auto bad = [&]() { return std::invalid_argument("parameter out of range for " + name); };

    if (inf) {
        if (tilde || (letter != 'A' && letter != 'D')) throw bad();
        if (depth < 2) throw std::invalid_argument("truncated infinite graph needs depth >= 2");
        if (letter == 'A') // half-line, vertices 0..depth
            return from_adjacency(depth + 1, path_edges(depth + 1), 0, name, depth);
        // D_inf: half-line with an extra leaf at the root's neighbor
        EdgeList e = path_edges(depth + 1);
        e.push_back({1, depth + 1, 1});
        return from_adjacency(depth + 2, e, 0, name, depth);
    }

    switch (letter) {
        case 'A':
            if (!tilde) {
                if (k < 2) throw bad();
                return from_adjacency(k, path_edges(k), 0, name);
            }
            // A~_{2k}: the 2k-cycle; the doubled edge at k = 1
            if (k < 2 || k % 2) throw bad();
            if (k == 2) return from_adjacency(2, {{0, 1, 2}}, 0, name);
            {
                EdgeList e = path_edges(k);
                e.push_back({k - 1, 0, 1});
                return from_adjacency(k, e, 0, name);
            }
        case 'D':
            if (!tilde) {
                // path v1..v_{k-1} plus a leaf at v_{k-2}, rooted at v1
                if (k < 3) throw bad();
                EdgeList e = path_edges(k - 1);
                e.push_back({k - 3, k - 1, 1});
                return from_adjacency(k, e, 0, name);
            }
            {
                // path v1..v_{k-1} with leaves at v2 and v_{k-2}, k+1 vertices
                if (k < 4) throw bad();
                EdgeList e = path_edges(k - 1);
                e.push_back({1, k - 1, 1});
                e.push_back({k - 3, k, 1});
                return from_adjacency(k + 1, e, 0, name);
            }
        case 'E': {
            if (k < 6 || k > 8) throw bad();
            if (!tilde) {
                // path of k-1 with a leaf at v3/v4/v5, rooted at the long end
                EdgeList e = path_edges(k - 1);
                e.push_back({k - 4, k - 1, 1});
                return from_adjacency(k, e, 0, name);
            }
            if (k == 6) {
                // three arms of length 2; root at an arm end
                EdgeList e{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 5, 1}, {5, 6, 1}};
                return from_adjacency(7, e, 0, name);
            }
            if (k == 7) {
                EdgeList e = path_edges(7);
                e.push_back({3, 7, 1});
                return from_adjacency(8, e, 0, name);
            }
            EdgeList e = path_edges(8);
            e.push_back({5, 8, 1});
            return from_adjacency(9, e, 0, name);
        }
        default:
            throw std::invalid_argument("unrecognized graph name: " + name);
    }
}

namespace {

// u <- L u with L = E E^t, computed as E (E^t u)
void apply_loop_matrix(const RootedBipartiteGraph& g, std::vector<Int>& u) {
    std::vector<Int> w((size_t)g.nb(), 0);
    for (long i = 0; i < g.na(); ++i)
        for (long j = 0; j < g.nb(); ++j) w[(size_t)j] += g.E[(size_t)i][(size_t)j] * u[(size_t)i];
    std::vector<Int> v((size_t)g.na(), 0);
    for (long i = 0; i < g.na(); ++i)
        for (long j = 0; j < g.nb(); ++j) v[(size_t)i] += g.E[(size_t)i][(size_t)j] * w[(size_t)j];
    u = std::move(v);
}

} // namespace

Int loop_count(const RootedBipartiteGraph& g, long n) {
    if (n < 0) throw std::invalid_argument("loop length must be nonnegative");
    g.validate();
    std::vector<Int> u((size_t)g.na(), 0);
    u[(size_t)g.root] = 1;
    for (long i = 0; i < n; ++i) apply_loop_matrix(g, u);
    return u[(size_t)g.root];
}

std::vector<Int> poincare(const RootedBipartiteGraph& g, long order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    g.validate();
    std::vector<Int> u((size_t)g.na(), 0);
    u[(size_t)g.root] = 1;
    std::vector<Int> c{1};
    for (long n = 1; n <= order; ++n) {
        apply_loop_matrix(g, u);
        c.push_back(u[(size_t)g.root]);
    }
    return c;
}

std::vector<Int> theta_from_poincare(const std::vector<Int>& c, long order) {
    if (order < 0 || (long)c.size() <= order)
        throw std::invalid_argument("need Poincare coefficients through the requested order");
    std::vector<Int> a{c[0]};
    for (long s = 1; s <= order; ++s) {
        Rat as = s == 1 ? 1 : 0; // the lone q of Theta
        for (long n = 0; n <= s; ++n) {
            Rat term = Rat(2 * s) * Rat(binomial(s + n, s - n)) / Rat(s + n);
            if ((s - n) % 2) term = -term;
            as += term * Rat(c[(size_t)n]);
        }
        if (denominator(as) != 1) throw std::logic_error("theta coefficient is not an integer");
        a.push_back(numerator(as));
    }
    return a;
}

std::vector<Int> theta_direct(const std::vector<Int>& c, long order) {
    if (order < 0 || (long)c.size() <= order)
        throw std::invalid_argument("need Poincare coefficients through the requested order");
    std::vector<Rat> f(c.size());
    for (size_t i = 0; i < c.size(); ++i) f[i] = Rat(c[i]);
    const std::vector<Rat> one_plus_q{1, 1}, one_minus_q{1, -1};
    // g = q/(1+q)^2
    auto g = series_mul({0, 1}, series_inv(series_mul(one_plus_q, one_plus_q, order), order), order);
    auto theta = series_mul(series_mul(one_minus_q, series_inv(one_plus_q, order), order),
                            series_compose(f, g, order), order);
    if (order >= 1) theta[1] += 1;
    std::vector<Int> a;
    for (long s = 0; s <= order; ++s) {
        if (denominator(theta[(size_t)s]) != 1)
            throw std::logic_error("theta coefficient is not an integer");
        a.push_back(numerator(theta[(size_t)s]));
    }
    return a;
}

std::vector<Rat> circular_even_moments(const RootedBipartiteGraph& g, long order) {
    auto a = theta_from_poincare(poincare(g, order), order);
    std::vector<Rat> eps;
    eps.push_back(Rat(1 + a[0]) / 2);
    if (order >= 1) eps.push_back(Rat(a[1] - 1) / 2);
    for (long n = 2; n <= order; ++n) eps.push_back(Rat(a[(size_t)n]) / 2);
    return eps;
}

} // namespace freeprob
