#include "freeprob/weingarten.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace freeprob {

Category EasyGroup::category() const {
    using K = Category::Kind;
    Category c;
    c.s = s;
    switch (series) {
        case Series::S: c.kind = free ? K::NC : K::P; break;
        case Series::O: c.kind = free ? K::NC2 : K::P2; break;
        case Series::U: c.kind = free ? K::MatchNC2 : K::MatchP2; break;
        case Series::B: c.kind = free ? K::NC12 : K::P12; break;
        case Series::H: c.kind = free ? K::NCeven : K::Peven; break;
        case Series::K: c.kind = free ? K::MatchNCeven : K::MatchPeven; break;
        case Series::Hs: c.kind = free ? K::NCs : K::Ps; break;
    }
    return c;
}

std::string EasyGroup::name() const {
    std::string base;
    switch (series) {
        case Series::S: base = "S"; break;
        case Series::O: base = "O"; break;
        case Series::U: base = "U"; break;
        case Series::B: base = "B"; break;
        case Series::H: base = "H"; break;
        case Series::K: base = "K"; break;
        case Series::Hs: base = "Hs(" + std::to_string(s) + ")"; break;
    }
    return free ? base + "+" : base;
}

EasyGroup EasyGroup::parse(const std::string& name, bool free_flag, long s) {
    std::string base = name;
    if (!base.empty() && base.back() == '+') {
        free_flag = true;
        base.pop_back();
    }
    auto lp = base.find('(');
    if (lp != std::string::npos && base.back() == ')') {
        s = std::stol(base.substr(lp + 1, base.size() - lp - 2));
        base = base.substr(0, lp);
    }
    EasyGroup g;
    g.free = free_flag;
    g.s = s;
    if (base == "S") g.series = Series::S;
    else if (base == "O") g.series = Series::O;
    else if (base == "U") g.series = Series::U;
    else if (base == "B") g.series = Series::B;
    else if (base == "H") g.series = Series::H;
    else if (base == "K") g.series = Series::K;
    else if (base == "Hs") g.series = Series::Hs;
    else throw std::invalid_argument("unknown easy group: " + name);
    if (g.series == Series::Hs && g.s < 1)
        throw std::invalid_argument("Hs series needs s >= 1");
    return g;
}

ColoredWord default_word(const EasyGroup& g, long k) {
    switch (g.series) {
        case EasyGroup::Series::O:
            return ColoredWord::all_white(2 * k);
        case EasyGroup::Series::U:
        case EasyGroup::Series::K:
            return ColoredWord::alternating(k);
        default:
            return ColoredWord::all_white(k);
    }
}

namespace {

long word_cap() {
    if (const char* e = std::getenv("FREEPROB_MAX_K")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10;
}

std::vector<Partition> basis_for(const EasyGroup& g, const ColoredWord& word) {
    if (word.size() > word_cap())
        throw std::domain_error("weingarten word length limited to " + std::to_string(word_cap()) +
                                " (set FREEPROB_MAX_K to raise)");
    return enumerate_cat(g.category(), word);
}

} // namespace

std::vector<std::vector<Rat>> gram_matrix(const EasyGroup& g, const ColoredWord& word, long N) {
    if (N < 1) throw std::invalid_argument("gram: N >= 1");
    auto basis = basis_for(g, word);
    size_t n = basis.size();
    std::vector<std::vector<Rat>> G(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Rat v = Rat(ipow(N, join(basis[i], basis[j]).blocks()));
            G[i][j] = v;
            G[j][i] = v;
        }
    return G;
}

std::shared_ptr<const WeingartenTable> weingarten(const EasyGroup& g, const ColoredWord& word, long N) {
    static std::mutex mtx;
    static std::map<std::tuple<std::string, std::string, long>, std::shared_ptr<const WeingartenTable>> cache;
    auto key = std::make_tuple(g.name(), word.str(), N);
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto t = std::make_shared<WeingartenTable>();
    t->group = g;
    t->word = word;
    t->N = N;
    t->basis = basis_for(g, word);
    t->gram = gram_matrix(g, word, N);
    size_t n = t->basis.size();
    // exact Gauss-Jordan on [G | I]
    auto A = t->gram;
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n)
            throw std::runtime_error("singular Gram matrix for group " + g.name() + ", word " +
                                     word.str() + ", N = " + std::to_string(N));
        std::swap(A[col], A[piv]);
        std::swap(inv[col], inv[piv]);
        Rat p = A[col][col];
        for (size_t j = 0; j < n; ++j) {
            A[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (size_t j = 0; j < n; ++j) {
                A[r][j] -= f * A[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    t->wg = std::move(inv);
    std::shared_ptr<const WeingartenTable> out = t;
    std::lock_guard<std::mutex> lk(mtx);
    return cache.emplace(key, out).first->second;
}

Int gram_determinant(long k, long N) {
    if (k < 1) throw std::invalid_argument("gram_determinant: k >= 1");
    auto basis = enumerate_cat(Category{Category::Kind::P, 1}, (int)k);
    size_t n = basis.size();
    std::vector<std::vector<Int>> A(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            A[i][j] = ipow(N, join(basis[i], basis[j]).blocks());
    // Bareiss fraction-free elimination
    Int prev = 1;
    int sign = 1;
    for (size_t col = 0; col + 1 < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(A[col], A[piv]);
            sign = -sign;
        }
        for (size_t r = col + 1; r < n; ++r) {
            for (size_t j = col + 1; j < n; ++j)
                A[r][j] = (A[r][j] * A[col][col] - A[r][col] * A[col][j]) / prev;
            A[r][col] = 0;
        }
        prev = A[col][col];
    }
    return sign > 0 ? A[n - 1][n - 1] : -A[n - 1][n - 1];
}

Rat integrate_monomial(const EasyGroup& g, long N, const std::vector<long>& rows,
                       const std::vector<long>& cols, const ColoredWord& colors) {
    if (rows.size() != cols.size() || (int)rows.size() != colors.size())
        throw std::invalid_argument("integrate_monomial: rows, cols, colors must have equal length");
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i] < 1 || rows[i] > N || cols[i] < 1 || cols[i] > N)
            throw std::invalid_argument("integrate_monomial: indices must lie in 1..N");
    if (rows.empty()) return 1;
    auto table = weingarten(g, colors, N);
    size_t n = table->basis.size();
    if (n == 0) return 0;
    Partition keri = kernel(rows), kerj = kernel(cols);
    std::vector<char> di(n), dj(n);
    for (size_t i = 0; i < n; ++i) {
        di[i] = leq(table->basis[i], keri);
        dj[i] = leq(table->basis[i], kerj);
    }
    Rat acc = 0;
    for (size_t p = 0; p < n; ++p) {
        if (!di[p]) continue;
        for (size_t q = 0; q < n; ++q)
            if (dj[q]) acc += table->wg[p][q];
    }
    return acc;
}

Rat integrate_sn(long N, const std::vector<long>& rows, const std::vector<long>& cols) {
    Partition keri = kernel(rows), kerj = kernel(cols);
    if (!(keri == kerj)) return 0;
    long b = keri.blocks();
    if (b > N) return 0;
    return Rat(factorial(N - b)) / Rat(factorial(N));
}

Rat sphere_integrate(bool complex_field, long N, const std::vector<long>& exponents) {
    if (N < 1) throw std::invalid_argument("sphere_integrate: N >= 1");
    long total = 0;
    for (long e : exponents) {
        if (e < 0) throw std::invalid_argument("sphere_integrate: exponents >= 0");
        total += e;
    }
    if (complex_field) {
        // int |z_1|^{2k_1} ... = (N-1)! prod k_a! / (N + sum k_a - 1)!
        Int num = factorial(N - 1);
        for (long e : exponents) num *= factorial(e);
        return Rat(num) / Rat(factorial(N + total - 1));
    }
    for (long e : exponents)
        if (e % 2) return 0;
    // (N-1)!! prod k_a!! / (N + sum k_a - 1)!!, double factorials shifted
    Int num = df_shifted(N - 1);
    for (long e : exponents) num *= df_shifted(e);
    return Rat(num) / Rat(df_shifted(N + total - 1));
}

Rat truncated_character_moment(const EasyGroup& g, long N, const Rat& t, long k) {
    if (k < 0) throw std::invalid_argument("truncated_character_moment: k >= 0");
    Rat sN = t * N;
    Int fl = numerator(sN) / denominator(sN); // floor for positive t
    long s = fl.convert_to<long>();
    if (s < 1 || s > N) throw std::invalid_argument("truncated_character_moment: need 1 <= floor(tN) <= N");
    if (k == 0) return 1;
    ColoredWord word = ColoredWord::all_white(k);
    auto basis = enumerate_cat(g.category(), word);
    if (basis.empty()) return 0;
    auto table = weingarten(g, word, N);
    size_t n = basis.size();
    // Tr(W_kN G_ks) with G_ks over the same basis at dimension s
    Rat acc = 0;
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q)
            acc += table->wg[p][q] * Rat(ipow(s, join(basis[q], basis[p]).blocks()));
    return acc;
}

AsymptoticEstimate weingarten_asymptotics(const EasyGroup& g, const Partition& pi,
                                          const Partition& nu, const ColoredWord& word) {
    const Category cat = g.category();
    if (!in_category(pi, cat, word) || !in_category(nu, cat, word))
        throw std::invalid_argument("weingarten_asymptotics: partitions must lie in the category");
    AsymptoticEstimate est;
    est.exponent = join(pi, nu).blocks() - pi.blocks() - nu.blocks();
    const Partition *lo = nullptr, *hi = nullptr;
    if (leq(pi, nu)) { lo = &pi; hi = &nu; }
    else if (leq(nu, pi)) { lo = &nu; hi = &pi; }
    if (lo) {
        est.coefficient_known = true;
        using K = Category::Kind;
        if (cat.kind == K::P) est.coefficient = Rat(mobius(*lo, *hi, false));
        else if (cat.kind == K::NC) est.coefficient = Rat(mobius(*lo, *hi, true));
        else est.coefficient = Rat(mobius_in(enumerate_cat(cat, word), *lo, *hi));
    }
    return est;
}

Rat on_two_generic_coordinates(long N, long alpha, long beta) {
    if (N < 2) throw std::invalid_argument("on_two_generic_coordinates: N >= 2");
    if (alpha < 0 || beta < 0) throw std::invalid_argument("exponents must be >= 0");
    if (alpha % 2 || beta % 2) return 0;
    Rat num = Rat(factorial(N - 2) * df_shifted(alpha) * df_shifted(beta) * df_shifted(alpha + beta + N - 2));
    Rat den = Rat(df_shifted(alpha + N - 2) * df_shifted(beta + N - 2) * df_shifted(alpha + beta + N - 1));
    return num / den;
}

} // namespace freeprob
