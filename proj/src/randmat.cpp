#include "freeprob/randmat.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace freeprob {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
    return mix64(mix64(master) ^ mix64(trial + 1));
}

std::vector<std::uint64_t> expand_seeds(std::uint64_t master, long trials) {
    std::vector<std::uint64_t> out;
    out.reserve((size_t)trials);
    for (long i = 0; i < trials; ++i) out.push_back(trial_seed(master, (std::uint64_t)i));
    return out;
}

double Rng::u01() {
    // 53-bit mantissa shifted into (0,1] so log() below is always finite
    return (double)((eng() >> 11) + 1) * 0x1p-53;
}

double Rng::gauss() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(u01()));
    const double a = 2.0 * std::numbers::pi * u01();
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

std::complex<double> Rng::cgauss(double t) {
    const double s = std::sqrt(t / 2);
    const double re = gauss(), im = gauss();
    return {s * re, s * im};
}

BlockMap block_map_parse(const std::string& name) {
    if (name == "identity") return BlockMap::identity;
    if (name == "transpose") return BlockMap::transpose;
    if (name == "trace_one") return BlockMap::trace_one;
    if (name == "diagonal") return BlockMap::diagonal;
    throw std::invalid_argument("unknown block map: " + name);
}

long EnsembleSpec::dim() const {
    return kind == Kind::block_wishart ? d * n : N;
}

bool EnsembleSpec::self_adjoint() const { return kind != Kind::complex_gaussian; }

double EnsembleSpec::moment_scale() const {
    switch (kind) {
        case Kind::wigner:
        case Kind::complex_gaussian: return 1.0 / std::sqrt((double)N);
        case Kind::wishart: return 1.0 / (double)N;
        case Kind::block_wishart: return 1.0 / (double)d;
    }
    return 1;
}

double EnsembleSpec::spectrum_scale() const {
    if (kind == Kind::block_wishart) return 1.0 / (double)(d * m);
    return moment_scale();
}

void EnsembleSpec::validate() const {
    switch (kind) {
        case Kind::wigner:
        case Kind::complex_gaussian:
            if (N < 1) throw std::invalid_argument("ensemble needs N >= 1");
            if (t <= 0) throw std::invalid_argument("ensemble needs t > 0");
            break;
        case Kind::wishart:
            if (N < 1 || M < 1) throw std::invalid_argument("Wishart needs N, M >= 1");
            break;
        case Kind::block_wishart:
            if (d < 1 || n < 1 || m < 1)
                throw std::invalid_argument("BlockWishart needs d, n, m >= 1");
            break;
    }
    if (dim() > max_dim)
        throw std::invalid_argument("matrix dimension exceeds the configured cap");
}

EnsembleSpec EnsembleSpec::parse(const std::string& kind, long N, long M, double t,
                                 long d, long n, long m, const std::string& map) {
    static const std::map<std::string, Kind> table = {
        {"Wigner", Kind::wigner},
        {"ComplexGaussian", Kind::complex_gaussian},
        {"Wishart", Kind::wishart},
        {"BlockWishart", Kind::block_wishart},
    };
    auto it = table.find(kind);
    if (it == table.end()) throw std::invalid_argument("unknown ensemble: " + kind);
    EnsembleSpec spec;
    spec.kind = it->second;
    spec.N = N;
    spec.M = M;
    spec.t = t;
    spec.d = d;
    spec.n = n;
    spec.m = m;
    if (spec.kind == Kind::block_wishart) spec.map = block_map_parse(map);
    spec.validate();
    return spec;
}

std::string EnsembleSpec::name() const {
    switch (kind) {
        case Kind::wigner: return "Wigner";
        case Kind::complex_gaussian: return "ComplexGaussian";
        case Kind::wishart: return "Wishart";
        case Kind::block_wishart: return "BlockWishart";
    }
    return "?";
}

Eigen::MatrixXcd sample(const EnsembleSpec& spec, std::uint64_t seed) {
    spec.validate();
    Rng rng(seed);
    using Kind = EnsembleSpec::Kind;
    switch (spec.kind) {
        case Kind::wigner: {
            Eigen::MatrixXcd Z(spec.N, spec.N);
            const double st = std::sqrt(spec.t);
            for (long i = 0; i < spec.N; ++i) {
                Z(i, i) = st * rng.gauss();
                for (long j = i + 1; j < spec.N; ++j) {
                    Z(i, j) = rng.cgauss(spec.t);
                    Z(j, i) = std::conj(Z(i, j));
                }
            }
            return Z;
        }
        case Kind::complex_gaussian: {
            Eigen::MatrixXcd Z(spec.N, spec.N);
            for (long i = 0; i < spec.N; ++i)
                for (long j = 0; j < spec.N; ++j) Z(i, j) = rng.cgauss(spec.t);
            return Z;
        }
        case Kind::wishart: {
            Eigen::MatrixXcd Y(spec.N, spec.M);
            for (long i = 0; i < spec.N; ++i)
                for (long j = 0; j < spec.M; ++j) Y(i, j) = rng.cgauss(1.0);
            return Y * Y.adjoint();
        }
        case Kind::block_wishart: {
            const long rows = spec.d * spec.n, cols = spec.d * spec.m;
            Eigen::MatrixXcd Y(rows, cols);
            for (long i = 0; i < rows; ++i)
                for (long j = 0; j < cols; ++j) Y(i, j) = rng.cgauss(1.0);
            return block_modify(Y * Y.adjoint(), spec.n, spec.map);
        }
    }
    throw std::logic_error("unreachable");
}

Eigen::MatrixXcd block_modify(const Eigen::MatrixXcd& W, long n, BlockMap map) {
    if (n < 1 || W.rows() != W.cols() || W.rows() % n != 0)
        throw std::invalid_argument("matrix size is not a multiple of the block size");
    if (map == BlockMap::identity) return W;
    const long d = W.rows() / n;
    Eigen::MatrixXcd out(W.rows(), W.cols());
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            auto blk = W.block(i * n, j * n, n, n);
            auto dst = out.block(i * n, j * n, n, n);
            switch (map) {
                case BlockMap::identity: dst = blk; break;
                case BlockMap::transpose: dst = blk.transpose(); break;
                case BlockMap::trace_one:
                    // normalized trace, so the identity matrix is fixed
                    dst = (blk.trace() / (double)n) *
                          Eigen::MatrixXcd::Identity(n, n);
                    break;
                case BlockMap::diagonal: dst = blk.diagonal().asDiagonal(); break;
            }
        }
    return out;
}

namespace {

std::vector<std::uint64_t> sorted_seeds(std::vector<std::uint64_t> seeds) {
    if (seeds.empty()) throw std::invalid_argument("need at least one seed");
    std::sort(seeds.begin(), seeds.end());
    return seeds;
}

MomentStats reduce(const std::vector<double>& vals) {
    MomentStats st;
    st.trials = (long)vals.size();
    st.mean = std::accumulate(vals.begin(), vals.end(), 0.0) / (double)st.trials;
    if (st.trials > 1) {
        double ss = 0;
        for (double v : vals) ss += (v - st.mean) * (v - st.mean);
        st.stderr_ = std::sqrt(ss / (double)(st.trials - 1) / (double)st.trials);
    }
    return st;
}

} // namespace

std::vector<MomentStats> empirical_moments(const EnsembleSpec& spec,
                                           const std::vector<std::uint64_t>& seeds,
                                           long max_order, std::optional<double> scale) {
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    const auto ss = sorted_seeds(seeds);
    const double c = scale.value_or(spec.moment_scale());
    std::vector<std::vector<double>> per_order((size_t)max_order);
    for (auto seed : ss) {
        Eigen::MatrixXcd A = c * sample(spec, seed);
        Eigen::MatrixXcd P = A;
        for (long p = 1; p <= max_order; ++p) {
            if (p > 1) P = P * A;
            per_order[(size_t)(p - 1)].push_back(P.trace().real() / (double)A.rows());
        }
    }
    std::vector<MomentStats> out;
    for (auto& v : per_order) out.push_back(reduce(v));
    return out;
}

MomentStats empirical_colored_moment(const EnsembleSpec& spec,
                                     const std::vector<std::uint64_t>& seeds,
                                     const ColoredWord& word, std::optional<double> scale) {
    if (word.size() == 0) throw std::invalid_argument("empty word");
    const auto ss = sorted_seeds(seeds);
    const double c = scale.value_or(spec.moment_scale());
    std::vector<double> vals;
    for (auto seed : ss) {
        Eigen::MatrixXcd A = c * sample(spec, seed);
        Eigen::MatrixXcd Astar = A.adjoint();
        Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(A.rows(), A.cols());
        for (int i = 0; i < word.size(); ++i)
            P = P * (word.w[(size_t)i] == Color::white ? A : Astar);
        vals.push_back(P.trace().real() / (double)A.rows());
    }
    return reduce(vals);
}

std::vector<double> spectrum_sample(const EnsembleSpec& spec, std::uint64_t seed,
                                    std::optional<double> scale) {
    const double c = scale.value_or(spec.spectrum_scale());
    Eigen::MatrixXcd A = c * sample(spec, seed);
    Eigen::MatrixXcd H = (A + A.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    std::vector<double> ev(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(ev.begin(), ev.end());
    return ev;
}

DensityGrid empirical_spectrum(const EnsembleSpec& spec,
                               const std::vector<std::uint64_t>& seeds, double bin_width,
                               std::optional<double> scale) {
    if (!spec.self_adjoint())
        throw std::invalid_argument("spectrum is only defined for self-adjoint ensembles");
    if (bin_width <= 0) throw std::invalid_argument("bin width must be positive");
    const auto ss = sorted_seeds(seeds);
    std::vector<double> pooled;
    for (auto seed : ss) {
        auto ev = spectrum_sample(spec, seed, scale);
        pooled.insert(pooled.end(), ev.begin(), ev.end());
    }
    const double lo = *std::min_element(pooled.begin(), pooled.end());
    const double hi = *std::max_element(pooled.begin(), pooled.end());
    const long first = (long)std::floor(lo / bin_width);
    const long last = (long)std::floor(hi / bin_width);
    std::vector<double> counts((size_t)(last - first + 1), 0.0);
    for (double v : pooled) {
        long b = (long)std::floor(v / bin_width) - first;
        b = std::clamp(b, 0L, (long)counts.size() - 1);
        counts[(size_t)b] += 1.0;
    }
    DensityGrid grid;
    const double norm = 1.0 / ((double)pooled.size() * bin_width);
    for (size_t b = 0; b < counts.size(); ++b) {
        grid.x.push_back(((double)(first + (long)b) + 0.5) * bin_width);
        grid.density.push_back(counts[b] * norm);
    }
    return grid;
}

std::vector<long> sample_permutation(Rng& rng, long N) {
    std::vector<long> sigma((size_t)N);
    std::iota(sigma.begin(), sigma.end(), 0L);
    for (long i = N - 1; i > 0; --i) {
        // u01 is in (0,1] so j lands in [0, i]
        long j = (long)std::ceil(rng.u01() * (double)(i + 1)) - 1;
        std::swap(sigma[(size_t)i], sigma[(size_t)j]);
    }
    return sigma;
}

std::vector<MomentStats> truncated_character_mc(long N, double t, long max_order,
                                                std::uint64_t master_seed, long n_perms) {
    if (N < 1 || n_perms < 1 || max_order < 1) throw std::invalid_argument("bad MC parameters");
    if (t < 0 || t > 1) throw std::invalid_argument("need 0 <= t <= 1");
    const long s = (long)std::floor(t * (double)N);
    std::vector<std::vector<double>> per_order((size_t)max_order);
    for (long trial = 0; trial < n_perms; ++trial) {
        Rng rng(trial_seed(master_seed, (std::uint64_t)trial));
        auto sigma = sample_permutation(rng, N);
        long chi = 0;
        for (long i = 0; i < s; ++i) chi += sigma[(size_t)i] == i;
        double pw = 1;
        for (long p = 1; p <= max_order; ++p) {
            pw *= (double)chi;
            per_order[(size_t)(p - 1)].push_back(pw);
        }
    }
    std::vector<MomentStats> out;
    for (auto& v : per_order) out.push_back(reduce(v));
    return out;
}

} // namespace freeprob
