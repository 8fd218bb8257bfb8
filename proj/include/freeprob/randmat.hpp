#pragma once

#include "freeprob/partition.hpp"
#include "freeprob/series.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace freeprob {

// splitmix64 finalizer; the documented (master seed, trial index) -> stream map
std::uint64_t mix64(std::uint64_t x);
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);
std::vector<std::uint64_t> expand_seeds(std::uint64_t master, long trials);

// mt19937_64 wrapped with Box-Muller (cached spare) on the raw uniform stream
struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double u01(); // in (0, 1]
    double gauss();
    std::complex<double> cgauss(double t); // E|z|^2 = t
    std::mt19937_64 eng;

  private:
    double spare_ = 0;
    bool has_spare_ = false;
};

enum class BlockMap { identity, transpose, trace_one, diagonal };
BlockMap block_map_parse(const std::string& name);

struct EnsembleSpec {
    enum class Kind { wigner, complex_gaussian, wishart, block_wishart };
    Kind kind = Kind::wigner;
    long N = 0;          // wigner/complex_gaussian dimension; wishart rows
    long M = 0;          // wishart columns
    double t = 1;        // entry variance for wigner/complex_gaussian
    long d = 0, n = 0, m = 0; // block_wishart: W = YY* with Y of size dn x dm
    BlockMap map = BlockMap::identity;
    long max_dim = 1000; // safety cap on the sampled matrix dimension

    long dim() const;
    bool self_adjoint() const;
    // canonical 1/N^alpha rescale giving finite limit moments
    double moment_scale() const;   // wigner/cg 1/sqrt(N), wishart 1/N, block 1/d
    double spectrum_scale() const; // wigner 1/sqrt(N), wishart 1/N, block 1/(dm)
    void validate() const;
    static EnsembleSpec parse(const std::string& kind, long N, long M, double t,
                              long d, long n, long m, const std::string& map);
    std::string name() const;
};

// raw sample, deterministic in (spec, seed); no rescaling applied
Eigen::MatrixXcd sample(const EnsembleSpec& spec, std::uint64_t seed);

// apply the map to the n x n blocks (the second tensor factor)
Eigen::MatrixXcd block_modify(const Eigen::MatrixXcd& W, long n, BlockMap map);

struct MomentStats {
    double mean = 0;
    double stderr_ = 0; // sample standard error over trials
    long trials = 0;
};

// mean over trials of tr((scale*A)^p), p = 1..max_order; trials are merged in
// sorted seed order so the result is independent of the seed list's order
std::vector<MomentStats> empirical_moments(const EnsembleSpec& spec,
                                           const std::vector<std::uint64_t>& seeds,
                                           long max_order,
                                           std::optional<double> scale = std::nullopt);

// colored moment: word letter o -> A, b -> A*
MomentStats empirical_colored_moment(const EnsembleSpec& spec,
                                     const std::vector<std::uint64_t>& seeds,
                                     const ColoredWord& word,
                                     std::optional<double> scale = std::nullopt);

// sorted spectrum of one rescaled sample (self-adjoint part (A+A*)/2)
std::vector<double> spectrum_sample(const EnsembleSpec& spec, std::uint64_t seed,
                                    std::optional<double> scale = std::nullopt);

// pooled eigenvalue histogram; density integrates to 1
DensityGrid empirical_spectrum(const EnsembleSpec& spec,
                               const std::vector<std::uint64_t>& seeds,
                               double bin_width = 0.1,
                               std::optional<double> scale = std::nullopt);

// uniform permutation via Fisher-Yates on the trial stream
std::vector<long> sample_permutation(Rng& rng, long N);

// Monte Carlo moments of the truncated character chi = #{i <= floor(tN) :
// sigma(i) = i} over uniform permutations
std::vector<MomentStats> truncated_character_mc(long N, double t, long max_order,
                                                std::uint64_t master_seed, long n_perms);

} // namespace freeprob
