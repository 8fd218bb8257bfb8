#pragma once

#include "freeprob/cumulants.hpp"
#include "freeprob/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace freeprob {

// finite real atomic measure (location, mass); masses need not sum to 1 (e.g.
// the base measure of a compound Poisson law carries total mass t)
struct DiscreteMeasure {
    std::vector<std::pair<Rat, Rat>> atoms;
    Rat moment(long n) const; // sum of mass * loc^n
    Rat total_mass() const;
};

struct LawSpec {
    enum class Family {
        point_mass, gaussian, complex_gaussian, poisson, bessel, semicircle,
        marchenko_pastur, circular, free_bessel, compound_poisson,
        compound_free_poisson, free_hyperspherical
    };
    Family family = Family::semicircle;
    Rat c = 0;            // PointMass location
    Rat t = 1;            // main parameter
    Rat s = 1;            // Bessel/FreeBessel parameter; kInfinity allowed for Bessel
    long N = 0;           // FreeHyperspherical dimension
    DiscreteMeasure rho;  // compound families

    std::string name() const;
    static LawSpec parse(const std::string& family, const Rat& t, const Rat& s,
                         const Rat& c, long N, const DiscreteMeasure& rho);
    void validate() const;
};

// k-th moment for the real families (exact); throws for the planar ones
Rat law_moment(const LawSpec& law, long k);
// colored *-moment for ComplexGaussian / Circular
Rat law_moment(const LawSpec& law, const ColoredWord& word);

struct LawDensityResult {
    double value = 0;                            // continuous part at x
    std::vector<std::pair<double, double>> atoms; // (location, mass)
    bool truncated = false;                      // atomic tail cut at tail_tol
};
LawDensityResult law_density(const LawSpec& law, double x, double tail_tol = 1e-12);
std::vector<std::pair<double, double>> law_atoms(const LawSpec& law, double tail_tol = 1e-12,
                                                 bool* truncated = nullptr);

// moments of the (free) compound Poisson law with base rho: the flavor's
// cumulants equal the moments of rho
MomentSequence compound_poisson(const DiscreteMeasure& rho, Flavor flavor, long order);

// 2l-th moment of the free hyperspherical coordinate, N >= 3
double free_hyperspherical_moment(long N, long l);

} // namespace freeprob
