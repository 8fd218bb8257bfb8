#pragma once

#include "freeprob/cumulants.hpp"
#include "freeprob/rational.hpp"

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace freeprob {

// truncated formal power series; c[j] multiplies var^j, where var is either z
// or xi^{-1} depending on the tag; order = highest retained power
struct FormalSeries {
    enum class Var { z, xi_inv };
    Var var = Var::z;
    std::vector<Rat> c;

    long order() const { return (long)c.size() - 1; }
    Rat at(long j) const { return (j >= 0 && j <= order()) ? c[j] : Rat(0); }
};

// raw coefficient-vector helpers, all truncated to `order` (inclusive)
std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, long order);
std::vector<Rat> series_inv(const std::vector<Rat>& a, long order);          // a[0] != 0
std::vector<Rat> series_compose(const std::vector<Rat>& f, const std::vector<Rat>& g, long order); // g[0] == 0
std::vector<Rat> series_comp_inverse(const std::vector<Rat>& u, long order); // u[0]==0, u[1]!=0

// G(xi) = xi^{-1} + M_1 xi^{-2} + ... up to order n+1
FormalSeries cauchy_from_moments(const MomentSequence& m);
// R(z) = kappa_1 + kappa_2 z + ...; via compositional inversion of z f(z)
FormalSeries r_from_moments(const MomentSequence& m);
// S(z) = chi(z) (1+z)/z with chi the compositional inverse of psi = f - 1
FormalSeries s_from_moments(const MomentSequence& m);

MomentSequence free_additive_convolution(const MomentSequence& a, const MomentSequence& b);
MomentSequence free_multiplicative_convolution(const MomentSequence& a, const MomentSequence& b);
MomentSequence classical_convolution(const MomentSequence& a, const MomentSequence& b);

struct DensityGrid {
    std::vector<double> x;
    std::vector<double> density;
    std::vector<std::pair<double, double>> atoms; // (location, mass)
};

using CauchyFn = std::function<std::complex<double>(std::complex<double>)>;

DensityGrid stieltjes_invert(const CauchyFn& G, const std::vector<double>& grid, double eps);

// evaluate a truncated xi^{-1}-series off the real axis through its (n,n)
// Pade approximant in w = 1/xi; approximate by construction
CauchyFn series_cauchy_evaluator(const FormalSeries& G);

struct HankelResult {
    bool ok = true;
    long first_failure = -1; // dimension d of the first failing determinant
};
HankelResult hankel_check(const MomentSequence& m);

} // namespace freeprob
