#include "freeprob/laws.hpp"

#include "freeprob/exactcount.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace freeprob {

Rat DiscreteMeasure::moment(long n) const {
    Rat out = 0;
    for (const auto& [loc, mass] : atoms) out += mass * rpow(loc, n);
    return out;
}

Rat DiscreteMeasure::total_mass() const {
    Rat out = 0;
    for (const auto& [loc, mass] : atoms) out += mass;
    return out;
}

namespace {

bool is_positive_integer(const Rat& s) {
    return denominator(s) == 1 && numerator(s) >= 1;
}

long as_long(const Rat& s) { return numerator(s).convert_to<long>(); }

const char* family_name(LawSpec::Family f) {
    switch (f) {
        case LawSpec::Family::point_mass: return "PointMass";
        case LawSpec::Family::gaussian: return "Gaussian";
        case LawSpec::Family::complex_gaussian: return "ComplexGaussian";
        case LawSpec::Family::poisson: return "Poisson";
        case LawSpec::Family::bessel: return "Bessel";
        case LawSpec::Family::semicircle: return "Semicircle";
        case LawSpec::Family::marchenko_pastur: return "MarchenkoPastur";
        case LawSpec::Family::circular: return "Circular";
        case LawSpec::Family::free_bessel: return "FreeBessel";
        case LawSpec::Family::compound_poisson: return "CompoundPoisson";
        case LawSpec::Family::compound_free_poisson: return "CompoundFreePoisson";
        case LawSpec::Family::free_hyperspherical: return "FreeHyperspherical";
    }
    return "?";
}

// sum of t^|pi| over partitions of {1..n} whose block sizes are all divisible
// by s, via the usual delete-the-block-of-n recurrence
Rat bessel_moment(long s, const Rat& t, long n) {
    std::vector<Rat> a(n + 1, 0);
    a[0] = 1;
    for (long i = 1; i <= n; ++i)
        for (long m = s; m <= i; m += s)
            a[i] += Rat(binomial(i - 1, m - 1)) * t * a[i - m];
    return a[n];
}

} // namespace

std::string LawSpec::name() const { return family_name(family); }

LawSpec LawSpec::parse(const std::string& family, const Rat& t, const Rat& s,
                       const Rat& c, long N, const DiscreteMeasure& rho) {
    static const std::map<std::string, Family> table = {
        {"PointMass", Family::point_mass},
        {"Gaussian", Family::gaussian},
        {"ComplexGaussian", Family::complex_gaussian},
        {"Poisson", Family::poisson},
        {"Bessel", Family::bessel},
        {"Semicircle", Family::semicircle},
        {"MarchenkoPastur", Family::marchenko_pastur},
        {"Circular", Family::circular},
        {"FreeBessel", Family::free_bessel},
        {"CompoundPoisson", Family::compound_poisson},
        {"CompoundFreePoisson", Family::compound_free_poisson},
        {"FreeHyperspherical", Family::free_hyperspherical},
    };
    auto it = table.find(family);
    if (it == table.end()) throw std::invalid_argument("unknown law family: " + family);
    LawSpec spec;
    spec.family = it->second;
    spec.t = t;
    spec.s = s;
    spec.c = c;
    spec.N = N;
    spec.rho = rho;
    spec.validate();
    return spec;
}

void LawSpec::validate() const {
    switch (family) {
        case Family::point_mass:
        case Family::free_hyperspherical:
            break;
        default:
            if (t <= 0) throw std::invalid_argument("law parameter t must be positive");
    }
    if (family == Family::bessel) {
        if (!(s == kInfinity || is_positive_integer(s)))
            throw std::invalid_argument("Bessel law needs integer s >= 1 (or s = infinity)");
    }
    if (family == Family::free_bessel) {
        if (s <= 0) throw std::invalid_argument("FreeBessel law needs s > 0");
        if (s < 1 && t > 1)
            throw std::invalid_argument("FreeBessel law is not defined for s in (0,1) with t > 1");
    }
    if (family == Family::free_hyperspherical && N < 3)
        throw std::invalid_argument("FreeHyperspherical law needs N >= 3");
    if (family == Family::compound_poisson || family == Family::compound_free_poisson) {
        if (rho.atoms.empty())
            throw std::invalid_argument("compound law needs a nonempty base measure");
        for (const auto& [loc, mass] : rho.atoms)
            if (mass < 0) throw std::invalid_argument("base measure masses must be nonnegative");
        if (rho.total_mass() <= 0)
            throw std::invalid_argument("base measure must have positive total mass");
    }
}

Rat law_moment(const LawSpec& law, long k) {
    law.validate();
    if (k < 0) throw std::invalid_argument("moment order must be nonnegative");
    if (k == 0) return 1;
    using F = LawSpec::Family;
    switch (law.family) {
        case F::point_mass:
            return rpow(law.c, k);
        case F::gaussian:
            if (k % 2) return 0;
            return rpow(law.t, k / 2) * Rat(df_std(k - 1));
        case F::poisson: {
            Rat out = 0;
            for (long b = 1; b <= k; ++b) out += Rat(stirling2(k, b)) * rpow(law.t, b);
            return out;
        }
        case F::bessel:
            if (law.s == kInfinity) return 0; // no all-white balanced partition
            return bessel_moment(as_long(law.s), law.t, k);
        case F::semicircle:
            if (k % 2) return 0;
            return rpow(law.t, k / 2) * Rat(catalan(k / 2));
        case F::marchenko_pastur:
            return fuss_narayana(1, k, law.t);
        case F::free_bessel:
            return fuss_narayana(law.s, k, law.t);
        case F::compound_poisson:
            return compound_poisson(law.rho, Flavor::classical, k).at(k);
        case F::compound_free_poisson:
            return compound_poisson(law.rho, Flavor::free, k).at(k);
        case F::complex_gaussian:
        case F::circular:
            throw std::invalid_argument(law.name() + " moments are indexed by color words");
        case F::free_hyperspherical:
            throw std::invalid_argument(
                "FreeHyperspherical moments are irrational; use free_hyperspherical_moment");
    }
    throw std::logic_error("unreachable");
}

Rat law_moment(const LawSpec& law, const ColoredWord& word) {
    law.validate();
    using F = LawSpec::Family;
    if (law.family == F::complex_gaussian)
        return partition_weighted_moment(Category{Category::Kind::MatchP2}, law.t, word);
    if (law.family == F::circular)
        return partition_weighted_moment(Category{Category::Kind::MatchNC2}, law.t, word);
    throw std::invalid_argument("color word supplied to the uncolored family " + law.name());
}

std::vector<std::pair<double, double>> law_atoms(const LawSpec& law, double tail_tol,
                                                 bool* truncated) {
    law.validate();
    if (truncated) *truncated = false;
    using F = LawSpec::Family;
    std::vector<std::pair<double, double>> atoms;
    const double td = to_double(law.t);
    switch (law.family) {
        case F::point_mass:
            atoms.emplace_back(to_double(law.c), 1.0);
            break;
        case F::gaussian:
        case F::semicircle:
            break;
        case F::marchenko_pastur:
            if (law.t < 1) atoms.emplace_back(0.0, 1.0 - td);
            break;
        case F::poisson: {
            double mass = std::exp(-td);
            for (long j = 0;; ++j) {
                if (j > 0) mass *= td / (double)j;
                if (j > td && mass < tail_tol) break;
                atoms.emplace_back((double)j, mass);
            }
            if (truncated) *truncated = true;
            break;
        }
        case F::bessel: {
            if (law.s == 1) {
                LawSpec poisson;
                poisson.family = F::poisson;
                poisson.t = law.t;
                return law_atoms(poisson, tail_tol, truncated);
            }
            if (law.s != 2)
                throw std::domain_error("Bessel law with s >= 3 lives in the plane; no real density");
            // difference of two independent Poisson(t/2): mass at r is
            // exp(-t) I_|r|(t) with the modified Bessel function
            const double base = std::exp(-td);
            for (long r = 0;; ++r) {
                double mass = base * std::cyl_bessel_i((double)r, td);
                if (r > td && mass < tail_tol) break;
                atoms.emplace_back((double)r, mass);
                if (r > 0) atoms.emplace_back((double)-r, mass);
            }
            std::sort(atoms.begin(), atoms.end());
            if (truncated) *truncated = true;
            break;
        }
        case F::complex_gaussian:
        case F::circular:
            throw std::domain_error(law.name() + " is a planar law; no real density");
        default:
            throw std::domain_error("density not available for " + law.name());
    }
    return atoms;
}

LawDensityResult law_density(const LawSpec& law, double x, double tail_tol) {
    LawDensityResult out;
    out.atoms = law_atoms(law, tail_tol, &out.truncated);
    using F = LawSpec::Family;
    const double td = to_double(law.t);
    switch (law.family) {
        case F::gaussian:
            out.value = std::exp(-x * x / (2 * td)) / std::sqrt(2 * std::numbers::pi * td);
            break;
        case F::semicircle:
            if (x * x < 4 * td) out.value = std::sqrt(4 * td - x * x) / (2 * std::numbers::pi * td);
            break;
        case F::marchenko_pastur: {
            const double disc = 4 * td - (x - 1 - td) * (x - 1 - td);
            if (disc > 0 && x > 0) out.value = std::sqrt(disc) / (2 * std::numbers::pi * x);
            break;
        }
        default:
            break; // purely atomic families
    }
    return out;
}

MomentSequence compound_poisson(const DiscreteMeasure& rho, Flavor flavor, long order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    CumulantSequence c;
    c.flavor = flavor;
    c.c.resize(order);
    for (long n = 1; n <= order; ++n) c.c[n - 1] = rho.moment(n);
    return moments_from_cumulants(c);
}

double free_hyperspherical_moment(long N, long l) {
    if (N < 3) throw std::invalid_argument("free hyperspherical law needs N >= 3");
    if (l < 0) throw std::invalid_argument("moment index must be nonnegative");
    if (l == 0) return 1.0;
    const double q = (-(double)N + std::sqrt((double)N * N - 4)) / 2;
    double sum = 0;
    for (long r = -l - 1; r <= l + 1; ++r) {
        if (r == 0) continue; // the factor r kills this term
        const double b = to_double(Rat(binomial(2 * l + 2, l + r + 1)));
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        sum += sign * b * (double)r / (1 + std::pow(q, (double)r));
    }
    const double pref = (q + 1) / (q - 1) / (double)(l + 1) / std::pow((double)N + 2, (double)l);
    return pref * sum;
}

} // namespace freeprob
