#include "freeprob/cumulants.hpp"
#include "freeprob/exactcount.hpp"
#include "freeprob/laws.hpp"
#include "freeprob/series.hpp"

#include <doctest.h>

#include <cmath>

using namespace freeprob;

namespace {
LawSpec make(const std::string& family, const Rat& t = 1, const Rat& s = 1, const Rat& c = 0,
             long N = 0, const DiscreteMeasure& rho = {}) {
    return LawSpec::parse(family, t, s, c, N, rho);
}
MomentSequence law_moments(const LawSpec& law, long order) {
    MomentSequence m;
    for (long k = 1; k <= order; ++k) m.m.push_back(law_moment(law, k));
    return m;
}
} // namespace

TEST_CASE("pinned single values") {
    CHECK(law_moment(make("Semicircle"), 4) == 2);
    CHECK(law_moment(make("Bessel", Rat(1, 3), Rat(2)), 4) == 3 * Rat(1, 9) + Rat(1, 3));
    CHECK(law_moment(make("PointMass", 1, 1, Rat(-5, 2)), 3) == Rat(-125, 8));
    Rat t(7, 3);
    CHECK(law_moment(make("Gaussian", t), 4) == 3 * t * t);
    CHECK(law_moment(make("Gaussian", t), 6) == 15 * t * t * t);
    CHECK(law_moment(make("Gaussian", t), 5) == 0);
}

TEST_CASE("moments equal the partition-weighted sums") {
    Rat t(3, 5);
    struct Row {
        const char* family;
        const char* cat;
        Rat s;
        int stretch; // word length per moment index: free Bessel counts NCs(s)(s k)
    };
    for (const auto& [family, cat, s, stretch] :
         {Row{"Gaussian", "P2", 1, 1}, Row{"Poisson", "P", 1, 1}, Row{"Semicircle", "NC2", 1, 1},
          Row{"MarchenkoPastur", "NC", 1, 1}, Row{"Bessel", "Peven", 2, 1},
          Row{"FreeBessel", "NCeven", 2, 2}, Row{"FreeBessel", "NCs(3)", 3, 3}}) {
        LawSpec law = make(family, t, s);
        Category category = Category::parse(cat);
        for (long k = 1; k <= 8 / stretch; ++k)
            CHECK(law_moment(law, k) ==
                  partition_weighted_moment(category, t, ColoredWord::all_white((int)k * stretch)));
    }
    // exact-balance Bessel: no all-white partition qualifies
    LawSpec binf = make("Bessel", t, Rat(kInfinity));
    for (long k = 1; k <= 4; ++k) CHECK(law_moment(binf, k) == 0);
}

TEST_CASE("bessel s=1 degenerates to poisson and mp to fuss-narayana") {
    Rat t(5, 4);
    for (long k = 1; k <= 8; ++k) {
        CHECK(law_moment(make("Bessel", t, 1), k) == law_moment(make("Poisson", t), k));
        CHECK(law_moment(make("MarchenkoPastur", t), k) == fuss_narayana(Rat(1), k, t));
        CHECK(law_moment(make("FreeBessel", t, Rat(3)), k) == fuss_narayana(Rat(3), k, t));
    }
}

TEST_CASE("colored word moments") {
    Rat t(2, 3);
    LawSpec cg = make("ComplexGaussian", t), circ = make("Circular", t);
    CHECK(law_moment(cg, ColoredWord::parse("ob")) == t);
    CHECK(law_moment(cg, ColoredWord::parse("oobb")) == 2 * t * t);
    CHECK(law_moment(cg, ColoredWord::parse("obob")) == 2 * t * t);
    CHECK(law_moment(cg, ColoredWord::parse("oob")) == 0);
    CHECK(law_moment(circ, ColoredWord::parse("oobb")) == t * t);
    CHECK(law_moment(circ, ColoredWord::parse("obob")) == 2 * t * t);
    CHECK_THROWS_AS(law_moment(cg, 2), std::invalid_argument);
    CHECK_THROWS_AS(law_moment(circ, 2), std::invalid_argument);
    CHECK_THROWS_AS(law_moment(make("Gaussian"), ColoredWord::parse("ob")), std::invalid_argument);
}

TEST_CASE("compound poisson laws") {
    // rho = t delta_1 recovers Poisson / MarchenkoPastur
    Rat t(3, 4);
    DiscreteMeasure rho1{{{Rat(1), t}}};
    auto classical = compound_poisson(rho1, Flavor::classical, 8);
    auto freeside = compound_poisson(rho1, Flavor::free, 8);
    for (long k = 1; k <= 8; ++k) {
        CHECK(classical.at(k) == law_moment(make("Poisson", t), k));
        CHECK(freeside.at(k) == law_moment(make("MarchenkoPastur", t), k));
    }
    // rho = t(delta_-1 + delta_1)/2: symmetric free compound Poisson; its even
    // moments are the FreeBessel(t,2) sequence (both count NCeven by blocks)
    DiscreteMeasure rho2{{{Rat(-1), t / 2}, {Rat(1), t / 2}}};
    auto fb = compound_poisson(rho2, Flavor::free, 6);
    for (long k = 1; k <= 6; k += 2) CHECK(fb.at(k) == 0);
    for (long j = 1; j <= 3; ++j) CHECK(fb.at(2 * j) == law_moment(make("FreeBessel", t, 2), j));
    // ... and its classical twin is exactly the Bessel(t,2) law
    auto cb = compound_poisson(rho2, Flavor::classical, 6);
    for (long k = 1; k <= 6; ++k) CHECK(cb.at(k) == law_moment(make("Bessel", t, 2), k));
    // the defining property: cumulants equal the moments of rho
    DiscreteMeasure rho3{{{Rat(2), Rat(1, 3)}, {Rat(-1, 2), Rat(4, 5)}}};
    for (Flavor f : {Flavor::classical,Flavor::free}) {
        auto m = compound_poisson(rho3, f, 8);
        auto c = cumulants_from_moments(m, f);
        for (long j = 1; j <= 8; ++j) CHECK(c.c[(size_t)j - 1] == rho3.moment(j));
    }
    // law_moment goes through the same path
    LawSpec cp = make("CompoundPoisson", 1, 1, 0, 0, rho3);
    for (long k = 1; k <= 6; ++k) CHECK(law_moment(cp, k) == compound_poisson(rho3, Flavor::classical, k).at(k));
}

TEST_CASE("convolution semigroups within a family") {
    Rat a(1, 2), b(2, 3);
    auto lhs = classical_convolution(law_moments(make("Bessel", a, 2), 6),
                                     law_moments(make("Bessel", b, 2), 6));
    CHECK(lhs.m == law_moments(make("Bessel", a + b, 2), 6).m);
    auto flhs = free_additive_convolution(law_moments(make("MarchenkoPastur", a), 6),
                                          law_moments(make("MarchenkoPastur", b), 6));
    CHECK(flhs.m == law_moments(make("MarchenkoPastur", a + b), 6).m);
    auto slhs = free_additive_convolution(law_moments(make("Semicircle", a), 6),
                                          law_moments(make("Semicircle", b), 6));
    CHECK(slhs.m == law_moments(make("Semicircle", a + b), 6).m);
}

TEST_CASE("bercovici-pata pairs the families") {
    for (Rat t : {Rat(1, 2), Rat(1), Rat(2)}) {
        auto g = bercovici_pata(law_moments(make("Gaussian", t), 6), Flavor::classical, Flavor::free);
        CHECK(g.m == law_moments(make("Semicircle", t), 6).m);
        auto p = bercovici_pata(law_moments(make("Poisson", t), 6), Flavor::classical, Flavor::free);
        CHECK(p.m == law_moments(make("MarchenkoPastur", t), 6).m);
        DiscreteMeasure rho{{{Rat(-1), t / 2}, {Rat(1), t / 2}}};
        auto cls = law_moments(make("CompoundPoisson", 1, 1, 0, 0, rho), 6);
        CHECK(cls.m == law_moments(make("Bessel", t, 2), 6).m);
        // classical Bessel maps to the symmetric free compound Poisson with the
        // same jump law; its even moments are the FreeBessel(t,2) sequence
        auto bb = bercovici_pata(cls, Flavor::classical, Flavor::free);
        auto fcp = compound_poisson(rho, Flavor::free, 6);
        for (long k = 1; k <= 6; ++k) CHECK(bb.m[(size_t)k - 1] == fcp.at(k));
        for (long j = 1; j <= 3; ++j) CHECK(bb.m[(size_t)(2 * j) - 1] == law_moment(make("FreeBessel", t, 2), j));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS(make("Gaussian", 0));
    CHECK_THROWS(make("Poisson", Rat(-1)));
    CHECK_THROWS(make("Bessel", 1, Rat(3, 2)));   // s must be integer (or infinite)
    CHECK_THROWS(make("Bessel", 1, Rat(0)));
    CHECK_THROWS(make("FreeBessel", Rat(2), Rat(1, 2))); // (s,t) in (0,1)x(1,inf) excluded
    CHECK_NOTHROW(make("FreeBessel", Rat(1, 2), Rat(1, 2)));
    CHECK_NOTHROW(make("FreeBessel", Rat(2), Rat(3, 2)));
    CHECK_THROWS(make("FreeHyperspherical", 1, 1, 0, 2));
    CHECK_THROWS(make("CompoundPoisson")); // empty base measure
    DiscreteMeasure neg{{{Rat(1), Rat(-1)}}};
    CHECK_THROWS(make("CompoundPoisson", 1, 1, 0, 0, neg));
}

TEST_CASE("atoms") {
    double t = 0.7;
    bool truncated = false;
    auto pa = law_atoms(make("Poisson", Rat(7, 10)), 1e-12, &truncated);
    CHECK(truncated);
    REQUIRE(pa.size() >= 4);
    for (size_t j = 0; j < 4; ++j) {
        CHECK(pa[j].first == doctest::Approx((double)j).epsilon(1e-12));
        double expect = std::exp(-t) * std::pow(t, (double)j) / std::tgamma((double)j + 1);
        CHECK(pa[j].second == doctest::Approx(expect).epsilon(1e-9));
    }
    // Bessel(2,t): mass at integer r is e^{-t} I_|r|(t), symmetric
    auto ba = law_atoms(make("Bessel", Rat(7, 10), 2), 1e-12, &truncated);
    CHECK(truncated);
    double at0 = 0, at1 = 0, atm1 = 0;
    for (const auto& [loc, mass] : ba) {
        if (std::fabs(loc) < 1e-9) at0 = mass;
        if (std::fabs(loc - 1) < 1e-9) at1 = mass;
        if (std::fabs(loc + 1) < 1e-9) atm1 = mass;
    }
    CHECK(at0 == doctest::Approx(std::exp(-t) * std::cyl_bessel_i(0, t)).epsilon(1e-9));
    CHECK(at1 == doctest::Approx(std::exp(-t) * std::cyl_bessel_i(1, t)).epsilon(1e-9));
    CHECK(atm1 == doctest::Approx(at1).epsilon(1e-12));
    CHECK_THROWS_AS(law_atoms(make("Bessel", 1, 3)), std::domain_error);

    auto mp = law_atoms(make("MarchenkoPastur", Rat(1, 2)));
    REQUIRE(mp.size() == 1);
    CHECK(mp[0].first == 0);
    CHECK(mp[0].second == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(law_atoms(make("MarchenkoPastur", Rat(2))).empty());
    CHECK(law_atoms(make("Semicircle")).empty());
    auto pm = law_atoms(make("PointMass", 1, 1, Rat(5, 2)));
    REQUIRE(pm.size() == 1);
    CHECK(pm[0].first == 2.5);
    CHECK(pm[0].second == 1);
}

TEST_CASE("densities at pinned points") {
    const double pi = 3.14159265358979323846;
    CHECK(law_density(make("Semicircle"), 0).value == doctest::Approx(1 / pi).epsilon(1e-12));
    CHECK(law_density(make("Semicircle"), 2.5).value == 0);
    CHECK(law_density(make("Gaussian"), 0).value ==
          doctest::Approx(1 / std::sqrt(2 * pi)).epsilon(1e-12));
    CHECK(law_density(make("MarchenkoPastur", Rat(1, 2)), 0.05).value == 0); // below the bulk
    auto r = law_density(make("MarchenkoPastur", Rat(1, 2)), 1.0);
    CHECK(r.value == doctest::Approx(std::sqrt(2 - 0.25) / (2 * pi)).epsilon(1e-12));
    REQUIRE(r.atoms.size() == 1);
}

TEST_CASE("density moments integrate back to law moments") {
    for (Rat t : {Rat(1, 2), Rat(1), Rat(2)}) {
        double td = to_double(t);
        // semicircle on [-2 sqrt t, 2 sqrt t]
        {
            LawSpec law = make("Semicircle", t);
            double lo = -2 * std::sqrt(td), hi = 2 * std::sqrt(td);
            long n = 300000;
            double h = (hi - lo) / (double)n;
            std::vector<double> dens(n + 1);
            for (long i = 0; i <= n; ++i) dens[(size_t)i] = law_density(law, lo + h * (double)i).value;
            for (long k = 0; k <= 6; ++k) {
                double acc = 0;
                for (long i = 0; i <= n; ++i) {
                    double x = lo + h * (double)i;
                    double w = (i == 0 || i == n) ? 0.5 : 1.0;
                    acc += w * std::pow(x, (double)k) * dens[(size_t)i];
                }
                acc *= h;
                double expect = k == 0 ? 1.0 : to_double(law_moment(law, k));
                CHECK(std::fabs(acc - expect) < 1e-6 * std::max(1.0, std::fabs(expect)));
            }
        }
        // Marchenko-Pastur bulk plus its atom
        {
            LawSpec law = make("MarchenkoPastur", t);
            double lo = (1 - std::sqrt(td)) * (1 - std::sqrt(td));
            double hi = (1 + std::sqrt(td)) * (1 + std::sqrt(td));
            double atom = td < 1 ? 1 - td : 0;
            long n = 300000;
            double h = (hi - lo) / (double)n;
            std::vector<double> dens(n + 1);
            for (long i = 0; i <= n; ++i) dens[(size_t)i] = law_density(law, lo + h * (double)i).value;
            for (long k = 0; k <= 6; ++k) {
                double acc = 0;
                for (long i = 0; i <= n; ++i) {
                    double x = lo + h * (double)i;
                    double w = (i == 0 || i == n) ? 0.5 : 1.0;
                    acc += w * std::pow(x, (double)k) * dens[(size_t)i];
                }
                acc *= h;
                if (k == 0) acc += atom;
                double expect = k == 0 ? 1.0 : to_double(law_moment(law, k));
                // at t = 1 the hard edge at 0 has an x^{-1/2} singularity that the
                // trapezoid rule undershoots; x^k tames it for every k >= 1
                double tol = (k == 0 && lo == 0.0) ? 3e-3 : 1e-6;
                CHECK(std::fabs(acc - expect) < tol * std::max(1.0, std::fabs(expect)));
            }
        }
    }
}

TEST_CASE("free hyperspherical moments") {
    for (long N = 3; N <= 8; ++N)
        CHECK(free_hyperspherical_moment(N, 1) == doctest::Approx(1.0 / (double)N).epsilon(1e-12));
    CHECK(free_hyperspherical_moment(4, 2) == doctest::Approx(2.0 / (4.0 * 5.0)).epsilon(1e-10));
    CHECK_THROWS(free_hyperspherical_moment(2, 1));
    CHECK_THROWS_AS(law_moment(make("FreeHyperspherical", 1, 1, 0, 5), 2), std::invalid_argument);
}
