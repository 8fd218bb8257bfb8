#include "freeprob/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace freeprob {

namespace {

Rat coef(const std::vector<Rat>& a, long j) {
    return (j >= 0 && j < (long)a.size()) ? a[j] : Rat(0);
}

} // namespace

std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, long order) {
    std::vector<Rat> r(order + 1, Rat(0));
    long na = std::min<long>(order, (long)a.size() - 1);
    for (long i = 0; i <= na; ++i) {
        if (a[i] == 0) continue;
        long nb = std::min<long>(order - i, (long)b.size() - 1);
        for (long j = 0; j <= nb; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

std::vector<Rat> series_inv(const std::vector<Rat>& a, long order) {
    if (a.empty() || a[0] == 0) throw std::domain_error("series_inv: zero constant term");
    std::vector<Rat> b(order + 1, Rat(0));
    b[0] = Rat(1) / a[0];
    for (long n = 1; n <= order; ++n) {
        Rat t = 0;
        for (long j = 1; j <= n; ++j) t += coef(a, j) * b[n - j];
        b[n] = -t / a[0];
    }
    return b;
}

std::vector<Rat> series_compose(const std::vector<Rat>& f, const std::vector<Rat>& g, long order) {
    if (!g.empty() && g[0] != 0) throw std::domain_error("series_compose: inner constant term must vanish");
    // Horner over the truncated outer coefficients
    long nf = std::min<long>(order, (long)f.size() - 1);
    std::vector<Rat> r(1, coef(f, nf));
    for (long j = nf - 1; j >= 0; --j) {
        r = series_mul(r, g, order);
        r[0] += coef(f, j);
    }
    r.resize(order + 1, Rat(0));
    return r;
}

std::vector<Rat> series_comp_inverse(const std::vector<Rat>& u, long order) {
    if (u.size() < 2 || u[0] != 0 || u[1] == 0)
        throw std::domain_error("series_comp_inverse: need u(0)=0, u'(0)!=0");
    std::vector<Rat> v(order + 1, Rat(0));
    if (order >= 1) v[1] = Rat(1) / u[1];
    for (long n = 2; n <= order; ++n) {
        auto w = series_compose(u, v, n);
        v[n] = -w[n] / u[1];
    }
    return v;
}

FormalSeries cauchy_from_moments(const MomentSequence& m) {
    FormalSeries g;
    g.var = FormalSeries::Var::xi_inv;
    g.c.assign(m.order() + 2, Rat(0));
    g.c[1] = 1;
    for (long j = 1; j <= m.order(); ++j) g.c[j + 1] = m.m[j - 1];
    return g;
}

FormalSeries r_from_moments(const MomentSequence& m) {
    long n = m.order();
    std::vector<Rat> f(n + 1);
    f[0] = 1;
    for (long j = 1; j <= n; ++j) f[j] = m.m[j - 1];
    std::vector<Rat> u(n + 2, Rat(0)); // u = z f(z)
    for (long j = 0; j <= n; ++j) u[j + 1] = f[j];
    auto uinv = series_comp_inverse(u, n + 1);
    auto C = series_compose(f, uinv, n); // C(z) = 1 + sum kappa_j z^j
    FormalSeries R;
    R.var = FormalSeries::Var::z;
    R.c.assign(n, Rat(0));
    for (long j = 1; j <= n; ++j) R.c[j - 1] = C[j];
    // K(G(xi)) = xi in truncated form: w R(w f) = 1 - 1/f through order n
    auto lhs = series_compose(R.c, u, n);
    lhs.insert(lhs.begin(), Rat(0));
    lhs.resize(n + 1);
    auto rhs = series_inv(f, n);
    for (long j = 0; j <= n; ++j)
        if (lhs[j] != (j == 0 ? Rat(1) : Rat(0)) - rhs[j])
            throw std::logic_error("R-transform self-check failed");
    return R;
}

FormalSeries s_from_moments(const MomentSequence& m) {
    long n = m.order();
    if (n < 1 || m.m[0] == 0)
        throw std::domain_error("S-transform undefined at this truncation (first moment vanishes)");
    std::vector<Rat> psi(n + 1, Rat(0));
    for (long j = 1; j <= n; ++j) psi[j] = m.m[j - 1];
    auto chi = series_comp_inverse(psi, n);
    // S(z) = chi(z) (1+z)/z, the pole cancelling against chi's vanishing constant
    std::vector<Rat> chi_over_z(chi.begin() + 1, chi.end()); // order n-1
    FormalSeries S;
    S.var = FormalSeries::Var::z;
    S.c = series_mul(chi_over_z, {Rat(1), Rat(1)}, n - 1);
    return S;
}

MomentSequence free_additive_convolution(const MomentSequence& a, const MomentSequence& b) {
    if (a.order() != b.order()) throw std::invalid_argument("order mismatch");
    auto ka = cumulants_from_moments(a, Flavor::free);
    auto kb = cumulants_from_moments(b, Flavor::free);
    for (long i = 0; i < ka.order(); ++i) ka.c[i] += kb.c[i];
    return moments_from_cumulants(ka);
}

MomentSequence classical_convolution(const MomentSequence& a, const MomentSequence& b) {
    if (a.order() != b.order()) throw std::invalid_argument("order mismatch");
    auto ka = cumulants_from_moments(a, Flavor::classical);
    auto kb = cumulants_from_moments(b, Flavor::classical);
    for (long i = 0; i < ka.order(); ++i) ka.c[i] += kb.c[i];
    return moments_from_cumulants(ka);
}

MomentSequence free_multiplicative_convolution(const MomentSequence& a, const MomentSequence& b) {
    if (a.order() != b.order()) throw std::invalid_argument("order mismatch");
    long n = a.order();
    auto Sa = s_from_moments(a);
    auto Sb = s_from_moments(b);
    auto Sc = series_mul(Sa.c, Sb.c, n - 1);
    // chi(z) = z S(z) / (1+z), then psi = chi^{-1} recovers the moments
    auto q = series_mul(Sc, series_inv({Rat(1), Rat(1)}, n - 1), n - 1);
    std::vector<Rat> chi(n + 1, Rat(0));
    for (long j = 0; j < n; ++j) chi[j + 1] = q[j];
    auto psi = series_comp_inverse(chi, n);
    MomentSequence out;
    out.m.assign(psi.begin() + 1, psi.end());
    return out;
}

DensityGrid stieltjes_invert(const CauchyFn& G, const std::vector<double>& grid, double eps) {
    if (eps <= 0) throw std::invalid_argument("stieltjes_invert: eps must be positive");
    const double pi = 3.14159265358979323846;
    DensityGrid out;
    out.x = grid;
    size_t n = grid.size();
    std::vector<double> img(n);
    for (size_t i = 0; i < n; ++i)
        img[i] = G(std::complex<double>(grid[i], eps)).imag();
    // atom candidates where eps*|Im G| > 10*eps; group consecutive hits
    std::vector<char> hit(n, 0);
    for (size_t i = 0; i < n; ++i) hit[i] = std::fabs(img[i]) > 10.0;
    for (size_t i = 0; i < n;) {
        if (!hit[i]) { ++i; continue; }
        size_t j = i;
        size_t best = i;
        while (j < n && hit[j]) {
            if (std::fabs(img[j]) > std::fabs(img[best])) best = j;
            ++j;
        }
        double x = grid[best];
        auto mass_at = [&](double e) { return -e * G(std::complex<double>(x, e)).imag(); };
        double mass = 2.0 * mass_at(eps / 2) - mass_at(eps); // Richardson in eps
        if (mass > 0) out.atoms.emplace_back(x, mass);
        i = j;
    }
    out.density.resize(n);
    for (size_t i = 0; i < n; ++i) {
        double d = -img[i] / pi;
        for (auto& [loc, mass] : out.atoms) {
            double dx = grid[i] - loc;
            d -= mass * (eps / pi) / (dx * dx + eps * eps);
        }
        out.density[i] = std::max(0.0, d);
    }
    return out;
}

CauchyFn series_cauchy_evaluator(const FormalSeries& G) {
    if (G.var != FormalSeries::Var::xi_inv)
        throw std::invalid_argument("series_cauchy_evaluator expects a xi^{-1} series");
    // a_j = M_j read off G; Pade (n,n) of A(w) = sum a_j w^j, G ~ w P(w)/Q(w)
    std::vector<Rat> a;
    for (long j = 1; j <= G.order(); ++j) a.push_back(G.c[j]);
    long m = (long)a.size() - 1;
    if (m < 0) throw std::invalid_argument("series_cauchy_evaluator: empty series");
    long n = m / 2;
    std::vector<Rat> P, Q;
    for (; n >= 1; --n) {
        // Q = 1 + q_1 w + ... + q_n w^n from sum_i a_{k-i} q_i = -a_k, k = n+1..2n
        std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n + 1, Rat(0)));
        for (long r = 0; r < n; ++r) {
            long k = n + 1 + r;
            for (long i = 1; i <= n; ++i) M[r][i - 1] = coef(a, k - i);
            M[r][n] = -coef(a, k);
        }
        bool singular = false;
        for (long col = 0; col < n && !singular; ++col) {
            long piv = -1;
            for (long r = col; r < n; ++r)
                if (M[r][col] != 0) { piv = r; break; }
            if (piv < 0) { singular = true; break; }
            std::swap(M[col], M[piv]);
            for (long r = 0; r < n; ++r) {
                if (r == col || M[r][col] == 0) continue;
                Rat f = M[r][col] / M[col][col];
                for (long cc = col; cc <= n; ++cc) M[r][cc] -= f * M[col][cc];
            }
        }
        if (singular) continue;
        Q.assign(n + 1, Rat(0));
        Q[0] = 1;
        for (long i = 1; i <= n; ++i) Q[i] = M[i - 1][n] / M[i - 1][i - 1];
        P = series_mul(a, Q, n);
        break;
    }
    if (Q.empty()) { // no usable Pade denominator: plain truncated polynomial
        Q.assign(1, Rat(1));
        P = a;
    }
    std::vector<double> pd, qd;
    for (auto& v : P) pd.push_back(to_double(v));
    for (auto& v : Q) qd.push_back(to_double(v));
    return [pd, qd](std::complex<double> xi) {
        std::complex<double> w = 1.0 / xi;
        std::complex<double> p = 0, q = 0;
        for (auto it = pd.rbegin(); it != pd.rend(); ++it) p = p * w + *it;
        for (auto it = qd.rbegin(); it != qd.rend(); ++it) q = q * w + *it;
        return w * p / q;
    };
}

HankelResult hankel_check(const MomentSequence& m) {
    long dmax = m.order() / 2;
    for (long d = 0; d <= dmax; ++d) {
        std::vector<std::vector<Rat>> H(d + 1, std::vector<Rat>(d + 1));
        for (long i = 0; i <= d; ++i)
            for (long j = 0; j <= d; ++j) H[i][j] = m.at(i + j);
        // exact determinant by rational elimination
        Rat det = 1;
        bool zero = false;
        for (long col = 0; col <= d && !zero; ++col) {
            long piv = -1;
            for (long r = col; r <= d; ++r)
                if (H[r][col] != 0) { piv = r; break; }
            if (piv < 0) { zero = true; break; }
            if (piv != col) { std::swap(H[col], H[piv]); det = -det; }
            det *= H[col][col];
            for (long r = col + 1; r <= d; ++r) {
                Rat f = H[r][col] / H[col][col];
                for (long cc = col; cc <= d; ++cc) H[r][cc] -= f * H[col][cc];
            }
        }
        if (zero) det = 0;
        if (det < 0) return {false, d};
    }
    return {true, -1};
}

} // namespace freeprob
