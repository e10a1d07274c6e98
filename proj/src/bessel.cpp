#include "anisocox/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace anisocox {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kEps = 1e-16;
constexpr int kMaxIter = 20000;

// K_{n+1/2}(x) by upward recurrence from the explicit K_{1/2}.
double half_integer_k(int n, double x) {
    const double k_half = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
    if (n == 0) return k_half;
    double km = k_half;                  // K_{1/2}
    double k = k_half * (1.0 + 1.0 / x); // K_{3/2}
    for (int j = 1; j < n; ++j) {
        const double kp = km + (2.0 * j + 1.0) / x * k;
        km = k;
        k = kp;
    }
    return k;
}

// gam1 = [1/Gamma(1-mu) - 1/Gamma(1+mu)] / (2 mu), gam2 = the average,
// gampl = 1/Gamma(1+mu), gammi = 1/Gamma(1-mu). |mu| <= 1/2.
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl, double& gammi) {
    gampl = 1.0 / std::tgamma(1.0 + mu);
    gammi = 1.0 / std::tgamma(1.0 - mu);
    gam1 = std::abs(mu) < 1e-6 ? kEulerGamma : (gammi - gampl) / (2.0 * mu);
    gam2 = 0.5 * (gammi + gampl);
}

// Temme series for K_mu and K_{mu+1}, x <= 2, |mu| <= 1/2.
void k_series_small_x(double mu, double x, double& k_mu, double& k_mup1) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    double gam1, gam2, gampl, gammi;
    temme_gammas(mu, gam1, gam2, gampl, gammi);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    const double mu2 = mu * mu;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu2);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        const double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    if (i > kMaxIter) throw std::runtime_error("bessel_k: series failed to converge");
    k_mu = sum;
    k_mup1 = sum1 * 2.0 / x;
}

// Steed continued fraction CF2 for K_mu and K_{mu+1}, x > 2, |mu| <= 1/2.
void k_cf2_large_x(double mu, double x, double& k_mu, double& k_mup1) {
    const double mu2 = mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= kMaxIter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    if (i > kMaxIter) throw std::runtime_error("bessel_k: continued fraction failed to converge");
    h = a1 * h;
    k_mu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    k_mup1 = k_mu * (mu + x + 0.5 - h) / x;
}

} // namespace

double bessel_k(double nu, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("bessel_k: requires x > 0");
    if (nu < 0.0) nu = -nu; // K_{-nu} = K_{nu}
    if (x > 700.0) return 0.0;

    const double half_shift = nu - 0.5;
    if (half_shift >= 0.0 && half_shift == std::floor(half_shift)) {
        return half_integer_k(static_cast<int>(half_shift), x);
    }

    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl; // in [-1/2, 1/2]
    double k_mu, k_mup1;
    if (x <= 2.0) {
        k_series_small_x(mu, x, k_mu, k_mup1);
    } else {
        k_cf2_large_x(mu, x, k_mu, k_mup1);
    }
    for (int i = 1; i <= nl; ++i) {
        const double k_next = (mu + i) * (2.0 / x) * k_mup1 + k_mu;
        k_mu = k_mup1;
        k_mup1 = k_next;
    }
    return k_mu;
}

} // namespace anisocox
