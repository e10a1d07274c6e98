#include "anisocox/covariance.hpp"

#include <cmath>

#include "anisocox/bessel.hpp"

namespace anisocox {

MaternParams::MaternParams(double alpha_, double nu_, double sigma_)
    : alpha(alpha_), nu(nu_), sigma(sigma_) {
    if (!(alpha > 0.0)) throw std::invalid_argument("MaternParams: requires alpha > 0");
    if (!(nu > 0.0)) throw std::invalid_argument("MaternParams: requires nu > 0");
}

double matern_iso(double r, const MaternParams& m) {
    if (r < 0.0) throw std::invalid_argument("matern_iso: requires r >= 0");
    if (m.sigma == 0.0) return 0.0;
    const double x = 2.0 * std::sqrt(m.nu) * r / m.alpha;
    if (x == 0.0) return m.sigma;
    if (x > 700.0) return 0.0; // K_nu underflows; covariance is numerically zero
    const double log_pre = (1.0 - m.nu) * std::log(2.0) - std::lgamma(m.nu) +
                           m.nu * std::log(x);
    return m.sigma * std::exp(log_pre) * bessel_k(m.nu, x);
}

double cov(Vec2 h, const MaternParams& m, const Deformation& d) {
    return matern_iso(d.inv_sqrt_matrix().apply(h).norm(), m);
}

double pcf_iso(double r, const MaternParams& m) { return std::exp(matern_iso(r, m)); }

double pcf(Vec2 h, const MaternParams& m, const Deformation& d) {
    return std::exp(cov(h, m, d));
}

double pcf_polar(double r, double phi, const MaternParams& m, const Deformation& d) {
    if (r < 0.0) throw std::invalid_argument("pcf_polar: requires r >= 0");
    const double c = std::cos(phi - d.theta);
    const double arg =
        r / d.zeta * std::sqrt(1.0 - (1.0 - d.zeta * d.zeta) * c * c);
    return pcf_iso(arg, m);
}

double spectral_density(Vec2 w, const MaternParams& m, const Deformation& d) {
    const double t = 4.0 * m.nu / (m.alpha * m.alpha);
    const double sw2 = d.sqrt_matrix().apply(w).norm2();
    const double half_d = 0.5 * kDim;
    const double pre = d.zeta * m.sigma *
                       std::exp(std::lgamma(m.nu + half_d) - std::lgamma(m.nu)) /
                       std::pow(kPi, half_d);
    return pre * std::pow(t, m.nu) * std::pow(t + sw2, -m.nu - half_d);
}

ModelSpec::ModelSpec(int P, std::vector<double> mu, std::vector<MaternParams> matern_upper,
                     std::vector<Deformation> deform_upper)
    : p_(P), mu_(std::move(mu)), matern_(std::move(matern_upper)),
      deform_(std::move(deform_upper)) {
    if (p_ < 1) throw std::invalid_argument("ModelSpec: requires P >= 1");
    const std::size_t expected = static_cast<std::size_t>(p_) * (p_ + 1) / 2;
    if (mu_.size() != static_cast<std::size_t>(p_) || matern_.size() != expected ||
        deform_.size() != expected) {
        throw std::invalid_argument("ModelSpec: size mismatch for P types");
    }
    for (int p = 0; p < p_; ++p) {
        if (!(matern(p, p).sigma > 0.0)) {
            throw std::invalid_argument("ModelSpec: marginal sigma must be positive");
        }
    }
}

std::size_t ModelSpec::index(int p, int q) const {
    if (p < 0 || q < 0 || p >= p_ || q >= p_) {
        throw std::out_of_range("ModelSpec: type index out of range");
    }
    if (p > q) std::swap(p, q);
    // Row-major upper triangle: offset of row p, then column q.
    return static_cast<std::size_t>(p) * (2 * p_ - p - 1) / 2 + static_cast<std::size_t>(q);
}

ModelSpec ModelSpec::bivariate(double mu1, double mu2, const MaternParams& m11,
                               const MaternParams& m12, const MaternParams& m22,
                               const Deformation& d11, const Deformation& d12,
                               const Deformation& d22) {
    return ModelSpec(2, {mu1, mu2}, {m11, m12, m22}, {d11, d12, d22});
}

double ModelSpec::intensity(int p) const { return std::exp(mu(p) + 0.5 * matern(p, p).sigma); }

double ModelSpec::pcf(Vec2 h, int p, int q) const {
    return anisocox::pcf(h, matern(p, q), deform(p, q));
}

double ModelSpec::pcf_polar(double r, double phi, int p, int q) const {
    return anisocox::pcf_polar(r, phi, matern(p, q), deform(p, q));
}

double ModelSpec::spectral_density(Vec2 w, int p, int q) const {
    return anisocox::spectral_density(w, matern(p, q), deform(p, q));
}

std::pair<double, double> ModelSpec::cross_spectrum_bound(Vec2 w, int p, int q) const {
    if (p == q) throw std::invalid_argument("cross_spectrum_bound: requires p != q");
    const double fpq = spectral_density(w, p, q);
    const double bound = std::sqrt(spectral_density(w, p, p) * spectral_density(w, q, q));
    return {std::abs(fpq), bound};
}

double ModelSpec::coherence(Vec2 w, int p, int q) const {
    const double denom = std::sqrt(spectral_density(w, p, p) * spectral_density(w, q, q));
    if (denom == 0.0) return 0.0;
    return spectral_density(w, p, q) / denom;
}

} // namespace anisocox
