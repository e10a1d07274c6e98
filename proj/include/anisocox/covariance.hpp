#pragma once

#include <stdexcept>
#include <vector>

#include "anisocox/geometry.hpp"

namespace anisocox {

/// Matern triple: scale alpha > 0, smoothness nu > 0, power sigma (the
/// zero-lag covariance; must be positive on the diagonal of a model).
struct MaternParams {
    double alpha;
    double nu;
    double sigma;

    MaternParams(double alpha_, double nu_, double sigma_);
};

/// Isotropic Matern covariance
///   sigma / (2^{nu-1} Gamma(nu)) (2 sqrt(nu) r / alpha)^nu K_nu(2 sqrt(nu) r / alpha),
/// with value sigma at r = 0. Arguments beyond 700 underflow and return 0.
double matern_iso(double r, const MaternParams& m);

/// Geometric anisotropic covariance: matern_iso(|Sigma^{-1/2} h|).
double cov(Vec2 h, const MaternParams& m, const Deformation& d);

/// Pair correlation functions of the LGCP: g = exp(C).
double pcf_iso(double r, const MaternParams& m);
double pcf(Vec2 h, const MaternParams& m, const Deformation& d);
/// Polar form g0(r/zeta * sqrt(1 - (1 - zeta^2) cos^2(phi - theta))).
double pcf_polar(double r, double phi, const MaternParams& m, const Deformation& d);

/// Anisotropic Matern spectral density (d = 2):
///   |Sigma|^{1/2} sigma Gamma(nu + d/2) / (pi^{d/2} Gamma(nu))
///     (4 nu / alpha^2)^nu (4 nu / alpha^2 + |Sigma^{1/2} w|^2)^{-nu - d/2}.
double spectral_density(Vec2 w, const MaternParams& m, const Deformation& d);

/// Full parameter set of a P-variate model; matern/deform entries are stored
/// once per unordered pair.
class ModelSpec {
  public:
    ModelSpec(int P, std::vector<double> mu, std::vector<MaternParams> matern_upper,
              std::vector<Deformation> deform_upper);

    int types() const { return p_; }
    double mu(int p) const { return mu_.at(static_cast<std::size_t>(p)); }
    const MaternParams& matern(int p, int q) const { return matern_[index(p, q)]; }
    const Deformation& deform(int p, int q) const { return deform_[index(p, q)]; }
    /// Expected intensity lambda_p = exp(mu_p + sigma_pp / 2).
    double intensity(int p) const;

    double pcf(Vec2 h, int p, int q) const;
    double pcf_polar(double r, double phi, int p, int q) const;
    double spectral_density(Vec2 w, int p, int q) const;
    /// (|f_pq(w)|, sqrt(f_pp(w) f_qq(w))), p != q.
    std::pair<double, double> cross_spectrum_bound(Vec2 w, int p, int q) const;
    /// Coherence f_pq / sqrt(f_pp f_qq); 0 when a marginal spectrum vanishes.
    double coherence(Vec2 w, int p, int q) const;

    /// Upper-triangle pair count P(P+1)/2.
    std::size_t pairs() const { return matern_.size(); }
    std::size_t index(int p, int q) const;

    /// Convenience for the bivariate case; entries ordered (11, 12, 22).
    static ModelSpec bivariate(double mu1, double mu2, const MaternParams& m11,
                               const MaternParams& m12, const MaternParams& m22,
                               const Deformation& d11, const Deformation& d12,
                               const Deformation& d22);

  private:
    int p_;
    std::vector<double> mu_;
    std::vector<MaternParams> matern_;
    std::vector<Deformation> deform_;
};

} // namespace anisocox
