#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "anisocox/covariance.hpp"

namespace anisocox {

/// Symmetric P x P correlation matrix: unit diagonal, stored full.
class CorrMatrix {
  public:
    explicit CorrMatrix(int P); // identity
    static CorrMatrix equicorrelated(int P, double rho);

    int size() const { return p_; }
    double operator()(int p, int q) const { return v_[static_cast<std::size_t>(p) * p_ + q]; }
    void set(int p, int q, double value);
    /// Smallest eigenvalue (symmetric matrix).
    double min_eigenvalue() const;

  private:
    int p_;
    std::vector<double> v_;
};

struct ConditionResult {
    bool pass = false;
    /// Smallest eigenvalue of the tested matrix; for the conditional checks
    /// this is taken on the zero-sum contrast subspace (NaN when P = 1 and
    /// the subspace is empty).
    double min_eigenvalue = 0.0;
    std::string detail;
};

struct PairCorrelationBound {
    int p = 0, q = 0;
    std::array<double, 4> tau{};
    double bound = 0.0;    // sqrt(tau1 tau2 tau3 tau4)
    double realized = 0.0; // sigma_pq / sqrt(sigma_pp sigma_qq)
};

struct ValidityReport {
    ConditionResult cond1, cond2, cond3, cond4;
    bool zeta_bound_ok = true; // zeta_pq^2 >= zeta_pp zeta_qq for all pairs
    std::vector<PairCorrelationBound> rho_bounds;

    bool all_pass() const { return cond1.pass && cond2.pass && cond3.pass && cond4.pass; }
};

/// Smoothness-gap constant: max over pairs of nu_pq - (nu_pp + nu_qq)/2,
/// floored at zero. This canonical witness is what the checks and the
/// correlation bound use.
double canonical_delta_nu(const ModelSpec& model);

/// Checks the four sufficient validity conditions plus the zeta implication
/// and the colocated correlation bounds.
ValidityReport check_conditions(const ModelSpec& model, double tol = 1e-10);

/// Four tau factors, their combined bound and the realized colocated
/// cross-correlation for pair (p, q), p != q.
PairCorrelationBound colocated_correlation_bound(const ModelSpec& model, int p, int q);

/// One fully specified marginal process.
struct Marginal {
    double mu;
    MaternParams matern;
    Deformation deform;
};

/// Constants for the sequential cross-parameter construction. The A matrices
/// must be valid correlation matrices; entries of a_nu, a_alpha and the
/// a_sigma_diag pair lie in [0, 1], entries of a_sigma in [-1, 1]. When
/// sigma_v is empty the V_p constants are derived from the marginals, which
/// makes a_sigma(p, q) exactly the ratio of sigma_pq to its upper bound.
struct CrossConstruction {
    double delta_nu = 0.0;
    double delta_alpha = 0.0;
    std::vector<double> sigma_v{};
    std::array<double, 2> delta_sigma_diag{0.0, 0.0};
    CorrMatrix a_nu;
    CorrMatrix a_alpha;
    CorrMatrix a_sigma;
    std::array<CorrMatrix, 2> a_sigma_diag;

    explicit CrossConstruction(int P);
};

/// Builds a full model from marginals via the explicit constructions:
/// nu_pq from the smoothness-gap identity, 4 nu_pq / alpha_pq^2 from the
/// inverse-correlation-length mean, sigma_pq from the Gamma/Beta expression,
/// and the deformation diagonals from the elementwise means, recovered back
/// to (theta, zeta) form. Throws when the prescribed diagonals cannot be
/// realized by any deformation matrix.
ModelSpec construct_cross(const std::vector<Marginal>& marginals, const CrossConstruction& c);

/// V_p constants that reproduce the given marginal power parameters in the
/// sigma construction (the diagonal of the tested matrix).
std::vector<double> derive_sigma_v(const std::vector<Marginal>& marginals, double delta_nu);

} // namespace anisocox
