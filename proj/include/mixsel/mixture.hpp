#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mixsel/distributions.hpp"

namespace mixsel {

struct GaussianComponent {
    double weight;
    double mean;
    double variance;
};

/// Univariate Gaussian mixture: sum_i p_i * N(x; mu_i, sigma_i^2) with the
/// weights on the open simplex.
class GaussianMixture {
public:
    /// Throws std::invalid_argument unless all weights are positive and sum to
    /// 1 within 1e-12, all variances are positive, and all values are finite.
    explicit GaussianMixture(std::vector<GaussianComponent> components);

    const std::vector<GaussianComponent>& components() const { return components_; }
    int order() const { return static_cast<int>(components_.size()); }

    double density(double x) const;
    double log_density(double x) const;  // log-sum-exp, safe against underflow

private:
    std::vector<GaussianComponent> components_;
};

double mixture_density(const GaussianMixture& g, double x);

/// sum_j w_j ln f(x_j). For an empirical sample of size n this times n is the
/// log-likelihood exactly.
double expected_log_density(const GaussianMixture& g, const WeightedPoints& pts);

/// Conjugate parameter priors as pseudo-observations; all-zero strengths are
/// exactly the uniform prior (MAP reduces to ML). The log prior is
///   sum_i [ kappa ln p_i
///           - tau/2 ln s_i - tau (mu_i - m0)^2 / (2 s_i)
///           - a ln s_i - b / s_i ]
/// with kappa = dirichlet_pseudocount, (m0, tau) = mean prior,
/// (a, b) = variance prior and s_i the component variances.
struct MapPriorSpec {
    double dirichlet_pseudocount = 0.0;
    double mean_location = 0.0;
    double mean_strength = 0.0;
    double variance_shape = 0.0;
    double variance_scale = 0.0;

    bool is_uniform() const {
        return dirichlet_pseudocount == 0.0 && mean_strength == 0.0 &&
               variance_shape == 0.0 && variance_scale == 0.0;
    }
    double log_prior(const GaussianMixture& g) const;
};

struct ParamCount {
    int v;        // independent parameters: 3m - 1
    int v_prime;  // v less m-independent terms: 3m
};

ParamCount num_params(int m);

struct EmConfig {
    double tol = 1e-8;  // relative change in the penalized objective
    int max_iter = 500;
    int restarts = 2;  // random perturbations on top of the deterministic init
    std::uint64_t seed = 0;
    std::optional<GaussianMixture> warm_start;
};

struct FitResult {
    GaussianMixture mixture;
    double expected_log_density;
    int iterations;
    bool converged;
    int restarts_used;
};

/// One EM trajectory from a fixed start; exposed so monotonicity and simplex
/// invariants can be checked per iteration.
struct EmRun {
    GaussianMixture mixture;
    double objective;  // weighted log-density plus log-prior
    double expected_log_density;
    std::vector<double> objective_trace;  // one entry per E-step, nondecreasing
    int iterations;
    bool converged;
};

/// Variance floor used by EM: 1e-6 times the overall variance of pts.
double variance_floor_for(const WeightedPoints& pts);

EmRun em_run(const WeightedPoints& pts, const GaussianMixture& init, const MapPriorSpec& prior,
             double tol, int max_iter, double variance_floor);

/// Weighted EM for a fixed component count. Runs the warm start (if any), a
/// deterministic quantile-based init, and `restarts` seeded perturbations;
/// returns the best final penalized objective (earliest candidate wins ties).
/// Throws InfeasibleOrderError when pts has fewer distinct values than m and
/// NumericError when the objective becomes non-finite.
FitResult em_fit(const WeightedPoints& pts, int m, const MapPriorSpec& prior, const EmConfig& config);

/// Warm start for order m+1 from an order-m fit: new component of weight 0.05
/// (others rescaled) at the lowest-density point of pts, variance 100x floor.
GaussianMixture augment_for_warm_start(const GaussianMixture& fit, const WeightedPoints& pts);

/// Embeds an order-m mixture as order m+1 with identical density by splitting
/// the heaviest component into two equal halves.
GaussianMixture split_heaviest_component(const GaussianMixture& fit);

}  // namespace mixsel
