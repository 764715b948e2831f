#pragma once

#include <cstdint>
#include <optional>

#include "mixsel/distributions.hpp"
#include "mixsel/mixture.hpp"

namespace mixsel {

/// Accuracy of a fitted mixture against its input. For continuous inputs all
/// three fields are present and relative_entropy = -expected_log_density -
/// input_entropy (the difference identity); for empirical inputs only
/// expected_log_density is defined.
struct AccuracyReport {
    double expected_log_density;
    std::optional<double> input_entropy;
    std::optional<double> relative_entropy;
};

/// D(X, Y) = E[ln f_X(X) / f_Y(X)] by quadrature over the truncated support,
/// on the same grid as entropy(d). Nonnegative up to quadrature error.
/// Throws UnsupportedOperationError for empirical inputs.
double relative_entropy(const InputDistribution& d, const GaussianMixture& g,
                        std::size_t grid_points = 0);

/// E[ln f_Y(X)] by quadrature on the shared grid (continuous inputs only).
double expected_log_mixture_density(const InputDistribution& d, const GaussianMixture& g,
                                    std::size_t grid_points = 0);

/// Fills every field available for d's kind. Continuous inputs use the shared
/// quadrature grid (so the difference identity holds to round-off); empirical
/// inputs take the expectation over pts.
AccuracyReport accuracy_report(const InputDistribution& d, const GaussianMixture& g,
                               const WeightedPoints& pts);

/// n * expected_log_density: the log-likelihood of an exchangeable sample of
/// size n expressed through the expectation over a random draw from it.
double loglik_from_expectation(std::int64_t n, double expected_log_density);

}  // namespace mixsel
