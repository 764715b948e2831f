#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace mixsel {

struct Exponential {
    double rate;
};

struct Uniform {
    double lo;
    double hi;
};

struct Gaussian {
    double mean;
    double variance;
};

struct EmpiricalSample {
    std::vector<double> points;
};

/// Elicited CDF: piecewise-linear between (x[i], cdf[i]) knots, so the density
/// is piecewise constant. x strictly increasing; cdf nondecreasing from 0 to 1.
struct PiecewiseLinearCdf {
    std::vector<double> x;
    std::vector<double> cdf;
};

/// Discrete surrogate for an input distribution: weights sum to 1.
struct WeightedPoints {
    std::vector<double> x;
    std::vector<double> w;

    std::size_t size() const { return x.size(); }
    double mean() const;
    double variance() const;  // about the weighted mean
    std::size_t distinct_count() const;
};

/// The thing being modeled: an analytic density, an empirical sample, or an
/// elicited CDF, together with the equivalent exchangeable sample size n that
/// weighs it against model-size penalties.
class InputDistribution {
public:
    using Kind = std::variant<Exponential, Uniform, Gaussian, EmpiricalSample, PiecewiseLinearCdf>;

    /// Validates parameters; throws std::invalid_argument on violations.
    /// For EmpiricalSample, n_equiv must equal the point count.
    InputDistribution(Kind kind, std::int64_t n_equiv);

    /// Empirical sample with n_equiv fixed to the point count.
    static InputDistribution empirical(std::vector<double> points);

    const Kind& kind() const { return kind_; }
    std::int64_t n_equiv() const { return n_equiv_; }
    bool is_continuous() const;

private:
    Kind kind_;
    std::int64_t n_equiv_;
};

/// Density f_X(x); zero outside the support.
/// Throws UnsupportedOperationError for empirical samples.
double density(const InputDistribution& d, double x);

/// Quantile function (inverse CDF) for continuous kinds, q in (0, 1).
double quantile(const InputDistribution& d, double q);

/// Differential entropy H(X) = -E[ln f_X(X)] by the module quadrature rule
/// (Simpson over the quantile range [1e-9, 1-1e-9]; grid_points = 0 means the
/// default size). PiecewiseLinearCdf uses the exact segment form.
double entropy(const InputDistribution& d, std::size_t grid_points = 0);

/// Equal-weight points at mid-quantiles (i-0.5)/count for continuous kinds;
/// the sample itself with 1/n weights for EmpiricalSample (count ignored).
WeightedPoints discretize(const InputDistribution& d, std::size_t count);

/// n i.i.d. draws by inverse-CDF transform of mt19937_64 output
/// ((bits >> 11) + 0.5) * 2^-53, so results are reproducible across builds.
std::vector<double> draw_sample(const InputDistribution& d, std::size_t n, std::uint64_t seed);

}  // namespace mixsel
