#pragma once

#include <cstddef>
#include <vector>

#include "mixsel/distributions.hpp"
#include "mixsel/selection.hpp"

namespace mixsel {

struct SearchConfig {
    int m_max = 12;
    int lookahead = 2;  // extra orders checked past a local stop
    EmConfig em{};
    std::size_t discretize_count = 4096;  // continuous inputs

    void validate() const;  // m_max >= 1, 0 <= lookahead <= m_max
};

/// Incremental nested-model search: fits orders 1, 2, ... with warm starts
/// from the previous order, stops at the first m whose next 1 + lookahead
/// orders all fail to exceed its objective (weak inequality) or at m_max.
/// chosen_m is the argmax over every fitted order.
SelectionTrace select_model(const InputDistribution& d, const CriterionSpec& spec,
                            const SearchConfig& cfg);

struct AccuracyPoint {
    int m;
    double value;  // continuous inputs: relative entropy; empirical: expected log density
    FitResult fit;
};

/// One warm-started fit per order 1..m_max. For continuous inputs the value is
/// D(X, Y_m) via the difference form -E[ln f_m] - H(X) with the fitted
/// expectation, so it is nonincreasing in m by nested-fit dominance.
std::vector<AccuracyPoint> accuracy_curve(const InputDistribution& d, int m_max,
                                          const SearchConfig& cfg);

/// Stop rule in objective form: the order-(m+1) objective is no greater.
bool stop_after_objective(double objective_m, double objective_next);

/// Stop rule in relative-entropy form: the decrease D(m) - D(m+1) does not
/// exceed the penalty increment. Equivalent to the objective form on the same
/// fits.
bool stop_after_entropy_decrease(double d_m, double d_next, double penalty_increment);

}  // namespace mixsel
