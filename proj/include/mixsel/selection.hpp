#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixsel/mixture.hpp"

namespace mixsel {

enum class CriterionKind {
    aic,
    bic,
    map_geometric,  // geometric prior over the model index, parameter p1
    effratio_exp,   // cost a * k^m
    effratio_poly,  // cost a * m^k
    no_penalty,     // diagnostic: zero penalty, the search runs to m_max
};

enum class EstimationMethod { ml, map };

struct EstimationSpec {
    EstimationMethod method = EstimationMethod::ml;
    MapPriorSpec prior{};  // used when method == map
};

/// One penalized-likelihood objective: which penalty, its parameter, and the
/// (equivalent) sample size n that scales it.
struct CriterionSpec {
    CriterionKind kind = CriterionKind::aic;
    double p1 = 0.0;  // map_geometric: in (0, 1]
    double k = 0.0;   // effratio_exp: > 1; effratio_poly: > 0
    std::int64_t n = 0;
    EstimationSpec estimation{};

    /// Throws std::invalid_argument on parameter-range violations.
    void validate() const;
    /// Non-fatal advisories, e.g. AIC/BIC paired with MAP estimation.
    std::vector<std::string> warnings() const;
    std::string label() const;
};

/// Penalty in per-sample-point units (everything divided by n):
///   AIC            v(m)/n with v(m) = 3m - 1
///   BIC            (1/2 ln n) v(m)/n
///   map_geometric  ln[1/(1-p1)] m/n
///   effratio_exp   (ln k) m/n
///   effratio_poly  (k ln m)/n
double penalty(const CriterionSpec& spec, int m);

/// Same, but AIC/BIC use the v'(m) = 3m convention of the comparison plots;
/// the constant difference from penalty() never changes an argmax.
double penalty_figure1(const CriterionSpec& spec, int m);

/// fit.expected_log_density - penalty(spec, m). Multiplying by n recovers the
/// log-scale penalized likelihood up to constants independent of m.
double objective(const CriterionSpec& spec, int m, const FitResult& fit);

/// Geometric-prior parameter equivalent to an information criterion with the
/// given c(n): p1 = 1 - exp(-c(n) v'(m)/m); for Gaussian mixtures v'(m)/m = 3
/// so the result is m-independent.
double map_p1_equivalent(double c_n, int m);

/// Geometric-prior parameter equivalent to effratio_exp cost: p1 = 1 - 1/k.
/// Throws std::domain_error for k <= 1.
double effratio_p1_equivalent(double k);

enum class StoppedBy { heuristic, m_max };

struct SelectionRow {
    int m;
    double accuracy;
    double penalty;
    double objective;
    FitResult fit;
};

struct SelectionTrace {
    std::vector<SelectionRow> rows;  // contiguous from m = 1
    int chosen_m;                    // argmax objective, smallest m on ties
    StoppedBy stopped_by;
};

}  // namespace mixsel
