#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mixsel/distributions.hpp"
#include "mixsel/entropy.hpp"
#include "mixsel/mixture.hpp"
#include "mixsel/search.hpp"
#include "mixsel/selection.hpp"

namespace mixsel {

// Input distribution spec, e.g.
//   {"kind":"exponential","rate":1.0,"n_equiv":100}
//   {"kind":"uniform","lo":0.0,"hi":1.0,"n_equiv":100}
//   {"kind":"gaussian","mean":0.0,"variance":1.0,"n_equiv":100}
//   {"kind":"sample","points":[...]}
//   {"kind":"piecewise_linear_cdf","x":[...],"cdf":[...],"n_equiv":5}
InputDistribution parse_input_distribution(const nlohmann::json& j);
nlohmann::json to_json(const InputDistribution& d);

// {"components":[{"weight":...,"mean":...,"variance":...}, ...]}
GaussianMixture parse_mixture(const nlohmann::json& j);
nlohmann::json to_json(const GaussianMixture& g);

// {"kind":"bic","n":100} | {"kind":"map_geometric","p1":0.95,"n":100}
// | {"kind":"effratio_poly","k":5,"n":100}; optional "estimation":"ml"|"map"
// and "prior":{...} for MAP parameter estimation.
CriterionSpec parse_criterion(const nlohmann::json& j);
nlohmann::json to_json(const CriterionSpec& spec);

nlohmann::json to_json(const FitResult& fit);
nlohmann::json to_json(const AccuracyReport& report);  // absent fields omitted

struct OutputConfig {
    std::string csv_path;
    std::string json_path;
};

struct ExperimentConfig {
    InputDistribution input;
    std::vector<CriterionSpec> criteria;
    SearchConfig search;
    OutputConfig output;
    std::uint64_t seed = 0;
};

/// Parses and validates a full experiment config; at least one criterion.
ExperimentConfig parse_experiment_config(const nlohmann::json& j);

/// %.12g formatting used by every CSV column.
std::string format_g12(double v);

/// Writes atomically (temp file + rename). Throws std::runtime_error on I/O failure.
void atomic_write_file(const std::string& path, const std::string& content);

/// CSV with header m,accuracy,penalty,objective and one row per fitted order.
std::string selection_trace_csv(const SelectionTrace& trace);

/// CSV with header m,<value_name> from an accuracy curve.
std::string accuracy_curve_csv(const std::vector<AccuracyPoint>& curve,
                               const std::string& value_name);

}  // namespace mixsel
