#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "projkit/gallery.hpp"

namespace projkit {

/// Diagnostics requested by an experiment configuration.
struct DiagnosticsRequest {
    std::vector<double> omega_grid;  // empty means the default grid
    std::optional<HolderParams> holder;
    std::optional<RateKind> rate_kind;
};

/// A run description, either parsed from a JSON config file or derived from
/// a registered fixture. JSON schema (unknown keys are rejected):
///   { "name": str, "set_a": {...}, "set_b": {...} | "pair": {...},
///     "x0": [..], "rule": {gap_tol, step_tol, max_iter, stall_window},
///     "expected": str | {"kind": str, "rho": num},
///     "probe_point": [..],
///     "diagnostics": {"omega_grid": [..], "rate_kind": str,
///                     "holder": {sigma, c, radius, samples, seed}} }
/// Set constructors: fullspace{dim}, halfspace{normal, offset},
/// finite_points{points}, sector{theta_lo, theta_hi, radius_cap?},
/// epigraph{curve, bracket}, support{mask, n}, fourier_magnitude{amplitude},
/// diagonal{blocks, block_dim}, product{components}, cylinder{radius, h_lo,
/// h_hi}; pair constructors: discrete_spiral{ray_angle|ray_count,
/// start_radius?, floor?}, continuous_spiral{r1?, floor?, circle_samples?}.
struct ExperimentConfig {
    std::string name = "experiment";
    SetPtr set_a;
    SetPtr set_b;
    Vector x0{0.0};
    StopRule rule;
    std::optional<Expected> expected;
    std::optional<Vector> probe_point;
    DiagnosticsRequest diagnostics;
};

ExperimentConfig parse_config_file(const std::filesystem::path& path);
ExperimentConfig parse_config_text(const std::string& text);

/// Config view of a registered fixture (name, x0, rule, expected, set
/// summaries), serialized as a JSON document.
std::string fixture_to_json(const ExperimentSpec& spec);

/// ExperimentConfig from a fixture, so the CLI treats names and config
/// files uniformly.
ExperimentConfig config_from_fixture(const ExperimentSpec& spec);

}  // namespace projkit
