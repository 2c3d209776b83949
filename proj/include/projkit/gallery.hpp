#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projkit/diagnostics.hpp"
#include "projkit/engine.hpp"
#include "projkit/spirals.hpp"

namespace projkit {

enum class ExpectedKind {
    converges_linear,
    converges_sublinear,
    non_convergent,
    converges_finite,
};

const char* to_string(ExpectedKind k);
ExpectedKind expected_kind_from_string(const std::string& s);

struct Expected {
    ExpectedKind kind = ExpectedKind::converges_linear;
    double rho = 0.0;  // decay exponent, sublinear kind only
};

/// Named, fully parameterized experiment: the two sets, start point, stop
/// rule, and the qualitative outcome the fixture is expected to reproduce.
struct ExperimentSpec {
    std::string name;
    std::string summary;
    SetPtr set_a;
    SetPtr set_b;
    Vector x0{0.0};
    StopRule rule;
    Expected expected;
    Vector probe_point{0.0};  // default x* for regularity probes
    std::string notes;
};

const std::vector<std::string>& gallery_names();

/// Fully built fixture by name; LookupError when unknown.
ExperimentSpec example(const std::string& name);

struct Verdict {
    bool pass = false;
    std::string classified;
    std::string detail;
};

/// Classifies a finished run against the fixture's expected outcome.
Verdict classify(const ExperimentSpec& spec, const Trace& trace);

struct GalleryRun {
    std::string name;
    ExperimentSpec spec;
    Trace trace;
    Verdict verdict;
};

std::vector<GalleryRun> run_gallery(const std::vector<std::string>& names,
                                    const std::optional<StopRule>& rule_override = {});
std::vector<GalleryRun> run_gallery();

/// Building blocks of the flat-tangency benchmark placed at a descending
/// parameter grid (log-spaced between x_hi and x_lo), built with the actual
/// projection operators. The usable window is limited below by the floating
/// point floor of exp(-1/x^2): both f and f*f' must stay normal, which holds
/// for x >= 0.055.
std::vector<BuildingBlock> flat_tangent_blocks(double x_hi, double x_lo, std::size_t count);

/// Total signed turning of the planar angle along a point sequence (first
/// two coordinates), accumulated from wrapped increments.
double unwrapped_winding(const std::vector<Vector>& points);

}  // namespace projkit
