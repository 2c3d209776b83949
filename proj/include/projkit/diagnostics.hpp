#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "projkit/engine.hpp"

namespace projkit {

/// Angle quotient (1 - cos alpha) / ||a_plus - b_plus||^omega of one block.
/// Returns nullopt for blocks whose alpha is degenerate (they carry no angle
/// information and must be skipped), +infinity when the block gap vanishes
/// with omega > 0. Requires omega in [0, 2).
std::optional<double> angle_quotient(const BuildingBlock& block, double omega);

/// Measured separability data at one exponent: gamma_hat is the exact
/// minimum of the finite per-block quotients.
struct SeparabilityEstimate {
    double omega = 0.0;
    double gamma_hat = 0.0;
    std::size_t blocks_used = 0;
    std::size_t degenerate_skipped = 0;
};

std::vector<double> default_omega_grid();  // {0, 0.25, ..., 1.75}

std::vector<SeparabilityEstimate> estimate_separability(std::span<const BuildingBlock> blocks,
                                                        std::span<const double> omega_grid);
std::vector<SeparabilityEstimate> estimate_separability(const Trace& trace,
                                                        std::span<const double> omega_grid);

/// Sampling parameters of the regularity probe.
struct HolderParams {
    double sigma = 0.0;              // in [0, 1)
    double c = 0.5;                  // > 0
    double neighborhood_radius = 0.1;
    std::size_t sample_count = 256;  // ambient draws per stage
    std::uint64_t seed = 0;          // offsets the quasi-random sequence
};

struct HolderViolation {
    Vector a_plus;
    Vector b_plus;
    Vector b;
    double r = 0.0;
    double cos_beta = 0.0;
    double threshold = 0.0;
};

struct HolderReport {
    double sigma = 0.0;
    double c = 0.0;
    std::vector<HolderViolation> violations;
    std::size_t a_samples = 0;           // accepted A-points in the neighborhood
    std::size_t candidates_checked = 0;  // admissible B-candidates tested
    std::size_t skipped = 0;             // degenerate or out-of-window draws
    std::string note;
};

/// Empirically searches for points violating the regularity emptiness
/// condition around x_star: samples a_plus in A near x_star, pairs it with
/// b_plus = P_B(a_plus), r = ||a_plus - b_plus||, then tests B-candidates b
/// inside the ball of radius (1+c) r around a_plus that project back onto
/// a_plus. Every candidate with cos beta > sqrt(c) r^sigma is reported.
/// Membership in the projection preimage is rendered numerically as
/// ||P_A(b) - a_plus|| <= 1e-8 (1 + ||a_plus||); the report carries a note
/// flagging this surrogate.
HolderReport holder_probe(const ProjectableSet& a_set, const ProjectableSet& b_set,
                          const Vector& x_star, const HolderParams& params);

/// Constant of the three-point estimate: min{1/2, 1 - sqrt(2c/gamma), c/(2+c)}.
/// Requires 0 < c < gamma/2.
double three_point_ell(double gamma, double c);

struct EstimateViolation {
    std::size_t index = 0;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct CheckReport {
    double ell = 0.0;
    std::size_t checked = 0;
    std::vector<EstimateViolation> violations;
};

/// Checks ||a+ - b+||^2 + ell ||b - b+||^2 <= ||a+ - b||^2 on every recorded
/// block, with ell computed from (gamma, c) by three_point_ell.
CheckReport three_point_check(const Trace& trace, double gamma, double c);

/// Checks d_B(a+)^2 + ell ||b - b+||^2 <= d_B(a)^2 on every consecutive
/// quadruple a -> b -> a+ -> b+. Requires ell in (0, 1].
CheckReport four_point_check(const Trace& trace, double ell);

enum class RateKind { power, linear };

struct RateFit {
    RateKind kind = RateKind::power;
    double value = 0.0;      // decay exponent rho_hat, or quotient q_factor
    double r_squared = 0.0;
    std::size_t window_begin = 0;  // merged-iterate indices used by the fit
    std::size_t window_end = 0;
};

/// Fits the decay of ||z_j - z*|| over the merged iterate sequence, with z*
/// the final b-iterate and the last 10% of iterates excluded as proxy-limit
/// contamination. power: least squares of log-error against log-index;
/// linear: least squares of log-error against index (q_factor per half-step).
/// Throws NotConvergedError on stalled traces and WindowError when fewer
/// than 50 usable points remain.
RateFit fit_rate(const Trace& trace, RateKind kind);

/// Predicted decay exponent (2 - omega) / (2 omega) for omega in (0, 2);
/// omega = 0 is the linear regime and out of this formula's domain.
double predicted_rate(double omega);

/// Separability exponent 4 theta - 2 from a Lojasiewicz exponent
/// theta in (1/2, 1), and the companion constant 2^{-2 theta - 1} gamma^2.
double loja_to_omega(double theta);
double loja_gamma_prime(double theta, double gamma);

/// Inverse map theta = (omega + 2) / 4 for omega in [0, 2).
double theta_from_omega(double omega);

}  // namespace projkit
