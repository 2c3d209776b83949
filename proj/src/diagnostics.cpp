#include "projkit/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace projkit {

std::optional<double> angle_quotient(const BuildingBlock& block, double omega) {
    if (!(omega >= 0.0) || !(omega < 2.0)) {
        throw DomainError("angle_quotient: omega must lie in [0, 2)");
    }
    if (block.alpha_degenerate) return std::nullopt;
    const double gap = distance(block.a_plus, block.b_plus);
    if (gap == 0.0 && omega > 0.0) return std::numeric_limits<double>::infinity();
    const double denom = omega == 0.0 ? 1.0 : std::pow(gap, omega);
    return (1.0 - block.cos_alpha) / denom;
}

std::vector<double> default_omega_grid() {
    std::vector<double> g;
    for (int i = 0; i < 8; ++i) g.push_back(0.25 * i);
    return g;
}

std::vector<SeparabilityEstimate> estimate_separability(std::span<const BuildingBlock> blocks,
                                                        std::span<const double> omega_grid) {
    bool any_admissible = false;
    for (const auto& blk : blocks) {
        if (!blk.alpha_degenerate) {
            any_admissible = true;
            break;
        }
    }
    if (!any_admissible) {
        throw NoBlocksError("estimate_separability: no admissible blocks");
    }
    std::vector<SeparabilityEstimate> out;
    out.reserve(omega_grid.size());
    for (double omega : omega_grid) {
        SeparabilityEstimate est;
        est.omega = omega;
        est.gamma_hat = std::numeric_limits<double>::infinity();
        for (const auto& blk : blocks) {
            const auto q = angle_quotient(blk, omega);
            if (!q || std::isinf(*q)) {
                ++est.degenerate_skipped;
                continue;
            }
            est.gamma_hat = std::min(est.gamma_hat, *q);
            ++est.blocks_used;
        }
        out.push_back(est);
    }
    return out;
}

std::vector<SeparabilityEstimate> estimate_separability(const Trace& trace,
                                                        std::span<const double> omega_grid) {
    return estimate_separability(std::span<const BuildingBlock>(trace.blocks), omega_grid);
}

// ---------------------------------------------------------------- probe

namespace {

// Halton sequence over a centered cube, deterministic for a given seed.
class HaltonCube {
  public:
    HaltonCube(const Vector& center, double halfwidth, std::uint64_t seed)
        : center_(center), halfwidth_(halfwidth), index_(1 + seed * 7919) {}

    Vector next() {
        static constexpr int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
        const std::size_t d = center_.dim();
        if (d > sizeof(primes) / sizeof(primes[0])) {
            throw DomainError("holder_probe: sampling supports dimension <= 8");
        }
        std::vector<double> c(d);
        for (std::size_t i = 0; i < d; ++i) {
            c[i] = center_[i] + halfwidth_ * (2.0 * radical_inverse(index_, primes[i]) - 1.0);
        }
        ++index_;
        return Vector(std::move(c));
    }

  private:
    static double radical_inverse(std::uint64_t n, int base) {
        double inv = 1.0 / base, f = inv, r = 0.0;
        while (n > 0) {
            r += f * static_cast<double>(n % base);
            n /= base;
            f *= inv;
        }
        return r;
    }

    Vector center_;
    double halfwidth_;
    std::uint64_t index_;
};

}  // namespace

HolderReport holder_probe(const ProjectableSet& a_set, const ProjectableSet& b_set,
                          const Vector& x_star, const HolderParams& params) {
    if (a_set.dimension() != b_set.dimension() || x_star.dim() != a_set.dimension()) {
        throw DimensionError("holder_probe: dimensions disagree");
    }
    if (!(params.sigma >= 0.0) || !(params.sigma < 1.0)) {
        throw DomainError("holder_probe: sigma must lie in [0, 1)");
    }
    if (!(params.c > 0.0)) throw DomainError("holder_probe: c must be positive");
    if (!(params.neighborhood_radius > 0.0)) {
        throw DomainError("holder_probe: neighborhood radius must be positive");
    }
    const double star_tol = 1e-10 * (1.0 + norm(x_star));
    if (a_set.distance(x_star) > star_tol || b_set.distance(x_star) > star_tol) {
        throw DomainError("holder_probe: x_star is not in the intersection");
    }

    HolderReport report;
    report.sigma = params.sigma;
    report.c = params.c;
    report.note =
        "projection preimage rendered as projector consistency: "
        "||P_A(b) - a_plus|| <= 1e-8 (1 + ||a_plus||)";

    const double sqrt_c = std::sqrt(params.c);
    HaltonCube ambient(x_star, params.neighborhood_radius, params.seed);
    for (std::size_t i = 0; i < params.sample_count; ++i) {
        const Vector a_plus = a_set.project(ambient.next());
        if (distance(a_plus, x_star) > params.neighborhood_radius) {
            ++report.skipped;
            continue;
        }
        const Vector b_plus = b_set.project(a_plus);
        const double r = distance(a_plus, b_plus);
        if (r <= 1e-14 * (1.0 + norm(a_plus))) {
            ++report.skipped;  // a_plus effectively in B, condition vacuous
            continue;
        }
        ++report.a_samples;
        const double membership_tol = 1e-8 * (1.0 + norm(a_plus));
        const double threshold = sqrt_c * std::pow(r, params.sigma);
        const Vector axis = a_plus - b_plus;

        HaltonCube local(a_plus, (1.0 + params.c) * r, params.seed + i + 1);
        for (std::size_t j = 0; j < params.sample_count; ++j) {
            const Vector b = b_set.project(local.next());
            if (distance(b, a_plus) > (1.0 + params.c) * r) {
                ++report.skipped;
                continue;
            }
            const Vector leg = b - b_plus;
            if (norm(leg) <= 1e-13 * (1.0 + r)) {
                ++report.skipped;  // b coincides with b_plus
                continue;
            }
            if (distance(a_set.project(b), a_plus) > membership_tol) {
                ++report.skipped;
                continue;
            }
            ++report.candidates_checked;
            const double cb = cos_angle(axis, leg);
            if (cb > threshold) {
                report.violations.push_back(HolderViolation{a_plus, b_plus, b, r, cb, threshold});
            }
        }
    }
    if (report.a_samples == 0) {
        throw SamplingError("holder_probe: no A-samples landed in the neighborhood");
    }
    return report;
}

// ----------------------------------------------------- three/four point

double three_point_ell(double gamma, double c) {
    if (!(gamma > 0.0) || !(c > 0.0)) {
        throw DomainError("three_point_ell: gamma and c must be positive");
    }
    if (!(c < gamma / 2.0)) {
        throw DomainError("three_point_ell: hypothesis c < gamma/2 violated");
    }
    return std::min({0.5, 1.0 - std::sqrt(2.0 * c / gamma), c / (2.0 + c)});
}

CheckReport three_point_check(const Trace& trace, double gamma, double c) {
    CheckReport report;
    report.ell = three_point_ell(gamma, c);
    for (std::size_t i = 0; i < trace.blocks.size(); ++i) {
        const auto& blk = trace.blocks[i];
        const double gap = distance(blk.a_plus, blk.b_plus);
        const double move = distance(blk.b, blk.b_plus);
        const double lhs = gap * gap + report.ell * move * move;
        const double reach = distance(blk.a_plus, blk.b);
        const double rhs = reach * reach;
        ++report.checked;
        if (lhs > rhs + 1e-12 * (1.0 + rhs)) {
            report.violations.push_back(EstimateViolation{i, lhs, rhs});
        }
    }
    return report;
}

CheckReport four_point_check(const Trace& trace, double ell) {
    if (!(ell > 0.0) || ell > 1.0) {
        throw DomainError("four_point_check: ell must lie in (0, 1]");
    }
    CheckReport report;
    report.ell = ell;
    if (trace.pair_count() < 2) return report;
    for (std::size_t i = 0; i + 1 < trace.pair_count(); ++i) {
        const double d_a = trace.gaps[i];
        const double d_a_next = trace.gaps[i + 1];
        const double move = trace.steps[trace.pair_b_index(i)];
        const double lhs = d_a_next * d_a_next + ell * move * move;
        const double rhs = d_a * d_a;
        ++report.checked;
        if (lhs > rhs + 1e-12 * (1.0 + rhs)) {
            report.violations.push_back(EstimateViolation{i, lhs, rhs});
        }
    }
    return report;
}

// --------------------------------------------------------------- rate fit

namespace {

struct LineFit {
    double slope = 0.0;
    double r_squared = 1.0;
};

LineFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    LineFit fit;
    if (sxx == 0.0) throw WindowError("fit_rate: degenerate abscissa");
    fit.slope = sxy / sxx;
    const double ss_res = syy - fit.slope * sxy;
    fit.r_squared = syy == 0.0 ? 1.0 : std::max(0.0, 1.0 - ss_res / syy);
    return fit;
}

}  // namespace

RateFit fit_rate(const Trace& trace, RateKind kind) {
    if (trace.status == RunStatus::stalled_nonconvergent) {
        throw NotConvergedError("fit_rate: trace is classified non-convergent");
    }
    const auto z = trace.merged();
    if (z.size() < 50) throw WindowError("fit_rate: need at least 50 iterates");
    if (trace.b_iters.empty()) throw WindowError("fit_rate: no b-iterates");
    const Vector& limit = trace.b_iters.back();

    const std::size_t drop = std::max<std::size_t>(1, z.size() / 10);
    const std::size_t last = z.size() - drop;

    std::vector<double> xs, ys;
    std::size_t first_used = 0, last_used = 0;
    for (std::size_t j = 0; j < last; ++j) {
        const double e = distance(z[j], limit);
        if (e <= 0.0) continue;  // exact hits carry no decay information
        if (xs.empty()) first_used = j;
        last_used = j;
        const double idx = static_cast<double>(j + 1);
        xs.push_back(kind == RateKind::power ? std::log(idx) : idx);
        ys.push_back(std::log(e));
    }
    if (xs.size() < 50) throw WindowError("fit_rate: fewer than 50 usable points in the window");

    const LineFit line = least_squares(xs, ys);
    RateFit fit;
    fit.kind = kind;
    fit.r_squared = line.r_squared;
    fit.window_begin = first_used;
    fit.window_end = last_used;
    fit.value = kind == RateKind::power ? -line.slope : std::exp(line.slope);
    return fit;
}

// ------------------------------------------------------------- rate formulas

double predicted_rate(double omega) {
    if (omega == 0.0) {
        throw DomainError("predicted_rate: omega = 0 is the linear regime, no finite power rate");
    }
    if (!(omega > 0.0) || !(omega < 2.0)) {
        throw DomainError("predicted_rate: omega must lie in (0, 2)");
    }
    return (2.0 - omega) / (2.0 * omega);
}

double loja_to_omega(double theta) {
    if (!(theta > 0.5) || !(theta < 1.0)) {
        throw DomainError("loja_to_omega: theta must lie in (1/2, 1)");
    }
    return 4.0 * theta - 2.0;
}

double loja_gamma_prime(double theta, double gamma) {
    if (!(theta > 0.5) || !(theta < 1.0)) {
        throw DomainError("loja_gamma_prime: theta must lie in (1/2, 1)");
    }
    if (!(gamma > 0.0)) throw DomainError("loja_gamma_prime: gamma must be positive");
    return std::exp2(-2.0 * theta - 1.0) * gamma * gamma;
}

double theta_from_omega(double omega) {
    if (!(omega >= 0.0) || !(omega < 2.0)) {
        throw DomainError("theta_from_omega: omega must lie in [0, 2)");
    }
    return (omega + 2.0) / 4.0;
}

}  // namespace projkit
