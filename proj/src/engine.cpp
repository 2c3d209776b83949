#include "projkit/engine.hpp"

#include <utility>

#include "projkit/dft.hpp"

namespace projkit {

const char* to_string(RunStatus s) {
    switch (s) {
        case RunStatus::converged: return "converged";
        case RunStatus::max_iter: return "max_iter";
        case RunStatus::stalled_nonconvergent: return "stalled_nonconvergent";
    }
    return "unknown";
}

std::vector<Vector> Trace::merged() const {
    std::vector<Vector> out;
    out.reserve(a_iters.size() + b_iters.size());
    if (x0_in_a) {
        for (std::size_t i = 0; i < a_iters.size(); ++i) {
            out.push_back(a_iters[i]);
            out.push_back(b_iters[i]);
        }
    } else {
        if (!b_iters.empty()) out.push_back(b_iters.front());
        for (std::size_t i = 0; i < a_iters.size(); ++i) {
            out.push_back(a_iters[i]);
            out.push_back(b_iters[i + 1]);
        }
    }
    return out;
}

std::vector<double> Trace::halfstep_gaps() const {
    const auto z = merged();
    std::vector<double> g;
    if (z.size() < 2) return g;
    g.reserve(z.size() - 1);
    for (std::size_t i = 0; i + 1 < z.size(); ++i) g.push_back(distance(z[i], z[i + 1]));
    return g;
}

namespace {

void validate_rule(const StopRule& rule) {
    if (!(rule.gap_tol > 0.0) || !(rule.step_tol > 0.0)) {
        throw DomainError("stop rule: tolerances must be positive");
    }
    if (rule.max_iter == 0 || rule.stall_window == 0) {
        throw DomainError("stop rule: max_iter and stall_window must be positive");
    }
}

}  // namespace

Trace alternate(const ProjectableSet& a_set, const ProjectableSet& b_set, const Vector& x0,
                const StopRule& rule) {
    validate_rule(rule);
    if (a_set.dimension() != b_set.dimension() || x0.dim() != a_set.dimension()) {
        throw DimensionError("alternate: set/start dimensions disagree");
    }

    Trace tr;
    tr.x0_in_a = a_set.distance(x0) <= 1e-10 * (1.0 + norm(x0));
    tr.b_iters.push_back(b_set.project(x0));
    if (tr.x0_in_a) {
        tr.a_iters.push_back(x0);
        tr.gaps.push_back(distance(x0, tr.b_iters.back()));
    }

    std::size_t stall = 0;
    tr.status = RunStatus::max_iter;
    for (std::size_t k = 0; k < rule.max_iter; ++k) {
        Vector a = a_set.project(tr.b_iters.back());
        Vector b = b_set.project(a);
        const double gap = distance(a, b);
        const double step = distance(tr.b_iters.back(), b);
        tr.blocks.push_back(make_block(tr.b_iters.back(), a, b));
        tr.a_iters.push_back(std::move(a));
        tr.b_iters.push_back(std::move(b));
        tr.gaps.push_back(gap);
        tr.steps.push_back(step);
        if (gap < rule.gap_tol && step < rule.step_tol) {
            tr.status = RunStatus::converged;
            break;
        }
        if (gap < rule.gap_tol) {
            if (++stall >= rule.stall_window) {
                tr.status = RunStatus::stalled_nonconvergent;
                break;
            }
        } else {
            stall = 0;
        }
    }
    return tr;
}

Trace averaged_projections(const std::vector<SetPtr>& sets, const Vector& x0,
                           const StopRule& rule) {
    if (sets.empty()) throw DimensionError("averaged_projections: no sets");
    const std::size_t d = x0.dim();
    for (const auto& s : sets) {
        if (!s) throw DimensionError("averaged_projections: null set");
        if (s->dimension() != d) {
            throw DimensionError("averaged_projections: set dimensions disagree with start");
        }
    }
    const std::size_t m = sets.size();
    const ProductSet product(sets);
    const DiagonalSet diagonal(m, d);

    std::vector<double> lifted;
    lifted.reserve(m * d);
    for (std::size_t b = 0; b < m; ++b) {
        lifted.insert(lifted.end(), x0.coords().begin(), x0.coords().end());
    }
    Trace tr = alternate(product, diagonal, Vector(std::move(lifted)), rule);

    tr.base_iters.reserve(tr.b_iters.size());
    for (const auto& b : tr.b_iters) {
        std::vector<double> blk(b.coords().begin(), b.coords().begin() + d);
        tr.base_iters.emplace_back(std::move(blk));
    }
    return tr;
}

Trace gerchberg_saxton(const std::vector<double>& amplitude, const ProjectableSet& constraint,
                       const Vector& x0, const StopRule& rule) {
    const FourierMagnitudeSet magnitude(amplitude);
    if (constraint.dimension() != magnitude.dimension()) {
        throw DimensionError("gerchberg_saxton: constraint dimension must be 2N");
    }
    Trace tr = alternate(constraint, magnitude, x0, rule);

    tr.fourier_residuals.reserve(tr.a_iters.size());
    for (const auto& a : tr.a_iters) {
        tr.fourier_residuals.push_back(magnitude.spectrum_residual(a));
    }
    // amplitude-projection inputs: x0 first, then every A-iterate produced in
    // the loop (a_iters[0] duplicates x0 when the start lies in the set)
    tr.extinction_events = magnitude.extinction_count(x0);
    for (std::size_t i = tr.x0_in_a ? 1 : 0; i < tr.a_iters.size(); ++i) {
        tr.extinction_events += magnitude.extinction_count(tr.a_iters[i]);
    }
    return tr;
}

}  // namespace projkit
