#pragma once

#include <cstddef>
#include <vector>

#include "projkit/geometry.hpp"
#include "projkit/sets.hpp"

namespace projkit {

enum class RunStatus {
    converged,               // gap and step both under tolerance
    max_iter,                // iteration budget exhausted
    stalled_nonconvergent,   // gap under tolerance, iterates still moving
};

const char* to_string(RunStatus s);

struct StopRule {
    double gap_tol = 1e-12;
    double step_tol = 1e-12;
    std::size_t max_iter = 100000;
    std::size_t stall_window = 500;  // consecutive small-gap moving iterations
};

/// Complete record of an alternating projection run. The pairing convention:
/// when the start point already lies in A it is recorded as a_iters[0], and
/// a_iters[i] pairs with b_iters[i]; otherwise the first b-iterate has no
/// partner and a_iters[i] pairs with b_iters[i + 1]. gaps[i] is the distance
/// of pair i and steps[j] = ||b_j - b_{j+1}||. blocks[j] is the triple
/// (b_j, a, b_{j+1}) with a the A-iterate produced between them.
struct Trace {
    bool x0_in_a = false;
    std::vector<Vector> a_iters;
    std::vector<Vector> b_iters;
    std::vector<double> gaps;
    std::vector<double> steps;
    std::vector<BuildingBlock> blocks;
    RunStatus status = RunStatus::max_iter;

    std::vector<Vector> base_iters;         // averaged-projection driver only
    std::vector<double> fourier_residuals;  // Gerchberg-Saxton driver only
    std::size_t extinction_events = 0;      // Gerchberg-Saxton driver only

    /// Iterates in orbit order (a and b interleaved).
    std::vector<Vector> merged() const;
    /// Distances between consecutive merged iterates; non-increasing for
    /// exact projections.
    std::vector<double> halfstep_gaps() const;
    /// Index into b_iters of the partner of pair i.
    std::size_t pair_b_index(std::size_t i) const { return i + (x0_in_a ? 0 : 1); }
    std::size_t pair_count() const { return gaps.size(); }
};

/// Alternating projections b_0 = P_B(x0), a_{k+1} = P_A(b_k),
/// b_{k+1} = P_B(a_{k+1}), recording every iterate and building block.
Trace alternate(const ProjectableSet& a_set, const ProjectableSet& b_set, const Vector& x0,
                const StopRule& rule);

/// Averaged projections x_{n+1} = (1/m) sum_i P_{C_i}(x_n), run as
/// alternating projections between the product set and the diagonal in the
/// m-fold product space. base_iters carries the base-space sequence.
Trace averaged_projections(const std::vector<SetPtr>& sets, const Vector& x0,
                           const StopRule& rule);

/// Gerchberg-Saxton error reduction: alternating projections between the
/// constraint set and the Fourier amplitude set built from `amplitude`.
/// fourier_residuals records max_w | |x^(w)| - a(w) | per signal iterate and
/// extinction_events counts exactly vanishing Fourier coefficients met by
/// the amplitude projection.
Trace gerchberg_saxton(const std::vector<double>& amplitude, const ProjectableSet& constraint,
                       const Vector& x0, const StopRule& rule);

}  // namespace projkit
