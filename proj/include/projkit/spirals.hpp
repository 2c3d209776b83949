#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "projkit/sets.hpp"

namespace projkit {

/// Inward-turning polygonal spiral on equally spaced rays: starting on the
/// horizontal ray, each point is the perpendicular projection of its
/// predecessor onto the next ray counterclockwise, so every step scales the
/// norm by cos(ray_angle). Alternate points form the two sets; the origin is
/// adjoined to both.
struct DiscreteSpiralSpec {
    double ray_angle = 0.78539816339744831;  // pi/4; admissible range (0, pi/4]
    double start_radius = 1.0;
    double truncation_floor = 1e-13;
    bool first_point_in_a = true;

    static DiscreteSpiralSpec from_ray_count(std::size_t rays);
};

struct DiscreteSpiralPair {
    std::shared_ptr<const FinitePointSet> a;
    std::shared_ptr<const FinitePointSet> b;
    std::vector<Vector> orbit;  // generated points, orbit[0] on the horizontal ray
};

/// Builds both sets and validates the projection order: the nearest
/// other-set point of every generated point must be its successor.
/// Throws ConstructionError when the property fails.
DiscreteSpiralPair build_discrete_spiral(const DiscreteSpiralSpec& spec);

/// Constant (1 - e^{-2*pi}) / 2: half the radial gap between consecutive
/// turns of the smooth spiral z(phi) = (1 + e^{-phi}) e^{i phi}.
double spiral_gap_constant();

/// Point of the smooth spiral at angle phi.
Vector spiral_point(double phi);

/// Point sequence on the smooth spiral defined by the recursion
///   || z(phi_{n+1}) - z(phi_n) || = r_n,   r_{n+1} = e^{-phi_{n+1}} * gap constant,
/// split into even/odd index sets, each adjoined with a uniform sample of the
/// unit circle. Generation stops when |z| - 1 drops below radial_floor.
struct ContinuousSpiralSpec {
    double r1 = 0.0;  // 0 means the intrinsic spacing at phi = 0
    double radial_floor = 1e-4;
    std::size_t circle_samples = 4096;
};

struct ContinuousSpiralPair {
    std::shared_ptr<const FinitePointSet> a;  // even-index points + circle
    std::shared_ptr<const FinitePointSet> b;  // odd-index points + circle
    std::vector<Vector> points;               // z_1, z_2, ...  (z_1 in B)
    std::vector<double> phis;
};

ContinuousSpiralPair build_continuous_spiral(const ContinuousSpiralSpec& spec);

/// Streaming generator of the same recursion. Stores nothing, so arbitrarily
/// deep tails can be walked; the chord equation is solved in a local frame
/// with series kernels to stay exact when the step underflows ordinary
/// trigonometric evaluation.
class SpiralOrbitStream {
  public:
    explicit SpiralOrbitStream(double r1 = 0.0);

    void advance();
    double phi() const noexcept { return phi_; }
    /// Distance from the current point to the next one (the alternating gap).
    double gap() const noexcept { return r_; }
    std::int64_t index() const noexcept { return n_; }

  private:
    double phi_ = 0.0;
    double comp_ = 0.0;  // Kahan carry for the phi accumulation
    double q_ = 1.0;     // e^{-phi}
    double r_ = 0.0;
    std::int64_t n_ = 1;
};

}  // namespace projkit
