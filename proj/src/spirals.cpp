#include "projkit/spirals.hpp"

#include <cmath>
#include <numbers>

namespace projkit {

// ------------------------------------------------------------ discrete spiral

DiscreteSpiralSpec DiscreteSpiralSpec::from_ray_count(std::size_t rays) {
    if (rays < 8) throw DomainError("discrete_spiral: need at least 8 rays");
    DiscreteSpiralSpec spec;
    spec.ray_angle = 2.0 * std::numbers::pi / static_cast<double>(rays);
    return spec;
}

DiscreteSpiralPair build_discrete_spiral(const DiscreteSpiralSpec& spec) {
    const double phi = spec.ray_angle;
    if (!(phi > 0.0) || phi > std::numbers::pi / 4.0 + 1e-15) {
        throw DomainError("discrete_spiral: ray angle must lie in (0, pi/4]");
    }
    if (!(spec.start_radius > 0.0)) throw DomainError("discrete_spiral: start radius must be positive");
    if (!(spec.truncation_floor > 0.0)) throw DomainError("discrete_spiral: floor must be positive");

    std::vector<Vector> orbit;
    Vector p{spec.start_radius, 0.0};
    orbit.push_back(p);
    for (std::size_t k = 1;; ++k) {
        const double theta = static_cast<double>(k) * phi;
        const Vector dir{std::cos(theta), std::sin(theta)};
        p = dot(p, dir) * dir;
        if (norm(p) < spec.truncation_floor) break;
        orbit.push_back(p);
        if (orbit.size() > 2'000'000) {
            throw ConstructionError("discrete_spiral: truncation floor too small");
        }
    }

    std::vector<Vector> even{Vector::zeros(2)}, odd{Vector::zeros(2)};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        (i % 2 == 0 ? even : odd).push_back(orbit[i]);
    }
    auto even_set = std::make_shared<const FinitePointSet>(std::move(even));
    auto odd_set = std::make_shared<const FinitePointSet>(std::move(odd));

    DiscreteSpiralPair pair;
    pair.a = spec.first_point_in_a ? even_set : odd_set;
    pair.b = spec.first_point_in_a ? odd_set : even_set;
    pair.orbit = std::move(orbit);

    for (std::size_t i = 0; i + 1 < pair.orbit.size(); ++i) {
        const FinitePointSet& other = (i % 2 == 0) ? *odd_set : *even_set;
        if (other.project(pair.orbit[i]) != pair.orbit[i + 1]) {
            throw ConstructionError("discrete_spiral: projection order violated at index " +
                                    std::to_string(i));
        }
    }
    return pair;
}

// ---------------------------------------------------------- continuous spiral

double spiral_gap_constant() {
    return (1.0 - std::exp(-2.0 * std::numbers::pi)) / 2.0;
}

Vector spiral_point(double phi) {
    const double rad = 1.0 + std::exp(-phi);
    return Vector{rad * std::cos(phi), rad * std::sin(phi)};
}

namespace {

// One step of the chord recursion in the frame of the current point.
// With q = e^{-phi}, the chord to the point delta further along satisfies
//   chord^2 = q^2 g^2 + 4 u v sin^2(delta/2),
// where g = 1 - e^{-delta}, u = 1 + q e^{-delta}, v = 1 + q. This form has
// no O(1) cancellation, so it stays accurate when delta underflows cos/sin
// resolution. Returns delta and g.
struct Step {
    double delta;
    double shrink;  // 1 - e^{-delta}
};

Step solve_chord(double q, double r) {
    const double v = 1.0 + q;
    double d = r / std::sqrt(q * q + v * v);
    double g = 0.0;
    for (int it = 0; it < 3; ++it) {
        double s, sd;  // sin(d/2), sin(d)
        if (d < 5e-3) {
            const double d2 = d * d;
            g = d * (1.0 - d * (0.5 - d * (1.0 / 6.0 - d * (1.0 / 24.0 - d / 120.0))));
            const double hf = 0.5 * d, h2 = hf * hf;
            s = hf * (1.0 - h2 * (1.0 / 6.0 - h2 * (1.0 / 120.0 - h2 / 5040.0)));
            sd = d * (1.0 - d2 * (1.0 / 6.0 - d2 * (1.0 / 120.0 - d2 / 5040.0)));
        } else {
            g = -std::expm1(-d);
            s = std::sin(0.5 * d);
            sd = std::sin(d);
        }
        const double u = v - q * g;
        const double F = q * q * g * g + 4.0 * u * v * s * s - r * r;
        const double Fp = 2.0 * q * q * g * (1.0 - g) - 4.0 * q * (1.0 - g) * v * s * s +
                          2.0 * u * v * sd;
        const double upd = F / Fp;
        d -= upd;
        if (std::abs(upd) <= 1e-15 * d) break;
    }
    if (!(d > 0.0) || !std::isfinite(d)) {
        throw ConstructionError("continuous_spiral: chord step left the admissible range");
    }
    if (d < 5e-3) {
        g = d * (1.0 - d * (0.5 - d * (1.0 / 6.0 - d * (1.0 / 24.0 - d / 120.0))));
    } else {
        g = -std::expm1(-d);
    }
    return {d, g};
}

}  // namespace

SpiralOrbitStream::SpiralOrbitStream(double r1) {
    r_ = r1 > 0.0 ? r1 : spiral_gap_constant();
    if (!(r_ > 0.0) || r_ > 1.0) {
        throw DomainError("continuous_spiral: r1 must lie in (0, 1]");
    }
}

void SpiralOrbitStream::advance() {
    const Step st = solve_chord(q_, r_);
    const double y = st.delta - comp_;
    const double t = phi_ + y;
    comp_ = (t - phi_) - y;
    phi_ = t;
    q_ -= q_ * st.shrink;
    r_ = q_ * spiral_gap_constant();
    ++n_;
}

ContinuousSpiralPair build_continuous_spiral(const ContinuousSpiralSpec& spec) {
    if (!(spec.radial_floor > 0.0) || spec.radial_floor >= 1.0) {
        throw DomainError("continuous_spiral: radial floor must lie in (0, 1)");
    }
    if (spec.circle_samples < 3) {
        throw DomainError("continuous_spiral: need at least 3 circle samples");
    }

    ContinuousSpiralPair pair;
    SpiralOrbitStream stream(spec.r1);
    while (true) {
        const double q = std::exp(-stream.phi());
        if (q < spec.radial_floor) break;
        pair.phis.push_back(stream.phi());
        pair.points.push_back(spiral_point(stream.phi()));
        stream.advance();
        if (pair.points.size() > 50'000'000) {
            throw ConstructionError("continuous_spiral: radial floor too small");
        }
    }
    if (pair.points.size() < 4) {
        throw ConstructionError("continuous_spiral: horizon too short, lower the floor");
    }

    std::vector<Vector> circle;
    circle.reserve(spec.circle_samples);
    for (std::size_t k = 0; k < spec.circle_samples; ++k) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(spec.circle_samples);
        circle.push_back(Vector{std::cos(ang), std::sin(ang)});
    }

    // points[0] is z_1 and belongs to B; even indices of the stored vector
    // are the odd-numbered z's
    std::vector<Vector> a_pts = circle, b_pts = circle;
    for (std::size_t i = 0; i < pair.points.size(); ++i) {
        (i % 2 == 0 ? b_pts : a_pts).push_back(pair.points[i]);
    }
    pair.a = std::make_shared<const FinitePointSet>(std::move(a_pts));
    pair.b = std::make_shared<const FinitePointSet>(std::move(b_pts));

    for (std::size_t i = 0; i + 1 < pair.points.size(); ++i) {
        const FinitePointSet& other = (i % 2 == 0) ? *pair.a : *pair.b;
        if (other.project(pair.points[i]) != pair.points[i + 1]) {
            throw ConstructionError("continuous_spiral: projection order violated at index " +
                                    std::to_string(i));
        }
    }
    return pair;
}

}  // namespace projkit
