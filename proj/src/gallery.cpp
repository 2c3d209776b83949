#include "projkit/gallery.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>

namespace projkit {

const char* to_string(ExpectedKind k) {
    switch (k) {
        case ExpectedKind::converges_linear: return "converges_linear";
        case ExpectedKind::converges_sublinear: return "converges_sublinear";
        case ExpectedKind::non_convergent: return "non_convergent";
        case ExpectedKind::converges_finite: return "converges_finite";
    }
    return "unknown";
}

ExpectedKind expected_kind_from_string(const std::string& s) {
    if (s == "converges_linear") return ExpectedKind::converges_linear;
    if (s == "converges_sublinear") return ExpectedKind::converges_sublinear;
    if (s == "non_convergent") return ExpectedKind::non_convergent;
    if (s == "converges_finite") return ExpectedKind::converges_finite;
    throw LookupError("unknown expected outcome: " + s);
}

namespace {

constexpr double kPi = std::numbers::pi;

ExperimentSpec make_packman() {
    ExperimentSpec s;
    s.name = "packman";
    s.summary = "unit disk with a right notch vs the narrow cone filling it; "
                "single intersection point at the origin, met at an angle";
    const double half = std::atan(0.5);
    s.set_a = std::make_shared<const SectorSet>(-half, half, 1.0);
    s.set_b = std::make_shared<const SectorSet>(kPi / 4.0, 7.0 * kPi / 4.0, 1.0);
    s.x0 = Vector{0.28, 0.2};
    s.rule = StopRule{1e-12, 1e-12, 100000, 500};
    s.expected = Expected{ExpectedKind::converges_linear, 0.0};
    s.probe_point = Vector{0.0, 0.0};
    return s;
}

ExperimentSpec make_spiral_circle() {
    ExperimentSpec s;
    s.name = "spiral_circle";
    s.summary = "point sequence sliding down a smooth spiral toward the unit "
                "circle; the gap vanishes but no subsequence settles";
    ContinuousSpiralSpec spec;
    spec.radial_floor = 5e-5;
    const ContinuousSpiralPair pair = build_continuous_spiral(spec);
    s.set_a = pair.a;
    s.set_b = pair.b;
    s.x0 = Vector{2.5, 0.0};
    s.rule = StopRule{1e-3, 1e-9, 10000, 500};
    s.expected = Expected{ExpectedKind::non_convergent, 0.0};
    // probe center: the circle sample nearest the three-quarter-depth point
    const Vector& deep = pair.points[pair.points.size() * 3 / 4];
    const double ang = std::atan2(deep[1], deep[0]);
    const double step = 2.0 * kPi / static_cast<double>(spec.circle_samples);
    const double snapped = std::round(ang / step) * step;
    s.probe_point = Vector{std::cos(snapped), std::sin(snapped)};
    s.notes = "circle represented by " + std::to_string(spec.circle_samples) +
              " samples; non-convergence conclusions come from the generated "
              "pre-floor orbit, not from the sampled circle";
    return s;
}

ExperimentSpec make_discrete_spiral(const std::string& name, double ray_angle) {
    ExperimentSpec s;
    s.name = name;
    DiscreteSpiralSpec spec;
    spec.ray_angle = ray_angle;
    spec.truncation_floor = 1e-15;
    const DiscreteSpiralPair pair = build_discrete_spiral(spec);
    s.set_a = pair.a;
    s.set_b = pair.b;
    s.x0 = Vector{1.0, 0.0};
    s.rule = StopRule{1e-12, 1e-12, 100000, 500};
    s.expected = Expected{ExpectedKind::converges_linear, 0.0};
    s.probe_point = Vector{0.0, 0.0};
    return s;
}

Vector spiral3d_point(double t) {
    const double q = std::exp(-t);
    return Vector{(1.0 + q) * std::cos(t), (1.0 + q) * std::sin(t), std::exp(-0.5 * t)};
}

ExperimentSpec make_spiral_cylinder() {
    ExperimentSpec s;
    s.name = "spiral_cylinder";
    s.summary = "3-D spiral winding down onto the rim circle of a cylinder "
                "shell; iterates keep turning while the gap shrinks";
    // parameter sampled as t = ln(u)/2 with u arithmetic: density e^{-2t},
    // which the sampled orbit needs in order to keep advancing
    constexpr std::size_t kSamples = 1'000'000;
    constexpr std::size_t kCircle = 4096;
    const double u0 = std::exp(2.0);  // t from 1
    const double du = 1.6;
    std::vector<Vector> pts;
    pts.reserve(kSamples + kCircle);
    for (std::size_t i = 0; i < kSamples; ++i) {
        pts.push_back(spiral3d_point(0.5 * std::log(u0 + du * static_cast<double>(i))));
    }
    for (std::size_t k = 0; k < kCircle; ++k) {
        const double ang = 2.0 * kPi * static_cast<double>(k) / kCircle;
        pts.push_back(Vector{std::cos(ang), std::sin(ang), 0.0});
    }
    s.set_a = std::make_shared<const FinitePointSet>(std::move(pts));
    s.set_b = std::make_shared<const CylinderSet>(1.0, 0.0, 1.0);
    s.x0 = spiral3d_point(3.5);
    s.rule = StopRule{0.05, 1e-9, 10000, 6000};
    s.expected = Expected{ExpectedKind::non_convergent, 0.0};
    s.probe_point = Vector{1.0, 0.0, 0.0};
    s.notes = "curve sampled at 1e6 points, t in [1, 7.14]; the fixture asserts "
              "the winding criterion, not set-exactness of the sampled curve";
    return s;
}

ExperimentSpec make_geometric_pair() {
    ExperimentSpec s;
    s.name = "geometric_pair";
    s.summary = "interleaved geometric sequences on the line, meeting at 0; "
                "alternating projections walk 1, 1/2, 1/4, ...";
    std::vector<Vector> a_pts{Vector{0.0}}, b_pts{Vector{0.0}};
    for (int n = 0; n <= 32; ++n) a_pts.push_back(Vector{std::ldexp(1.0, -2 * n)});
    for (int n = 1; n <= 32; ++n) b_pts.push_back(Vector{std::ldexp(1.0, -(2 * n - 1))});
    s.set_a = std::make_shared<const FinitePointSet>(std::move(a_pts));
    s.set_b = std::make_shared<const FinitePointSet>(std::move(b_pts));
    s.x0 = Vector{1.0};
    s.rule = StopRule{1e-12, 1e-12, 100000, 500};
    s.expected = Expected{ExpectedKind::converges_linear, 0.0};
    s.probe_point = Vector{0.0};
    s.notes = "points kept down to 2^-64 so the rate fit has a full window";
    return s;
}

ExperimentSpec make_flat_tangent() {
    ExperimentSpec s;
    s.name = "flat_tangent";
    s.summary = "epigraph of exp(-1/x^2) against the lower halfplane: "
                "tangency so flat that the angle condition fails everywhere";
    s.set_a = std::make_shared<const EpigraphSet>(flat_exp_curve(), -0.75, 0.75);
    s.set_b = std::make_shared<const HalfspaceSet>(Vector{0.0, 1.0}, 0.0);
    s.x0 = Vector{0.35, 0.0};
    s.rule = StopRule{1e-3, 1e-9, 100000, 500};
    s.expected = Expected{ExpectedKind::non_convergent, 0.0};
    s.probe_point = Vector{0.0, 0.0};
    s.notes = "per-iteration progress decays like f(x) f'(x); within any "
              "practical budget the run is classified stalled. Diagnostic "
              "blocks use the parameter grid (x in [0.055, 0.35], below which "
              "f*f' underflows)";
    return s;
}

ExperimentSpec make_parabola_tangent() {
    ExperimentSpec s;
    s.name = "parabola_tangent";
    s.summary = "epigraph of x^2 against the lower halfplane: tangential "
                "intersection with power-law decay";
    s.set_a = std::make_shared<const EpigraphSet>(parabola_curve(), -2.0, 2.0);
    s.set_b = std::make_shared<const HalfspaceSet>(Vector{0.0, 1.0}, 0.0);
    s.x0 = Vector{0.5, 0.0};
    s.rule = StopRule{1e-12, 1e-12, 10000, 500};
    s.expected = Expected{ExpectedKind::converges_sublinear, 0.5};
    s.probe_point = Vector{0.0, 0.0};
    return s;
}

}  // namespace

const std::vector<std::string>& gallery_names() {
    static const std::vector<std::string> names = {
        "packman",
        "spiral_circle",
        "discrete_spiral_8",
        "discrete_spiral_irrational",
        "spiral_cylinder",
        "geometric_pair",
        "flat_tangent",
        "parabola_tangent",
    };
    return names;
}

ExperimentSpec example(const std::string& name) {
    if (name == "packman") return make_packman();
    if (name == "spiral_circle") return make_spiral_circle();
    if (name == "discrete_spiral_8") return make_discrete_spiral(name, kPi / 4.0);
    if (name == "discrete_spiral_irrational") return make_discrete_spiral(name, 0.7);
    if (name == "spiral_cylinder") return make_spiral_cylinder();
    if (name == "geometric_pair") return make_geometric_pair();
    if (name == "flat_tangent") return make_flat_tangent();
    if (name == "parabola_tangent") return make_parabola_tangent();
    throw LookupError("unknown fixture: " + name);
}

Verdict classify(const ExperimentSpec& spec, const Trace& trace) {
    Verdict v;
    char buf[160];
    switch (spec.expected.kind) {
        case ExpectedKind::converges_linear: {
            if (trace.status != RunStatus::converged) {
                v.classified = to_string(trace.status);
                v.detail = "expected convergence";
                return v;
            }
            try {
                const RateFit fit = fit_rate(trace, RateKind::linear);
                std::snprintf(buf, sizeof buf, "converged, q=%.6g (r2=%.4f)", fit.value,
                              fit.r_squared);
                v.classified = buf;
                v.pass = fit.value < 0.999;
                if (!v.pass) v.detail = "quotient not below 1";
            } catch (const Error& e) {
                v.classified = "converged, rate unfittable";
                v.detail = e.what();
            }
            return v;
        }
        case ExpectedKind::converges_sublinear: {
            if (trace.status == RunStatus::stalled_nonconvergent) {
                v.classified = to_string(trace.status);
                v.detail = "expected a fittable decaying run";
                return v;
            }
            try {
                const RateFit fit = fit_rate(trace, RateKind::power);
                std::snprintf(buf, sizeof buf, "%s, rho=%.6g (r2=%.4f)", to_string(trace.status),
                              fit.value, fit.r_squared);
                v.classified = buf;
                v.pass = std::abs(fit.value - spec.expected.rho) <= 0.1 && fit.r_squared >= 0.99;
                if (!v.pass) v.detail = "decay exponent or fit quality off target";
            } catch (const Error& e) {
                v.classified = "rate unfittable";
                v.detail = e.what();
            }
            return v;
        }
        case ExpectedKind::non_convergent: {
            v.classified = to_string(trace.status);
            v.pass = trace.status == RunStatus::stalled_nonconvergent;
            if (!v.pass) v.detail = "expected a stall classification";
            return v;
        }
        case ExpectedKind::converges_finite: {
            v.classified = to_string(trace.status);
            v.pass = trace.status == RunStatus::converged && !trace.gaps.empty() &&
                     trace.gaps.back() == 0.0;
            if (!v.pass) v.detail = "expected exact finite-step convergence";
            return v;
        }
    }
    v.classified = "unknown";
    return v;
}

std::vector<GalleryRun> run_gallery(const std::vector<std::string>& names,
                                    const std::optional<StopRule>& rule_override) {
    std::vector<std::future<GalleryRun>> futures;
    futures.reserve(names.size());
    for (const auto& name : names) {
        futures.push_back(std::async(std::launch::async, [name, rule_override] {
            GalleryRun run;
            run.name = name;
            run.spec = example(name);
            if (rule_override) run.spec.rule = *rule_override;
            try {
                run.trace = alternate(*run.spec.set_a, *run.spec.set_b, run.spec.x0,
                                      run.spec.rule);
                run.verdict = classify(run.spec, run.trace);
            } catch (const Error& e) {
                run.verdict.pass = false;
                run.verdict.classified = "error";
                run.verdict.detail = run.name + ": " + e.what();
            }
            return run;
        }));
    }
    std::vector<GalleryRun> out;
    out.reserve(names.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

std::vector<GalleryRun> run_gallery() { return run_gallery(gallery_names()); }

std::vector<BuildingBlock> flat_tangent_blocks(double x_hi, double x_lo, std::size_t count) {
    if (!(x_lo > 0.0) || !(x_lo < x_hi)) {
        throw DomainError("flat_tangent_blocks: need 0 < x_lo < x_hi");
    }
    if (count < 2) throw DomainError("flat_tangent_blocks: need at least 2 grid points");
    const Curve curve = flat_exp_curve();
    const EpigraphSet epi(curve, -0.75, 0.75);
    const HalfspaceSet lower(Vector{0.0, 1.0}, 0.0);

    std::vector<BuildingBlock> blocks;
    blocks.reserve(count);
    const double lh = std::log(x_hi), ll = std::log(x_lo);
    for (std::size_t i = 0; i < count; ++i) {
        const double x =
            std::exp(lh + (ll - lh) * static_cast<double>(i) / static_cast<double>(count - 1));
        const double fx = curve.f(x);
        const double dfx = curve.df(x);
        const Vector b{x + fx * dfx, 0.0};
        const Vector a_plus = epi.project(b);
        const Vector b_plus = lower.project(a_plus);
        blocks.push_back(make_block(b, a_plus, b_plus));
    }
    return blocks;
}

double unwrapped_winding(const std::vector<Vector>& points) {
    if (points.size() < 2) return 0.0;
    double total = 0.0;
    double prev = std::atan2(points.front()[1], points.front()[0]);
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double ang = std::atan2(points[i][1], points[i][0]);
        total += std::remainder(ang - prev, 2.0 * kPi);
        prev = ang;
    }
    return total;
}

}  // namespace projkit
