#pragma once

// Test-only reference implementations, kept independent of the library code
// paths they check.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "projkit/geometry.hpp"

namespace oracles {

// Direct-sum discrete Fourier transform with long double accumulation and
// per-term phase evaluation; forward kernel e^{+2 pi i t w / N} / sqrt(N).
inline std::vector<std::complex<double>> dft_reference(
    const std::vector<std::complex<double>>& x, bool forward = true) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    const long double pi = 3.141592653589793238462643383279502884L;
    for (std::size_t w = 0; w < n; ++w) {
        std::complex<long double> acc{0.0L, 0.0L};
        for (std::size_t t = 0; t < n; ++t) {
            long double angle = 2.0L * pi * static_cast<long double>(t) *
                                static_cast<long double>(w) / static_cast<long double>(n);
            if (!forward) angle = -angle;
            acc += std::complex<long double>(x[t].real(), x[t].imag()) *
                   std::complex<long double>(std::cos(angle), std::sin(angle));
        }
        acc /= std::sqrt(static_cast<long double>(n));
        out[w] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    }
    return out;
}

// Brute-force projection of u onto the graph/epigraph of f over [lo, hi]:
// coarse grid sweep of the squared distance followed by local ternary
// refinement. Good to ~1e-10 in the argument.
inline projkit::Vector epigraph_project_bruteforce(const std::function<double(double)>& f,
                                                   double lo, double hi, double u1, double u2,
                                                   double grid_step = 1e-4) {
    if (u2 >= f(u1)) return projkit::Vector{u1, u2};
    auto sqdist = [&](double t) {
        const double dx = t - u1;
        const double dy = f(t) - u2;
        return dx * dx + dy * dy;
    };
    double best_t = lo, best_s = sqdist(lo);
    for (double t = lo; t <= hi; t += grid_step) {
        const double s = sqdist(t);
        if (s < best_s) {
            best_s = s;
            best_t = t;
        }
    }
    double l = std::max(lo, best_t - grid_step), r = std::min(hi, best_t + grid_step);
    for (int it = 0; it < 200; ++it) {
        const double m1 = l + (r - l) / 3.0, m2 = r - (r - l) / 3.0;
        if (sqdist(m1) <= sqdist(m2)) {
            r = m2;
        } else {
            l = m1;
        }
    }
    const double t = 0.5 * (l + r);
    return projkit::Vector{t, f(t)};
}

// Exact one-dimensional recurrence of the parabola benchmark: the next
// abscissa solves t + 2 t^3 = x (bisection; the map is strictly increasing).
inline double parabola_recurrence_step(double x) {
    auto g = [x](double t) { return t + 2.0 * t * t * t - x; };
    double l = 0.0, r = x;
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (l + r);
        if (g(m) <= 0.0) {
            l = m;
        } else {
            r = m;
        }
    }
    return 0.5 * (l + r);
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline projkit::Vector random_vector(std::mt19937_64& gen, std::size_t dim, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> c(dim);
    for (auto& v : c) v = dist(gen);
    return projkit::Vector(std::move(c));
}

}  // namespace oracles
