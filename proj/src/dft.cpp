#include "projkit/dft.hpp"

#include <cmath>
#include <numbers>

namespace projkit {

std::vector<std::complex<double>> to_complex(const Vector& x) {
    if (x.dim() % 2 != 0) {
        throw DimensionError("to_complex: dimension must be even (interleaved re/im)");
    }
    std::vector<std::complex<double>> z(x.dim() / 2);
    for (std::size_t t = 0; t < z.size(); ++t) {
        z[t] = {x[2 * t], x[2 * t + 1]};
    }
    return z;
}

Vector from_complex(const std::vector<std::complex<double>>& z) {
    std::vector<double> c(2 * z.size());
    for (std::size_t t = 0; t < z.size(); ++t) {
        c[2 * t] = z[t].real();
        c[2 * t + 1] = z[t].imag();
    }
    return Vector(std::move(c));
}

namespace {

std::vector<std::complex<double>> twiddles(std::size_t n) {
    std::vector<std::complex<double>> w(n);
    for (std::size_t k = 0; k < n; ++k) {
        w[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                   static_cast<double>(n));
    }
    return w;
}

std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& x,
                                        bool conjugate_kernel) {
    const std::size_t n = x.size();
    if (n == 0) throw DimensionError("dft: empty signal");
    const auto w = twiddles(n);
    std::vector<std::complex<double>> out(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t t = 0; t < n; ++t) {
            const std::complex<double> tw = w[(t * k) % n];
            acc += x[t] * (conjugate_kernel ? std::conj(tw) : tw);
        }
        out[k] = scale * acc;
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> forward_dft(const std::vector<std::complex<double>>& x) {
    return apply(x, false);
}

std::vector<std::complex<double>> inverse_dft(const std::vector<std::complex<double>>& x) {
    return apply(x, true);
}

FourierMagnitudeSet::FourierMagnitudeSet(std::vector<double> amplitude) : a_(std::move(amplitude)) {
    if (a_.empty()) throw DimensionError("fourier_magnitude: empty amplitude array");
    for (double v : a_) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw DomainError("fourier_magnitude: amplitudes must be finite and nonnegative");
        }
    }
}

Vector FourierMagnitudeSet::project(const Vector& x) const {
    check_query(x);
    auto spec = forward_dft(to_complex(x));
    for (std::size_t w = 0; w < a_.size(); ++w) {
        const double m = std::abs(spec[w]);
        if (m == 0.0) {
            spec[w] = {a_[w], 0.0};  // extinct coefficient: phase convention 0/|0| = 1
        } else {
            spec[w] *= a_[w] / m;
        }
    }
    return from_complex(inverse_dft(spec));
}

double FourierMagnitudeSet::spectrum_residual(const Vector& x) const {
    check_query(x);
    const auto spec = forward_dft(to_complex(x));
    double worst = 0.0;
    for (std::size_t w = 0; w < a_.size(); ++w) {
        worst = std::max(worst, std::abs(std::abs(spec[w]) - a_[w]));
    }
    return worst;
}

std::size_t FourierMagnitudeSet::extinction_count(const Vector& x) const {
    check_query(x);
    const auto spec = forward_dft(to_complex(x));
    std::size_t n = 0;
    for (const auto& z : spec) {
        if (std::abs(z) == 0.0) ++n;
    }
    return n;
}

}  // namespace projkit
