#pragma once

#include <complex>
#include <vector>

#include "projkit/sets.hpp"

namespace projkit {

/// Interleaved (re, im) coordinates <-> complex samples.
std::vector<std::complex<double>> to_complex(const Vector& x);
Vector from_complex(const std::vector<std::complex<double>>& z);

/// Unitary discrete Fourier transform with forward kernel
/// e^{+2*pi*i*t*w/N} / sqrt(N); inverse uses the conjugate kernel.
std::vector<std::complex<double>> forward_dft(const std::vector<std::complex<double>>& x);
std::vector<std::complex<double>> inverse_dft(const std::vector<std::complex<double>>& x);

/// Fourier amplitude set {x in C^N : |x^(w)| = a(w) for all w}, acting on
/// R^{2N} through the interleaved identification. The projection rescales
/// every Fourier coefficient onto the target modulus, with the convention
/// 0/|0| = 1 for extinct coefficients.
class FourierMagnitudeSet : public ProjectableSet {
  public:
    explicit FourierMagnitudeSet(std::vector<double> amplitude);
    std::size_t dimension() const override { return 2 * a_.size(); }
    Vector project(const Vector& x) const override;
    std::string name() const override { return "fourier_magnitude"; }
    const std::vector<double>& amplitude() const { return a_; }

    /// max over w of | |x^(w)| - a(w) |.
    double spectrum_residual(const Vector& x) const;
    /// Number of frequencies with exactly vanishing coefficient.
    std::size_t extinction_count(const Vector& x) const;

  private:
    std::vector<double> a_;
};

}  // namespace projkit
