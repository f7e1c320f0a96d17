#pragma once

#include <complex>
#include <span>
#include <vector>

namespace robustperiod::fft {

/// Unnormalized forward DFT of a real sequence, bins 0..n/2.
std::vector<std::complex<double>> forwardReal(std::span<const double> x);

/// sum_k X_k exp(+i 2 pi k t / n) for a real input X, full complex output.
std::vector<std::complex<double>> inverseOfReal(std::span<const double> spectrum);

} // namespace robustperiod::fft
