#pragma once

#include "robustperiod/time_series.hpp"

#include <optional>
#include <span>
#include <vector>

namespace robustperiod::modwt {

/// Unit-level MODWT filters: the Daubechies DWT filters divided by sqrt(2).
struct WaveletFilterPair {
    std::vector<double> h; ///< wavelet (high-pass)
    std::vector<double> g; ///< scaling (low-pass)

    std::size_t width() const { return g.size(); }
};

/// Extremal-phase Daubechies filters with 2*order taps (order 1..10),
/// rescaled for the MODWT. order 4 is the 8-tap db4.
WaveletFilterPair daubechiesFilters(int order);

/// Width of the level-j equivalent filter, (2^j - 1)(L1 - 1) + 1.
std::size_t filterWidth(int level, std::size_t unitWidth);

/// Deepest level whose equivalent filter fits in N samples, capped at
/// floor(log2 N) - 1.
int maxLevel(std::size_t n, std::size_t unitWidth);

struct WaveletLevel {
    int j = 0;
    std::vector<double> w;
    std::size_t width = 0; ///< L_j
    std::optional<double> variance; ///< empty when too few nonboundary coefficients
    double share = 0.0;
};

struct WaveletDecomposition {
    std::vector<WaveletLevel> levels; ///< levels[0] is j = 1
    std::vector<double> scaling;      ///< v_{J0}
    int depth = 0;                    ///< J0
    std::size_t n = 0;

    const WaveletLevel& level(int j) const { return levels.at(static_cast<std::size_t>(j - 1)); }
};

/// Pyramid MODWT with circular boundary. Variances are left unset; see
/// computeVariances.
WaveletDecomposition decompose(std::span<const double> series,
                               const WaveletFilterPair& filters,
                               int depth);

/// Robust unbiased wavelet variance: biweight midvariance over the
/// nonboundary coefficients t = L_j - 1 .. N - 1. Returns nullopt when fewer
/// than four nonboundary coefficients exist and 0 when their MAD vanishes.
std::optional<double> biweightMidvariance(std::span<const double> w, std::size_t width);

/// Plain sample variance over the nonboundary coefficients (non-robust path).
std::optional<double> nonboundaryVariance(std::span<const double> w, std::size_t width);

/// Fills variance and share of every level. `robust` selects the biweight
/// midvariance; otherwise the sample variance is used.
void computeVariances(WaveletDecomposition& decomp, bool robust);

/// Level indices j ordered by variance (descending), keeping only those
/// whose share of the summed level variances reaches `shareThreshold`.
std::vector<int> rankLevels(const WaveletDecomposition& decomp, double shareThreshold);

} // namespace robustperiod::modwt
