#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace robustperiod::spectral {

struct AdmmConfig {
    double zeta = 1.0;    ///< Huber threshold
    double rho = 1.0;     ///< augmented Lagrangian penalty
    double eps_abs = 1e-4;
    double eps_rel = 1e-4;
    int max_iter = 50;

    void validate() const;
};

struct Padded {
    std::vector<double> x;
    bool degenerate = false;
};

/// Standardizes w (mean 0, unit population variance) and appends len(w) zeros.
Padded zeroPad(std::span<const double> w);

/// P_k = |sum_t x_t exp(-i 2 pi k t / N')|^2 / N' for k = 0..N'-1.
std::vector<double> vanillaPeriodogram(std::span<const double> x);

/// Huber loss with threshold zeta.
double huberLoss(double r, double zeta);

/// 0 inside [-rho, rho], otherwise v shrunk toward zero by rho.
double softThreshold(double v, double rho);

struct HuberFit {
    std::array<double, 2> beta{0.0, 0.0};
    int iterations = 0;
    bool converged = false;
};

/// Huber regression of x on the harmonic regressor [cos, sin](2 pi k t / N')
/// by scaled-form ADMM, cold-started at z = u = 0. When `objectiveTrace` is
/// non-null the Huber objective at each beta iterate is appended to it.
HuberFit admmHuberFit(std::span<const double> x, std::size_t k, const AdmmConfig& cfg,
                      std::vector<double>* objectiveTrace = nullptr);

/// Half spectrum of a zero-padded series where bins inside the level's
/// octave band are Huber M-periodogram values and the rest are plain
/// periodogram values.
struct HybridPeriodogram {
    std::vector<double> power;     ///< k = 0..N-1, N = N'/2; power[0] = 0
    std::vector<bool> robust_mask; ///< true exactly on [k_lo, k_hi]
    std::size_t k_lo = 0;
    std::size_t k_hi = 0;          ///< k_hi < k_lo means an empty band
    std::size_t n_prime = 0;
    int admm_nonconverged = 0;
};

/// Robust band for level j over N' points: [ceil(N'/2^{j+1}), floor(N'/2^j)]
/// clipped to 1..N'/2 - 1.
std::pair<std::size_t, std::size_t> robustBand(std::size_t nPrime, int level);

/// `robust = false` returns the plain periodogram with an empty band.
HybridPeriodogram huberPeriodogram(std::span<const double> x, int level, const AdmmConfig& cfg,
                                   bool robust = true);

struct FisherG {
    double g = 0.0;
    std::size_t k_star = 0;
    bool degenerate = false; ///< zero total power
};

/// g = max P_k / sum P_k over k in [first, last]; ties go to the smaller k.
FisherG fisherG(std::span<const double> power, std::size_t first, std::size_t last);

/// Fisher's exact tail probability P(g >= g0) for m periodogram ordinates.
double fisherPValue(double g0, std::size_t m);

struct FisherOutcome {
    double g = 0.0;
    std::size_t k_star = 0;
    double p_value = 1.0;
    bool significant = false;
    double alpha = 1e-10;
};

/// Fisher's test over k = 1..N-1 of a half spectrum (DC and Nyquist excluded).
FisherOutcome fisherTest(std::span<const double> halfSpectrum, double alpha);

} // namespace robustperiod::spectral
