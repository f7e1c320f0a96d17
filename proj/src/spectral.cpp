#include "robustperiod/spectral.hpp"

#include "fft.hpp"
#include "robustperiod/stats.hpp"
#include "robustperiod/time_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace robustperiod::spectral {

void AdmmConfig::validate() const {
    if (!(zeta > 0.0) || !(rho > 0.0) || !(eps_abs > 0.0) || !(eps_rel > 0.0)) {
        throw InvalidInput("ADMM zeta, rho and tolerances must be positive");
    }
    if (max_iter < 1) {
        throw InvalidInput("ADMM max_iter must be at least 1");
    }
}

Padded zeroPad(std::span<const double> w) {
    const std::size_t n = w.size();
    if (n == 0) {
        throw InvalidInput("cannot pad an empty coefficient series");
    }
    Padded out;
    out.x.assign(2 * n, 0.0);
    const double m = stats::mean(w);
    double ss = 0.0;
    for (double v : w) {
        ss += (v - m) * (v - m);
    }
    const double sd = std::sqrt(ss / static_cast<double>(n));
    if (sd == 0.0 || !std::isfinite(sd)) {
        out.degenerate = true;
        return out;
    }
    for (std::size_t t = 0; t < n; ++t) {
        out.x[t] = (w[t] - m) / sd;
    }
    return out;
}

std::vector<double> vanillaPeriodogram(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 2) {
        throw InvalidInput("periodogram needs at least 2 samples");
    }
    const auto spectrum = fft::forwardReal(x);
    std::vector<double> power(n);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        power[k] = std::norm(spectrum[k]) * scale;
    }
    for (std::size_t k = spectrum.size(); k < n; ++k) {
        power[k] = power[n - k];
    }
    return power;
}

double huberLoss(double r, double zeta) {
    const double a = std::abs(r);
    return a <= zeta ? 0.5 * r * r : zeta * a - 0.5 * zeta * zeta;
}

double softThreshold(double v, double rho) {
    if (std::abs(v) <= rho) {
        return 0.0;
    }
    return v > 0.0 ? v - rho : v + rho;
}

namespace {

struct Harmonic {
    std::vector<double> c;
    std::vector<double> s;
};

Harmonic harmonicColumns(std::size_t nPrime, std::size_t k) {
    Harmonic h;
    h.c.resize(nPrime);
    h.s.resize(nPrime);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(nPrime);
    for (std::size_t t = 0; t < nPrime; ++t) {
        const double angle = step * static_cast<double>((k * t) % nPrime);
        h.c[t] = std::cos(angle);
        h.s[t] = std::sin(angle);
    }
    return h;
}

HuberFit admmWithColumns(std::span<const double> x, const Harmonic& phi, const AdmmConfig& cfg,
                         std::vector<double>* trace) {
    const std::size_t n = x.size();

    // (phi' phi)^{-1}, exact 2x2.
    double scc = 0.0, scs = 0.0, sss = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        scc += phi.c[t] * phi.c[t];
        scs += phi.c[t] * phi.s[t];
        sss += phi.s[t] * phi.s[t];
    }
    const double det = scc * sss - scs * scs;
    const double i00 = sss / det;
    const double i01 = -scs / det;
    const double i11 = scc / det;

    const double rho = cfg.rho;
    const double zeta = cfg.zeta;
    const double shrink = zeta * (1.0 + rho) / rho;
    const double wLin = rho / (1.0 + rho);
    const double wSoft = 1.0 / (1.0 + rho);

    double xNorm = 0.0;
    double rc = 0.0, rs = 0.0; // phi'(z + x - u)
    for (std::size_t t = 0; t < n; ++t) {
        xNorm += x[t] * x[t];
        rc += phi.c[t] * x[t];
        rs += phi.s[t] * x[t];
    }
    xNorm = std::sqrt(xNorm);
    const double epsPriAbs = std::sqrt(static_cast<double>(n)) * cfg.eps_abs;
    const double epsDualAbs = std::sqrt(2.0) * cfg.eps_abs;

    std::vector<double> z(n, 0.0), u(n, 0.0);
    HuberFit fit;
    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        const double b0 = i00 * rc + i01 * rs;
        const double b1 = i01 * rc + i11 * rs;
        fit.beta = {b0, b1};
        fit.iterations = iter;

        double rNorm = 0.0, fitNorm = 0.0, zNorm = 0.0, objective = 0.0;
        double dzc = 0.0, dzs = 0.0, uc = 0.0, us = 0.0;
        rc = 0.0;
        rs = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            const double ft = phi.c[t] * b0 + phi.s[t] * b1;
            if (trace != nullptr) {
                objective += huberLoss(ft - x[t], zeta);
            }
            const double v = ft + u[t] - x[t];
            const double zt = wLin * v + wSoft * softThreshold(v, shrink);
            const double dz = zt - z[t];
            z[t] = zt;
            const double r = ft - zt - x[t];
            u[t] += r;

            dzc += phi.c[t] * dz;
            dzs += phi.s[t] * dz;
            uc += phi.c[t] * u[t];
            us += phi.s[t] * u[t];
            rNorm += r * r;
            fitNorm += ft * ft;
            zNorm += zt * zt;
            const double next = zt + x[t] - u[t];
            rc += phi.c[t] * next;
            rs += phi.s[t] * next;
        }
        if (trace != nullptr) {
            trace->push_back(objective);
        }
        rNorm = std::sqrt(rNorm);
        const double sNorm = rho * std::hypot(dzc, dzs);
        const double epsPri =
            epsPriAbs + cfg.eps_rel * std::max({std::sqrt(fitNorm), std::sqrt(zNorm), xNorm});
        const double epsDual = epsDualAbs + cfg.eps_rel * rho * std::hypot(uc, us);
        if (rNorm <= epsPri && sNorm <= epsDual) {
            fit.converged = true;
            break;
        }
    }
    return fit;
}

} // namespace

HuberFit admmHuberFit(std::span<const double> x, std::size_t k, const AdmmConfig& cfg,
                      std::vector<double>* objectiveTrace) {
    cfg.validate();
    const std::size_t n = x.size();
    if (n < 4 || k == 0 || 2 * k >= n) {
        throw InvalidInput("harmonic index " + std::to_string(k) + " must lie in 1.." +
                           std::to_string(n / 2 - (n % 2 == 0 ? 1 : 0)) + " for N' = " +
                           std::to_string(n));
    }
    return admmWithColumns(x, harmonicColumns(n, k), cfg, objectiveTrace);
}

std::pair<std::size_t, std::size_t> robustBand(std::size_t nPrime, int level) {
    const std::size_t upper = std::size_t{1} << level;
    const std::size_t lower = upper << 1;
    std::size_t lo = (nPrime + lower - 1) / lower;
    std::size_t hi = nPrime / upper;
    const std::size_t half = nPrime / 2;
    lo = std::max<std::size_t>(lo, 1);
    if (half >= 1) {
        hi = std::min(hi, half - 1);
    }
    return {lo, hi};
}

HybridPeriodogram huberPeriodogram(std::span<const double> x, int level, const AdmmConfig& cfg,
                                   bool robust) {
    const std::size_t nPrime = x.size();
    if (nPrime < 4 || nPrime % 2 != 0) {
        throw InvalidInput("padded series must have even length of at least 4");
    }
    if (level < 1) {
        throw InvalidInput("wavelet level must be at least 1");
    }
    cfg.validate();
    const std::size_t half = nPrime / 2;

    HybridPeriodogram out;
    out.n_prime = nPrime;
    const auto full = vanillaPeriodogram(x);
    out.power.assign(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(half));
    out.power[0] = 0.0;
    out.robust_mask.assign(half, false);
    if (!robust) {
        out.k_lo = 1;
        out.k_hi = 0;
        return out;
    }

    std::tie(out.k_lo, out.k_hi) = robustBand(nPrime, level);
    const double scale = static_cast<double>(nPrime) / 4.0;
    for (std::size_t k = out.k_lo; k <= out.k_hi; ++k) {
        const auto fit = admmWithColumns(x, harmonicColumns(nPrime, k), cfg, nullptr);
        out.power[k] = scale * (fit.beta[0] * fit.beta[0] + fit.beta[1] * fit.beta[1]);
        out.robust_mask[k] = true;
        if (!fit.converged) {
            ++out.admm_nonconverged;
        }
    }
    return out;
}

FisherG fisherG(std::span<const double> power, std::size_t first, std::size_t last) {
    if (last >= power.size() || first >= last) {
        throw InvalidInput("Fisher g needs at least two bins inside the spectrum");
    }
    FisherG out;
    out.k_star = first;
    double total = 0.0;
    double best = -1.0;
    for (std::size_t k = first; k <= last; ++k) {
        total += power[k];
        if (power[k] > best) {
            best = power[k];
            out.k_star = k;
        }
    }
    if (!(total > 0.0)) {
        out.degenerate = true;
        return out;
    }
    out.g = best / total;
    return out;
}

double fisherPValue(double g0, std::size_t m) {
    if (!(g0 > 0.0) || g0 > 1.0) {
        throw InvalidInput("Fisher g must lie in (0, 1]");
    }
    if (m < 2) {
        throw InvalidInput("Fisher test needs at least 2 ordinates");
    }
    const double md = static_cast<double>(m);
    const auto terms = std::min<std::size_t>(static_cast<std::size_t>(std::floor(1.0 / g0)), m);
    const double logFactM = std::lgamma(md + 1.0);
    long double sum = 0.0L;
    double previous = HUGE_VAL;
    for (std::size_t k = 1; k <= terms; ++k) {
        const double kd = static_cast<double>(k);
        const double base = 1.0 - kd * g0;
        if (base <= 0.0) {
            break;
        }
        const double logMag = logFactM - std::lgamma(kd + 1.0) - std::lgamma(md - kd + 1.0) +
                              (md - 1.0) * std::log(base);
        const double mag = std::exp(logMag);
        sum += (k % 2 == 1) ? static_cast<long double>(mag) : -static_cast<long double>(mag);
        if (mag < previous && mag < 1e-16 * std::abs(static_cast<double>(sum))) {
            break;
        }
        previous = mag;
    }
    return std::clamp(static_cast<double>(sum), 0.0, 1.0);
}

FisherOutcome fisherTest(std::span<const double> halfSpectrum, double alpha) {
    FisherOutcome out;
    out.alpha = alpha;
    if (halfSpectrum.size() < 3) {
        throw InvalidInput("Fisher test needs a half spectrum of at least 3 bins");
    }
    const auto g = fisherG(halfSpectrum, 1, halfSpectrum.size() - 1);
    out.k_star = g.k_star;
    if (g.degenerate) {
        return out;
    }
    out.g = g.g;
    out.p_value = fisherPValue(g.g, halfSpectrum.size() - 1);
    out.significant = out.p_value < alpha;
    return out;
}

} // namespace robustperiod::spectral
