#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

namespace robustperiod::fft {

namespace {

// The FFTW planner is not thread-safe; execution on distinct arrays is.
std::mutex& plannerMutex() {
    static std::mutex m;
    return m;
}

class Plan {
public:
    explicit Plan(fftw_plan p) : plan_(p) {}
    ~Plan() {
        std::lock_guard lock(plannerMutex());
        fftw_destroy_plan(plan_);
    }
    Plan(const Plan&) = delete;
    Plan& operator=(const Plan&) = delete;
    void execute() const { fftw_execute(plan_); }

private:
    fftw_plan plan_;
};

} // namespace

std::vector<std::complex<double>> forwardReal(std::span<const double> x) {
    const auto n = x.size();
    if (n == 0) {
        return {};
    }
    std::vector<double> in(x.begin(), x.end());
    std::vector<std::complex<double>> out(n / 2 + 1);
    fftw_plan raw;
    {
        std::lock_guard lock(plannerMutex());
        raw = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                                   reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
    }
    Plan plan(raw);
    plan.execute();
    return out;
}

std::vector<std::complex<double>> inverseOfReal(std::span<const double> spectrum) {
    const auto n = spectrum.size();
    if (n == 0) {
        return {};
    }
    std::vector<std::complex<double>> buf(spectrum.begin(), spectrum.end());
    fftw_plan raw;
    {
        std::lock_guard lock(plannerMutex());
        raw = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(buf.data()),
                               reinterpret_cast<fftw_complex*>(buf.data()), FFTW_BACKWARD,
                               FFTW_ESTIMATE);
    }
    Plan plan(raw);
    plan.execute();
    return buf;
}

} // namespace robustperiod::fft
