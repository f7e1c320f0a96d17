#include "robustperiod/modwt.hpp"

#include "robustperiod/stats.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace robustperiod::modwt {

namespace {

// Extremal-phase Daubechies scaling filters (DWT normalization, sum = sqrt 2),
// orders 1..10.
constexpr std::array<double, 2> kDb1{0.70710678118654752440, 0.70710678118654752440};
constexpr std::array<double, 4> kDb2{
    4.82962913144534156107e-01, 8.36516303737807942476e-01, 2.24143868042013388875e-01,
    -1.29409522551260369738e-01};
constexpr std::array<double, 6> kDb3{
    3.32670552950082631938e-01, 8.06891509311092547385e-01, 4.59877502118491543470e-01,
    -1.35011020010254584323e-01, -8.54412738820266581818e-02, 3.52262918857095333469e-02};
constexpr std::array<double, 8> kDb4{
    2.30377813308896506328e-01, 7.14846570552915672181e-01, 6.30880767929858921050e-01,
    -2.79837694168598542788e-02, -1.87034811719093085891e-01, 3.08413818355607639854e-02,
    3.28830116668851965556e-02, -1.05974017850690317016e-02};
constexpr std::array<double, 10> kDb5{
    1.60102397974192928176e-01, 6.03829269797189649438e-01, 7.24308528437772936037e-01,
    1.38428145901320742706e-01, -2.42294887066382025331e-01, -3.22448695846383748265e-02,
    7.75714938400457187928e-02, -6.24149021279827437292e-03, -1.25807519990819988154e-02,
    3.33572528547377124622e-03};
constexpr std::array<double, 12> kDb6{
    1.11540743350109466947e-01, 4.94623890398453058825e-01, 7.51133908021095364482e-01,
    3.15250351709197629280e-01, -2.26264693965439828149e-01, -1.29766867567261939831e-01,
    9.75016055873230425011e-02, 2.75228655303057269388e-02, -3.15820393174860297725e-02,
    5.53842201161496125623e-04, 4.77725751094551075865e-03, -1.07730108530847959111e-03};
constexpr std::array<double, 14> kDb7{
    7.78520540850091841145e-02, 3.96539319481917285071e-01, 7.29132090846235092485e-01,
    4.69782287405193121899e-01, -1.43906003928564979466e-01, -2.24036184993874981641e-01,
    7.13092192668302593539e-02, 8.06126091510830783404e-02, -3.80299369350144134128e-02,
    -1.65745416306668814921e-02, 1.25509985560998404974e-02, 4.29577972921366514972e-04,
    -1.80164070404749084887e-03, 3.53713799974520240726e-04};
constexpr std::array<double, 16> kDb8{
    5.44158422431040081357e-02, 3.12871590914299946284e-01, 6.75630736297289757886e-01,
    5.85354683654206731092e-01, -1.58291052563493059302e-02, -2.84015542961546907375e-01,
    4.72484573913282794588e-04, 1.28747426620478472303e-01, -1.73693010018075473522e-02,
    -4.40882539307947546314e-02, 1.39810279173982823786e-02, 8.74609404740577661697e-03,
    -4.87035299345157414452e-03, -3.91740373376947049761e-04, 6.75449406450569331435e-04,
    -1.17476784124769534768e-04};
constexpr std::array<double, 18> kDb9{
    3.80779473638783449996e-02, 2.43834674612590340814e-01, 6.04823123690111152939e-01,
    6.57288078051300517224e-01, 1.33197385825007563742e-01, -2.93273783279174915517e-01,
    -9.68407832229764564680e-02, 1.48540749338106375932e-01, 3.07256814793333797586e-02,
    -6.76328290613299742962e-02, 2.50947114831451972578e-04, 2.23616621236790956428e-02,
    -4.72320475775139716340e-03, -4.28150368246343025758e-03, 1.84764688305622654628e-03,
    2.30385763523195972796e-04, -2.51963188942710123765e-04, 3.93473203162716025764e-05};
constexpr std::array<double, 20> kDb10{
    2.66700579005555542256e-02, 1.88176800077691497304e-01, 5.27201188931725628350e-01,
    6.88459039453603538483e-01, 2.81172343660577472857e-01, -2.49846424327315380642e-01,
    -1.95946274377377049891e-01, 1.27369340335793251873e-01, 9.30573646035723484049e-02,
    -7.13941471663970816941e-02, -2.94575368218758133765e-02, 3.32126740593410019198e-02,
    3.60655356695616970131e-03, -1.07331754833305745289e-02, 1.39535174705290106363e-03,
    1.99240529518505612994e-03, -6.85856694959711618576e-04, -1.16466855129285448982e-04,
    9.35886703200695919220e-05, -1.32642028945212442831e-05};

std::span<const double> scalingTaps(int order) {
    switch (order) {
    case 1: return kDb1;
    case 2: return kDb2;
    case 3: return kDb3;
    case 4: return kDb4;
    case 5: return kDb5;
    case 6: return kDb6;
    case 7: return kDb7;
    case 8: return kDb8;
    case 9: return kDb9;
    case 10: return kDb10;
    default:
        throw InvalidInput("unsupported Daubechies order " + std::to_string(order) +
                           " (expected 1..10)");
    }
}

} // namespace

WaveletFilterPair daubechiesFilters(int order) {
    const auto taps = scalingTaps(order);
    const std::size_t len = taps.size();
    WaveletFilterPair pair;
    pair.g.resize(len);
    pair.h.resize(len);
    const double scale = 1.0 / std::sqrt(2.0);
    for (std::size_t l = 0; l < len; ++l) {
        pair.g[l] = taps[l] * scale;
        // Quadrature mirror: h_l = (-1)^l g_{L-1-l}.
        const double mirrored = taps[len - 1 - l] * scale;
        pair.h[l] = (l % 2 == 0) ? mirrored : -mirrored;
    }
    return pair;
}

std::size_t filterWidth(int level, std::size_t unitWidth) {
    return ((std::size_t{1} << level) - 1) * (unitWidth - 1) + 1;
}

int maxLevel(std::size_t n, std::size_t unitWidth) {
    if (unitWidth < 2 || n < unitWidth) {
        throw InvalidInput("series of length " + std::to_string(n) +
                           " is shorter than the unit filter width " + std::to_string(unitWidth));
    }
    const int cap = static_cast<int>(std::bit_width(n)) - 2; // floor(log2 n) - 1
    int depth = 0;
    while (depth < cap && filterWidth(depth + 1, unitWidth) <= n) {
        ++depth;
    }
    return depth;
}

WaveletDecomposition decompose(std::span<const double> series, const WaveletFilterPair& filters,
                               int depth) {
    const std::size_t n = series.size();
    if (depth < 1 || depth > maxLevel(n, filters.width())) {
        throw InvalidInput("decomposition depth " + std::to_string(depth) +
                           " is outside 1..max level for N = " + std::to_string(n));
    }
    WaveletDecomposition out;
    out.n = n;
    out.depth = depth;
    out.levels.reserve(static_cast<std::size_t>(depth));

    const std::size_t len = filters.width();
    std::vector<double> v(series.begin(), series.end());
    std::vector<double> next(n);
    for (int j = 1; j <= depth; ++j) {
        const std::size_t stride = (std::size_t{1} << (j - 1)) % n;
        WaveletLevel level;
        level.j = j;
        level.width = filterWidth(j, len);
        level.w.assign(n, 0.0);
        for (std::size_t t = 0; t < n; ++t) {
            double wsum = 0.0;
            double vsum = 0.0;
            std::size_t idx = t;
            for (std::size_t l = 0; l < len; ++l) {
                wsum += filters.h[l] * v[idx];
                vsum += filters.g[l] * v[idx];
                idx = (idx + n - stride) % n;
            }
            level.w[t] = wsum;
            next[t] = vsum;
        }
        std::swap(v, next);
        out.levels.push_back(std::move(level));
    }
    out.scaling = std::move(v);
    return out;
}

std::optional<double> biweightMidvariance(std::span<const double> w, std::size_t width) {
    if (width == 0 || width > w.size() || w.size() - width + 1 < 4) {
        return std::nullopt;
    }
    const auto tail = w.subspan(width - 1);
    const double med = stats::median(tail);
    const double spread = stats::mad(tail, med);
    if (spread == 0.0) {
        return 0.0;
    }
    double num = 0.0;
    double den = 0.0;
    for (double x : tail) {
        const double u = (x - med) / (9.0 * spread);
        if (std::abs(u) < 1.0) {
            const double u2 = u * u;
            const double a = 1.0 - u2;
            num += (x - med) * (x - med) * a * a * a * a;
            den += a * (1.0 - 5.0 * u2);
        }
    }
    if (den == 0.0) {
        return 0.0;
    }
    return static_cast<double>(tail.size()) * num / (den * den);
}

std::optional<double> nonboundaryVariance(std::span<const double> w, std::size_t width) {
    if (width == 0 || width > w.size() || w.size() - width + 1 < 4) {
        return std::nullopt;
    }
    return stats::sampleVariance(w.subspan(width - 1));
}

void computeVariances(WaveletDecomposition& decomp, bool robust) {
    double total = 0.0;
    for (auto& level : decomp.levels) {
        level.variance = robust ? biweightMidvariance(level.w, level.width)
                                : nonboundaryVariance(level.w, level.width);
        total += level.variance.value_or(0.0);
    }
    for (auto& level : decomp.levels) {
        level.share = total > 0.0 ? level.variance.value_or(0.0) / total : 0.0;
    }
}

std::vector<int> rankLevels(const WaveletDecomposition& decomp, double shareThreshold) {
    std::vector<const WaveletLevel*> candidates;
    for (const auto& level : decomp.levels) {
        if (level.variance && *level.variance > 0.0 && level.share >= shareThreshold) {
            candidates.push_back(&level);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const auto* a, const auto* b) {
        return *a->variance > *b->variance;
    });
    std::vector<int> order;
    order.reserve(candidates.size());
    for (const auto* level : candidates) {
        order.push_back(level->j);
    }
    return order;
}

} // namespace robustperiod::modwt
