#include "dirspaces/zeta.hpp"

#include <array>
#include <cmath>

#include "dirspaces/error.hpp"

namespace dirspaces {

namespace {

// B_{2k} / (2k)!, k = 1..5
constexpr std::array<double, 5> kBernoulliOverFactorial = {
    1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0, 1.0 / 47900160.0,
};

constexpr int kHead = 16;

double bernoulli_ratio(int k) {
    // B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}; zeta(2k) from a short sum.
    if (k <= 5) return kBernoulliOverFactorial[k - 1];
    double z = 0.0;
    for (int n = 1; n <= 30; ++n) z += std::pow(static_cast<double>(n), -2.0 * k);
    const double v = 2.0 * z / std::pow(2.0 * M_PI, 2.0 * k);
    return (k % 2 == 1) ? v : -v;
}

}  // namespace

double zeta(double x) {
    if (!(x > 1.0)) throw PoleError("zeta: argument must exceed 1");
    if (x > 60.0) return 1.0 + std::pow(2.0, -x) + std::pow(3.0, -x);

    double sum = 0.0;
    for (int n = kHead - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -x);
    const double big_n = kHead;
    sum += std::pow(big_n, 1.0 - x) / (x - 1.0) + 0.5 * std::pow(big_n, -x);

    // Correction terms B_{2k}/(2k)! * x (x+1) ... (x+2k-2) * N^{-x-2k+1}.
    double rising = x;
    double power = std::pow(big_n, -x - 1.0);
    for (int k = 1; k <= 12; ++k) {
        const double term = bernoulli_ratio(k) * rising * power;
        sum += term;
        if (std::abs(term) < 1e-17 * sum) break;
        rising *= (x + 2.0 * k - 1.0) * (x + 2.0 * k);
        power /= big_n * big_n;
    }
    return sum;
}

}  // namespace dirspaces
