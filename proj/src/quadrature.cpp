#include "dirspaces/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include "dirspaces/error.hpp"

namespace dirspaces {

namespace {

// Golub-Welsch on the Jacobi matrix of the generalized Laguerre polynomials,
// followed by Newton polishing of each node on the three-term recurrence.
GaussRule build_laguerre(std::size_t n, double alpha) {
    Eigen::VectorXd diag(n);
    Eigen::VectorXd off(n > 1 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) diag[i] = 2.0 * i + alpha + 1.0;
    for (std::size_t i = 1; i < n; ++i) off[i - 1] = std::sqrt(i * (i + alpha));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw NumericError("Gauss-Laguerre eigensolver failed");

    const double mass = std::tgamma(alpha + 1.0);
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double x = solver.eigenvalues()[i];
        for (int it = 0; it < 3; ++it) {
            // Monic-free recurrence: L_k = ((2k-1+a-x) L_{k-1} - (k-1+a) L_{k-2}) / k
            double p0 = 1.0;
            double p1 = 1.0 + alpha - x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0 + alpha - x) * p1 - (k - 1.0 + alpha) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            // x L_n' = n L_n - (n + a) L_{n-1}
            const double dp = (n * p1 - (n + alpha) * p0) / x;
            if (!std::isfinite(p1) || !std::isfinite(dp) || dp == 0.0) break;
            const double step = p1 / dp;
            if (!std::isfinite(step) || std::abs(step) > 1e-3 * (1.0 + std::abs(x))) break;
            x -= step;
        }
        const double v = solver.eigenvectors()(0, static_cast<Eigen::Index>(i));
        rule.nodes[i] = x;
        rule.weights[i] = mass * v * v;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_laguerre(std::size_t n, double alpha) {
    if (n < 1) throw ValidationError("Gauss-Laguerre rule needs at least one node");
    if (!(alpha > -1.0)) throw ValidationError("Gauss-Laguerre exponent must exceed -1");
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, double>, std::unique_ptr<GaussRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, alpha}];
    if (!slot) slot = std::make_unique<GaussRule>(build_laguerre(n, alpha));
    return *slot;
}

double adaptive_kronrod(const std::function<double(double)>& f, double a, double b, double tol) {
    double error = 0.0;
    double l1 = 0.0;
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 20, tol, &error, &l1);
    if (!std::isfinite(value)) throw NumericError("adaptive quadrature produced a non-finite value");
    if (error > tol * std::max(1.0, std::abs(value))) {
        std::ostringstream os;
        os << "adaptive quadrature on [" << a << ", " << b << "] did not converge: estimate " << value
           << ", error " << error;
        throw NumericError(os.str());
    }
    return value;
}

}  // namespace dirspaces
