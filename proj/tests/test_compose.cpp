#include <doctest.h>

#include <Eigen/SVD>
#include <cmath>
#include <random>

#include "dirspaces/compose.hpp"
#include "dirspaces/error.hpp"
#include "dirspaces/norms.hpp"
#include "support.hpp"

using namespace dirspaces;
using testing_support::gallery;
using testing_support::poly;
using testing_support::random_poly;
using testing_support::symbol;
using testing_support::vertical_translation;

namespace {

// Explicit singular-value oracle, independent of the Hermitian eigensolver.
double largest_singular_value(const Eigen::MatrixXcd& m) {
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

double defect_by_svd(const Eigen::MatrixXcd& m) {
    const Eigen::MatrixXcd g = m.adjoint() * m - Eigen::MatrixXcd::Identity(m.cols(), m.cols());
    return largest_singular_value(g);
}

}  // namespace

TEST_CASE("compose_basis examples") {
    const double tau = 1.7;
    for (std::size_t n : {1, 2, 5, 12}) {
        const auto image = compose_basis(vertical_translation(tau), n, 16);
        CHECK(image.exact());
        CHECK(image.degree() == n);
        CHECK(std::abs(image[n] - std::exp(Complex{0.0, -tau * std::log(double(n))})) < 1e-15);
    }
    CHECK(compose_basis(symbol(2, {{1, 0.0}}), 2, 16) == poly({{4, 1.0}}, 16));
    CHECK(compose_basis(symbol(3, {{1, 0.0}}), 1, 4) == poly({{1, 1.0}}, 4));

    SUBCASE("pointwise oracle for (1, c 2^{-s})") {
        const Complex c{0.4, -0.2};
        const Symbol phi = symbol(1, {{2, c}});
        const auto image = compose_basis(phi, 2, 4096);
        for (double sigma : {3.0, 4.0, 5.0}) {
            const Complex s{sigma, 1.3};
            const Complex expected = std::exp(-std::log(2.0) * phi(s));
            CHECK(std::abs(evaluate(image, s) - expected) < 1e-8);
        }
        // coefficient at 2 * 2^m is (-c log 2)^m / m!
        double factorial = 1.0;
        for (int m = 0; m < 6; ++m) {
            if (m > 0) factorial *= m;
            CHECK(std::abs(image[std::size_t{2} << m] - std::pow(-c * std::log(2.0), m) / factorial) < 1e-15);
        }
    }

    CHECK_THROWS_AS(compose_basis(symbol(2, {{1, 0.0}}), 5, 16), TruncationEmptyError);
    CHECK_THROWS_AS(compose_basis(symbol(2, {{1, 0.0}}), 0, 16), InvalidIndexError);
}

TEST_CASE("compose_basis exactness") {
    CHECK(compose_basis(symbol(1, {{1, 1.0}}), 3, 10).exact());
    CHECK_FALSE(compose_basis(symbol(1, {{1, 1.0}, {2, 0.5}}), 3, 10).exact());
    // c0 = 0: n^{-c1} constant
    const auto constant = compose_basis(symbol(0, {{1, 1.0}}), 7, 10);
    CHECK(constant.exact());
    CHECK(std::abs(constant[1] - 1.0 / 7.0) < 1e-15);
}

TEST_CASE("apply") {
    for (const Symbol& phi : gallery()) CHECK(apply(phi, poly({{1, 1.0}}, 8), 8) == poly({{1, 1.0}}, 8));

    const double tau = -0.8;
    const auto f = poly({{1, 0.5}, {3, Complex{1, 1}}, {10, -2.0}}, 10);
    const auto rotated = apply(vertical_translation(tau), f, 10);
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(std::abs(rotated[n] - f[n] * std::exp(Complex{0.0, -tau * std::log(double(n))})) < 1e-15);
    }

    const Symbol phi = symbol(1, {{1, 0.5}, {2, 0.25}});
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_poly(rng, 12, 5);
        const Complex s{4.0, 2.0 * trial - 20.0};
        CHECK(std::abs(evaluate(apply(phi, g, 512), s) - evaluate(g, phi(s))) < 1e-6);
    }
    CHECK_THROWS_AS(apply(phi, DirichletSeries(std::vector<Complex>(4, 1.0), false), 8), PreconditionError);
}

TEST_CASE("pointwise oracle over the gallery with a tail bound") {
    std::mt19937_64 rng(67);
    for (const Symbol& phi : gallery()) {
        const auto f = random_poly(rng, 4, 3);
        const Complex s{4.0, 0.7};
        // the neglected coefficients beyond N are bounded by those of
        // the same image computed at a larger truncation
        const auto small = apply(phi, f, 128);
        const auto large = apply(phi, f, 8192);
        double tail = 0.0;
        for (std::size_t n = 129; n <= 8192; ++n) tail += std::abs(large[n]) * std::pow(double(n), -4.0);
        const double err = std::abs(evaluate(small, s) - evaluate(f, phi(s)));
        CHECK(err <= tail + 1e-10);
    }
}

TEST_CASE("compose_basis is multiplicative in n") {
    for (const Symbol& phi : gallery()) {
        const std::size_t N = 96;
        for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 3}, {2, 2}, {2, 4}, {3, 3}}) {
            if (std::pow(double(m * n), phi.c0()) > N) continue;
            const auto lhs = compose_basis(phi, m * n, N);
            const auto rhs = multiply(compose_basis(phi, m, N), compose_basis(phi, n, N), N);
            for (std::size_t k = 1; k <= N; ++k) CHECK(std::abs(lhs[k] - rhs[k]) < 1e-13);
        }
    }
}

TEST_CASE("column_count") {
    CHECK(column_count(symbol(1, {{1, 1.0}}), 64) == 64);
    CHECK(column_count(symbol(2, {{1, 0.0}}), 64) == 8);
    CHECK(column_count(symbol(2, {{1, 0.0}}), 63) == 7);
    CHECK(column_count(symbol(3, {{1, 0.0}}), 64) == 4);
    CHECK(column_count(symbol(0, {{1, 1.0}}), 64) == 64);
}

TEST_CASE("operator matrix") {
    const Measure a0 = Measure::alpha(0.0);
    const OperatorMatrix tr = operator_matrix(vertical_translation(2.0), a0, 16);
    CHECK(tr.entries.rows() == 16);
    CHECK(tr.entries.cols() == 16);
    for (Eigen::Index i = 0; i < 16; ++i) {
        for (Eigen::Index k = 0; k < 16; ++k) {
            if (i == k) CHECK(std::abs(std::abs(tr.entries(i, k)) - 1.0) < 1e-15);
            else CHECK(tr.entries(i, k) == Complex{});
        }
    }

    const OperatorMatrix doubling = operator_matrix(symbol(2, {{1, 0.0}}), a0, 8);
    CHECK(doubling.entries.cols() == 2);
    CHECK(std::abs(doubling.entries(3, 1) - std::sqrt((1 + std::log(2.0)) / (1 + std::log(4.0)))) < 1e-15);
    CHECK(std::abs(doubling.entries(3, 1)) == doctest::Approx(0.8423).epsilon(1e-4));
    for (Eigen::Index i = 0; i < 8; ++i) {
        if (i != 3) CHECK(doubling.entries(i, 1) == Complex{});
    }
    CHECK(doubling.measure_tag == "alpha(0)");
    CHECK(doubling.symbol_tag == "(2, 0)");

    for (const Symbol& phi : gallery()) {
        const OperatorMatrix m = operator_matrix(phi, Measure::alpha(1.0), 64);
        for (Eigen::Index k = 0; k < m.entries.cols(); ++k) CHECK(m.entries.col(k).norm() <= 1.0 + 1e-12);
    }

    CHECK_THROWS_AS(operator_matrix(symbol(1, {{2, 1.0}}), a0, 16), PreconditionError);
    CHECK_NOTHROW(operator_matrix(symbol(1, {{2, 1.0}}), a0, 16, AdmissibilityCheck::Override));
    CHECK_THROWS_AS(operator_matrix(vertical_translation(0.0), a0, 1), ValidationError);
}

TEST_CASE("gram") {
    const Measure a0 = Measure::alpha(0.0);
    const Eigen::MatrixXcd id = gram(operator_matrix(vertical_translation(-3.0), a0, 32));
    CHECK((id - Eigen::MatrixXcd::Identity(32, 32)).cwiseAbs().maxCoeff() < 1e-15);

    const Eigen::MatrixXcd g = gram(operator_matrix(symbol(2, {{1, 0.0}}), a0, 64));
    CHECK(g(1, 1).real() == doctest::Approx((1 + std::log(2.0)) / (1 + 2 * std::log(2.0))).epsilon(1e-14));
    CHECK(g(1, 1).real() == doctest::Approx(0.7095).epsilon(1e-4));

    for (const Symbol& phi : gallery()) {
        const OperatorMatrix m = operator_matrix(phi, testing_support::mixture_density(), 48);
        const Eigen::MatrixXcd h = gram(m);
        CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((h - m.entries.adjoint() * m.entries).cwiseAbs().maxCoeff() < 1e-14);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
        CHECK(solver.eigenvalues().minCoeff() >= -1e-10);
    }
}

TEST_CASE("isometry defect") {
    for (const Measure& mu : {Measure::alpha(0.0), Measure::alpha(1.0)}) {
        for (double tau : {0.0, 1.0, -1.0, 10.0, -10.0, 5.0}) {
            for (std::size_t N : {8, 33, 64}) CHECK(isometry_defect_at(vertical_translation(tau), mu, N) <= 1e-12);
        }
    }
    const Measure a0 = Measure::alpha(0.0);
    const DefectReport doubling = isometry_defect(symbol(2, {{1, 0.0}}), a0, 64);
    CHECK(doubling.defect >= 1.0 - 0.7095);
    CHECK(doubling.defect == doctest::Approx(0.403).epsilon(1e-3));
    CHECK(doubling.delta == doctest::Approx(std::abs(doubling.defect - doubling.defect_half)));
    CHECK(doubling.delta < doubling.defect / 10.0);
    CHECK(isometry_defect(symbol(2, {{1, 0.0}}), a0, 4).defect >=
          1.0 - (1.0 + std::log(2.0)) / (1.0 + 2.0 * std::log(2.0)) - 1e-12);

    const DefectReport shift = isometry_defect(symbol(1, {{1, 1.0}}), a0, 64);
    CHECK(shift.defect > 0.0);
    // C_Phi n^{-s} = n^{-1} n^{-s}: the Gram matrix is diagonal with entries n^{-2}
    CHECK(shift.defect == doctest::Approx(1.0 - 1.0 / (64.0 * 64.0)).epsilon(1e-12));
    CHECK(shift.defect_half == doctest::Approx(1.0 - 1.0 / (32.0 * 32.0)).epsilon(1e-12));
    CHECK(shift.tail_heuristic == 0.0);

    for (const Symbol& phi : gallery()) {
        const OperatorMatrix m = operator_matrix(phi, a0, 48);
        CHECK(isometry_defect_at(phi, a0, 48) == doctest::Approx(defect_by_svd(m.entries)).epsilon(1e-10));
    }
    const DefectReport wobble = isometry_defect(symbol(1, {{1, 1.0}, {2, 0.5}}), a0, 64);
    CHECK(wobble.tail_heuristic > 0.0);
    CHECK(wobble.tail_heuristic < 1e-2);
    CHECK_THROWS_AS(isometry_defect(symbol(2, {{1, 0.0}}), a0, 3), ValidationError);
}

TEST_CASE("contraction lower bound") {
    const Measure a0 = Measure::alpha(0.0);
    CHECK(contraction_lower_bound(vertical_translation(4.0), a0, 32) == doctest::Approx(1.0).epsilon(1e-14));
    const Symbol doubling = symbol(2, {{1, 0.0}});
    const double b = contraction_lower_bound(doubling, a0, 8);
    CHECK(b <= 1.0 + 1e-14);
    CHECK(b >= 0.8423);
    CHECK(b == doctest::Approx(largest_singular_value(operator_matrix(doubling, a0, 8).entries)).epsilon(1e-12));

    // rank one: column n is n^{-1} / sqrt(w(n)) at row 1
    const Symbol constant = symbol(0, {{1, 1.0}});
    const double big = contraction_lower_bound(constant, a0, 256, AdmissibilityCheck::Override);
    double expected = 0.0;
    for (std::size_t n = 1; n <= 256; ++n) expected += std::pow(double(n), -2.0) / a0.weight(n);
    CHECK(big == doctest::Approx(std::sqrt(expected)).epsilon(1e-12));
    CHECK(big > 1.0);
}

TEST_CASE("hermitian spectral norm") {
    Eigen::MatrixXcd h(2, 2);
    h << Complex{2, 0}, Complex{0, 1}, Complex{0, -1}, Complex{-3, 0};
    CHECK(hermitian_spectral_norm(h) == doctest::Approx(largest_singular_value(h)).epsilon(1e-14));
}
