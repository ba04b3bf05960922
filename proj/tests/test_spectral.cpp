#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qsl/spectral.hpp"

using namespace qsl;
using qspecial::QParams;
using qspecial::QScalarKind;

TEST_CASE("tridiagonal entries match the recursion coefficients") {
    QParams p(0.5, 1.0);
    auto J = spectral::twisted_casimir_jacobi(+1, p.a, 8, p);
    // first diagonal entry: sign <c> q^{1 - sign a} with c = a = 1, q = 1/2
    CHECK(J.diag[0] == Catch::Approx(-1.5).margin(1e-14));
    for (int k = 0; k < 8; ++k) {
        double d = std::pow(p.q, 2 * k - p.a + 1) *
                   qspecial::q_number(QScalarKind::brace, p.a, p);
        CHECK(J.diag[k] == Catch::Approx(d).margin(1e-13));
    }
    for (int k = 0; k + 1 < 8; ++k) {
        double o2 = (1.0 - std::pow(p.q, 2 * k + 2)) * (1.0 + std::pow(p.q, -2 * p.a + 2 * k + 2));
        CHECK(J.off[k] * J.off[k] == Catch::Approx(o2).margin(1e-13));
    }
}

TEST_CASE("small truncations have closed-form spectra") {
    QParams p(0.5, 0.3);
    double c = p.a - 1.5;
    auto J1 = spectral::twisted_casimir_jacobi(-1, c, 1, p);
    auto e1 = spectral::truncated_eigendecomposition(J1);
    CHECK(e1.values[0] == Catch::Approx(J1.diag[0]).margin(1e-14));
    auto J2 = spectral::twisted_casimir_jacobi(-1, c, 2, p);
    auto e2 = spectral::truncated_eigendecomposition(J2);
    double mid = (J2.diag[0] + J2.diag[1]) / 2.0;
    double rad = std::sqrt(std::pow((J2.diag[0] - J2.diag[1]) / 2.0, 2) + J2.off[0] * J2.off[0]);
    REQUIRE(e2.values.size() == 2);
    CHECK(e2.values[0] == Catch::Approx(mid - rad).margin(1e-12));
    CHECK(e2.values[1] == Catch::Approx(mid + rad).margin(1e-12));
}

TEST_CASE("the i-gauged real operator is unitarily equivalent to the complex one") {
    // the complex tridiagonal with +i/-i off-diagonal phases has the same
    // spectrum as its entrywise-real gauge transform
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ds(-2.0, 2.0), os(0.1, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        int N = 3 + static_cast<int>(rng() % 8);
        Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(N, N);
        Eigen::MatrixXd R = Eigen::MatrixXd::Zero(N, N);
        for (int k = 0; k < N; ++k) {
            double d = ds(rng);
            C(k, k) = d;
            R(k, k) = d;
        }
        for (int k = 0; k + 1 < N; ++k) {
            double o = os(rng);
            C(k, k + 1) = std::complex<double>(0.0, o);
            C(k + 1, k) = std::complex<double>(0.0, -o);
            R(k, k + 1) = R(k + 1, k) = o;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sc(C);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sr(R);
        for (int k = 0; k < N; ++k)
            REQUIRE(std::abs(sc.eigenvalues()[k] - sr.eigenvalues()[k]) <= 1e-12);
    }
}

TEST_CASE("bound states below and above the band are enumerated correctly") {
    QParams p(0.5, 0.3);
    // c = a - 3 on the + branch: exactly one atom, above the band
    auto atoms = spectral::predicted_atoms(+1, p.a - 3.0, p);
    REQUIRE(atoms.size() == 1);
    CHECK(atoms[0].location == Catch::Approx(4.25).margin(1e-12));
    CHECK(atoms[0].family == +1);
    // c = a: purely continuous spectrum
    CHECK(spectral::predicted_atoms(+1, p.a, p).empty());
}

TEST_CASE("frozen example: one bound state carries most of the mass") {
    QParams p(0.5, 0.3);
    auto mu = spectral::spectral_measure(+1, p.a - 3.0, p);
    REQUIRE(mu.atoms.size() == 1);
    CHECK(mu.atoms[0].location == Catch::Approx(4.25).margin(1e-12));
    CHECK(mu.atoms[0].weight == Catch::Approx(0.8897755148185287).margin(1e-10));
    CHECK(mu.continuous_mass == Catch::Approx(0.11022448518147).margin(1e-8));
    CHECK(mu.total_mass == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("the measure is a probability measure across the parameter sweep") {
    QParams p(0.5, 0.3);
    for (double a : {0.3, 0.75, 1.4}) {
        QParams pa(0.5, a);
        for (int n : {0, -3, 4}) {
            for (int sign : {+1, -1}) {
                auto mu = spectral::spectral_measure(sign, a + n, pa);
                INFO("a=" << a << " n=" << n << " sign=" << sign);
                CHECK(std::abs(mu.total_mass - 1.0) <= 1e-8);
                for (double g : mu.node_density) CHECK(g >= 0.0);
                for (const auto& atom : mu.atoms) CHECK(atom.weight >= -1e-14);
            }
        }
    }
}

TEST_CASE("continuous density is positive on the open band") {
    std::mt19937 rng(32);
    std::uniform_real_distribution<double> as(0.2, 1.6), qs(0.3, 0.8), cs(-2.5, 2.5);
    for (int trial = 0; trial < 5; ++trial) {
        QParams p(qs(rng), as(rng));
        double c = cs(rng);
        int sign = (rng() % 2) ? +1 : -1;
        for (int i = 1; i < 10000; ++i) {
            double theta = M_PI * i / 10000.0;
            double g = spectral::density_theta(theta, sign, c, p);
            INFO("q=" << p.q << " a=" << p.a << " c=" << c << " sign=" << sign
                      << " theta=" << theta);
            REQUIRE(g >= 0.0);
            REQUIRE(std::isfinite(g));
        }
    }
}

TEST_CASE("moments of the measure match the matrix moments") {
    QParams base(0.5, 0.3);
    for (double a : {0.3, 0.75, 1.4}) {
        QParams p(0.5, a);
        for (int n : {0, -3, 4}) {
            for (int sign : {+1, -1}) {
                auto J = spectral::twisted_casimir_jacobi(sign, a + n, 80, p);
                auto mu = spectral::spectral_measure(sign, a + n, p);
                auto res = spectral::moment_check(mu, J, 8);
                for (std::size_t k = 0; k < res.size(); ++k) {
                    INFO("a=" << a << " n=" << n << " sign=" << sign << " k=" << k);
                    REQUIRE(res[k] <= 1e-6);
                }
            }
        }
    }
}

TEST_CASE("truncated spectra reproduce the predicted bound states") {
    QParams p(0.5, 0.3);
    int N = 200;
    for (int n : {-4, -3, 0, 3, 4}) {
        for (int sign : {+1, -1}) {
            double c = p.a + n;
            auto J = spectral::twisted_casimir_jacobi(sign, c, N, p);
            auto eig = spectral::truncated_eigendecomposition(J);
            auto atoms = spectral::predicted_atoms(sign, c, p);
            std::vector<double> outliers;
            for (int i = 0; i < eig.values.size(); ++i)
                if (std::abs(eig.values[i]) > 2.0 + 1e-6) outliers.push_back(eig.values[i]);
            INFO("n=" << n << " sign=" << sign);
            REQUIRE(outliers.size() == atoms.size());
            std::sort(outliers.begin(), outliers.end());
            std::vector<double> expect;
            for (const auto& atom : atoms) expect.push_back(atom.location);
            std::sort(expect.begin(), expect.end());
            for (std::size_t i = 0; i < expect.size(); ++i)
                CHECK(std::abs(outliers[i] - expect[i]) <= 1e-6);
        }
    }
}

TEST_CASE("eigenvector weights at bound states match the closed-form atom weights") {
    QParams p(0.5, 0.3);
    int N = 200;
    double c = p.a - 3.0;
    auto J = spectral::twisted_casimir_jacobi(+1, c, N, p);
    auto eig = spectral::truncated_eigendecomposition(J);
    // the top eigenvalue is the bound state; its first-entry mass is the atom weight
    int top = static_cast<int>(eig.values.size()) - 1;
    CHECK(eig.values[top] == Catch::Approx(4.25).margin(1e-10));
    double w = eig.vectors(0, top) * eig.vectors(0, top);
    CHECK(w == Catch::Approx(0.8897755148185287).margin(1e-5));
}
