#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "qsl/qspecial.hpp"
#include "qsl/spectral.hpp"

using namespace qsl::qspecial;

TEST_CASE("bracket and brace scalars differ by the deformation unit") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> xs(-6.0, 6.0);
    for (double q : {0.3, 0.5, 0.8}) {
        QParams p(q, 0.3);
        for (int i = 0; i < 1000; ++i) {
            double x = xs(rng);
            double lhs = q_number(QScalarKind::bracket, x, p) * (q - 1.0 / q);
            double rhs = q_number(QScalarKind::brace, x, p);
            REQUIRE(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("finite q-Pochhammer symbols satisfy the shift recursion") {
    std::mt19937 rng(22);
    std::uniform_real_distribution<double> xs(-2.0, 2.0);
    for (double base : {0.09, 0.25, 0.64}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::complex<double> x(xs(rng), xs(rng));
            std::complex<double> prod = 1.0;
            for (int n = 0; n <= 50; ++n) {
                std::complex<double> val = q_pochhammer(x, base, n);
                REQUIRE(std::abs(val - prod) <= 1e-12 * std::max(1.0, std::abs(prod)));
                prod *= 1.0 - x * std::pow(base, n);
            }
        }
    }
}

TEST_CASE("infinite q-Pochhammer matches a long finite product") {
    QParams p(0.5, 0.3);
    std::complex<double> x(0.7, -0.4);
    std::complex<double> inf = q_pochhammer(x, 0.25, kInfinity);
    std::complex<double> fin = q_pochhammer(x, 0.25, 60);
    CHECK(std::abs(inf - fin) <= 1e-14 * std::abs(fin));
}

TEST_CASE("recursion coefficients reproduce the three-term identity") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> ls(-3.0, 3.0), cs(-2.0, 2.0);
    for (double q : {0.3, 0.5, 0.8}) {
        for (double a : {0.3, 1.0}) {
            QParams p(q, a);
            for (int sign : {+1, -1}) {
                for (int trial = 0; trial < 100; ++trial) {
                    double lam = ls(rng), c = cs(rng);
                    double brc = q_number(QScalarKind::brace, c, p);
                    for (int k = 1; k <= 12; ++k) {
                        double diag = sign * brc * std::pow(q, 2 * (k - 1) - sign * a + 1);
                        double off2 = (1.0 - std::pow(q, 2 * (k - 1))) *
                                      (1.0 + std::pow(q, -2.0 * sign * a + 2 * (k - 1)));
                        double lhs = al_salam_chihara(k, lam, c, sign, p);
                        double rhs = (2.0 * lam + diag) * al_salam_chihara(k - 1, lam, c, sign, p) -
                                     off2 * ((k >= 2) ? al_salam_chihara(k - 2, lam, c, sign, p) : 0.0);
                        double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
                        REQUIRE(std::abs(lhs - rhs) <= 1e-12 * scale);
                    }
                }
            }
        }
    }
}

TEST_CASE("recursion agrees with the terminating basic hypergeometric form") {
    // closed form at lambda = cos(theta), for both sign branches:
    //   Q_n = (-q^{2 s a + 2}; q^2)_n / (s^n q^{n(c + s a + 1)})
    //         * 3phi2(q^{-2n}, s q^{s a + c + 1} e^{i theta}, s q^{s a + c + 1} e^{-i theta};
    //                 -q^{2 s a + 2}, 0; q^2, q^2),   s = -sign
    for (double q : {0.3, 0.5, 0.8}) {
        for (double a : {0.3, 1.0}) {
            QParams p(q, a);
            double q2 = q * q;
            for (int sign : {+1, -1}) {
                int s = -sign;
                for (double theta : {0.4, 1.1, 2.3}) {
                    for (double c : {-0.8, 0.7}) {
                        double lam = std::cos(theta);
                        for (int n = 0; n <= 20; ++n) {
                            double rec = al_salam_chihara(n, lam, c, sign, p);
                            std::complex<double> eip(std::cos(theta), std::sin(theta));
                            std::complex<double> u =
                                double(s) * std::pow(q, s * a + c + 1.0) * eip;
                            std::complex<double> num[3] = {std::pow(q2, -n), u, std::conj(u)};
                            std::complex<double> den[2] = {-std::pow(q, 2.0 * s * a + 2.0), 0.0};
                            std::complex<double> f = phi32(num, den, q2, q2);
                            double poch =
                                q_pochhammer(-std::pow(q, 2.0 * s * a + 2.0), q2, n).real();
                            double pref =
                                poch / (std::pow(double(s), n) * std::pow(q, n * (c + s * a + 1.0)));
                            double cf = (pref * f).real();
                            INFO("q=" << q << " a=" << a << " sign=" << sign << " n=" << n);
                            REQUIRE(std::abs(rec - cf) <= 1e-10 * std::max(1.0, std::abs(rec)));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("non-terminating first parameter is rejected") {
    std::complex<double> num[3] = {0.37, 0.1, 0.1};
    std::complex<double> den[2] = {0.2, 0.0};
    CHECK_THROWS_AS(phi32(num, den, 0.25, 0.25), std::invalid_argument);
}

TEST_CASE("normalized polynomials are orthonormal for the spectral measure") {
    QParams p(0.5, 0.3);
    int sign = +1;
    double c = p.a - 3.0;  // one bound state below the band
    auto mu = qsl::spectral::spectral_measure(sign, c, p, 3000);
    for (int m = 0; m <= 10; ++m) {
        for (int n = m; n <= 10; ++n) {
            double acc = 0.0;
            for (std::size_t i = 0; i < mu.node_lambda.size(); ++i)
                acc += mu.node_weight[i] *
                       al_salam_chihara_normalized(m, mu.node_lambda[i], c, sign, p) *
                       al_salam_chihara_normalized(n, mu.node_lambda[i], c, sign, p);
            for (const auto& atom : mu.atoms)
                acc += atom.weight * al_salam_chihara_normalized(m, atom.location, c, sign, p) *
                       al_salam_chihara_normalized(n, atom.location, c, sign, p);
            double expect = (m == n) ? 1.0 : 0.0;
            INFO("m=" << m << " n=" << n);
            REQUIRE(std::abs(acc - expect) <= 1e-6);
        }
    }
}
