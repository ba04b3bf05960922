// Acceptance gate: one pass/fail line per criterion, exit 1 on any failure.
// Tolerances and runtime budgets are pinned here on purpose; do not relax
// them to make a red line green.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "qsl/harmonic.hpp"
#include "qsl/hopf.hpp"
#include "qsl/ncalg.hpp"
#include "qsl/qspecial.hpp"
#include "qsl/repkit.hpp"
#include "qsl/spectral.hpp"

using namespace qsl;
using ncalg::NCPoly;
using qspecial::QParams;
using qspecial::QScalarKind;
using repkit::IrrepLabel;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

std::vector<IrrepLabel> label_sweep(const QParams& p) {
    std::vector<IrrepLabel> labels;
    for (double lam : {-1.0, 0.0, 0.9}) {
        labels.push_back(IrrepLabel::L(+1, lam));
        labels.push_back(IrrepLabel::L(-1, lam));
    }
    for (int n = 1; n <= 4; ++n) {
        labels.push_back(IrrepLabel::D(+1, n, p));
        labels.push_back(IrrepLabel::D(-1, n, p));
        labels.push_back(IrrepLabel::E(+1, n, p));
        labels.push_back(IrrepLabel::E(-1, n, p));
    }
    labels.push_back(IrrepLabel::T(+1, p));
    labels.push_back(IrrepLabel::T(-1, p));
    return labels;
}

std::vector<IrrepLabel> admissible_sweep(const QParams& p) {
    std::vector<IrrepLabel> out;
    for (const auto& label : label_sweep(p)) {
        try {
            label.validate(p);
            out.push_back(label);
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

// 1. every defining relation and its star image rewrites to zero, and the
//    localization homomorphism preserves relations, all in exact arithmetic
bool crit_exact_relations(std::string& detail) {
    const char* names[] = {"su2", "podles", "podles-loc", "uq-su2", "uq-su2+-"};
    for (const char* name : names) {
        const auto& A = ncalg::Registry::instance().get(name);
        for (const auto& [lhs, rhs] : A.rules) {
            NCPoly prod = NCPoly::generator(A, A.gens[lhs.first]) *
                          NCPoly::generator(A, A.gens[lhs.second]);
            if (!(prod - NCPoly(A, rhs)).is_zero()) {
                detail = std::string(name) + " relation " + A.gens[lhs.first] +
                         A.gens[lhs.second];
                return false;
            }
            if (!(ncalg::star(prod) - ncalg::star(NCPoly(A, rhs))).is_zero()) {
                detail = std::string(name) + " star relation " + A.gens[lhs.first] +
                         A.gens[lhs.second];
                return false;
            }
        }
    }
    const auto& U = ncalg::uq_pm();
    for (const auto& [lhs, rhs] : U.rules) {
        NCPoly g1 = NCPoly::generator(U, U.gens[lhs.first]);
        NCPoly g2 = NCPoly::generator(U, U.gens[lhs.second]);
        NCPoly hom = hopf::psi_map(g1) * hopf::psi_map(g2) - hopf::psi_map(g1 * g2);
        if (!hom.is_zero()) {
            detail = "localization image of " + U.gens[lhs.first] + U.gens[lhs.second];
            return false;
        }
    }
    return true;
}

// 2. every admissible label in the sweep yields a unitarizable truncation
bool crit_unitarizable(std::string& detail) {
    for (double q : {0.3, 0.5, 0.8})
        for (double a : {0.3, 1.0}) {
            QParams p(q, a);
            for (const auto& label : admissible_sweep(p)) {
                auto rep = repkit::sl2r_irrep(label, 40, p);
                double r = repkit::unitarity_residual(rep);
                if (r > 1e-12) {
                    detail = label.name() + " at q=" + std::to_string(q) +
                             " a=" + std::to_string(a) + ": residual " + std::to_string(r);
                    return false;
                }
            }
        }
    return true;
}

// 3. the Casimir acts as the classified scalar on the interior
bool crit_casimir_scalar(std::string& detail) {
    for (double q : {0.3, 0.5, 0.8})
        for (double a : {0.3, 1.0}) {
            QParams p(q, a);
            for (const auto& label : admissible_sweep(p)) {
                auto rep = repkit::sl2r_irrep(label, 40, p);
                Eigen::MatrixXcd om = repkit::casimir_matrix(rep, p);
                int n = rep.dim(), trim = rep.margin;
                double worst = 0.0;
                for (int i = trim; i < n - trim; ++i)
                    for (int j = trim; j < n - trim; ++j) {
                        std::complex<double> expect = (i == j) ? label.lambda : 0.0;
                        worst = std::max(worst, std::abs(om(i, j) - expect));
                    }
                if (worst > 1e-10) {
                    detail = label.name() + " at q=" + std::to_string(q) +
                             " a=" + std::to_string(a) + ": residual " + std::to_string(worst);
                    return false;
                }
            }
        }
    return true;
}

// 4. sphere restriction reproduces all four branching patterns
bool crit_branching(std::string& detail) {
    for (double q : {0.3, 0.5, 0.8})
        for (double a : {0.3, 1.0}) {
            QParams p(q, a);
            for (const auto& label : admissible_sweep(p)) {
                auto rep = harmonic::branch(label, 60, p, 1e-6);
                std::map<std::string, int> expect;
                switch (label.family) {
                    case repkit::Family::Lplus:
                    case repkit::Family::Lminus: expect = {{"pi+", 1}, {"pi-", 1}}; break;
                    case repkit::Family::Dminus:
                    case repkit::Family::Eplus: expect = {{"pi+", 1}}; break;
                    case repkit::Family::Dplus:
                    case repkit::Family::Eminus: expect = {{"pi-", 1}}; break;
                    case repkit::Family::Tplus: expect = {{"chi(-i)", 1}}; break;
                    case repkit::Family::Tminus: expect = {{"chi(+i)", 1}}; break;
                }
                if (!rep.conclusive || rep.components != expect) {
                    detail = label.name() + " at q=" + std::to_string(q) +
                             " a=" + std::to_string(a) + ": " + rep.diagnostic;
                    return false;
                }
            }
        }
    return true;
}

// 5. principal series Casimir is the scalar 2 sin(theta) and the boost
//    spectrum is the union of both parity lattices
bool crit_principal_series(std::string& detail) {
    QParams p(0.5, 0.3);
    for (int k = 1; k <= 12; ++k) {
        double theta = std::numbers::pi * k / 13.0;
        std::complex<double> z(std::cos(theta), -std::sin(theta));  // Casimir 2 sin(theta)
        auto rep = harmonic::principal_series(z, 30, p);
        auto om = harmonic::principal_casimir(rep, p);
        double r = harmonic::interior_residual(om, 2.0 * std::sin(theta), 4);
        if (r > 1e-10) {
            detail = "theta=" + std::to_string(theta) + ": residual " + std::to_string(r);
            return false;
        }
        bool even = false, odd = false;
        for (double c : rep.lattice) {
            long n = std::lround(c - p.a);
            ((n % 2) ? odd : even) = true;
        }
        if (!even || !odd) {
            detail = "missing parity lattice at theta=" + std::to_string(theta);
            return false;
        }
    }
    return true;
}

// 6. the spectral measure is a correct probability measure: unit mass,
//    matrix moments, and truncation outliers with the closed-form weights
bool crit_spectral_measure(std::string& detail) {
    for (double a : {0.3, 0.75, 1.4}) {
        QParams p(0.5, a);
        for (int n : {0, -3, 4})
            for (int sign : {+1, -1}) {
                double c = a + n;
                auto mu = spectral::spectral_measure(sign, c, p);
                std::string where = "a=" + std::to_string(a) + " n=" + std::to_string(n) +
                                    " sign=" + std::to_string(sign);
                if (std::abs(mu.total_mass - 1.0) > 1e-8) {
                    detail = where + ": mass " + std::to_string(mu.total_mass);
                    return false;
                }
                auto J = spectral::twisted_casimir_jacobi(sign, c, 80, p);
                auto res = spectral::moment_check(mu, J, 8);
                for (double r : res)
                    if (r > 1e-6) {
                        detail = where + ": moment residual " + std::to_string(r);
                        return false;
                    }
                auto Jbig = spectral::twisted_casimir_jacobi(sign, c, 200, p);
                auto eig = spectral::truncated_eigendecomposition(Jbig);
                std::vector<double> outliers;
                for (int i = 0; i < eig.values.size(); ++i)
                    if (std::abs(eig.values[i]) > 2.0 + 1e-6)
                        outliers.push_back(eig.values[i]);
                std::vector<std::pair<double, double>> expect;
                for (const auto& atom : mu.atoms) expect.push_back({atom.location, atom.weight});
                std::sort(expect.begin(), expect.end());
                std::sort(outliers.begin(), outliers.end());
                if (outliers.size() != expect.size()) {
                    detail = where + ": " + std::to_string(outliers.size()) + " outliers vs " +
                             std::to_string(expect.size()) + " atoms";
                    return false;
                }
                for (std::size_t i = 0; i < expect.size(); ++i) {
                    if (std::abs(outliers[i] - expect[i].first) > 1e-6) {
                        detail = where + ": outlier location error";
                        return false;
                    }
                }
                // weights from the first eigenvector components
                for (int i = 0; i < eig.values.size(); ++i) {
                    if (std::abs(eig.values[i]) <= 2.0 + 1e-6) continue;
                    double w = eig.vectors(0, i) * eig.vectors(0, i);
                    bool matched = false;
                    for (const auto& [loc, wt] : expect)
                        if (std::abs(eig.values[i] - loc) <= 1e-6 && std::abs(w - wt) <= 1e-5)
                            matched = true;
                    if (!matched) {
                        detail = where + ": atom weight mismatch";
                        return false;
                    }
                }
            }
    }
    return true;
}

// 7. every regular-representation channel decomposes into uniquely matched
//    discrete/exceptional components plus a continuous part in the band
bool crit_regular_decomposition(std::string& detail) {
    QParams p(0.5, 0.3);
    for (int n = -8; n <= 8; ++n)
        for (int sign : {+1, -1}) {
            harmonic::ChannelReport rep;
            try {
                rep = harmonic::regular_channel(n, sign, 200, p);
            } catch (const std::exception& e) {
                detail = "n=" + std::to_string(n) + " sign=" + std::to_string(sign) + ": " +
                         e.what();
                return false;
            }
            std::set<std::string> seen;
            for (const auto& o : rep.outliers) {
                if (!seen.insert(o.label.name()).second) {
                    detail = "n=" + std::to_string(n) + ": repeated label " + o.label.name();
                    return false;
                }
                bool is_d = o.label.family == repkit::Family::Dplus ||
                            o.label.family == repkit::Family::Dminus;
                int fam_sign = (o.label.family == repkit::Family::Dplus ||
                                o.label.family == repkit::Family::Eplus)
                                   ? +1
                                   : -1;
                bool sign_ok = is_d ? (fam_sign == -sign) : (fam_sign == sign);
                bool parity_ok = !is_d || ((o.label.n - n) % 2 == 0);
                if (!sign_ok || !parity_ok) {
                    detail = "n=" + std::to_string(n) + " sign=" + std::to_string(sign) +
                             ": label " + o.label.name() + " violates selection rules";
                    return false;
                }
            }
            std::string want = (((n % 2) + 2) % 2 == 0) ? "L+" : "L-";
            if (rep.continuous_family != want) {
                detail = "n=" + std::to_string(n) + ": continuous family " +
                         rep.continuous_family;
                return false;
            }
            if (rep.continuous_mass < -1e-9 || rep.continuous_mass > 1.0 + 1e-9) {
                detail = "n=" + std::to_string(n) + ": continuous mass " +
                         std::to_string(rep.continuous_mass);
                return false;
            }
        }
    return true;
}

// 8. orthogonal-polynomial recursion agrees with its terminating
//    hypergeometric closed form, and the polynomials are orthonormal for
//    the spectral measure
bool crit_orthogonal_polynomials(std::string& detail) {
    QParams p(0.5, 0.3);
    double q2 = p.q * p.q;
    for (int sign : {+1, -1}) {
        int s = -sign;
        for (double theta : {0.4, 1.1, 2.3})
            for (double c : {-0.8, 0.7}) {
                double lam = std::cos(theta);
                for (int n = 0; n <= 20; ++n) {
                    double rec = qspecial::al_salam_chihara(n, lam, c, sign, p);
                    std::complex<double> eip(std::cos(theta), std::sin(theta));
                    std::complex<double> u = double(s) * std::pow(p.q, s * p.a + c + 1.0) * eip;
                    std::complex<double> num[3] = {std::pow(q2, -n), u, std::conj(u)};
                    std::complex<double> den[2] = {-std::pow(p.q, 2.0 * s * p.a + 2.0), 0.0};
                    std::complex<double> f = qspecial::phi32(num, den, q2, q2);
                    double poch =
                        qspecial::q_pochhammer(-std::pow(p.q, 2.0 * s * p.a + 2.0), q2, n)
                            .real();
                    double pref =
                        poch / (std::pow(double(s), n) * std::pow(p.q, n * (c + s * p.a + 1.0)));
                    double cf = (pref * f).real();
                    if (std::abs(rec - cf) > 1e-10 * std::max(1.0, std::abs(rec))) {
                        detail = "recursion vs closed form at n=" + std::to_string(n);
                        return false;
                    }
                }
            }
    }
    double c = p.a - 3.0;
    auto mu = spectral::spectral_measure(+1, c, p, 3000);
    for (int m = 0; m <= 10; ++m)
        for (int n = m; n <= 10; ++n) {
            double acc = 0.0;
            for (std::size_t i = 0; i < mu.node_lambda.size(); ++i)
                acc += mu.node_weight[i] *
                       qspecial::al_salam_chihara_normalized(m, mu.node_lambda[i], c, +1, p) *
                       qspecial::al_salam_chihara_normalized(n, mu.node_lambda[i], c, +1, p);
            for (const auto& atom : mu.atoms)
                acc += atom.weight *
                       qspecial::al_salam_chihara_normalized(m, atom.location, c, +1, p) *
                       qspecial::al_salam_chihara_normalized(n, atom.location, c, +1, p);
            if (std::abs(acc - ((m == n) ? 1.0 : 0.0)) > 1e-6) {
                detail = "orthogonality failure at (" + std::to_string(m) + "," +
                         std::to_string(n) + "): " + std::to_string(acc);
                return false;
            }
        }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"exact relation and localization suite", 5.0, crit_exact_relations},
        {"unitarizability across the label sweep", 10.0, crit_unitarizable},
        {"Casimir scalar on every admissible label", 5.0, crit_casimir_scalar},
        {"branching patterns for all four families", 30.0, crit_branching},
        {"principal series Casimir and parity lattices", 10.0, crit_principal_series},
        {"spectral measure: mass, moments, bound states", 60.0, crit_spectral_measure},
        {"regular representation channel decomposition", 60.0, crit_regular_decomposition},
        {"orthogonal polynomials: closed form and orthonormality", 10.0,
         crit_orthogonal_polynomials},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed > c.budget_seconds) {
            ok = false;
            detail = "exceeded " + std::to_string(c.budget_seconds) + "s budget (" +
                     std::to_string(elapsed) + "s)" + (detail.empty() ? "" : "; " + detail);
        }
        std::printf("%s  %zu. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1, c.name.c_str(),
                    elapsed, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
