// Command-line front end: verification suites and data export.
// Exit codes: 0 pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qsl/harmonic.hpp"
#include "qsl/hopf.hpp"
#include "qsl/ncalg.hpp"
#include "qsl/repkit.hpp"
#include "qsl/serialize.hpp"
#include "qsl/spectral.hpp"

using namespace qsl;
using json = nlohmann::json;
using ncalg::NCPoly;
using qspecial::QParams;
using repkit::IrrepLabel;

namespace {

struct RunConfig {
    double q = 0.5;
    std::string a_text = "0.3";
    double a = 0.3;
    bool a_half_integer = false;  // exact detection via p/q syntax
    int trunc = 60;
    double tol = 1e-10;
    std::string format = "json";
    std::string out;

    QParams params() const { return QParams(q, a); }
};

/// Accepts plain decimals and exact "p/q" rationals.
void parse_a(RunConfig& cfg) {
    auto slash = cfg.a_text.find('/');
    if (slash == std::string::npos) {
        std::size_t used = 0;
        cfg.a = std::stod(cfg.a_text, &used);
        if (used != cfg.a_text.size())
            throw CLI::ValidationError("--a", "not a number: " + cfg.a_text);
        double h = 2.0 * cfg.a;
        cfg.a_half_integer = std::abs(h - std::round(h)) < 1e-12;
        return;
    }
    long num = std::stol(cfg.a_text.substr(0, slash));
    long den = std::stol(cfg.a_text.substr(slash + 1));
    if (den == 0) throw CLI::ValidationError("--a", "zero denominator");
    cfg.a = static_cast<double>(num) / static_cast<double>(den);
    cfg.a_half_integer = (2 * num) % den == 0;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
    f << text << "\n";
}

void emit_json(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2)); }

int run_verify_algebra(const RunConfig& cfg, const std::string& name) {
    const ncalg::AlgebraSpec* alg = nullptr;
    try {
        alg = &ncalg::Registry::instance().get(name);
    } catch (const std::exception&) {
        std::cerr << "unknown algebra '" << name
                  << "'; registered: su2 podles podles-loc uq-su2 uq-su2+- uq-su2-+ uq-su2--\n";
        return 2;
    }
    const auto& A = *alg;
    json checks = json::array();
    bool all_pass = true;
    auto record = [&](const std::string& what, bool pass, const std::string& detail = "") {
        checks.push_back({{"check", what}, {"pass", pass}, {"detail", detail}});
        if (!pass) {
            all_pass = false;
            std::cerr << "FAIL " << what << (detail.empty() ? "" : ": " + detail) << "\n";
        }
    };

    for (const auto& [lhs, rhs] : A.rules) {
        std::string id = A.gens[lhs.first] + A.gens[lhs.second];
        NCPoly prod =
            NCPoly::generator(A, A.gens[lhs.first]) * NCPoly::generator(A, A.gens[lhs.second]);
        record("relation " + id, (prod - NCPoly(A, rhs)).is_zero());
        record("star relation " + id,
               (ncalg::star(prod) - ncalg::star(NCPoly(A, rhs))).is_zero());
    }

    std::mt19937 rng(1u);  // fixed seed: the report must be deterministic
    std::uniform_int_distribution<int> pick(0, static_cast<int>(A.gens.size()) - 1);
    bool confluent = true;
    for (int trial = 0; trial < 200 && confluent; ++trial) {
        ncalg::Word w(1 + trial % 7);
        for (auto& g : w) g = pick(rng);
        ncalg::PolyData input{{w, exact::Coeff::one()}};
        confluent = ncalg::normal_form_data(A, input, &rng) == ncalg::normal_form_data(A, input);
    }
    record("confluence (200 random words)", confluent);

    if (A.name == "su2" || A.name.rfind("uq-su2", 0) == 0) {
        bool hom = true;
        for (const auto& g1 : A.gens)
            for (const auto& g2 : A.gens) {
                NCPoly x = NCPoly::generator(A, g1), y = NCPoly::generator(A, g2);
                if (!(hopf::coproduct(x * y) == hopf::coproduct(x) * hopf::coproduct(y)))
                    hom = false;
            }
        record("coproduct homomorphism on generator pairs", hom);
    }

    json report = {{"schema", 1}, {"algebra", A.name}, {"checks", checks}, {"pass", all_pass}};
    emit_json(cfg, report);
    return all_pass ? 0 : 1;
}

int run_irrep(const RunConfig& cfg, const std::string& label_text) {
    QParams p = cfg.params();
    IrrepLabel label = IrrepLabel::parse(label_text, p);
    try {
        label.validate(p);
    } catch (const std::invalid_argument& e) {
        std::cerr << "inadmissible label: " << e.what() << "\n";
        return 1;
    }
    auto rep = repkit::sl2r_irrep(label, cfg.trunc, p);
    double rel = repkit::relation_residual(rep, p);
    double uni = repkit::unitarity_residual(rep);
    Eigen::MatrixXcd om = repkit::casimir_matrix(rep, p);
    double cas = 0.0;
    int trim = rep.margin, d = rep.dim();
    for (int i = trim; i < d - trim; ++i)
        for (int j = trim; j < d - trim; ++j) {
            std::complex<double> expect = (i == j) ? label.lambda : 0.0;
            cas = std::max(cas, std::abs(om(i, j) - expect));
        }
    json report = serialize::rep_to_json(rep);
    report["label"] = label.name();
    report["casimir"] = label.lambda;
    report["residuals"] = {{"relation", rel}, {"unitarity", uni}, {"casimir_scalar", cas}};
    emit_json(cfg, report);
    bool ok = rel <= cfg.tol && uni <= cfg.tol && cas <= cfg.tol;
    if (!ok) std::cerr << "residuals exceed tolerance " << cfg.tol << "\n";
    return ok ? 0 : 1;
}

int run_branch(const RunConfig& cfg, const std::string& label_text) {
    QParams p = cfg.params();
    IrrepLabel label = IrrepLabel::parse(label_text, p);
    try {
        label.validate(p);
    } catch (const std::invalid_argument& e) {
        std::cerr << "inadmissible label: " << e.what() << "\n";
        return 1;
    }
    auto rep = harmonic::branch(label, std::max(cfg.trunc, 40), p,
                                std::max(cfg.tol, 1e-8));
    emit_json(cfg, serialize::branching_to_json(rep));
    if (!rep.conclusive) std::cerr << "inconclusive: " << rep.diagnostic << "\n";
    return rep.conclusive ? 0 : 1;
}

int run_induce(const RunConfig& cfg, double theta) {
    QParams p = cfg.params();
    // z = e^{-i theta} carries the Casimir value 2 sin(theta)
    std::complex<double> z(std::cos(theta), -std::sin(theta));
    auto rep = harmonic::principal_series(z, std::max(cfg.trunc / 2, 10), p);
    auto om = harmonic::principal_casimir(rep, p);
    double residual = harmonic::interior_residual(om, 2.0 * std::sin(theta), 4);
    json report = {{"schema", 1},
                   {"theta", theta},
                   {"z", {z.real(), z.imag()}},
                   {"casimir", 2.0 * std::sin(theta)},
                   {"residual", residual},
                   {"lattice", rep.lattice}};
    emit_json(cfg, report);
    if (residual > cfg.tol)
        std::cerr << "Casimir residual " << residual << " exceeds " << cfg.tol << "\n";
    return residual <= cfg.tol ? 0 : 1;
}

int run_measure(const RunConfig& cfg, int sign, int n, double* c_override) {
    QParams p = cfg.params();
    double c = c_override ? *c_override : p.a + n;
    auto mu = spectral::spectral_measure(sign, c, p);
    if (cfg.format == "csv")
        emit(cfg, serialize::measure_to_csv(mu));
    else
        emit_json(cfg, serialize::measure_to_json(mu));
    double err = std::abs(mu.total_mass - 1.0);
    double tol = std::max(cfg.tol, 1e-8);
    if (err > tol) std::cerr << "mass defect " << err << " exceeds " << tol << "\n";
    return err <= tol ? 0 : 1;
}

int run_regular(const RunConfig& cfg, int n, int sign, const std::string& sweep) {
    QParams p = cfg.params();
    if (cfg.a_half_integer) {
        std::cerr << "a = " << cfg.a_text
                  << " is a half-integer; channel separation degenerates there\n";
        return 1;
    }
    int n0 = n, n1 = n;
    if (!sweep.empty()) {
        auto dots = sweep.find("..");
        if (dots == std::string::npos) {
            std::cerr << "--sweep expects n0..n1\n";
            return 2;
        }
        n0 = std::stoi(sweep.substr(0, dots));
        n1 = std::stoi(sweep.substr(dots + 2));
        if (n1 < n0) std::swap(n0, n1);
    }
    std::vector<int> signs = sign == 0 ? std::vector<int>{+1, -1} : std::vector<int>{sign};
    int N = std::max(cfg.trunc, 200);

    // fan out over channels, then assemble the report in deterministic order
    std::vector<std::future<harmonic::ChannelReport>> jobs;
    for (int ch = n0; ch <= n1; ++ch)
        for (int sg : signs)
            jobs.push_back(std::async(std::launch::async, [ch, sg, N, p] {
                return harmonic::regular_channel(ch, sg, N, p);
            }));
    json channels = json::array();
    bool ok = true;
    std::string diagnostic;
    for (auto& job : jobs) {
        try {
            channels.push_back(serialize::channel_to_json(job.get()));
        } catch (const std::exception& e) {
            ok = false;
            diagnostic = e.what();
        }
    }
    json report = {{"schema", 1}, {"channels", channels}, {"pass", ok}};
    if (!ok) report["diagnostic"] = diagnostic;
    emit_json(cfg, report);
    if (!ok) std::cerr << "channel decomposition failed: " << diagnostic << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification suites and data export for the q-deformed harmonic analysis kit"};
    app.require_subcommand(1);
    app.fallthrough();  // allow global flags after the subcommand name

    RunConfig cfg;
    app.add_option("--q", cfg.q, "deformation parameter in (0,1)")->check(CLI::Range(1e-9, 1.0));
    app.add_option("--a", cfg.a_text, "twist parameter; accepts p/q rational syntax");
    app.add_option("--trunc", cfg.trunc, "truncation size")->check(CLI::Range(2, 4000));
    app.add_option("--tol", cfg.tol, "verification tolerance")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", cfg.out, "output file (default: stdout)");

    std::string algebra_name, label_text;
    double theta = std::numbers::pi / 2;
    int sign = +1, n = 0;
    double c_value = 0.0;
    bool has_c = false;
    std::string sweep;

    auto* verify = app.add_subcommand("verify-algebra", "run the exact relation suite");
    verify->add_option("name", algebra_name, "registered algebra name")->required();

    auto* irrep = app.add_subcommand("irrep", "truncated model of one irreducible");
    irrep->add_option("label", label_text, "e.g. L+:0.5, D+:3, T+")->required();

    auto* branchc = app.add_subcommand("branch", "restrict one irreducible to the sphere");
    branchc->add_option("label", label_text, "e.g. L+:0.5, D+:3, T+")->required();

    auto* induce = app.add_subcommand("induce", "principal series at z = e^{-i theta}");
    induce->add_option("--theta", theta, "angle in (0, pi)");

    auto* measure = app.add_subcommand("measure", "spectral measure of the twisted Casimir");
    measure->add_option("--sign", sign, "+1 or -1")->check(CLI::IsMember({-1, 1}));
    measure->add_option("--n", n, "lattice offset: c = a + n");
    auto* copt = measure->add_option("--c", c_value, "explicit c (overrides --n)");

    auto* regular = app.add_subcommand("regular", "channel decomposition of the regular rep");
    regular->add_option("--n", n, "channel index");
    regular->add_option("--sign", sign, "+1, -1, or 0 for both")
        ->check(CLI::IsMember({-1, 0, 1}));
    regular->add_option("--sweep", sweep, "channel range n0..n1");

    try {
        app.parse(argc, argv);
        parse_a(cfg);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    has_c = copt->count() > 0;

    try {
        if (*verify) return run_verify_algebra(cfg, algebra_name);
        if (*irrep) return run_irrep(cfg, label_text);
        if (*branchc) return run_branch(cfg, label_text);
        if (*induce) return run_induce(cfg, theta);
        if (*measure) return run_measure(cfg, sign, n, has_c ? &c_value : nullptr);
        if (*regular) return run_regular(cfg, n, sign, sweep);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
