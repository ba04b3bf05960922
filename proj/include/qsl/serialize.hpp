// JSON/CSV export of the library's report types.  Schema version 1.

#pragma once

#include <complex>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qsl/harmonic.hpp"
#include "qsl/ncalg.hpp"
#include "qsl/repkit.hpp"
#include "qsl/spectral.hpp"

namespace qsl::serialize {

using nlohmann::json;

inline std::string coeff_string(const exact::Coeff& c) {
    // exact rendering: sum of (re, im) s^i u^j terms over D^dpow
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c.num.terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.re.str();
        if (v.im != 0) os << (v.im > 0 ? "+" : "") << v.im.str() << "i";
        os << ")";
        if (k.first) os << " s^" << k.first;
        if (k.second) os << " u^" << k.second;
    }
    if (first) os << "0";
    std::string s = os.str();
    if (c.dpow > 0) s = "(" + s + ") / D^" + std::to_string(c.dpow);
    return s;
}

inline json algebra_to_json(const ncalg::AlgebraSpec& A) {
    json rules = json::array();
    for (const auto& [lhs, rhs] : A.rules) {
        json terms = json::array();
        for (const auto& [w, c] : rhs) {
            json word = json::array();
            for (int g : w) word.push_back(A.gens[g]);
            terms.push_back({{"word", word}, {"coeff", coeff_string(c)}});
        }
        rules.push_back({{"lhs", {A.gens[lhs.first], A.gens[lhs.second]}}, {"rhs", terms}});
    }
    json star = json::object();
    for (size_t g = 0; g < A.gens.size(); ++g) {
        json terms = json::array();
        for (const auto& [w, c] : A.star_table[g]) {
            json word = json::array();
            for (int gg : w) word.push_back(A.gens[gg]);
            terms.push_back({{"word", word}, {"coeff", coeff_string(c)}});
        }
        star[A.gens[g]] = terms;
    }
    return {{"schema", 1}, {"name", A.name}, {"generators", A.gens}, {"rules", rules},
            {"star", star}};
}

inline json matrix_to_json(const Eigen::MatrixXcd& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < M.cols(); ++j)
            row.push_back({M(i, j).real(), M(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

inline json rep_to_json(const repkit::TruncatedRep& rep) {
    json gens = json::object();
    for (const auto& [name, M] : rep.gen) gens[name] = matrix_to_json(M);
    return {{"schema", 1},
            {"algebra", rep.algebra},
            {"basis", rep.basis},
            {"dim", rep.dim()},
            {"lattice", rep.lattice},
            {"generators", gens}};
}

inline json measure_to_json(const spectral::SpectralMeasure& mu) {
    json atoms = json::array();
    for (const auto& a : mu.atoms)
        atoms.push_back({{"loc", a.location},
                         {"weight", a.weight},
                         {"family", a.family},
                         {"k", a.k},
                         {"near_edge", a.near_edge}});
    json samples = json::array();
    for (std::size_t i = 0; i < mu.node_lambda.size(); ++i)
        samples.push_back({mu.node_lambda[i], mu.node_density[i]});
    return {{"schema", 1},
            {"sign", mu.sign},
            {"c", mu.c},
            {"atoms", atoms},
            {"density_samples", samples},
            {"continuous_mass", mu.continuous_mass},
            {"mass", mu.total_mass}};
}

/// CSV with columns lambda, g for the continuous density samples.
inline std::string measure_to_csv(const spectral::SpectralMeasure& mu) {
    std::ostringstream os;
    os << "lambda,g\n";
    os.precision(17);
    for (std::size_t i = 0; i < mu.node_lambda.size(); ++i)
        os << mu.node_lambda[i] << "," << mu.node_density[i] << "\n";
    return os.str();
}

inline json branching_to_json(const harmonic::BranchingReport& r) {
    return {{"schema", 1},
            {"label", r.label.name()},
            {"components", r.components},
            {"spectra", r.z_spectrum},
            {"conclusive", r.conclusive},
            {"diagnostic", r.diagnostic}};
}

inline json channel_to_json(const harmonic::ChannelReport& r) {
    json outliers = json::array();
    for (const auto& o : r.outliers)
        outliers.push_back(
            {{"value", o.value}, {"label", o.label.name()}, {"weight", o.weight}});
    return {{"schema", 1},
            {"n", r.n},
            {"sign", r.sign},
            {"trunc", r.N},
            {"outliers", outliers},
            {"continuous_mass", r.continuous_mass},
            {"continuous_family", r.continuous_family}};
}

}  // namespace qsl::serialize
