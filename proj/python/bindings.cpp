// Python module over the core library.  Exact quantities cross the boundary
// as strings (rational or JSON text) so no precision is lost; floats cross as
// doubles only where they are genuinely approximate.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "parasurf/errors.hpp"
#include "parasurf/highprec.hpp"
#include "parasurf/homology.hpp"
#include "parasurf/pairing.hpp"
#include "parasurf/serialize.hpp"
#include "parasurf/spectral.hpp"
#include "parasurf/surface.hpp"
#include "parasurf/veech.hpp"

namespace py = pybind11;
using namespace parasurf;

namespace {

PolyVec parse_class(const std::string& text) {
    return class_from_json(Json::parse(text));
}

std::string pair_classes(const std::string& first, const std::string& second) {
    return rat_str(pair(parse_class(first), parse_class(second)));
}

std::string pair_gamma_sigma(long j, long k) {
    return rat_str(pair(gamma_class(j), sigma_class(k)));
}

std::vector<std::vector<std::string>> pair_table(long big_j, long big_k) {
    std::vector<std::vector<std::string>> table;
    for (long j = -big_j - 1; j <= big_j; ++j) {
        if (j == 0) continue;
        std::vector<std::string> row;
        for (long k = -big_k; k <= big_k; ++k)
            row.push_back(rat_str(pair(gamma_class(j), sigma_class(k))));
        table.push_back(std::move(row));
    }
    return table;
}

std::string sigma_hvec(long j) { return class_to_json(sigma_class(j).hvec).dump(); }
std::string gamma_hvec(long j) { return class_to_json(gamma_class(j).hvec).dump(); }

bool word_is_hyperbolic(const std::string& word) { return is_hyperbolic(parse_word(word)); }

std::string spectra(const std::string& word) {
    GroupWord w = parse_word(word);
    if (!is_hyperbolic(w)) throw NotHyperbolic("word is not hyperbolic at c=1");
    SpectralData sd = spectral_data(w);
    Json report;
    report["word"] = word_str(w);
    report["det"] = rat_str(sd.det);
    report["disc"] = sd.disc;
    report["lambda_u"] = sd.lambda_u.pretty();
    report["lambda_s"] = sd.lambda_s.pretty();
    report["beta"] = beta(w).pretty();
    return report.dump();
}

std::vector<std::string> orbit(const std::string& word, const std::string& first,
                               const std::string& second, long n_max) {
    if (n_max < 0 || n_max > 4096) throw DomainError("n_max must lie in [0, 4096]");
    GroupWord w = parse_word(word);
    PolyVec g = parse_class(first), s = parse_class(second);
    std::vector<std::string> values;
    values.reserve(static_cast<size_t>(n_max) + 1);
    for (long n = 0;; ++n) {
        values.push_back(rat_str(pair(g, s)));
        if (n == n_max) break;
        g = act_vec(w, g);
    }
    return values;
}

std::string asymptote_report(const std::string& word, const std::string& first,
                             const std::string& second, long n_max) {
    if (n_max < 1 || n_max > 4096) throw DomainError("n_max must lie in [1, 4096]");
    GroupWord w = parse_word(word);
    if (!is_hyperbolic(w)) throw NotHyperbolic("word is not hyperbolic at c=1");
    PolyVec g = parse_class(first), s = parse_class(second);

    SpectralData sd = spectral_data(w);
    QuadNum beta_val = beta(w);
    BarwedgeResult bw = barwedge_taylor(w, g, s);
    Real constant = asymptotic_constant_value(bw.k, bw.kappa, beta_val);

    std::vector<std::pair<long, Rat>> seq;
    PolyVec v = act_vec(w, g);
    for (long n = 1;; ++n) {
        seq.emplace_back(n, pair(v, s));
        if (n == n_max) break;
        v = act_vec(w, v);
    }
    DiagnosticsReport diag = convergence_diagnostics(seq, sd.lambda_u, bw.k, constant,
                                                     std::max<long>(1, n_max / 4), n_max);

    Json report;
    report["word"] = word_str(w);
    report["k"] = bw.k;
    report["kappa"] = bw.kappa.str();
    report["beta"] = beta_val.str();
    report["C"] = real_str(constant, 20);
    report["slope"] = real_str(diag.slope, 20);
    Real rich;
    if (ladder_richardson(seq, sd.lambda_u, bw.k, constant, rich))
        report["richardson_limit"] = real_str(rich, 20);
    else
        report["richardson_limit"] = nullptr;
    return report.dump();
}

std::string trace(long start, const std::string& dx, const std::string& dy) {
    SaddleConnection s = trace_geodesic(start, {rat_parse(dx), rat_parse(dy)});
    return connection_to_json(s).dump();
}

std::vector<std::pair<std::string, double>> scan(const std::string& word,
                                                 const std::string& from,
                                                 const std::string& to,
                                                 const std::string& step) {
    std::vector<std::pair<std::string, double>> out;
    for (const ScanRow& row :
         spectral_radius_scan(parse_word(word), rat_parse(from), rat_parse(to), rat_parse(step)))
        out.emplace_back(rat_str(row.at), row.radius);
    return out;
}

std::string moment_str(unsigned long m) { return rat_str(moment(m)); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact pairing, spectra, and decay diagnostics on the parabola surface";

    py::register_exception<DomainError>(m, "DomainError");

    m.def("pair_classes", &pair_classes, py::arg("first"), py::arg("second"),
          "Exact intersection pairing of two JSON class specs, as a rational string.");
    m.def("pair_gamma_sigma", &pair_gamma_sigma, py::arg("j"), py::arg("k"),
          "Exact pairing of closed-curve class j with edge class k.");
    m.def("pair_table", &pair_table, py::arg("j_max"), py::arg("k_max"),
          "Full pairing table: rows j in [-j_max-1, j_max] without 0, columns k in "
          "[-k_max, k_max].");
    m.def("sigma_hvec", &sigma_hvec, py::arg("j"),
          "Edge class j as JSON holonomy data.");
    m.def("gamma_hvec", &gamma_hvec, py::arg("j"),
          "Closed-curve class j as JSON holonomy data.");
    m.def("is_hyperbolic", &word_is_hyperbolic, py::arg("word"),
          "Whether the group word is hyperbolic at parameter 1.");
    m.def("spectra", &spectra, py::arg("word"),
          "Eigenvalue data of a hyperbolic word as JSON text.");
    m.def("orbit", &orbit, py::arg("word"), py::arg("first"), py::arg("second"),
          py::arg("n_max"),
          "Exact pairing sequence pair(word^n first, second) for n = 0..n_max.");
    m.def("asymptote_report", &asymptote_report, py::arg("word"), py::arg("first"),
          py::arg("second"), py::arg("n_max") = 256,
          "Decay diagnostics of a pairing sequence as a JSON report.");
    m.def("trace", &trace, py::arg("start"), py::arg("dx"), py::arg("dy"),
          "Trace a geodesic from a marked point; segment chain and class as JSON.");
    m.def("scan", &scan, py::arg("word"), py::arg("from"), py::arg("to"), py::arg("step"),
          "Spectral radius of the word's matrix over a parameter grid.");
    m.def("moment", &moment_str, py::arg("m"),
          "Exact weight-function moment of order m, as a rational string.");
    m.def("set_precision_bits", &set_precision_bits, py::arg("bits"),
          "Set the working precision of the float layer (>= 64 bits).");
    m.def("precision_bits", &precision_bits, "Current working precision in bits.");
}
