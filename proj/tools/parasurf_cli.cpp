// parasurf — command-line front end for the parabola-surface calculus.
//
// Subcommands
//   pair       exact intersection pairing of two classes, or a gamma x sigma table
//   orbit      exact pairing sequence pair(w^n g, s) as CSV
//   asymptote  decay diagnostics for an orbit sequence: CSV rows + JSON report
//   mixing     cylinder-overlap decay diagnostics against the predicted constant
//   geometric  crossing count of two traced geodesics vs |pairing|
//   spectra    eigenvalue data, beta, and optional decay constants as JSON
//   scan       spectral radius of rho(word) over a parameter grid as CSV
//   trace      trace one geodesic and print its segment chain as JSON
//
// Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.
// Output is deterministic for a fixed command line: exact quantities print as
// rational strings, floats with an explicit digit count, and nothing depends
// on iteration order of unordered containers.  With --output the file is
// written only after the computation fully succeeds.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parasurf/errors.hpp"
#include "parasurf/highprec.hpp"
#include "parasurf/homology.hpp"
#include "parasurf/pairing.hpp"
#include "parasurf/serialize.hpp"
#include "parasurf/spectral.hpp"
#include "parasurf/surface.hpp"
#include "parasurf/veech.hpp"

namespace {

using namespace parasurf;

// A post-parse problem with the request itself (wrong number of classes,
// malformed JSON, ...): exit code 2, like a CLI11 parse error.
struct UsageFailure : std::runtime_error {
    explicit UsageFailure(const std::string& what) : std::runtime_error(what) {}
};

constexpr int kFloatDigits = 20;
constexpr long kMaxN = 4096;

// ---------------------------------------------------------------------------
// class-spec options shared by pair / orbit / asymptote / spectra
// ---------------------------------------------------------------------------

// Classes are assembled in a fixed documented order: every --gamma first,
// then every --sigma, then every --class, each in the order given.
struct ClassSpecs {
    std::vector<long> gammas;
    std::vector<long> sigmas;
    std::vector<std::string> jsons;
};

void add_class_options(CLI::App* cmd, ClassSpecs& specs) {
    cmd->add_option("--gamma", specs.gammas,
                    "closed-curve class by index (repeatable, taken first)");
    cmd->add_option("--sigma", specs.sigmas,
                    "edge class by index (repeatable, taken after --gamma)");
    cmd->add_option("--class", specs.jsons,
                    "JSON class spec, e.g. '{\"sigma\":{\"0\":\"1\",\"-1\":\"2\"}}' "
                    "(repeatable, taken last)");
}

std::vector<PolyVec> build_classes(const ClassSpecs& specs) {
    std::vector<PolyVec> out;
    for (long j : specs.gammas) out.push_back(gamma_class(j).hvec);
    for (long j : specs.sigmas) out.push_back(sigma_class(j).hvec);
    for (const std::string& text : specs.jsons) {
        Json parsed;
        try {
            parsed = Json::parse(text);
        } catch (const Json::exception& e) {
            throw UsageFailure(std::string("bad --class JSON: ") + e.what());
        }
        out.push_back(class_from_json(parsed));
    }
    return out;
}

std::pair<PolyVec, PolyVec> two_classes(const ClassSpecs& specs) {
    std::vector<PolyVec> classes = build_classes(specs);
    if (classes.size() != 2)
        throw UsageFailure("expected exactly two classes (got " +
                           std::to_string(classes.size()) + ")");
    return {classes[0], classes[1]};
}

GroupWord hyperbolic_word(const std::string& text) {
    GroupWord w = parse_word(text);
    if (!is_hyperbolic(w)) throw NotHyperbolic("word is not hyperbolic at c=1");
    return w;
}

// ---------------------------------------------------------------------------
// shared output helpers
// ---------------------------------------------------------------------------

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

// The exact pairing sequence pair(w^n g, s) for n = from..to, advancing the
// class incrementally so each step costs one matrix application.
std::vector<std::pair<long, Rat>> orbit_sequence(const GroupWord& w, const PolyVec& g,
                                                 const PolyVec& s, long from, long to) {
    std::vector<std::pair<long, Rat>> seq;
    seq.reserve(static_cast<size_t>(to - from + 1));
    PolyVec v = act_power_vec(w, g, from);
    for (long n = from;; ++n) {
        seq.emplace_back(n, pair(v, s));
        if (n == to) break;
        v = act_vec(w, v);
    }
    return seq;
}

// CSV rows of convergence diagnostics: index, exact value, then the two
// log-domain columns ("nan" where the value vanished and no log exists).
std::string diagnostics_csv(const std::string& value_header, const DiagnosticsReport& report) {
    std::string out = csv_row({"n", value_header, "log_ratio", "r_n"});
    for (const DiagnosticsRow& row : report.rows) {
        std::string lr = row.has_log ? real_str(row.log_ratio, kFloatDigits) : "nan";
        std::string rn = row.has_log ? real_str(row.ratio, kFloatDigits) : "nan";
        out += csv_row({std::to_string(row.n), rat_str(row.value), lr, rn});
    }
    return out;
}

// Slope from the windowed fit; the Richardson limit from the dyadic ladder
// (consecutive indices have no geometric tail of their own).
void attach_diagnostics(Json& report, const DiagnosticsReport& diag,
                        const std::vector<std::pair<long, Rat>>& seq, const QuadNum& lambda,
                        int k, const Real& constant) {
    report["slope"] = real_str(diag.slope, kFloatDigits);
    Real rich;
    if (ladder_richardson(seq, lambda, k, constant, rich))
        report["richardson_limit"] = real_str(rich, kFloatDigits);
    else
        report["richardson_limit"] = nullptr;
}

std::string table_plus_report(const std::string& format, const std::string& csv,
                              const Json& report) {
    if (format == "csv") return csv;
    if (format == "json") return report.dump(2) + "\n";
    return csv + report.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// subcommand runners
// ---------------------------------------------------------------------------

std::string run_pair(const ClassSpecs& specs, const std::vector<long>& table) {
    if (!table.empty()) {
        long big_j = table[0], big_k = table[1];
        std::vector<std::string> header{"j\\k"};
        for (long k = -big_k; k <= big_k; ++k) header.push_back(std::to_string(k));
        std::string out = csv_row(header);
        for (long j = -big_j - 1; j <= big_j; ++j) {
            if (j == 0) continue;
            std::vector<std::string> fields{std::to_string(j)};
            for (long k = -big_k; k <= big_k; ++k)
                fields.push_back(rat_str(pair(gamma_class(j), sigma_class(k))));
            out += csv_row(fields);
        }
        return out;
    }
    auto [lhs, rhs] = two_classes(specs);
    return rat_str(pair(lhs, rhs)) + "\n";
}

std::string run_orbit(const std::string& word, const ClassSpecs& specs, long n_max) {
    GroupWord w = parse_word(word);
    auto [g, s] = two_classes(specs);
    std::string out = csv_row({"n", "value"});
    for (const auto& [n, value] : orbit_sequence(w, g, s, 0, n_max))
        out += csv_row({std::to_string(n), rat_str(value)});
    return out;
}

std::string run_asymptote(const std::string& word, const ClassSpecs& specs, long n_max,
                          int order, const std::string& format) {
    GroupWord w = hyperbolic_word(word);
    auto [g, s] = two_classes(specs);

    SpectralData sd = spectral_data(w);
    QuadNum beta_val = beta(w);
    BarwedgeResult bw = barwedge_taylor(w, g, s, order);
    Real constant = asymptotic_constant_value(bw.k, bw.kappa, beta_val);

    auto seq = orbit_sequence(w, g, s, 1, n_max);
    long window_lo = std::max<long>(1, n_max / 4);
    DiagnosticsReport diag =
        convergence_diagnostics(seq, sd.lambda_u, bw.k, constant, window_lo, n_max);

    Json report;
    report["word"] = word_str(w);
    report["lambda_u"] = sd.lambda_u.str();
    report["k"] = bw.k;
    report["kappa"] = bw.kappa.str();
    report["beta"] = beta_val.str();
    report["C"] = real_str(constant, kFloatDigits);
    attach_diagnostics(report, diag, seq, sd.lambda_u, bw.k, constant);

    return table_plus_report(format, diagnostics_csv("exact_value", diag), report);
}

std::string run_mixing(const std::string& word, long first, long second, long n_max,
                       const std::string& format) {
    GroupWord w = hyperbolic_word(word);
    Cylinder a = horizontal_cylinder(first);
    Cylinder b = horizontal_cylinder(second);
    Real constant = mixing_constant(w, a.area, b.area);

    // Advance the moving cylinder's core incrementally; its area is affine
    // invariant, so only the core class changes from power to power.
    std::vector<std::pair<long, Rat>> seq;
    seq.reserve(static_cast<size_t>(n_max));
    Cylinder moving = a;
    for (long n = 1; n <= n_max; ++n) {
        moving.core = act_vec(w, moving.core);
        seq.emplace_back(n, cylinder_overlap_area(moving, b));
    }

    long window_lo = std::max<long>(1, n_max / 4);
    QuadNum unit = QuadNum::rational(Rat(1), 1);
    DiagnosticsReport diag = convergence_diagnostics(seq, unit, 0, constant, window_lo, n_max);

    Json report;
    report["word"] = word_str(w);
    report["first"] = first;
    report["second"] = second;
    report["area_first"] = rat_str(a.area);
    report["area_second"] = rat_str(b.area);
    report["C"] = real_str(constant, kFloatDigits);
    attach_diagnostics(report, diag, seq, unit, 0, constant);

    return table_plus_report(format, diagnostics_csv("area", diag), report);
}

std::string run_geometric(long a_start, const std::string& a_dx, const std::string& a_dy,
                          long b_start, const std::string& b_dx, const std::string& b_dy) {
    SaddleConnection a = trace_geodesic(a_start, {rat_parse(a_dx), rat_parse(a_dy)});
    SaddleConnection b = trace_geodesic(b_start, {rat_parse(b_dx), rat_parse(b_dy)});
    size_t crossings = count_crossings(a, b);
    Rat p = rat_abs(pair(a.cls, b.cls));
    Rat diff = rat_abs(Rat(static_cast<long>(crossings)) - p);
    std::string out = csv_row({"crossings", "abs_pair", "difference"});
    out += csv_row({std::to_string(crossings), rat_str(p), rat_str(diff)});
    return out;
}

std::string run_spectra(const std::string& word, const ClassSpecs& specs, int order) {
    GroupWord w = hyperbolic_word(word);
    SpectralData sd = spectral_data(w);
    QuadNum beta_val = beta(w);

    Json report;
    report["word"] = word_str(w);
    report["det"] = rat_str(sd.det);
    report["disc"] = sd.disc;
    report["trace"] = rat_str(sd.trace_poly.eval(Rat(1)));
    report["lambda_u"] = sd.lambda_u.pretty();
    report["lambda_s"] = sd.lambda_s.pretty();
    report["beta"] = beta_val.pretty();

    std::vector<PolyVec> classes = build_classes(specs);
    if (!classes.empty()) {
        if (classes.size() != 2)
            throw UsageFailure("spectra takes no classes or exactly two (got " +
                               std::to_string(classes.size()) + ")");
        BarwedgeResult bw = barwedge_taylor(w, classes[0], classes[1], order);
        report["k"] = bw.k;
        report["kappa"] = bw.kappa.str();
        report["C"] = real_str(asymptotic_constant_value(bw.k, bw.kappa, beta_val), kFloatDigits);
    }
    return report.dump(2) + "\n";
}

std::string run_scan(const std::string& word, const std::string& from, const std::string& to,
                     const std::string& step) {
    GroupWord w = parse_word(word);
    std::vector<ScanRow> rows =
        spectral_radius_scan(w, rat_parse(from), rat_parse(to), rat_parse(step));
    std::string out = csv_row({"c", "radius"});
    double max_radius = 0;
    for (const ScanRow& row : rows) {
        out += csv_row({rat_str(row.at), format_double(row.radius)});
        max_radius = std::max(max_radius, row.radius);
    }
    out += csv_row({"max", format_double(max_radius)});
    return out;
}

std::string run_trace(long start, const std::string& dx, const std::string& dy) {
    SaddleConnection s = trace_geodesic(start, {rat_parse(dx), rat_parse(dy)});
    return connection_to_json(s).dump(2) + "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pairing, spectra, and decay diagnostics on the parabola surface"};
    app.require_subcommand(1);

    unsigned precision = 256;
    auto* opt_precision =
        app.add_option("--precision-bits", precision,
                       "working float precision (>= 64; env PARASURF_PRECISION_BITS)")
            ->check(CLI::Range(64u, 1u << 20));
    std::string output_path;
    app.add_option("--output", output_path, "write the result to this file instead of stdout");

    // pair ------------------------------------------------------------------
    auto* cmd_pair = app.add_subcommand("pair", "exact intersection pairing of two classes");
    ClassSpecs pair_specs;
    add_class_options(cmd_pair, pair_specs);
    std::vector<long> pair_table;
    cmd_pair->add_option("--table", pair_table, "emit the full gamma x sigma table J K")
        ->expected(2)
        ->check(CLI::NonNegativeNumber);

    // orbit -----------------------------------------------------------------
    auto* cmd_orbit = app.add_subcommand("orbit", "pairing sequence pair(word^n g, s) as CSV");
    std::string orbit_word;
    ClassSpecs orbit_specs;
    long orbit_n_max = 64;
    cmd_orbit->add_option("--word", orbit_word, "group word over a, b, c")->required();
    add_class_options(cmd_orbit, orbit_specs);
    cmd_orbit->add_option("--n-max", orbit_n_max, "largest power (<= 4096)")
        ->check(CLI::Range(0l, kMaxN));

    // asymptote -------------------------------------------------------------
    auto* cmd_asym = app.add_subcommand(
        "asymptote", "decay diagnostics of a pairing sequence: CSV rows plus JSON report");
    std::string asym_word, asym_format;
    ClassSpecs asym_specs;
    long asym_n_max = 256;
    int asym_order = 16;
    cmd_asym->add_option("--word", asym_word, "hyperbolic group word")->required();
    add_class_options(cmd_asym, asym_specs);
    cmd_asym->add_option("--n-max", asym_n_max, "largest power (<= 4096)")
        ->check(CLI::Range(1l, kMaxN));
    cmd_asym->add_option("--order", asym_order, "starting Taylor truncation order")
        ->check(CLI::Range(1, 64));
    cmd_asym->add_option("--format", asym_format, "csv or json (default: both)")
        ->check(CLI::IsMember({"csv", "json"}));

    // mixing ----------------------------------------------------------------
    auto* cmd_mixing = app.add_subcommand(
        "mixing", "cylinder-overlap decay against the predicted mixing constant");
    std::string mixing_word, mixing_format;
    long mixing_first = 0, mixing_second = 1, mixing_n_max = 256;
    cmd_mixing->add_option("--word", mixing_word, "hyperbolic group word")->required();
    cmd_mixing->add_option("--first", mixing_first, "index of the moving cylinder")
        ->check(CLI::NonNegativeNumber);
    cmd_mixing->add_option("--second", mixing_second, "index of the fixed cylinder")
        ->check(CLI::NonNegativeNumber);
    cmd_mixing->add_option("--n-max", mixing_n_max, "largest power (<= 4096)")
        ->check(CLI::Range(1l, kMaxN));
    cmd_mixing->add_option("--format", mixing_format, "csv or json (default: both)")
        ->check(CLI::IsMember({"csv", "json"}));

    // geometric ---------------------------------------------------------------
    auto* cmd_geo = app.add_subcommand(
        "geometric", "crossing count of two traced geodesics vs |pairing|");
    long geo_a_start = 0, geo_b_start = 0;
    std::string geo_a_dx, geo_a_dy, geo_b_dx, geo_b_dy;
    cmd_geo->add_option("--a-start", geo_a_start, "start vertex of the first geodesic")
        ->required();
    cmd_geo->add_option("--a-dx", geo_a_dx, "first displacement x (rational)")->required();
    cmd_geo->add_option("--a-dy", geo_a_dy, "first displacement y (rational)")->required();
    cmd_geo->add_option("--b-start", geo_b_start, "start vertex of the second geodesic")
        ->required();
    cmd_geo->add_option("--b-dx", geo_b_dx, "second displacement x (rational)")->required();
    cmd_geo->add_option("--b-dy", geo_b_dy, "second displacement y (rational)")->required();

    // spectra -----------------------------------------------------------------
    auto* cmd_spectra = app.add_subcommand(
        "spectra", "eigenvalue data and decay constants of rho(word) as JSON");
    std::string spectra_word;
    ClassSpecs spectra_specs;
    int spectra_order = 16;
    cmd_spectra->add_option("--word", spectra_word, "hyperbolic group word")->required();
    add_class_options(cmd_spectra, spectra_specs);
    cmd_spectra->add_option("--order", spectra_order, "starting Taylor truncation order")
        ->check(CLI::Range(1, 64));

    // scan --------------------------------------------------------------------
    auto* cmd_scan =
        app.add_subcommand("scan", "spectral radius of rho(word) over a parameter grid");
    std::string scan_word, scan_from, scan_to, scan_step;
    cmd_scan->add_option("--word", scan_word, "group word over a, b, c")->required();
    cmd_scan->add_option("--from", scan_from, "grid start (rational)")->required();
    cmd_scan->add_option("--to", scan_to, "grid end (rational)")->required();
    cmd_scan->add_option("--step", scan_step, "grid step (positive rational)")->required();

    // trace -------------------------------------------------------------------
    auto* cmd_trace =
        app.add_subcommand("trace", "trace one geodesic and print its segment chain");
    long trace_start = 0;
    std::string trace_dx, trace_dy;
    cmd_trace->add_option("--start", trace_start, "start vertex index")->required();
    cmd_trace->add_option("--dx", trace_dx, "displacement x (rational)")->required();
    cmd_trace->add_option("--dy", trace_dy, "displacement y (rational)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints help or the error message
        return code == 0 ? 0 : 2;
    }

    // CLI11 would silently drop an out-of-range environment value; we want a
    // loud failure instead, so the fallback is applied by hand.
    if (opt_precision->count() == 0) {
        if (const char* env = std::getenv("PARASURF_PRECISION_BITS")) {
            char* end = nullptr;
            unsigned long bits = std::strtoul(env, &end, 10);
            if (end == env || *end != '\0' || bits < 64 || bits > (1u << 20)) {
                std::cerr << "PARASURF_PRECISION_BITS must be an integer in [64, 1048576]\n";
                return 2;
            }
            precision = static_cast<unsigned>(bits);
        }
    }

    std::string out;
    try {
        parasurf::set_precision_bits(precision);
        if (*cmd_pair)
            out = run_pair(pair_specs, pair_table);
        else if (*cmd_orbit)
            out = run_orbit(orbit_word, orbit_specs, orbit_n_max);
        else if (*cmd_asym)
            out = run_asymptote(asym_word, asym_specs, asym_n_max, asym_order, asym_format);
        else if (*cmd_mixing)
            out = run_mixing(mixing_word, mixing_first, mixing_second, mixing_n_max,
                             mixing_format);
        else if (*cmd_geo)
            out = run_geometric(geo_a_start, geo_a_dx, geo_a_dy, geo_b_start, geo_b_dx,
                                geo_b_dy);
        else if (*cmd_spectra)
            out = run_spectra(spectra_word, spectra_specs, spectra_order);
        else if (*cmd_scan)
            out = run_scan(scan_word, scan_from, scan_to, scan_step);
        else if (*cmd_trace)
            out = run_trace(trace_start, trace_dx, trace_dy);
    } catch (const UsageFailure& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const parasurf::DomainError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    if (!output_path.empty()) {
        std::ofstream file(output_path, std::ios::binary);
        if (!file || !(file << out) || !file.flush()) {
            std::cerr << "cannot write " << output_path << "\n";
            return 1;
        }
    } else {
        std::cout << out;
    }
    return 0;
}
