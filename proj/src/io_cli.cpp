#include "zetaposet/io_cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "zetaposet/theorem_lab.hpp"
#include "zetaposet/zeta_engine.hpp"

namespace zetaposet {

namespace {

using nlohmann::json;

std::string trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }
    return std::string(text.substr(begin, end - begin));
}

// The payload of a table line: everything before '#', trimmed.
std::string strip_comment(std::string_view line) {
    const std::size_t hash = line.find('#');
    return trim(line.substr(0, hash == std::string_view::npos ? line.size() : hash));
}

double parse_real(const std::string& text, long line, const char* what) {
    const std::string cleaned = trim(text);
    if (cleaned.empty()) {
        throw parse_error(std::string(what) + ": empty value", line);
    }
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(cleaned.c_str(), &end);
    if (end != cleaned.c_str() + cleaned.size() || errno == ERANGE) {
        throw parse_error(std::string(what) + ": cannot parse '" + cleaned + "'",
                          line);
    }
    if (!std::isfinite(value)) {
        throw parse_error(std::string(what) + ": value must be finite", line);
    }
    return value;
}

const char* provenance_name(Provenance provenance) {
    switch (provenance) {
        case Provenance::computed:
            return "computed";
        case Provenance::imported:
            return "imported";
        case Provenance::synthetic:
            return "synthetic";
    }
    return "imported";
}

Provenance provenance_from_name(const std::string& name) {
    if (name == "computed") {
        return Provenance::computed;
    }
    if (name == "imported") {
        return Provenance::imported;
    }
    if (name == "synthetic") {
        return Provenance::synthetic;
    }
    throw parse_error("unknown provenance '" + name + "'", 0);
}

json points_to_json(const std::vector<ZeroPoint>& points) {
    json array = json::array();
    for (const ZeroPoint& p : points) {
        array.push_back(json{{"sigma", format_sig12(p.sigma)},
                             {"t", format_sig12(p.t)}});
    }
    return array;
}

json reals_to_json(const std::vector<double>& values) {
    json array = json::array();
    for (double v : values) {
        array.push_back(format_sig12(v));
    }
    return array;
}

std::vector<ZeroPoint> points_from_json(const json& array, const char* what) {
    std::vector<ZeroPoint> out;
    for (const json& item : array) {
        try {
            out.emplace_back(
                parse_real(item.at("sigma").get<std::string>(), 0, what),
                parse_real(item.at("t").get<std::string>(), 0, what));
        } catch (const std::invalid_argument& ex) {
            throw parse_error(std::string(what) + ": " + ex.what(), 0);
        }
    }
    return out;
}

std::vector<double> reals_from_json(const json& array, const char* what) {
    std::vector<double> out;
    for (const json& item : array) {
        out.push_back(parse_real(item.get<std::string>(), 0, what));
    }
    return out;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string fnv1a64_hex(std::string_view bytes) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buffer;
}

std::string format_sig12(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream contents;
    contents << in.rdbuf();
    if (in.bad()) {
        throw std::runtime_error("error while reading '" + path + "'");
    }
    return std::move(contents).str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path temp(target);
    temp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open '" + temp.string() +
                                     "' for writing");
        }
        out.write(contents.data(),
                  static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            throw std::runtime_error("error while writing '" + temp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(temp, target, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(temp, ignored);
        throw std::runtime_error("cannot move '" + temp.string() + "' to '" +
                                 target.string() + "': " + ec.message());
    }
}

ZeroSet parse_zero_table(std::istream& in, ZeroTableFormat format,
                         Provenance provenance, double dedup_tol) {
    std::vector<ZeroPoint> points;
    std::string line;
    long line_number = 0;
    bool saw_csv_header = false;
    double previous_ordinate = 0.0;
    bool have_previous = false;

    while (std::getline(in, line)) {
        ++line_number;
        const std::string payload = strip_comment(line);
        if (payload.empty()) {
            continue;
        }
        if (format == ZeroTableFormat::ordinates_plain) {
            const double value = parse_real(payload, line_number, "ordinate");
            if (value <= 0.0) {
                throw parse_error("ordinate must be positive", line_number);
            }
            if (have_previous && value <= previous_ordinate) {
                throw parse_error("ordinates must be strictly increasing",
                                  line_number);
            }
            previous_ordinate = value;
            have_previous = true;
            points.emplace_back(0.5, Ordinate(value).t);
        } else {
            if (!saw_csv_header) {
                if (payload != "sigma,t") {
                    throw parse_error("expected header 'sigma,t'", line_number);
                }
                saw_csv_header = true;
                continue;
            }
            const std::size_t comma = payload.find(',');
            if (comma == std::string::npos ||
                payload.find(',', comma + 1) != std::string::npos) {
                throw parse_error("expected exactly two comma-separated fields",
                                  line_number);
            }
            try {
                points.emplace_back(
                    parse_real(payload.substr(0, comma), line_number, "sigma"),
                    parse_real(payload.substr(comma + 1), line_number, "t"));
            } catch (const std::invalid_argument& ex) {
                throw parse_error(ex.what(), line_number);
            }
        }
    }
    if (format == ZeroTableFormat::points_csv && !saw_csv_header &&
        !points.empty()) {
        throw parse_error("missing header 'sigma,t'", 0);
    }
    try {
        return ZeroSet::from_points(std::move(points), provenance, dedup_tol);
    } catch (const std::invalid_argument& ex) {
        throw parse_error(ex.what(), 0);
    }
}

ZeroSet import_zero_table(const std::string& path, ZeroTableFormat format,
                          double dedup_tol) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw parse_error("cannot open '" + path + "' for reading", 0);
    }
    return parse_zero_table(in, format, Provenance::imported, dedup_tol);
}

std::string format_zero_table_csv(const ZeroSet& zeros) {
    std::string out = "sigma,t\n";
    for (const ZeroPoint& p : zeros.points()) {
        out += format_sig12(p.sigma);
        out += ',';
        out += format_sig12(p.t);
        out += '\n';
    }
    return out;
}

void export_zero_table_csv(const ZeroSet& zeros, const std::string& path) {
    write_file_atomic(path, format_zero_table_csv(zeros));
}

std::string serialize_report(const ReportDocument& document) {
    const AnalysisReport& report = document.report;
    json analysis;
    analysis["n_points"] = report.n_points;
    analysis["n_levels"] = report.n_levels;
    analysis["diameters"] = reals_to_json(report.diameters);
    analysis["mn_indices"] = report.mn_indices;
    analysis["mx_indices"] = report.mx_indices;
    analysis["minimal_elements"] = points_to_json(report.minimal_elements);
    analysis["maximal_elements"] = points_to_json(report.maximal_elements);
    analysis["totally_ordered"] = report.totally_ordered;
    analysis["all_on_critical_line"] = report.all_on_critical_line;
    analysis["characterization_applies"] = report.characterization_applies;
    analysis["char_minimal_elements"] =
        points_to_json(report.char_minimal_elements);
    analysis["char_maximal_elements"] =
        points_to_json(report.char_maximal_elements);
    analysis["char_min_matches"] = report.char_min_matches;
    analysis["char_max_matches"] = report.char_max_matches;

    json root;
    root["schema_version"] = document.schema_version;
    root["input_digest"] = document.input_digest;
    root["source"] = document.source;
    root["provenance"] = provenance_name(document.provenance);
    root["dedup_tol"] = format_sig12(document.dedup_tol);
    root["grouping_tol"] = format_sig12(document.grouping_tol);
    root["symmetry_tol"] = format_sig12(document.symmetry_tol);
    root["analysis"] = std::move(analysis);
    return root.dump(2) + "\n";
}

ReportDocument parse_report(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& ex) {
        throw parse_error(std::string("invalid report JSON: ") + ex.what(), 0);
    }
    try {
        ReportDocument document;
        document.schema_version = root.at("schema_version").get<std::string>();
        if (document.schema_version != "1") {
            throw parse_error("unsupported schema_version '" +
                                  document.schema_version + "'",
                              0);
        }
        document.input_digest = root.at("input_digest").get<std::string>();
        document.source = root.at("source").get<std::string>();
        document.provenance =
            provenance_from_name(root.at("provenance").get<std::string>());
        document.dedup_tol =
            parse_real(root.at("dedup_tol").get<std::string>(), 0, "dedup_tol");
        document.grouping_tol = parse_real(
            root.at("grouping_tol").get<std::string>(), 0, "grouping_tol");
        document.symmetry_tol = parse_real(
            root.at("symmetry_tol").get<std::string>(), 0, "symmetry_tol");

        const json& analysis = root.at("analysis");
        AnalysisReport& report = document.report;
        report.n_points = analysis.at("n_points").get<std::size_t>();
        report.n_levels = analysis.at("n_levels").get<std::size_t>();
        report.diameters = reals_from_json(analysis.at("diameters"), "diameters");
        report.mn_indices = analysis.at("mn_indices").get<std::vector<int>>();
        report.mx_indices = analysis.at("mx_indices").get<std::vector<int>>();
        report.minimal_elements =
            points_from_json(analysis.at("minimal_elements"), "minimal_elements");
        report.maximal_elements =
            points_from_json(analysis.at("maximal_elements"), "maximal_elements");
        report.totally_ordered = analysis.at("totally_ordered").get<bool>();
        report.all_on_critical_line =
            analysis.at("all_on_critical_line").get<bool>();
        report.characterization_applies =
            analysis.at("characterization_applies").get<bool>();
        report.char_minimal_elements = points_from_json(
            analysis.at("char_minimal_elements"), "char_minimal_elements");
        report.char_maximal_elements = points_from_json(
            analysis.at("char_maximal_elements"), "char_maximal_elements");
        report.char_min_matches = analysis.at("char_min_matches").get<bool>();
        report.char_max_matches = analysis.at("char_max_matches").get<bool>();
        return document;
    } catch (const json::exception& ex) {
        throw parse_error(std::string("malformed report: ") + ex.what(), 0);
    }
}

void export_report(const ReportDocument& document, const std::string& path) {
    write_file_atomic(path, serialize_report(document));
}

ReportDocument import_report(const std::string& path) {
    return parse_report(read_file(path));
}

// --- command line --------------------------------------------------------

namespace {

int thread_count_from_env() {
    const char* raw = std::getenv("ZETA_POSET_THREADS");
    if (raw != nullptr && *raw != '\0') {
        char* end = nullptr;
        const long parsed = std::strtol(raw, &end, 10);
        if (end != raw && *end == '\0') {
            return static_cast<int>(std::clamp(parsed, 1L, 64L));
        }
    }
    const unsigned hardware = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hardware, 1U, 8U));
}

struct ZerosOptions {
    double t_min = 10.0;
    double t_max = 0.0;
    double step = 0.0;
    bool gram_anchors = false;
    std::string out_path;
};

struct AnalyzeOptions {
    std::string input_path;
    ZeroTableFormat format = ZeroTableFormat::points_csv;
    double grouping_tol = 1e-9;
    double dedup_tol = 1e-9;
    double symmetry_tol = 1e-12;
    std::string out_path;
};

struct VerifyOptions {
    std::uint64_t trials = 0;
    SynthConfig base;
};

struct ImportOptions {
    std::string input_path;
    ZeroTableFormat format = ZeroTableFormat::points_csv;
    double dedup_tol = 1e-9;
    std::string out_path;
};

// Scan (t_min, t_max) on the shared fixed grid, splitting the cell index
// range across workers.  Every worker evaluates the same grid nodes the
// serial scan would, so the concatenated result is bit-identical to a
// single-threaded run regardless of the worker count.
std::vector<BracketedZero> parallel_grid_scan(double t_min, double t_max,
                                              double step,
                                              const ZeroSearchConfig& config,
                                              int workers) {
    const long cells =
        static_cast<long>(std::ceil((t_max - t_min) / step)) + 1;
    if (workers <= 1 || cells < 4 * workers) {
        return scan_grid_for_zeros(t_min, step, 0, cells, t_max, config);
    }
    std::vector<std::vector<BracketedZero>> slots(
        static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const long k_begin = cells * w / workers;
        const long k_end = cells * (w + 1) / workers;
        pool.emplace_back([&, w, k_begin, k_end] {
            slots[static_cast<std::size_t>(w)] = scan_grid_for_zeros(
                t_min, step, k_begin, k_end, t_max, config);
        });
    }
    for (std::thread& worker : pool) {
        worker.join();
    }
    std::vector<BracketedZero> merged;
    for (const std::vector<BracketedZero>& slot : slots) {
        merged.insert(merged.end(), slot.begin(), slot.end());
    }
    return merged;
}

int run_zeros(const ZerosOptions& options, std::ostream& out,
              std::ostream& err) {
    if (!(options.t_min >= 10.0) || !(options.t_max > options.t_min)) {
        err << "error: requires 10 <= t-min < t-max\n";
        return kExitUsage;
    }
    ZeroSearchConfig config;
    config.gram_anchors = options.gram_anchors;
    const double step =
        options.step > 0.0 ? options.step : default_scan_step(options.t_max);
    if (step <= 2.0 * config.bisect_width) {
        err << "error: step must exceed twice the bisection width "
            << format_sig12(config.bisect_width) << "\n";
        return kExitUsage;
    }
    config.scan_step = step;

    std::vector<BracketedZero> zeros;
    if (config.gram_anchors) {
        zeros = find_zero_ordinates(options.t_min, options.t_max, config);
    } else {
        zeros = parallel_grid_scan(options.t_min, options.t_max, step, config,
                                   thread_count_from_env());
    }

    const CountCheck check =
        count_check(options.t_max, static_cast<long>(zeros.size()));
    double residual_max = 0.0;
    std::string body;
    for (const BracketedZero& zero : zeros) {
        body += format_sig12(zero.refined);
        body += '\n';
        residual_max = std::max(residual_max, zero.residual);
    }
    body += "# count_check: t_max=" + format_sig12(check.t_max) +
            " found=" + std::to_string(check.found) +
            " expected=" + format_sig12(check.expected) +
            " discrepancy=" + format_sig12(check.discrepancy) +
            " status=" + (check.warn ? "warn" : "ok") + "\n";
    body += "# residual_max: " + format_sig12(residual_max) + "\n";

    if (options.out_path.empty()) {
        out << body;
    } else {
        write_file_atomic(options.out_path, body);
        out << "wrote " << zeros.size() << " ordinates to " << options.out_path
            << "\n";
    }
    if (check.warn) {
        err << "warning: count check discrepancy "
            << format_sig12(check.discrepancy)
            << " suggests a missed (or off-window) zero\n";
        return kExitCountMismatch;
    }
    return kExitOk;
}

int run_analyze(const AnalyzeOptions& options, std::ostream& out,
                std::ostream& err) {
    try {
        const std::string bytes = read_file(options.input_path);
        std::istringstream stream(bytes);
        const ZeroSet zeros = parse_zero_table(
            stream, options.format, Provenance::imported, options.dedup_tol);

        ReportDocument document;
        document.input_digest = fnv1a64_hex(bytes);
        document.source = options.input_path;
        document.provenance = zeros.provenance();
        document.dedup_tol = options.dedup_tol;
        document.grouping_tol = options.grouping_tol;
        document.symmetry_tol = options.symmetry_tol;
        document.report =
            analyze(zeros, options.grouping_tol, options.symmetry_tol);

        export_report(document, options.out_path);
        const AnalysisReport& report = document.report;
        out << "analyzed " << report.n_points << " points in "
            << report.n_levels << " levels: totally_ordered="
            << (report.totally_ordered ? "true" : "false")
            << " minimal=" << report.minimal_elements.size()
            << " maximal=" << report.maximal_elements.size() << "\n";
        out << "report written to " << options.out_path << "\n";
        return kExitOk;
    } catch (const parse_error& ex) {
        if (ex.line() > 0) {
            err << "error: " << options.input_path << ":" << ex.line() << ": "
                << ex.what() << "\n";
        } else {
            err << "error: " << options.input_path << ": " << ex.what() << "\n";
        }
        return kExitInputError;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
}

int run_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
    const VerificationOutcome outcome = run_trials(options.base, options.trials);
    out << "trials=" << outcome.trials << " passes=" << outcome.passes
        << " failures=" << outcome.failures << "\n";
    if (outcome.failures == 0) {
        return kExitOk;
    }
    if (outcome.first_counterexample) {
        const Counterexample& ce = *outcome.first_counterexample;
        const SynthConfig& config = ce.params.config;
        err << "first counterexample:\n"
            << "  trial_index=" << ce.params.trial_index << "\n"
            << "  failed_check=" << ce.failed_check << "\n"
            << "  detail=" << ce.detail << "\n"
            << "  seed=" << config.seed << " n_levels=" << config.n_levels
            << " max_points_per_level=" << config.max_points_per_level
            << " off_line_probability="
            << format_sig12(config.off_line_probability)
            << " sigma_step=" << format_sig12(config.sigma_step)
            << " ordinate_start=" << format_sig12(config.ordinate_start)
            << " gap_law="
            << (config.gap_law == GapLaw::unit ? "unit" : "random-uniform")
            << "\n"
            << "  points=" << ce.points.size() << "\n";
    }
    return kExitVerifyFailure;
}

int run_import(const ImportOptions& options, std::ostream& out,
               std::ostream& err) {
    try {
        const ZeroSet zeros =
            import_zero_table(options.input_path, options.format,
                              options.dedup_tol);
        export_zero_table_csv(zeros, options.out_path);
        out << "imported " << zeros.size() << " points to " << options.out_path
            << "\n";
        return kExitOk;
    } catch (const parse_error& ex) {
        if (ex.line() > 0) {
            err << "error: " << options.input_path << ":" << ex.line() << ": "
                << ex.what() << "\n";
        } else {
            err << "error: " << options.input_path << ": " << ex.what() << "\n";
        }
        return kExitInputError;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{
        "compute critical-line zeta zeros, analyze their coordinatewise "
        "order, and verify the record-diameter structure theorems"};
    app.name("zeta-poset");
    app.require_subcommand(1);

    const std::map<std::string, ZeroTableFormat> format_names{
        {"plain", ZeroTableFormat::ordinates_plain},
        {"csv", ZeroTableFormat::points_csv}};
    const std::map<std::string, GapLaw> gap_law_names{
        {"unit", GapLaw::unit}, {"random-uniform", GapLaw::random_uniform}};

    ZerosOptions zeros_options;
    CLI::App* zeros_cmd = app.add_subcommand(
        "zeros", "scan a window of the critical line for zero ordinates");
    zeros_cmd->add_option("--t-max", zeros_options.t_max,
                          "upper end of the scan window")
        ->required();
    zeros_cmd->add_option(
        "--t-min", zeros_options.t_min,
        "lower end of the scan window, >= 10; the count check assumes the "
        "window starts below the first zero");
    zeros_cmd
        ->add_option("--step", zeros_options.step,
                     "scan grid spacing (default: quarter mean zero gap)")
        ->check(CLI::PositiveNumber);
    zeros_cmd->add_flag("--gram-anchors", zeros_options.gram_anchors,
                        "scan between Gram points instead of a fixed grid");
    zeros_cmd->add_option("--out", zeros_options.out_path,
                          "write ordinates to this file instead of stdout");

    AnalyzeOptions analyze_options;
    CLI::App* analyze_cmd = app.add_subcommand(
        "analyze", "analyze the coordinatewise order of a zero table");
    analyze_cmd->add_option("--input", analyze_options.input_path,
                            "zero table to analyze")
        ->required();
    analyze_cmd
        ->add_option("--format", analyze_options.format,
                     "input format: plain (ordinates) or csv (sigma,t)")
        ->required()
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    analyze_cmd->add_option("--grouping-tol", analyze_options.grouping_tol,
                            "ordinate gap that still joins a level");
    analyze_cmd->add_option("--dedup-tol", analyze_options.dedup_tol,
                            "coordinate distance treated as a duplicate point");
    analyze_cmd->add_option("--symmetry-tol", analyze_options.symmetry_tol,
                            "sigma tolerance for level symmetry about 1/2");
    analyze_cmd->add_option("--out", analyze_options.out_path,
                            "path of the JSON report to write")
        ->required();

    VerifyOptions verify_options;
    verify_options.base.n_levels = 50;
    verify_options.base.max_points_per_level = 9;
    verify_options.base.off_line_probability = 0.3;
    verify_options.base.gap_law = GapLaw::random_uniform;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify",
        "verify the structure theorems on randomized symmetric zero sets");
    verify_cmd->add_option("--trials", verify_options.trials,
                           "number of randomized trials")
        ->required()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify_options.base.seed,
                           "base seed for the trial plan")
        ->required();
    verify_cmd->add_option("--levels", verify_options.base.n_levels,
                           "largest level count a trial may draw")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--width", verify_options.base.max_points_per_level,
                           "largest per-level point budget a trial may draw")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--off-line-prob",
                           verify_options.base.off_line_probability,
                           "chance that a level goes off the critical line")
        ->check(CLI::Range(0.0, 1.0));
    verify_cmd->add_option("--sigma-step", verify_options.base.sigma_step,
                           "sigma offset quantum (default 1/32, dyadic)");
    verify_cmd
        ->add_option("--gap-law", verify_options.base.gap_law,
                     "level spacing law: unit or random-uniform")
        ->transform(CLI::CheckedTransformer(gap_law_names, CLI::ignore_case));

    ImportOptions import_options;
    CLI::App* import_cmd = app.add_subcommand(
        "import", "normalize a zero table to the canonical CSV form");
    import_cmd->add_option("--input", import_options.input_path,
                           "zero table to import")
        ->required();
    import_cmd
        ->add_option("--format", import_options.format,
                     "input format: plain (ordinates) or csv (sigma,t)")
        ->required()
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    import_cmd->add_option("--dedup-tol", import_options.dedup_tol,
                           "coordinate distance treated as a duplicate point");
    import_cmd->add_option("--out", import_options.out_path,
                           "path of the canonical CSV to write")
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        err << "run 'zeta-poset --help' for usage\n";
        return kExitUsage;
    }

    try {
        if (zeros_cmd->parsed()) {
            return run_zeros(zeros_options, out, err);
        }
        if (analyze_cmd->parsed()) {
            return run_analyze(analyze_options, out, err);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_options, out, err);
        }
        if (import_cmd->parsed()) {
            return run_import(import_options, out, err);
        }
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
    err << "error: no subcommand selected\n";
    return kExitUsage;
}

}  // namespace zetaposet
