#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetaposet/io_cli.hpp"
#include "zetaposet/poset_core.hpp"

namespace {

using namespace zetaposet;

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliResult result;
    result.exit_code = cli_main(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::filesystem::path scratch_dir() {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "zetaposet_io_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string scratch_file(const char* name, std::string_view contents) {
    const std::string path = (scratch_dir() / name).string();
    write_file_atomic(path, contents);
    return path;
}

ZeroSet parse_table(const std::string& text, ZeroTableFormat format,
                    double dedup_tol = 0.0) {
    std::istringstream in(text);
    return parse_zero_table(in, format, Provenance::imported, dedup_tol);
}

// Ordinate lines of a zeros listing (everything that is not a '#' comment).
std::vector<double> listed_ordinates(const std::string& body) {
    std::vector<double> out;
    std::istringstream in(body);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            out.push_back(std::strtod(line.c_str(), nullptr));
        }
    }
    return out;
}

int count_comment_lines(const std::string& body) {
    int n = 0;
    std::istringstream in(body);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') {
            ++n;
        }
    }
    return n;
}

ReportDocument sample_document() {
    ReportDocument document;
    document.input_digest = fnv1a64_hex("sample");
    document.source = "unit-test";
    document.provenance = Provenance::synthetic;
    document.dedup_tol = 1e-9;
    document.grouping_tol = 1e-9;
    document.symmetry_tol = 1e-12;
    const ZeroSet zeros = ZeroSet::from_points(
        {{0.5, 10.0}, {0.4375, 11.0}, {0.5625, 11.0}, {0.5, 12.0}},
        Provenance::synthetic, 0.0);
    document.report = analyze(zeros, 0.0);
    return document;
}

}  // namespace

TEST_CASE("fnv1a64 matches the published test vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64("ab") != fnv1a64("ba"));
}

TEST_CASE("format_sig12 renders shortest 12-significant-digit forms") {
    CHECK(format_sig12(0.5) == "0.5");
    CHECK(format_sig12(0.03125) == "0.03125");
    CHECK(format_sig12(1e-9) == "1e-09");
    CHECK(format_sig12(14.1347251417347) == "14.1347251417");
    CHECK(format_sig12(0.0) == "0");
    CHECK(format_sig12(-2.5) == "-2.5");
    // Rendering then re-rendering the parsed value is a fixed point.
    for (double value : {0.5, 0.03125, 14.1347251417347, 236.524229666,
                         1e-9, 1.0 / 3.0}) {
        const std::string text = format_sig12(value);
        CHECK(format_sig12(std::strtod(text.c_str(), nullptr)) == text);
    }
}

TEST_CASE("plain tables parse with comments and blank lines") {
    const ZeroSet zeros = parse_table(
        "# leading comment\n"
        "14.134725  # trailing comment\n"
        "\n"
        "21.022040\n"
        "25.010858\n",
        ZeroTableFormat::ordinates_plain);
    REQUIRE(zeros.size() == 3);
    CHECK(zeros.points()[0].sigma == 0.5);
    CHECK(zeros.points()[0].t == 14.134725);
    CHECK(zeros.points()[2].t == 25.010858);
    CHECK(zeros.provenance() == Provenance::imported);

    CHECK(parse_table("# only comments\n\n",
                      ZeroTableFormat::ordinates_plain).empty());
}

TEST_CASE("plain tables reject disorder and garbage with line numbers") {
    try {
        parse_table("14.1\n13.0\n", ZeroTableFormat::ordinates_plain);
        FAIL("expected parse_error");
    } catch (const parse_error& ex) {
        CHECK(ex.line() == 2);
    }
    CHECK_THROWS_AS(parse_table("0.0\n", ZeroTableFormat::ordinates_plain),
                    parse_error);
    CHECK_THROWS_AS(parse_table("-3.5\n", ZeroTableFormat::ordinates_plain),
                    parse_error);
    CHECK_THROWS_AS(parse_table("14.1\n14.1\n",
                                ZeroTableFormat::ordinates_plain),
                    parse_error);
    CHECK_THROWS_AS(parse_table("fourteen\n", ZeroTableFormat::ordinates_plain),
                    parse_error);
    CHECK_THROWS_AS(parse_table("14.1 21.0\n", ZeroTableFormat::ordinates_plain),
                    parse_error);
    CHECK_THROWS_AS(parse_table("nan\n", ZeroTableFormat::ordinates_plain),
                    parse_error);
}

TEST_CASE("csv tables demand the exact header and valid points") {
    const ZeroSet zeros = parse_table(
        "sigma,t\n"
        "0.5,14.134725\n"
        "0.4375,21.5\n",
        ZeroTableFormat::points_csv);
    REQUIRE(zeros.size() == 2);
    CHECK(zeros.points()[1].sigma == 0.4375);

    CHECK_THROWS_AS(parse_table("0.5,14.1\n", ZeroTableFormat::points_csv),
                    parse_error);  // missing header
    CHECK_THROWS_AS(parse_table("t,sigma\n14.1,0.5\n",
                                ZeroTableFormat::points_csv),
                    parse_error);
    CHECK_THROWS_AS(parse_table("sigma,t\n0.5\n", ZeroTableFormat::points_csv),
                    parse_error);
    CHECK_THROWS_AS(parse_table("sigma,t\n0.5,14.1,9\n",
                                ZeroTableFormat::points_csv),
                    parse_error);
    CHECK_THROWS_AS(parse_table("sigma,t\n1.5,14.1\n",
                                ZeroTableFormat::points_csv),
                    parse_error);  // sigma outside (0, 1)
    CHECK_THROWS_AS(parse_table("sigma,t\n0.5,nan\n",
                                ZeroTableFormat::points_csv),
                    parse_error);
    try {
        parse_table("sigma,t\n0.5,14.1\nbroken\n",
                    ZeroTableFormat::points_csv);
        FAIL("expected parse_error");
    } catch (const parse_error& ex) {
        CHECK(ex.line() == 3);
    }
}

TEST_CASE("parsing applies the dedup tolerance") {
    const ZeroSet merged = parse_table(
        "sigma,t\n0.5,14.0\n0.5,14.0000000001\n",
        ZeroTableFormat::points_csv, 1e-9);
    CHECK(merged.size() == 1);
    const ZeroSet kept = parse_table(
        "sigma,t\n0.5,14.0\n0.5,14.0000000001\n",
        ZeroTableFormat::points_csv, 0.0);
    CHECK(kept.size() == 2);
}

TEST_CASE("csv serialization is canonical and round-trip stable") {
    const ZeroSet zeros = ZeroSet::from_points(
        {{0.5625, 11.0}, {0.5, 10.0}, {0.4375, 11.0}},
        Provenance::synthetic, 0.0);
    const std::string text = format_zero_table_csv(zeros);
    CHECK(text.substr(0, 8) == "sigma,t\n");
    CHECK(text.find("0.5,10\n") != std::string::npos);

    const ZeroSet reparsed = parse_table(text, ZeroTableFormat::points_csv);
    CHECK(format_zero_table_csv(reparsed) == text);
    CHECK(reparsed.points() == zeros.points());
}

TEST_CASE("report serialization round-trips byte for byte") {
    const ReportDocument document = sample_document();
    const std::string text = serialize_report(document);
    CHECK(text.back() == '\n');
    CHECK(text.find("\"schema_version\": \"1\"") != std::string::npos);
    CHECK(text.find("\"mn_indices\"") != std::string::npos);

    const ReportDocument reparsed = parse_report(text);
    CHECK(serialize_report(reparsed) == text);
    CHECK(reparsed.input_digest == document.input_digest);
    CHECK(reparsed.provenance == Provenance::synthetic);
    CHECK(reparsed.dedup_tol == document.dedup_tol);
    CHECK(reparsed.report.n_points == 4);
    CHECK(reparsed.report.minimal_elements ==
          document.report.minimal_elements);
    CHECK(reparsed.report.diameters == document.report.diameters);
    CHECK(reparsed.report.totally_ordered ==
          document.report.totally_ordered);
}

TEST_CASE("empty record lists serialize as empty arrays") {
    ReportDocument document;
    document.input_digest = fnv1a64_hex("");
    document.source = "empty";
    document.report = analyze(
        ZeroSet::from_points({}, Provenance::synthetic, 0.0), 0.0);
    const std::string text = serialize_report(document);
    CHECK(text.find("\"mn_indices\": []") != std::string::npos);
    CHECK(text.find("\"diameters\": []") != std::string::npos);
    CHECK(serialize_report(parse_report(text)) == text);
}

TEST_CASE("parse_report rejects malformed documents") {
    CHECK_THROWS_AS(parse_report("not json"), parse_error);
    CHECK_THROWS_AS(parse_report("{}"), parse_error);
    CHECK_THROWS_AS(parse_report("[1,2,3]"), parse_error);

    const std::string good = serialize_report(sample_document());
    std::string wrong_schema = good;
    const std::string needle = "\"schema_version\": \"1\"";
    wrong_schema.replace(wrong_schema.find(needle), needle.size(),
                         "\"schema_version\": \"9\"");
    CHECK_THROWS_AS(parse_report(wrong_schema), parse_error);
}

TEST_CASE("atomic writes land complete files and read_file returns them") {
    const std::string path = (scratch_dir() / "atomic.txt").string();
    write_file_atomic(path, "first\n");
    CHECK(read_file(path) == "first\n");
    write_file_atomic(path, "second\n");
    CHECK(read_file(path) == "second\n");
    CHECK_THROWS_AS(
        write_file_atomic((scratch_dir() / "no_such_dir" / "x.txt").string(),
                          "y"),
        std::runtime_error);
    CHECK_THROWS_AS(read_file((scratch_dir() / "missing.txt").string()),
                    std::runtime_error);
    CHECK_THROWS_AS(import_zero_table((scratch_dir() / "missing.txt").string(),
                                      ZeroTableFormat::ordinates_plain),
                    std::runtime_error);
}

TEST_CASE("cli rejects missing or unknown arguments") {
    CHECK(run_cli({}).exit_code == kExitUsage);
    CHECK(run_cli({"frobnicate"}).exit_code == kExitUsage);
    CHECK(run_cli({"zeros"}).exit_code == kExitUsage);  // --t-max is required
    CHECK(run_cli({"zeros", "--t-max", "40", "--bogus"}).exit_code ==
          kExitUsage);

    const CliResult help = run_cli({"--help"});
    CHECK(help.exit_code == kExitOk);
    CHECK(help.out.find("zeros") != std::string::npos);
    CHECK(help.out.find("analyze") != std::string::npos);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("cli zeros lists ordinates with a count check footer") {
    const CliResult result = run_cli({"zeros", "--t-max", "40"});
    CHECK(result.exit_code == kExitOk);
    const std::vector<double> ordinates = listed_ordinates(result.out);
    REQUIRE(ordinates.size() == 6);
    const double expected[] = {14.134725, 21.022040, 25.010858,
                               30.424876, 32.935062, 37.586178};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(std::fabs(ordinates[i] - expected[i]) < 1e-4);
    }
    CHECK(count_comment_lines(result.out) == 2);
    CHECK(result.out.find("# count_check:") != std::string::npos);
    CHECK(result.out.find("status=ok") != std::string::npos);
    CHECK(result.out.find("# residual_max:") != std::string::npos);

    CHECK(run_cli({"zeros", "--t-max", "40"}).out == result.out);
}

TEST_CASE("cli zeros warns when the window excludes expected zeros") {
    const CliResult result =
        run_cli({"zeros", "--t-min", "20", "--t-max", "40"});
    CHECK(result.exit_code == kExitCountMismatch);
    CHECK(listed_ordinates(result.out).size() == 5);
    CHECK(result.out.find("status=warn") != std::string::npos);
    CHECK(result.err.find("warning: count check discrepancy") !=
          std::string::npos);
}

TEST_CASE("cli zeros validates its window") {
    CHECK(run_cli({"zeros", "--t-min", "5", "--t-max", "40"}).exit_code ==
          kExitUsage);
    CHECK(run_cli({"zeros", "--t-min", "50", "--t-max", "40"}).exit_code ==
          kExitUsage);
    CHECK(run_cli({"zeros", "--t-max", "40", "--step", "-0.1"}).exit_code ==
          kExitUsage);
}

TEST_CASE("cli zeros writes the same listing to a file on request") {
    const std::string path = (scratch_dir() / "zeros40.txt").string();
    const CliResult direct = run_cli({"zeros", "--t-max", "40"});
    const CliResult filed =
        run_cli({"zeros", "--t-max", "40", "--out", path});
    CHECK(filed.exit_code == kExitOk);
    CHECK(filed.out.find("wrote 6 ordinates") != std::string::npos);
    CHECK(read_file(path) == direct.out);
}

TEST_CASE("cli zeros gram anchors agree with the grid scan") {
    const CliResult grid = run_cli({"zeros", "--t-max", "40"});
    const CliResult gram =
        run_cli({"zeros", "--t-max", "40", "--gram-anchors"});
    CHECK(gram.exit_code == kExitOk);
    const std::vector<double> a = listed_ordinates(grid.out);
    const std::vector<double> b = listed_ordinates(gram.out);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(std::fabs(a[i] - b[i]) < 1e-6);
    }
}

TEST_CASE("cli analyze reports on a plain table") {
    const std::string input = scratch_file(
        "chain.txt", "14.134725\n21.022040\n25.010858\n");
    const std::string report_path = (scratch_dir() / "chain.json").string();
    const CliResult result = run_cli({"analyze", "--input", input, "--format",
                                      "plain", "--out", report_path});
    CHECK(result.exit_code == kExitOk);
    CHECK(result.out.find("totally_ordered=true") != std::string::npos);

    const ReportDocument document = import_report(report_path);
    CHECK(document.report.n_points == 3);
    CHECK(document.report.totally_ordered);
    CHECK(document.report.all_on_critical_line);
    CHECK(document.provenance == Provenance::imported);
    CHECK(document.source == input);
    CHECK(document.input_digest == fnv1a64_hex(read_file(input)));
}

TEST_CASE("cli analyze reports on a csv table with off-line points") {
    const std::string input = scratch_file(
        "mixed.csv", "sigma,t\n0.5,10\n0.4375,11\n0.5625,11\n");
    const std::string report_path = (scratch_dir() / "mixed.json").string();
    const CliResult result = run_cli({"analyze", "--input", input, "--format",
                                      "csv", "--out", report_path});
    CHECK(result.exit_code == kExitOk);
    CHECK(result.out.find("totally_ordered=false") != std::string::npos);
    CHECK(result.out.find("minimal=2") != std::string::npos);

    const ReportDocument document = import_report(report_path);
    CHECK_FALSE(document.report.totally_ordered);
    CHECK(document.report.minimal_elements.size() == 2);
    CHECK(document.report.characterization_applies);
    CHECK(document.report.char_min_matches);
}

TEST_CASE("cli analyze surfaces input problems as exit 3") {
    const std::string report_path = (scratch_dir() / "unused.json").string();
    CHECK(run_cli({"analyze", "--input",
                   (scratch_dir() / "absent.txt").string(), "--format",
                   "plain", "--out", report_path})
              .exit_code == kExitInputError);

    const std::string bad = scratch_file("bad.txt", "14.1\n13.0\n");
    const CliResult result = run_cli(
        {"analyze", "--input", bad, "--format", "plain", "--out", report_path});
    CHECK(result.exit_code == kExitInputError);
    CHECK(result.err.find(":2:") != std::string::npos);

    CHECK(run_cli({"analyze", "--input", bad, "--format", "yaml", "--out",
                   report_path})
              .exit_code == kExitUsage);
}

TEST_CASE("cli verify reports clean trials") {
    const CliResult result =
        run_cli({"verify", "--trials", "300", "--seed", "11"});
    CHECK(result.exit_code == kExitOk);
    CHECK(result.out == "trials=300 passes=300 failures=0\n");
    CHECK(result.err.empty());

    CHECK(run_cli({"verify", "--trials", "0", "--seed", "11"}).exit_code ==
          kExitUsage);
    CHECK(run_cli({"verify", "--trials", "10", "--seed", "1",
                   "--off-line-prob", "1.5"})
              .exit_code == kExitUsage);
    CHECK(run_cli({"verify", "--trials", "10", "--seed", "1", "--gap-law",
                   "exotic"})
              .exit_code == kExitUsage);
}

TEST_CASE("cli import canonicalizes tables") {
    const std::string input = scratch_file(
        "import_me.txt", "# three zeros\n14.134725\n21.022040\n25.010858\n");
    const std::string first_csv = (scratch_dir() / "first.csv").string();
    const CliResult result = run_cli({"import", "--input", input, "--format",
                                      "plain", "--out", first_csv});
    CHECK(result.exit_code == kExitOk);
    CHECK(result.out.find("imported 3 points") != std::string::npos);

    const std::string canonical = read_file(first_csv);
    CHECK(canonical ==
          format_zero_table_csv(import_zero_table(
              input, ZeroTableFormat::ordinates_plain)));

    // Importing the canonical file reproduces it exactly.
    const std::string second_csv = (scratch_dir() / "second.csv").string();
    CHECK(run_cli({"import", "--input", first_csv, "--format", "csv", "--out",
                   second_csv})
              .exit_code == kExitOk);
    CHECK(read_file(second_csv) == canonical);

    CHECK(run_cli({"import", "--input",
                   (scratch_dir() / "absent.txt").string(), "--format",
                   "plain", "--out", second_csv})
              .exit_code == kExitInputError);
}

TEST_CASE("the thread count override does not change the zeros output") {
    setenv("ZETA_POSET_THREADS", "3", 1);
    const CliResult threaded = run_cli({"zeros", "--t-max", "120"});
    setenv("ZETA_POSET_THREADS", "1", 1);
    const CliResult serial = run_cli({"zeros", "--t-max", "120"});
    unsetenv("ZETA_POSET_THREADS");
    CHECK(threaded.exit_code == kExitOk);
    CHECK(threaded.out == serial.out);
}
