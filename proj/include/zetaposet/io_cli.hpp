#pragma once

// Import/export of zero tables, JSON analysis reports, and the command-line
// front end.
//
// All exported numbers are canonicalized to 12 significant digits.  Reports
// carry an FNV-1a digest of the input bytes, and re-serializing a parsed
// report reproduces it byte for byte, so equality of reports is equality of
// their canonical serializations.  File writes go through a temp file and
// rename, so readers never observe a half-written artifact.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zetaposet/poset_core.hpp"

namespace zetaposet {

enum class ZeroTableFormat {
    ordinates_plain,  // one ordinate per line, strictly increasing; sigma=1/2
    points_csv,       // header "sigma,t", one point per row
};

// Parse or validation failure, with the 1-based input line when known
// (0 when the error is not tied to a line).
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, long line)
        : std::runtime_error(what), line_(line) {}
    long line() const { return line_; }

  private:
    long line_;
};

// Everything a report file contains: analysis results plus enough context
// (tolerances, input identity) to interpret and reproduce them.
struct ReportDocument {
    std::string schema_version = "1";
    std::string input_digest;  // 16 hex digits, FNV-1a 64 of the input bytes
    std::string source;        // free-form: path or generator description
    Provenance provenance = Provenance::imported;
    double dedup_tol = 0.0;
    double grouping_tol = 0.0;
    double symmetry_tol = 0.0;
    AnalysisReport report;
};

// --- zero tables ---------------------------------------------------------

// Stream-level parser; '#' starts a comment, blank lines are skipped.
// Plain tables must be strictly increasing and are placed on sigma = 1/2.
// Throws parse_error with a line number on malformed or invalid input.
ZeroSet parse_zero_table(std::istream& in, ZeroTableFormat format,
                         Provenance provenance, double dedup_tol);

// File wrapper around parse_zero_table; imported provenance.
ZeroSet import_zero_table(const std::string& path, ZeroTableFormat format,
                          double dedup_tol = 1e-9);

// Canonical points_csv serialization: header, then rows sorted by
// (t, sigma), 12 significant digits.  Parsing it back and re-exporting is
// byte-identical.
std::string format_zero_table_csv(const ZeroSet& zeros);
void export_zero_table_csv(const ZeroSet& zeros, const std::string& path);

// --- reports -------------------------------------------------------------

// Canonical JSON: keys sorted, reals rendered as 12-significant-digit
// strings, two-space indentation, trailing newline.
std::string serialize_report(const ReportDocument& document);
ReportDocument parse_report(const std::string& text);

void export_report(const ReportDocument& document, const std::string& path);
ReportDocument import_report(const std::string& path);

// --- helpers -------------------------------------------------------------

// FNV-1a 64-bit digest of a byte string.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

// Shortest-form "%.12g" rendering used for every exported real.
std::string format_sig12(double value);

// Atomic file write: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, std::string_view contents);
std::string read_file(const std::string& path);

// --- command line --------------------------------------------------------

// Exit codes shared by the CLI and its tests.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCountMismatch = 2;  // zeros: count check warned
inline constexpr int kExitInputError = 3;     // unreadable/invalid input data
inline constexpr int kExitVerifyFailure = 4;  // verify: counterexample found
inline constexpr int kExitUsage = 64;         // bad flags or subcommand

// The CLI entry point, callable in process.  args excludes the program name.
// Subcommands: zeros, analyze, verify, import.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace zetaposet
