#pragma once

// Coordinatewise partial order on zeta zeros.
//
// Points (sigma, t) in the critical strip are ordered by
// (s1, t1) <= (s2, t2)  iff  s1 <= s2 and t1 <= t2.  A zero set decomposes
// into "levels": maximal groups of points sharing an ordinate (up to a
// grouping tolerance).  The structural results verified here relate order
// properties of the whole set to per-level sigma diameters:
//
//   * the set is a chain exactly when every point lies on sigma = 1/2;
//   * for sigma-symmetric levels, the least element of level n is minimal
//     exactly when d(Z_n) strictly exceeds every earlier diameter, and the
//     greatest element of level n is maximal exactly when d(Z_n) strictly
//     exceeds every later diameter (within the truncated set).
//
// Both directions are checked against brute-force oracles in the tests.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetaposet {

enum class Provenance { computed, imported, synthetic };

// A zero (or candidate zero) of zeta: sigma strictly inside (0, 1), t >= 0.
// Construction validates; comparisons are exact on the stored doubles.
struct ZeroPoint {
    double sigma;
    double t;
    ZeroPoint(double sigma_value, double t_value);
};

bool operator==(const ZeroPoint& a, const ZeroPoint& b);
bool operator!=(const ZeroPoint& a, const ZeroPoint& b);

// The coordinatewise (product) order.
bool leq(const ZeroPoint& a, const ZeroPoint& b);
bool incomparable(const ZeroPoint& a, const ZeroPoint& b);

// Canonical storage order: by ordinate, then by sigma.
bool point_before(const ZeroPoint& a, const ZeroPoint& b);

// A finite zero set: deduplicated, sorted by (t, sigma), tagged with where
// the points came from.  Two points are considered duplicates when both
// coordinates agree within dedup_tol (the earlier point wins).
class ZeroSet {
  public:
    static ZeroSet from_points(std::vector<ZeroPoint> points,
                               Provenance provenance, double dedup_tol);

    const std::vector<ZeroPoint>& points() const { return points_; }
    Provenance provenance() const { return provenance_; }
    double dedup_tol() const { return dedup_tol_; }
    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }

  private:
    ZeroSet(std::vector<ZeroPoint> points, Provenance provenance,
            double dedup_tol);

    std::vector<ZeroPoint> points_;
    Provenance provenance_;
    double dedup_tol_;
};

// One level: all points sharing (up to the grouping tolerance) an ordinate.
// sigmas is strictly increasing; index counts levels from 1 upward.
struct Level {
    int index = 0;
    double ordinate = 0.0;
    std::vector<double> sigmas;
};

struct LevelDecomposition {
    std::vector<Level> levels;  // ordinates strictly increasing
    double grouping_tol = 0.0;
};

// Least/greatest element of a level and its sigma diameter
// d = max(sigmas) - min(sigmas).
struct LevelExtremes {
    ZeroPoint least;
    ZeroPoint greatest;
    double diameter;
};

// Raised when consecutive-gap grouping is ambiguous: a chained group spans
// more than three times the grouping tolerance, so "same ordinate" is no
// longer well defined at that tolerance.
class grouping_ambiguity_error : public std::runtime_error {
  public:
    explicit grouping_ambiguity_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Raised when an operation that requires sigma-symmetric levels meets an
// asymmetric one.
class symmetry_violation_error : public std::runtime_error {
  public:
    explicit symmetry_violation_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Everything analyze() computes.  Brute-force extremal elements and the
// record-level characterization are both attached so a bug in either route
// shows up as a mismatch instead of vanishing silently.
struct AnalysisReport {
    std::size_t n_points = 0;
    std::size_t n_levels = 0;
    std::vector<double> diameters;  // diameters[i] is d of level i+1

    // 1-based level indices whose diameter strictly exceeds all earlier
    // (mn_indices, each > 1) or all later (mx_indices) diameters.
    std::vector<int> mn_indices;
    std::vector<int> mx_indices;

    // Brute-force order-theoretic oracles, sorted by (t, sigma).
    std::vector<ZeroPoint> minimal_elements;
    std::vector<ZeroPoint> maximal_elements;

    bool totally_ordered = true;
    bool all_on_critical_line = true;

    // Record-level characterization of the extremal elements.  Only defined
    // when every level is sigma-symmetric within the symmetry tolerance;
    // characterization_applies records whether that held.
    bool characterization_applies = false;
    std::vector<ZeroPoint> char_minimal_elements;
    std::vector<ZeroPoint> char_maximal_elements;
    bool char_min_matches = false;  // char_minimal_elements == minimal_elements
    bool char_max_matches = false;
};

// Group a sorted zero set into levels by chaining consecutive ordinate gaps
// <= grouping_tol.  The level ordinate is the mean over the group.  Throws
// grouping_ambiguity_error when a chained group spans > 3 * grouping_tol.
LevelDecomposition decompose_levels(const ZeroSet& zeros, double grouping_tol);

// Least/greatest point and diameter of a nonempty level.
LevelExtremes level_extremes(const Level& level);

// True when the level's sigmas are symmetric about 1/2 within tol:
// sigma is present iff 1 - sigma is (as a sorted-sequence reflection test).
bool check_symmetry(const Level& level, double tol);

// O(n^2) definitional oracles: points with no strictly smaller (resp.
// larger) comparable point.  Results sorted by (t, sigma).
std::vector<ZeroPoint> minimal_elements_bruteforce(const ZeroSet& zeros);
std::vector<ZeroPoint> maximal_elements_bruteforce(const ZeroSet& zeros);

// Record levels: prefix records are levels n >= 2 whose diameter strictly
// exceeds every earlier one; suffix records strictly exceed every later one
// (the last level is vacuously a suffix record).  Ascending 1-based indices.
std::vector<int> record_min_levels(const LevelDecomposition& decomposition);
std::vector<int> record_max_levels(const LevelDecomposition& decomposition);

// Extremal elements predicted by the record characterization: the least
// element of level 1 plus the least element of every prefix-record level
// (minimal), and the greatest element of every suffix-record level (maximal).
// Require every level to be symmetric within symmetry_tol; otherwise throws
// symmetry_violation_error.
std::vector<ZeroPoint> minimal_via_characterization(
    const LevelDecomposition& decomposition, double symmetry_tol = 0.0);
std::vector<ZeroPoint> maximal_via_characterization(
    const LevelDecomposition& decomposition, double symmetry_tol = 0.0);

// True when every pair of points is comparable.
bool is_totally_ordered(const ZeroSet& zeros);

// Full analysis of a zero set.  May propagate grouping_ambiguity_error; an
// asymmetric level never throws here, it just clears
// characterization_applies.
AnalysisReport analyze(const ZeroSet& zeros, double grouping_tol,
                       double symmetry_tol = 1e-12);

}  // namespace zetaposet
