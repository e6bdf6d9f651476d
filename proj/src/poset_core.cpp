#include "zetaposet/poset_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace zetaposet {

namespace {

bool all_levels_symmetric(const LevelDecomposition& decomposition, double tol) {
    for (const Level& level : decomposition.levels) {
        if (!check_symmetry(level, tol)) {
            return false;
        }
    }
    return true;
}

void require_symmetric_levels(const LevelDecomposition& decomposition,
                              double tol, const char* caller) {
    for (const Level& level : decomposition.levels) {
        if (!check_symmetry(level, tol)) {
            std::ostringstream msg;
            msg << caller << ": level " << level.index << " (ordinate "
                << level.ordinate << ") is not sigma-symmetric within tolerance "
                << tol;
            throw symmetry_violation_error(msg.str());
        }
    }
}

}  // namespace

ZeroPoint::ZeroPoint(double sigma_value, double t_value)
    : sigma(sigma_value), t(t_value) {
    if (!std::isfinite(sigma_value) || sigma_value <= 0.0 || sigma_value >= 1.0) {
        throw std::invalid_argument(
            "ZeroPoint: sigma must be finite and strictly inside (0, 1)");
    }
    if (!std::isfinite(t_value) || t_value < 0.0) {
        throw std::invalid_argument("ZeroPoint: t must be finite and >= 0");
    }
}

bool operator==(const ZeroPoint& a, const ZeroPoint& b) {
    return a.sigma == b.sigma && a.t == b.t;
}

bool operator!=(const ZeroPoint& a, const ZeroPoint& b) { return !(a == b); }

bool leq(const ZeroPoint& a, const ZeroPoint& b) {
    return a.sigma <= b.sigma && a.t <= b.t;
}

bool incomparable(const ZeroPoint& a, const ZeroPoint& b) {
    return !leq(a, b) && !leq(b, a);
}

bool point_before(const ZeroPoint& a, const ZeroPoint& b) {
    if (a.t != b.t) {
        return a.t < b.t;
    }
    return a.sigma < b.sigma;
}

ZeroSet::ZeroSet(std::vector<ZeroPoint> points, Provenance provenance,
                 double dedup_tol)
    : points_(std::move(points)), provenance_(provenance), dedup_tol_(dedup_tol) {}

ZeroSet ZeroSet::from_points(std::vector<ZeroPoint> points,
                             Provenance provenance, double dedup_tol) {
    if (!(dedup_tol >= 0.0) || !std::isfinite(dedup_tol)) {
        throw std::invalid_argument(
            "ZeroSet: dedup_tol must be finite and >= 0");
    }
    std::stable_sort(points.begin(), points.end(), point_before);
    std::vector<ZeroPoint> kept;
    kept.reserve(points.size());
    for (const ZeroPoint& candidate : points) {
        bool duplicate = false;
        // Sorted by t, so only a short suffix of kept points can collide.
        for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
            if (candidate.t - it->t > dedup_tol) {
                break;
            }
            if (std::abs(candidate.sigma - it->sigma) <= dedup_tol) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            kept.push_back(candidate);
        }
    }
    return ZeroSet(std::move(kept), provenance, dedup_tol);
}

LevelDecomposition decompose_levels(const ZeroSet& zeros, double grouping_tol) {
    if (!(grouping_tol >= 0.0) || !std::isfinite(grouping_tol)) {
        throw std::invalid_argument(
            "decompose_levels: grouping_tol must be finite and >= 0");
    }
    LevelDecomposition out;
    out.grouping_tol = grouping_tol;
    const std::vector<ZeroPoint>& pts = zeros.points();
    std::size_t group_begin = 0;
    while (group_begin < pts.size()) {
        std::size_t group_end = group_begin + 1;
        while (group_end < pts.size() &&
               pts[group_end].t - pts[group_end - 1].t <= grouping_tol) {
            ++group_end;
        }
        const double span = pts[group_end - 1].t - pts[group_begin].t;
        if (span > 3.0 * grouping_tol) {
            std::ostringstream msg;
            msg << "decompose_levels: ordinate group near t = "
                << pts[group_begin].t << " chains across a span of " << span
                << ", more than three times the grouping tolerance "
                << grouping_tol << "; grouping is ambiguous at this tolerance";
            throw grouping_ambiguity_error(msg.str());
        }

        Level level;
        level.index = static_cast<int>(out.levels.size()) + 1;
        double ordinate_sum = 0.0;
        for (std::size_t i = group_begin; i < group_end; ++i) {
            ordinate_sum += pts[i].t;
            level.sigmas.push_back(pts[i].sigma);
        }
        // Mean of the member ordinates; when they are all the same double,
        // take it directly so the mean is exact (summing then dividing can
        // be off by an ulp, which breaks exact-equality comparisons against
        // the original points).
        level.ordinate =
            span == 0.0
                ? pts[group_begin].t
                : ordinate_sum / static_cast<double>(group_end - group_begin);
        // Points are (t, sigma)-sorted, so sigmas within a group ascend
        // except across tiny t differences; sort and drop exact duplicates.
        std::sort(level.sigmas.begin(), level.sigmas.end());
        level.sigmas.erase(
            std::unique(level.sigmas.begin(), level.sigmas.end()),
            level.sigmas.end());
        out.levels.push_back(std::move(level));
        group_begin = group_end;
    }
    return out;
}

LevelExtremes level_extremes(const Level& level) {
    if (level.sigmas.empty()) {
        throw std::invalid_argument("level_extremes: level has no points");
    }
    return LevelExtremes{ZeroPoint(level.sigmas.front(), level.ordinate),
                         ZeroPoint(level.sigmas.back(), level.ordinate),
                         level.sigmas.back() - level.sigmas.front()};
}

bool check_symmetry(const Level& level, double tol) {
    const std::vector<double>& s = level.sigmas;
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs((1.0 - s[n - 1 - i]) - s[i]) > tol) {
            return false;
        }
    }
    return true;
}

std::vector<ZeroPoint> minimal_elements_bruteforce(const ZeroSet& zeros) {
    const std::vector<ZeroPoint>& pts = zeros.points();
    std::vector<ZeroPoint> out;
    for (const ZeroPoint& p : pts) {
        bool minimal = true;
        for (const ZeroPoint& q : pts) {
            if (q != p && leq(q, p)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            out.push_back(p);
        }
    }
    return out;  // input order is (t, sigma)-sorted already
}

std::vector<ZeroPoint> maximal_elements_bruteforce(const ZeroSet& zeros) {
    const std::vector<ZeroPoint>& pts = zeros.points();
    std::vector<ZeroPoint> out;
    for (const ZeroPoint& p : pts) {
        bool maximal = true;
        for (const ZeroPoint& q : pts) {
            if (q != p && leq(p, q)) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            out.push_back(p);
        }
    }
    return out;
}

std::vector<int> record_min_levels(const LevelDecomposition& decomposition) {
    std::vector<int> out;
    double best = 0.0;
    bool have_best = false;
    for (const Level& level : decomposition.levels) {
        const double d = level_extremes(level).diameter;
        if (have_best && d > best) {
            out.push_back(level.index);
        }
        if (!have_best || d > best) {
            best = d;
            have_best = true;
        }
    }
    return out;
}

std::vector<int> record_max_levels(const LevelDecomposition& decomposition) {
    std::vector<int> out;
    double best = 0.0;
    bool have_best = false;
    for (auto it = decomposition.levels.rbegin(); it != decomposition.levels.rend();
         ++it) {
        const double d = level_extremes(*it).diameter;
        if (!have_best || d > best) {
            out.push_back(it->index);
            best = d;
            have_best = true;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<ZeroPoint> minimal_via_characterization(
    const LevelDecomposition& decomposition, double symmetry_tol) {
    require_symmetric_levels(decomposition, symmetry_tol,
                             "minimal_via_characterization");
    std::vector<ZeroPoint> out;
    if (decomposition.levels.empty()) {
        return out;
    }
    out.push_back(level_extremes(decomposition.levels.front()).least);
    for (int index : record_min_levels(decomposition)) {
        out.push_back(
            level_extremes(decomposition.levels[static_cast<std::size_t>(index) - 1])
                .least);
    }
    return out;  // record indices ascend, so this is (t, sigma)-sorted
}

std::vector<ZeroPoint> maximal_via_characterization(
    const LevelDecomposition& decomposition, double symmetry_tol) {
    require_symmetric_levels(decomposition, symmetry_tol,
                             "maximal_via_characterization");
    std::vector<ZeroPoint> out;
    for (int index : record_max_levels(decomposition)) {
        out.push_back(
            level_extremes(decomposition.levels[static_cast<std::size_t>(index) - 1])
                .greatest);
    }
    return out;
}

bool is_totally_ordered(const ZeroSet& zeros) {
    const std::vector<ZeroPoint>& pts = zeros.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (incomparable(pts[i], pts[j])) {
                return false;
            }
        }
    }
    return true;
}

AnalysisReport analyze(const ZeroSet& zeros, double grouping_tol,
                       double symmetry_tol) {
    AnalysisReport report;
    report.n_points = zeros.size();

    const LevelDecomposition decomposition = decompose_levels(zeros, grouping_tol);
    report.n_levels = decomposition.levels.size();
    for (const Level& level : decomposition.levels) {
        report.diameters.push_back(level_extremes(level).diameter);
    }
    report.mn_indices = record_min_levels(decomposition);
    report.mx_indices = record_max_levels(decomposition);
    report.minimal_elements = minimal_elements_bruteforce(zeros);
    report.maximal_elements = maximal_elements_bruteforce(zeros);
    report.totally_ordered = is_totally_ordered(zeros);
    report.all_on_critical_line = true;
    for (const ZeroPoint& p : zeros.points()) {
        if (p.sigma != 0.5) {
            report.all_on_critical_line = false;
            break;
        }
    }

    report.characterization_applies =
        all_levels_symmetric(decomposition, symmetry_tol);
    if (report.characterization_applies) {
        report.char_minimal_elements =
            minimal_via_characterization(decomposition, symmetry_tol);
        report.char_maximal_elements =
            maximal_via_characterization(decomposition, symmetry_tol);
        report.char_min_matches =
            report.char_minimal_elements == report.minimal_elements;
        report.char_max_matches =
            report.char_maximal_elements == report.maximal_elements;
    }
    return report;
}

}  // namespace zetaposet
