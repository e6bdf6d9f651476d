#include "zetaposet/theorem_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace zetaposet {

namespace {

// splitmix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double next_double01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform draw from [1, n]; n is tiny here, so modulo bias is irrelevant
// next to the value of a fixed, portable draw sequence.
long next_int_1_to(std::mt19937_64& rng, long n) {
    return 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(n));
}

void validate_config(const SynthConfig& config) {
    if (config.n_levels < 1) {
        throw std::invalid_argument("SynthConfig: n_levels must be >= 1");
    }
    if (config.max_points_per_level < 1) {
        throw std::invalid_argument(
            "SynthConfig: max_points_per_level must be >= 1");
    }
    if (!(config.off_line_probability >= 0.0) ||
        !(config.off_line_probability <= 1.0)) {
        throw std::invalid_argument(
            "SynthConfig: off_line_probability must be in [0, 1]");
    }
    if (!(config.sigma_step > 0.0) || !std::isfinite(config.sigma_step)) {
        throw std::invalid_argument(
            "SynthConfig: sigma_step must be finite and > 0");
    }
    if (!(config.ordinate_start > 0.0) || !std::isfinite(config.ordinate_start)) {
        throw std::invalid_argument(
            "SynthConfig: ordinate_start must be finite and > 0");
    }
}

// Largest k with k * sigma_step strictly below 1/2, so that both members of
// an offset-k pair stay inside (0, 1).
long max_offset_count(double sigma_step) {
    long k = static_cast<long>(std::floor(0.5 / sigma_step));
    while (k > 0 && static_cast<double>(k) * sigma_step >= 0.5) {
        --k;
    }
    return k;
}

// n_pairs distinct offsets from [1, k_max], ascending.
std::vector<long> draw_offsets(std::mt19937_64& rng, long n_pairs, long k_max) {
    std::vector<long> offsets;
    if (k_max <= 4096) {
        std::vector<long> pool(static_cast<std::size_t>(k_max));
        std::iota(pool.begin(), pool.end(), 1);
        for (long i = 0; i < n_pairs; ++i) {
            const long j =
                i + static_cast<long>(rng() % static_cast<std::uint64_t>(
                                                  k_max - i));
            std::swap(pool[static_cast<std::size_t>(i)],
                      pool[static_cast<std::size_t>(j)]);
            offsets.push_back(pool[static_cast<std::size_t>(i)]);
        }
    } else {
        std::set<long> chosen;
        while (static_cast<long>(chosen.size()) < n_pairs) {
            chosen.insert(next_int_1_to(rng, k_max));
        }
        offsets.assign(chosen.begin(), chosen.end());
    }
    std::sort(offsets.begin(), offsets.end());
    return offsets;
}

bool all_on_critical_line(const ZeroSet& zeros) {
    for (const ZeroPoint& p : zeros.points()) {
        if (p.sigma != 0.5) {
            return false;
        }
    }
    return true;
}

bool pairwise_distinct_sorted(const std::vector<ZeroPoint>& points) {
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i] == points[i - 1]) {
            return false;
        }
    }
    return true;
}

}  // namespace

ZeroSet generate_symmetric_zero_set(const SynthConfig& config) {
    validate_config(config);
    const long k_max = max_offset_count(config.sigma_step);
    const bool off_line_possible =
        config.off_line_probability > 0.0 && config.max_points_per_level >= 2;
    if (off_line_possible && k_max < 1) {
        throw std::invalid_argument(
            "SynthConfig: sigma_step leaves no room for an off-line pair "
            "inside (0, 1)");
    }

    std::mt19937_64 rng(config.seed);
    std::vector<ZeroPoint> points;
    double t = config.ordinate_start;
    for (int level = 1; level <= config.n_levels; ++level) {
        if (level > 1) {
            t += config.gap_law == GapLaw::unit ? 1.0
                                                : 0.5 + next_double01(rng);
        }
        const double roll = next_double01(rng);
        const bool off_line =
            off_line_possible && roll < config.off_line_probability && level > 1;
        if (!off_line) {
            points.emplace_back(0.5, t);
            continue;
        }

        const long max_pairs =
            std::min<long>(config.max_points_per_level / 2, k_max);
        const long n_pairs = next_int_1_to(rng, max_pairs);
        const bool center = config.max_points_per_level - 2 * n_pairs >= 1 &&
                            (rng() & 1U) != 0U;
        for (long offset : draw_offsets(rng, n_pairs, k_max)) {
            // The reflection 1 - sigma is exact in floating point here, so
            // generated levels are symmetric with zero tolerance.
            const double hi = 0.5 + static_cast<double>(offset) * config.sigma_step;
            const double lo = 1.0 - hi;
            points.emplace_back(lo, t);
            points.emplace_back(hi, t);
        }
        if (center) {
            points.emplace_back(0.5, t);
        }
    }
    return ZeroSet::from_points(std::move(points), Provenance::synthetic, 0.0);
}

bool verify_lemma_total_order(const ZeroSet& zeros) {
    return is_totally_ordered(zeros) == all_on_critical_line(zeros);
}

bool verify_min_bijection(const ZeroSet& zeros) {
    const LevelDecomposition decomposition = decompose_levels(zeros, 0.0);
    const std::vector<ZeroPoint> brute = minimal_elements_bruteforce(zeros);
    std::vector<ZeroPoint> predicted;
    try {
        predicted = minimal_via_characterization(decomposition, 0.0);
    } catch (const symmetry_violation_error&) {
        return false;  // generated sets promise exact symmetry
    }
    if (predicted != brute || !pairwise_distinct_sorted(predicted)) {
        return false;
    }
    // Coverage, mirroring the statement: every minimal element apart from
    // the first level's least is the least element of a prefix-record level.
    const std::vector<int> records = record_min_levels(decomposition);
    for (const ZeroPoint& m : brute) {
        if (!decomposition.levels.empty() &&
            m == level_extremes(decomposition.levels.front()).least) {
            continue;
        }
        bool covered = false;
        for (int n : records) {
            if (level_extremes(
                    decomposition.levels[static_cast<std::size_t>(n) - 1])
                    .least == m) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            return false;
        }
    }
    return true;
}

bool verify_max_bijection(const ZeroSet& zeros) {
    const LevelDecomposition decomposition = decompose_levels(zeros, 0.0);
    const std::vector<ZeroPoint> brute = maximal_elements_bruteforce(zeros);
    std::vector<ZeroPoint> predicted;
    try {
        predicted = maximal_via_characterization(decomposition, 0.0);
    } catch (const symmetry_violation_error&) {
        return false;
    }
    if (predicted != brute || !pairwise_distinct_sorted(predicted)) {
        return false;
    }
    const std::vector<int> records = record_max_levels(decomposition);
    for (const ZeroPoint& m : brute) {
        bool covered = false;
        for (int n : records) {
            if (level_extremes(
                    decomposition.levels[static_cast<std::size_t>(n) - 1])
                    .greatest == m) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            return false;
        }
    }
    return true;
}

bool verify_corollaries(const ZeroSet& zeros) {
    // At least two minimal elements exactly when some point is off the line.
    const bool off_line = !all_on_critical_line(zeros);
    if ((minimal_elements_bruteforce(zeros).size() >= 2) != off_line) {
        return false;
    }
    // A suffix-record level with positive diameter has an off-line greatest
    // element; with zero diameter (and sigma symmetry) it sits on the line.
    const LevelDecomposition decomposition = decompose_levels(zeros, 0.0);
    for (int n : record_max_levels(decomposition)) {
        const LevelExtremes extremes = level_extremes(
            decomposition.levels[static_cast<std::size_t>(n) - 1]);
        if (extremes.diameter > 0.0 && extremes.greatest.sigma == 0.5) {
            return false;
        }
        if (extremes.diameter == 0.0 && extremes.greatest.sigma != 0.5) {
            return false;
        }
    }
    return true;
}

TrialParams derive_trial(const SynthConfig& base, std::uint64_t trial_index) {
    if (base.n_levels < 1 || base.max_points_per_level < 1) {
        throw std::invalid_argument(
            "derive_trial: base config dimensions must be >= 1");
    }
    const std::uint64_t state = base.seed ^ splitmix64(trial_index + 1);
    TrialParams params;
    params.trial_index = trial_index;
    params.config = base;
    params.config.seed = splitmix64(state);
    params.config.n_levels =
        1 + static_cast<int>(splitmix64(state + 1) %
                             static_cast<std::uint64_t>(base.n_levels));
    params.config.max_points_per_level =
        1 + static_cast<int>(splitmix64(state + 2) %
                             static_cast<std::uint64_t>(base.max_points_per_level));
    return params;
}

VerificationOutcome run_trials(const SynthConfig& base, std::uint64_t n_trials) {
    VerificationOutcome out;
    for (std::uint64_t i = 0; i < n_trials; ++i) {
        const TrialParams params = derive_trial(base, i);
        ++out.trials;
        std::string failed;
        std::string detail;
        std::vector<ZeroPoint> points;
        try {
            const ZeroSet zeros = generate_symmetric_zero_set(params.config);
            if (!verify_lemma_total_order(zeros)) {
                failed = "lemma_total_order";
            } else if (!verify_min_bijection(zeros)) {
                failed = "min_bijection";
            } else if (!verify_max_bijection(zeros)) {
                failed = "max_bijection";
            } else if (!verify_corollaries(zeros)) {
                failed = "corollaries";
            }
            if (!failed.empty()) {
                detail = "verifier returned false";
                points = zeros.points();
            }
        } catch (const std::exception& ex) {
            failed = "exception";
            detail = ex.what();
        }
        if (failed.empty()) {
            ++out.passes;
        } else {
            ++out.failures;
            if (!out.first_counterexample) {
                Counterexample ce;
                ce.params = params;
                ce.failed_check = std::move(failed);
                ce.detail = std::move(detail);
                ce.points = std::move(points);
                out.first_counterexample = std::move(ce);
            }
        }
    }
    return out;
}

}  // namespace zetaposet
