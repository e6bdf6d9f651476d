#pragma once

// Randomized verification of the order-theoretic structure theorems on
// synthetic sigma-symmetric zero sets.
//
// The generator builds configurations that are symmetric about sigma = 1/2
// *exactly* in floating point (offsets are reflected as 1.0 - sigma, which is
// exact in this range), so the characterization routes can run with a zero
// symmetry tolerance.  Every trial checks the characterization against the
// brute-force oracles in both directions; any disagreement is a failure and
// the first one is captured with enough detail to replay it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetaposet/poset_core.hpp"

namespace zetaposet {

enum class GapLaw { unit, random_uniform };

struct SynthConfig {
    std::uint64_t seed = 0;
    int n_levels = 1;              // >= 1
    int max_points_per_level = 1;  // >= 1
    // Chance that a level is pushed off the critical line (gets at least one
    // symmetric off-line pair).  Takes effect only when
    // max_points_per_level >= 2.
    double off_line_probability = 0.0;
    // Sigma offsets are multiples of this step.  The default 1/32 is dyadic,
    // so equal diameters across levels compare exactly equal.
    double sigma_step = 0.03125;
    double ordinate_start = 10.0;  // > 0
    GapLaw gap_law = GapLaw::unit;
};

// A fully resolved single trial: the config actually generated (with its
// derived per-trial seed and dimensions) and its position in the run.
struct TrialParams {
    std::uint64_t trial_index = 0;
    SynthConfig config;
};

struct Counterexample {
    TrialParams params;
    std::string failed_check;  // which verifier said no
    std::string detail;
    std::vector<ZeroPoint> points;  // the offending set, for replay
};

struct VerificationOutcome {
    std::uint64_t trials = 0;
    std::uint64_t passes = 0;
    std::uint64_t failures = 0;
    std::optional<Counterexample> first_counterexample;
};

// Deterministic generator: same config, same set, bit for bit.  Levels have
// strictly increasing ordinates; every level is exactly sigma-symmetric.
// The first level always stays on the critical line, mirroring the verified
// leading zeros; without that anchor the two-minimal-elements equivalence
// checked by verify_corollaries would not be a theorem.  Throws
// std::invalid_argument for out-of-range config values, including a
// sigma_step too large to fit one off-line pair inside (0, 1) when off-line
// levels are possible.
ZeroSet generate_symmetric_zero_set(const SynthConfig& config);

// Chain criterion: the set is totally ordered exactly when every point lies
// on the critical line.
bool verify_lemma_total_order(const ZeroSet& zeros);

// Minimal elements match the prefix-record characterization, which is also
// checked to be injective and to cover every minimal element other than the
// least element of the first level.
bool verify_min_bijection(const ZeroSet& zeros);

// Dual check for maximal elements and suffix records.
bool verify_max_bijection(const ZeroSet& zeros);

// Consequences: at least two minimal elements iff some point is off the
// critical line; a positive-diameter suffix-record level has an off-line
// greatest element.
bool verify_corollaries(const ZeroSet& zeros);

// The config for trial trial_index of a run over base: a fresh seed and
// dimensions n_levels in [1, base.n_levels], max_points_per_level in
// [1, base.max_points_per_level], both derived deterministically from
// base.seed and trial_index alone.
TrialParams derive_trial(const SynthConfig& base, std::uint64_t trial_index);

// Run n_trials independent trials, each generating a set from derive_trial
// and passing it through all four verifiers.
VerificationOutcome run_trials(const SynthConfig& base, std::uint64_t n_trials);

}  // namespace zetaposet
